#pragma once

#include "greend4/exact_linalg.hpp"
#include "greend4/green_ring.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace greend4::rep {

using linalg::RatMatrix;
using linalg::Rat;

/// Matrices of the generators a, b, c, d acting on Q^dim (column vectors).
struct Representation {
    std::size_t dim = 0;
    RatMatrix a, b, c, d;

    static Representation zero();
    const RatMatrix& generator(std::size_t i) const;
};

/// Intertwiners F: source -> target, i.e. F·X_src = X_tgt·F for every generator X.
struct HomSpace {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<RatMatrix> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// One term of the quasitriangular element: coeff · (a^i b^j c^l d^k) ⊗ (a^i' b^j' c^l' d^k').
struct RMatrixTerm {
    int coeff;
    std::array<std::uint8_t, 4> left;   // exponents of a, b, c, d
    std::array<std::uint8_t, 4> right;
};

/// R = 1/2 · Σ terms.
struct RMatrixElement {
    std::vector<RMatrixTerm> terms;
    Rat scale;

    static RMatrixElement canonical();
};

/// Explicit representation of an indecomposable; Ω^{±s} are built through syzygies.
Representation build(const ModuleLabel& label);
bool check_relations(const Representation& rep);

Representation tensor(const Representation& m, const Representation& n);
Representation dual(const Representation& m);
Representation direct_sum(const std::vector<Representation>& reps);

/// Action of the basis element a^i b^j c^l d^k (matrices multiplied in that order).
RatMatrix act(const Representation& m, const std::array<std::uint8_t, 4>& exponents);

HomSpace hom_space(const Representation& m, const Representation& n);

/// Seeded search for an invertible intertwiner; see is_isomorphic in the README for the
/// certification rules.
bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 1);

/// Jacobson radical JM, as a column basis.
RatMatrix radical(const Representation& m);
/// Socle {v : J v = 0}, as a column basis.
RatMatrix socle(const Representation& m);
/// Least n with J^n M = 0 (at most 3 for D4-modules).
std::size_t loewy_length(const Representation& m);

/// Sub-representation on an invariant subspace given by a column basis.
Representation restrict_to(const Representation& m, const RatMatrix& subspace);
/// Quotient representation by an invariant subspace.
Representation quotient(const Representation& m, const RatMatrix& subspace);

struct ProjectiveCover {
    Representation cover;
    RatMatrix surjection;  ///< dim(M) × dim(cover)
};
ProjectiveCover projective_cover_map(const Representation& m);

Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);

/// Band parameter of an indecomposable of (s,s)-type.
/// Throws std::invalid_argument if no such parameter can be read off.
EtaParam recover_eta(const Representation& m);

/// Krull–Schmidt decomposition; every coefficient of the result is positive.
/// Throws std::runtime_error if a summand cannot be split or identified over Q.
GreenElement decompose(const Representation& m, std::uint64_t seed = 1);

/// Whether flip∘R: M⊗N -> N⊗M is an invertible intertwiner.
bool braiding_check(const Representation& m, const Representation& n);
RatMatrix braiding_map(const Representation& m, const Representation& n);

}  // namespace greend4::rep
