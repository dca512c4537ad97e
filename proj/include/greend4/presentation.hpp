#pragma once

#include "greend4/green_ring.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace greend4::pres {

/// c0·1 + c1·g in Z[g]/(g²-1).
struct GroupRingPair {
    Integer c0 = 0;
    Integer c1 = 0;

    friend bool operator==(const GroupRingPair&, const GroupRingPair&) = default;
};

/// a_n = 1/2 Σ_{i=1}^{n-1} (3^{i-1}+1)(n-i); throws std::invalid_argument for n == 0.
Integer a_seq(unsigned n);

/// f_n = a_n(1+g) - n(n-1)/2 · g^n, with g^n reduced.
GroupRingPair f_poly(unsigned n);

/// Normal-form basis monomial of Z[X]/J:
/// 1, x, x², y^n, z^n, X_{n,η}, each optionally multiplied by g.
class Monomial {
public:
    /// Enumerator order is the printing order.
    enum class Core : std::uint8_t { One, Y, Z, X, X2, Band };

    static Monomial one(bool g = false) { return {Core::One, 0, g, std::nullopt}; }
    static Monomial x(bool g = false) { return {Core::X, 0, g, std::nullopt}; }
    static Monomial x2(bool g = false) { return {Core::X2, 0, g, std::nullopt}; }
    /// y^n, n >= 1
    static Monomial y(unsigned n, bool g = false);
    /// z^n, n >= 1
    static Monomial z(unsigned n, bool g = false);
    /// X_{n,η}, n >= 1
    static Monomial band(unsigned n, EtaParam eta, bool g = false);

    Core core() const { return core_; }
    unsigned n() const { return n_; }
    bool has_g() const { return g_; }
    const EtaParam& eta() const;

    Monomial with_g(bool g) const;
    Monomial toggled_g() const { return with_g(!g_); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    Monomial(Core core, unsigned n, bool g, std::optional<EtaParam> eta)
        : core_(core), n_(n), g_(g), eta_(std::move(eta)) {}

    Core core_;
    unsigned n_;
    bool g_;
    std::optional<EtaParam> eta_;
};

/// Element of Z[X]/J in normal-form coordinates.
class PresElement {
public:
    using Terms = std::map<Monomial, Integer>;

    PresElement() = default;
    explicit PresElement(const Monomial& m, Integer coeff = 1);
    static PresElement from_int(const Integer& c) { return PresElement(Monomial::one(), c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(const Monomial& m) const;
    void add(const Monomial& m, const Integer& c);

    /// Multiplication by g, which permutes the basis.
    PresElement times_g() const;

    PresElement& operator+=(const PresElement& other);
    PresElement& operator-=(const PresElement& other);
    PresElement& operator*=(const Integer& scalar);

    friend PresElement operator+(PresElement a, const PresElement& b) { return a += b; }
    friend PresElement operator-(PresElement a, const PresElement& b) { return a -= b; }
    friend PresElement operator*(const Integer& s, PresElement e) { return e *= s; }
    friend bool operator==(const PresElement&, const PresElement&) = default;

private:
    Terms terms_;
};

/// Product in Z[X]/J, reduced to normal form by the fixed rewrite table.
PresElement nf_mul(const PresElement& p, const PresElement& q);
PresElement nf_mul(const Monomial& a, const Monomial& b);
/// p^k, with p^0 = 1.
PresElement nf_pow(const PresElement& p, unsigned k);

/// Isomorphism Z[X]/J → r(D4).
GreenElement to_green(const PresElement& p);
/// Isomorphism r(D4) → Z[X]/J.
PresElement from_green(const GreenElement& e);

/// One instantiated generator of the ideal J.
struct IdealGenerator {
    std::string family;  ///< the relation with its parameters left symbolic
    std::string name;
    GreenElement image;  ///< image of the generator in r(D4) under the canonical map
};

/// Images in r(D4) of the generators of J instantiated over the given parameter grid.
/// Every entry must be zero for the presentation to hold.
std::vector<IdealGenerator> ideal_generator_images(unsigned max_n, const std::vector<EtaParam>& etas);

std::string to_string(const Monomial& m);
/// Canonical text, e.g. "y^2 - g*x^2"; "0" for zero.
std::string to_string(const PresElement& p);

}  // namespace greend4::pres
