#include "greend4/rep_lab.hpp"

#include "polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace greend4::rep {

using linalg::column_space;
using linalg::coordinates;
using linalg::extend_basis;
using linalg::hstack;
using linalg::intersect;
using linalg::inverse;
using linalg::kron;
using linalg::null_space;
using linalg::select_columns;
using linalg::vstack;

namespace {

RatMatrix block(const RatMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    RatMatrix out(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = m(i, j);
    return out;
}

RatMatrix hstack_all(std::size_t rows, const std::vector<RatMatrix>& parts) {
    RatMatrix out(rows, 0);
    for (const auto& p : parts) out = hstack(out, p);
    return out;
}

Rat trace(const RatMatrix& m) {
    Rat t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// Joint eigenspace of b and c.
RatMatrix weight_space(const Representation& m, int eb, int ec) {
    const RatMatrix id = RatMatrix::identity(m.dim);
    return null_space(vstack(m.b - Rat(eb) * id, m.c - Rat(ec) * id));
}

// The four weights (+,+), (-,-), (+,-), (-,+). The first two carry the principal block.
constexpr std::array<std::array<int, 2>, 4> kWeights{{{1, 1}, {-1, -1}, {1, -1}, {-1, 1}}};

struct WeightFrame {
    RatMatrix basis;             // columns grouped by weight
    RatMatrix basis_inverse;
    std::vector<int> weight_of;  // index into kWeights, per column
};

WeightFrame weight_frame(const Representation& m) {
    WeightFrame f;
    f.basis = RatMatrix(m.dim, 0);
    for (int w = 0; w < 4; ++w) {
        const RatMatrix ws = weight_space(m, kWeights[w][0], kWeights[w][1]);
        f.basis = hstack(f.basis, ws);
        f.weight_of.insert(f.weight_of.end(), ws.cols(), w);
    }
    if (f.basis.cols() != m.dim) throw std::invalid_argument("representation: b and c are not simultaneously diagonalizable");
    f.basis_inverse = inverse(f.basis);
    return f;
}

// Projector onto the principal block, (1 + bc)/2.
RatMatrix principal_projector(const Representation& m) {
    return (RatMatrix::identity(m.dim) + m.b * m.c) * Rat(1, 2);
}

Representation make_rep(std::size_t n) {
    Representation r;
    r.dim = n;
    r.a = r.b = r.c = r.d = RatMatrix(n, n);
    return r;
}

Representation build_uncached(const ModuleLabel& label) {
    const int sg = label.r().sign();
    switch (label.kind()) {
    case ModuleLabel::Kind::SimpleOne: {
        Representation m = make_rep(1);
        m.b(0, 0) = sg;
        m.c(0, 0) = sg;
        return m;
    }
    case ModuleLabel::Kind::SimpleTwo: {
        Representation m = make_rep(2);
        m.a(1, 0) = 1;
        m.d(0, 1) = 2;
        m.b(0, 0) = sg;
        m.b(1, 1) = -sg;
        m.c(0, 0) = -sg;
        m.c(1, 1) = sg;
        return m;
    }
    case ModuleLabel::Kind::Projective: {
        Representation m = make_rep(4);
        m.a(1, 0) = 1;   // a v1 = v2
        m.d(2, 0) = 1;   // d v1 = v3
        m.a(3, 2) = 1;   // a v3 = v4
        m.d(3, 1) = -1;  // d v2 = -v4
        const int signs[4] = {sg, -sg, -sg, sg};
        for (int i = 0; i < 4; ++i) {
            m.b(i, i) = signs[i];
            m.c(i, i) = signs[i];
        }
        return m;
    }
    case ModuleLabel::Kind::Band: {
        const std::size_t s = label.s();
        Representation m = make_rep(2 * s);
        for (std::size_t i = 0; i < s; ++i) {
            m.b(i, i) = m.c(i, i) = -sg;
            m.b(s + i, s + i) = m.c(s + i, s + i) = sg;
        }
        const EtaParam& eta = label.eta();
        if (eta.is_infinite()) {
            for (std::size_t i = 0; i < s; ++i) {
                if (i > 0) m.a(s + i - 1, i) = 1;
                m.d(s + i, i) = 1;
            }
        } else {
            for (std::size_t i = 0; i < s; ++i) {
                m.a(s + i, i) = 1;
                m.d(s + i, i) = -eta.value();
                if (i > 0) m.d(s + i - 1, i) = -1;
            }
        }
        return m;
    }
    case ModuleLabel::Kind::Syzygy: {
        Representation m = build(ModuleLabel::simple(label.r()));
        for (unsigned i = 0; i < label.s(); ++i) m = syzygy(m);
        return m;
    }
    case ModuleLabel::Kind::Cosyzygy:
        return dual(build(ModuleLabel::syzygy(label.s(), label.r())));
    }
    throw std::logic_error("build: unknown label kind");
}

// ---- splitting ---------------------------------------------------------------

std::vector<Representation> fitting_split(const Representation& m, std::mt19937_64& rng);

// Tries to split m with the generalized eigenspaces of e. Returns false if e does not split.
bool split_with(const Representation& m, const RatMatrix& e, std::mt19937_64& rng, std::vector<Representation>& out) {
    for (const Rat& lambda : poly::rational_eigenvalues(e)) {
        const RatMatrix k = linalg::power(e - lambda * RatMatrix::identity(m.dim), m.dim);
        if (k.is_zero()) continue;
        const RatMatrix ker = null_space(k);
        const RatMatrix im = column_space(k);
        for (const auto& part : {ker, im}) {
            auto pieces = fitting_split(restrict_to(m, part), rng);
            out.insert(out.end(), pieces.begin(), pieces.end());
        }
        return true;
    }
    return false;
}

std::vector<Representation> fitting_split(const Representation& m, std::mt19937_64& rng) {
    if (m.dim == 0) return {};
    if (m.dim == 1) return {m};
    const HomSpace end = hom_space(m, m);
    const std::size_t k = end.dimension();
    if (k <= 1) return {m};

    // End/rad(End) via the trace form; a one-dimensional quotient means m is indecomposable
    RatMatrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) gram(i, j) = gram(j, i) = trace(end.basis[i] * end.basis[j]);
    if (linalg::rank(gram) == 1) return {m};

    std::vector<Representation> out;
    for (const auto& e : end.basis)
        if (split_with(m, e, rng, out)) return out;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (split_with(m, end.basis[i] + end.basis[j], rng, out)) return out;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatMatrix e(m.dim, m.dim);
        for (const auto& f : end.basis) e += Rat(coeff(rng)) * f;
        if (split_with(m, e, rng, out)) return out;
    }
    throw std::runtime_error("decompose: could not find a splitting endomorphism over Q (dim " +
                             std::to_string(m.dim) + ")");
}

// The weight index r with soc(m) inside the (r, r) weight space.
Z2 socle_weight(const Representation& m, const RatMatrix& soc) {
    for (int r = 0; r < 2; ++r) {
        const int s = r == 0 ? 1 : -1;
        const RatMatrix ws = weight_space(m, s, s);
        if (linalg::rank(hstack(ws, soc)) == ws.cols()) return Z2(r);
    }
    throw std::runtime_error("decompose: socle is not concentrated in one weight");
}

ModuleLabel identify(const Representation& m) {
    const std::size_t ll = loewy_length(m);
    if (ll == 1) {
        if (m.dim == 1) return ModuleLabel::simple(Z2(m.b(0, 0) == 1 ? 0 : 1));
        throw std::runtime_error("decompose: unexpected semisimple leaf of dimension " + std::to_string(m.dim));
    }
    const RatMatrix soc = socle(m);
    const Z2 r = socle_weight(m, soc);
    if (ll == 3) {
        if (m.dim != 4) throw std::runtime_error("decompose: Loewy length 3 leaf is not projective");
        return ModuleLabel::projective(r);
    }
    const std::size_t t = soc.cols();
    const std::size_t s = m.dim - t;
    if (t + 1 == s) return ModuleLabel::syzygy(static_cast<unsigned>(t), t % 2 == 1 ? r : r + 1);
    if (t == s + 1) return ModuleLabel::cosyzygy(static_cast<unsigned>(s), s % 2 == 1 ? r + 1 : r);
    if (t == s) return ModuleLabel::band(static_cast<unsigned>(s), r, recover_eta(m));
    throw std::runtime_error("decompose: leaf has no matching indecomposable type");
}

}  // namespace

// ---- basic constructions --------------------------------------------------------

Representation Representation::zero() { return make_rep(0); }

const RatMatrix& Representation::generator(std::size_t i) const {
    switch (i) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    case 3: return d;
    default: throw std::out_of_range("Representation::generator: index must be 0..3");
    }
}

RMatrixElement RMatrixElement::canonical() {
    using E = std::array<std::uint8_t, 4>;
    const E one{0, 0, 0, 0}, a{1, 0, 0, 0}, b{0, 1, 0, 0}, c{0, 0, 1, 0}, d{0, 0, 0, 1};
    const E ab{1, 1, 0, 0}, cd{0, 0, 1, 1};
    RMatrixElement r;
    r.scale = Rat(1, 2);
    r.terms = {{1, one, one}, {1, b, one}, {1, one, c}, {-1, b, c},
               {1, a, d},     {1, ab, d},  {1, a, cd},  {-1, ab, cd}};
    return r;
}

Representation build(const ModuleLabel& label) {
    static std::mutex mutex;
    static std::map<ModuleLabel, Representation> cache;
    const bool cacheable = label.kind() == ModuleLabel::Kind::Syzygy || label.kind() == ModuleLabel::Kind::Cosyzygy;
    if (!cacheable) return build_uncached(label);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(label); it != cache.end()) return it->second;
    }
    Representation m = build_uncached(label);
    std::lock_guard lock(mutex);
    cache.emplace(label, m);
    return m;
}

bool check_relations(const Representation& m) {
    const std::size_t n = m.dim;
    for (std::size_t i = 0; i < 4; ++i) {
        const RatMatrix& g = m.generator(i);
        if (g.rows() != n || g.cols() != n) return false;
    }
    const RatMatrix id = RatMatrix::identity(n);
    const RatMatrix zero(n, n);
    const auto& [a, b, c, d] = std::tie(m.a, m.b, m.c, m.d);
    return b * a + a * b == zero && d * b + b * d == zero && c * a + a * c == zero && d * c + c * d == zero &&
           b * c == c * b && a * a == zero && d * d == zero && b * b == id && c * c == id &&
           d * a + a * d == id - b * c;
}

Representation tensor(const Representation& m, const Representation& n) {
    const RatMatrix im = RatMatrix::identity(m.dim);
    Representation t;
    t.dim = m.dim * n.dim;
    t.a = kron(m.a, n.b) + kron(im, n.a);
    t.b = kron(m.b, n.b);
    t.c = kron(m.c, n.c);
    t.d = kron(m.d, n.c) + kron(im, n.d);
    return t;
}

Representation dual(const Representation& m) {
    Representation t;
    t.dim = m.dim;
    t.a = (m.b * m.a).transpose();
    t.b = m.b.transpose();
    t.c = m.c.transpose();
    t.d = (m.c * m.d).transpose();
    return t;
}

Representation direct_sum(const std::vector<Representation>& reps) {
    std::vector<RatMatrix> blocks[4];
    Representation out;
    for (const auto& r : reps) {
        out.dim += r.dim;
        for (std::size_t i = 0; i < 4; ++i) blocks[i].push_back(r.generator(i));
    }
    out.a = linalg::block_diag(blocks[0]);
    out.b = linalg::block_diag(blocks[1]);
    out.c = linalg::block_diag(blocks[2]);
    out.d = linalg::block_diag(blocks[3]);
    return out;
}

RatMatrix act(const Representation& m, const std::array<std::uint8_t, 4>& exponents) {
    RatMatrix out = RatMatrix::identity(m.dim);
    for (std::size_t g = 0; g < 4; ++g)
        for (std::uint8_t e = 0; e < exponents[g]; ++e) out = out * m.generator(g);
    return out;
}

// ---- Hom spaces -------------------------------------------------------------------

HomSpace hom_space(const Representation& m, const Representation& n) {
    HomSpace out;
    out.source_dim = m.dim;
    out.target_dim = n.dim;
    if (m.dim == 0 || n.dim == 0) return out;

    // In weight bases b and c are diagonal, so an intertwiner only links equal weights.
    const WeightFrame fm = weight_frame(m);
    const WeightFrame fn = weight_frame(n);
    std::vector<long> var(n.dim * m.dim, -1);
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t i = 0; i < n.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            if (fn.weight_of[i] == fm.weight_of[j]) {
                var[i * m.dim + j] = static_cast<long>(vars.size());
                vars.emplace_back(i, j);
            }
    if (vars.empty()) return out;

    std::vector<std::vector<Rat>> rows;
    for (std::size_t gen : {0, 3}) {
        const RatMatrix xm = fm.basis_inverse * m.generator(gen) * fm.basis;
        const RatMatrix xn = fn.basis_inverse * n.generator(gen) * fn.basis;
        // (F·xm - xn·F)(i, j) = 0
        for (std::size_t i = 0; i < n.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) {
                std::vector<Rat> row(vars.size());
                bool nonzero = false;
                for (std::size_t k = 0; k < m.dim; ++k) {
                    const long v = var[i * m.dim + k];
                    if (v >= 0 && sgn(xm(k, j)) != 0) {
                        row[v] += xm(k, j);
                        nonzero = true;
                    }
                }
                for (std::size_t k = 0; k < n.dim; ++k) {
                    const long v = var[k * m.dim + j];
                    if (v >= 0 && sgn(xn(i, k)) != 0) {
                        row[v] -= xn(i, k);
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }

    std::vector<linalg::RatVector> sols;
    if (rows.empty()) {
        for (std::size_t v = 0; v < vars.size(); ++v) {
            linalg::RatVector e(vars.size());
            e[v] = 1;
            sols.push_back(std::move(e));
        }
    } else {
        sols = linalg::kernel_basis(RatMatrix::from_rows(rows));
    }
    for (const auto& sol : sols) {
        RatMatrix f(n.dim, m.dim);
        for (std::size_t v = 0; v < vars.size(); ++v) f(vars[v].first, vars[v].second) = sol[v];
        out.basis.push_back(fn.basis * f * fm.basis_inverse);
    }
    return out;
}

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
    if (m.dim != n.dim) return false;
    if (m.dim == 0) return true;
    const HomSpace hom = hom_space(m, n);
    if (hom.basis.empty()) return false;

    // every intertwiner kills a common vector, or misses a common hyperplane
    RatMatrix stacked_rows(0, m.dim);
    RatMatrix stacked_cols(n.dim, 0);
    for (const auto& f : hom.basis) {
        stacked_rows = vstack(stacked_rows, f);
        stacked_cols = hstack(stacked_cols, f);
    }
    if (linalg::rank(stacked_rows) < m.dim || linalg::rank(stacked_cols) < n.dim) return false;

    std::mt19937_64 rng(seed);
    int bound = 2;
    for (int trial = 0; trial < 8; ++trial, bound *= 2) {
        std::uniform_int_distribution<int> coeff(-bound, bound);
        RatMatrix f(n.dim, m.dim);
        for (const auto& h : hom.basis) f += Rat(coeff(rng)) * h;
        if (linalg::is_invertible(f)) return true;
    }

    // small deterministic box {-1, 0, 1}^k, capped
    const std::size_t k = hom.basis.size();
    std::vector<int> digits(k, -1);
    for (int visited = 0; visited < 2000; ++visited) {
        RatMatrix f(n.dim, m.dim);
        for (std::size_t i = 0; i < k; ++i) f += Rat(digits[i]) * hom.basis[i];
        if (linalg::is_invertible(f)) return true;
        std::size_t pos = 0;
        while (pos < k && digits[pos] == 1) digits[pos++] = -1;
        if (pos == k) break;
        ++digits[pos];
    }

    // fall back to comparing Krull-Schmidt decompositions
    return decompose(m, seed) == decompose(n, seed);
}

// ---- radical layers -----------------------------------------------------------------

RatMatrix radical(const Representation& m) {
    const RatMatrix e = principal_projector(m);
    return column_space(hstack(m.a * e, m.d * e));
}

RatMatrix socle(const Representation& m) {
    const RatMatrix e = principal_projector(m);
    return null_space(vstack(m.a * e, m.d * e));
}

std::size_t loewy_length(const Representation& m) {
    const RatMatrix e = principal_projector(m);
    RatMatrix layer = RatMatrix::identity(m.dim);
    std::size_t length = 0;
    while (layer.cols() > 0) {
        ++length;
        layer = column_space(hstack(m.a * e * layer, m.d * e * layer));
    }
    return length;
}

Representation restrict_to(const Representation& m, const RatMatrix& sub) {
    const std::size_t k = sub.cols();
    Representation out = make_rep(k);
    if (k == 0) return out;
    const RatMatrix images = hstack_all(m.dim, {m.a * sub, m.b * sub, m.c * sub, m.d * sub});
    RatMatrix coords;
    try {
        coords = coordinates(sub, images);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("restrict_to: subspace is not invariant");
    }
    out.a = block(coords, 0, k, 0, k);
    out.b = block(coords, 0, k, k, 2 * k);
    out.c = block(coords, 0, k, 2 * k, 3 * k);
    out.d = block(coords, 0, k, 3 * k, 4 * k);
    return out;
}

Representation quotient(const Representation& m, const RatMatrix& sub) {
    const std::size_t k = sub.cols();
    const RatMatrix id = RatMatrix::identity(m.dim);
    const RatMatrix complement = select_columns(id, extend_basis(sub, id));
    const RatMatrix frame = hstack(sub, complement);
    if (frame.cols() != m.dim) throw std::invalid_argument("quotient: subspace columns are dependent");
    const RatMatrix frame_inv = inverse(frame);
    Representation out = make_rep(m.dim - k);
    RatMatrix* targets[4] = {&out.a, &out.b, &out.c, &out.d};
    for (std::size_t g = 0; g < 4; ++g) {
        const RatMatrix& x = m.generator(g);
        if (k > 0 && !block(frame_inv * x * sub, k, m.dim, 0, k).is_zero())
            throw std::invalid_argument("quotient: subspace is not invariant");
        *targets[g] = block(frame_inv * x * complement, k, m.dim, 0, m.dim - k);
    }
    return out;
}

// ---- projective covers ---------------------------------------------------------------

ProjectiveCover projective_cover_map(const Representation& m) {
    const RatMatrix rad = radical(m);
    std::vector<Representation> blocks;
    RatMatrix surj(m.dim, 0);
    for (int r = 0; r < 2; ++r) {
        const int s = r == 0 ? 1 : -1;
        const RatMatrix ws = weight_space(m, s, s);
        const RatMatrix tops = select_columns(ws, extend_basis(rad, ws));
        for (std::size_t j = 0; j < tops.cols(); ++j) {
            const RatMatrix u = select_columns(tops, {j});
            surj = hstack_all(m.dim, {surj, u, m.a * u, m.d * u, m.a * m.d * u});
            blocks.push_back(build(ModuleLabel::projective(Z2(r))));
        }
    }
    for (int r = 0; r < 2; ++r) {
        const int s = r == 0 ? 1 : -1;
        const RatMatrix gens = intersect(null_space(m.d), weight_space(m, s, -s));
        for (std::size_t j = 0; j < gens.cols(); ++j) {
            const RatMatrix u = select_columns(gens, {j});
            surj = hstack_all(m.dim, {surj, u, m.a * u});
            blocks.push_back(build(ModuleLabel::simple_two(Z2(r))));
        }
    }
    ProjectiveCover out{direct_sum(blocks), surj};
    for (std::size_t g = 0; g < 4; ++g)
        if (!(surj * out.cover.generator(g) == m.generator(g) * surj))
            throw std::logic_error("projective_cover_map: cover map is not a module map");
    if (linalg::rank(surj) != m.dim) throw std::logic_error("projective_cover_map: cover map is not onto");
    return out;
}

Representation syzygy(const Representation& m) {
    const ProjectiveCover pc = projective_cover_map(m);
    return restrict_to(pc.cover, null_space(pc.surjection));
}

Representation cosyzygy(const Representation& m) { return dual(syzygy(dual(m))); }

EtaParam recover_eta(const Representation& m) {
    const RatMatrix soc = socle(m);
    const std::size_t s = soc.cols();
    if (s == 0 || m.dim != 2 * s) throw std::invalid_argument("recover_eta: module is not of (s,s)-type");
    Z2 r;
    try {
        r = socle_weight(m, soc);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("recover_eta: socle is not concentrated in one weight");
    }
    const int top_sign = (r + 1).sign();
    const RatMatrix top = weight_space(m, top_sign, top_sign);
    if (top.cols() != s) throw std::invalid_argument("recover_eta: top layer has the wrong dimension");
    RatMatrix at, dt;
    try {
        at = coordinates(soc, m.a * top);
        dt = coordinates(soc, m.d * top);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("recover_eta: module has Loewy length above 2");
    }
    if (!linalg::is_invertible(at)) {
        const RatMatrix ker = null_space(at);
        if (ker.cols() != 1 || (dt * ker).is_zero()) throw std::invalid_argument("recover_eta: no band parameter");
        return EtaParam::infinity();
    }
    // D v = -η A v on the distinguished top vector v
    const RatMatrix k = inverse(at) * dt;
    const Rat eta = -trace(k) / Rat(static_cast<long>(s));
    const RatMatrix shifted = k + eta * RatMatrix::identity(s);
    if (linalg::rank(shifted) != s - 1 || !linalg::power(shifted, s).is_zero())
        throw std::invalid_argument("recover_eta: module is decomposable");
    return EtaParam::finite(eta);
}

// ---- decomposition ------------------------------------------------------------------

GreenElement decompose(const Representation& m, std::uint64_t seed) {
    GreenElement result;
    if (m.dim == 0) return result;

    // the T-block is semisimple: V(2,r) is generated by kernel vectors of d of weight (±,∓)
    for (int r = 0; r < 2; ++r) {
        const int s = r == 0 ? 1 : -1;
        const std::size_t copies = intersect(null_space(m.d), weight_space(m, s, -s)).cols();
        if (copies > 0) result.add(ModuleLabel::simple_two(Z2(r)), Integer(static_cast<unsigned long>(copies)));
    }

    const RatMatrix principal = column_space(principal_projector(m));
    const std::size_t t_dim = m.dim - principal.cols();
    if (dimension(result) != Integer(static_cast<unsigned long>(t_dim)))
        throw std::runtime_error("decompose: T-block is not semisimple");
    if (principal.cols() == 0) return result;
    const Representation mp = restrict_to(m, principal);

    // P(r) is injective, so generators u with ad·u independent span a projective summand
    RatMatrix proj(mp.dim, 0);
    for (int r = 0; r < 2; ++r) {
        const int s = r == 0 ? 1 : -1;
        const RatMatrix ws = weight_space(mp, s, s);
        const auto chosen = extend_basis(RatMatrix(mp.dim, 0), mp.a * mp.d * ws);
        for (std::size_t j : chosen) {
            const RatMatrix u = select_columns(ws, {j});
            proj = hstack_all(mp.dim, {proj, u, mp.a * u, mp.d * u, mp.a * mp.d * u});
            result.add(ModuleLabel::projective(Z2(r)), 1);
        }
    }
    if (linalg::rank(proj) != proj.cols()) throw std::runtime_error("decompose: projective summands are not independent");

    std::mt19937_64 rng(seed);
    const Representation rest = proj.cols() > 0 ? quotient(mp, proj) : mp;
    for (const auto& leaf : fitting_split(rest, rng)) result.add(identify(leaf), 1);
    return result;
}

// ---- braiding -----------------------------------------------------------------------

RatMatrix braiding_map(const Representation& m, const Representation& n) {
    const RMatrixElement rm = RMatrixElement::canonical();
    RatMatrix r(m.dim * n.dim, m.dim * n.dim);
    for (const auto& term : rm.terms) r += Rat(term.coeff) * kron(act(m, term.left), act(n, term.right));
    r *= rm.scale;
    RatMatrix flip(n.dim * m.dim, m.dim * n.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t k = 0; k < n.dim; ++k) flip(k * m.dim + i, i * n.dim + k) = 1;
    return flip * r;
}

bool braiding_check(const Representation& m, const Representation& n) {
    const RatMatrix f = braiding_map(m, n);
    const Representation mn = tensor(m, n);
    const Representation nm = tensor(n, m);
    for (std::size_t g = 0; g < 4; ++g)
        if (!(f * mn.generator(g) == nm.generator(g) * f)) return false;
    return linalg::is_invertible(f);
}

}  // namespace greend4::rep
