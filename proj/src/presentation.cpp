#include "greend4/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace greend4::pres {

Integer a_seq(unsigned n) {
    if (n == 0) throw std::invalid_argument("a_seq: n must be >= 1");
    Integer twice = 0;
    Integer pow3 = 1;  // 3^{i-1}
    for (unsigned i = 1; i < n; ++i) {
        twice += (pow3 + 1) * (n - i);
        pow3 *= 3;
    }
    return twice / 2;
}

GroupRingPair f_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("f_poly: n must be >= 1");
    const Integer a = a_seq(n);
    const Integer tri = Integer(n) * (n - 1) / 2;
    if (n % 2 == 0) return {a - tri, a};
    return {a, a - tri};
}

Monomial Monomial::y(unsigned n, bool g) {
    if (n == 0) throw std::invalid_argument("y^n needs n >= 1");
    return {Core::Y, n, g, std::nullopt};
}

Monomial Monomial::z(unsigned n, bool g) {
    if (n == 0) throw std::invalid_argument("z^n needs n >= 1");
    return {Core::Z, n, g, std::nullopt};
}

Monomial Monomial::band(unsigned n, EtaParam eta, bool g) {
    if (n == 0) throw std::invalid_argument("X_{n,eta} needs n >= 1");
    return {Core::Band, n, g, std::move(eta)};
}

const EtaParam& Monomial::eta() const {
    if (!eta_) throw std::logic_error("eta() on a monomial without a band parameter");
    return *eta_;
}

Monomial Monomial::with_g(bool g) const {
    Monomial m = *this;
    m.g_ = g;
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.core_ <=> b.core_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (a.eta_ && b.eta_)
        if (auto c = *a.eta_ <=> *b.eta_; c != 0) return c;
    return a.g_ <=> b.g_;
}

PresElement::PresElement(const Monomial& m, Integer coeff) { add(m, coeff); }

Integer PresElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void PresElement::add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PresElement PresElement::times_g() const {
    PresElement out;
    for (const auto& [m, c] : terms_) out.add(m.toggled_g(), c);
    return out;
}

PresElement& PresElement::operator+=(const PresElement& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

PresElement& PresElement::operator-=(const PresElement& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
}

PresElement& PresElement::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

namespace {

using Core = Monomial::Core;

// (c0 + c1 g)·m
PresElement scaled(const GroupRingPair& k, const Monomial& m) {
    PresElement out(m, k.c0);
    out.add(m.toggled_g(), k.c1);
    return out;
}

// (1+2g)^n, the factor picked up when x meets y^n or z^n
GroupRingPair one_plus_2g_pow(unsigned n) {
    GroupRingPair p{1, 0};
    for (unsigned i = 0; i < n; ++i) p = {p.c0 + 2 * p.c1, 2 * p.c0 + p.c1};
    return p;
}

Monomial strip_g(const Monomial& m) { return m.with_g(false); }

PresElement core_mul(const Monomial& a, const Monomial& b);

// y^m·z^n by peeling yz -> 1 + 2x² from the left
PresElement mixed_yz(unsigned m, unsigned n) {
    if (m == 0) return n == 0 ? PresElement(Monomial::one()) : PresElement(Monomial::z(n));
    if (n == 0) return PresElement(Monomial::y(m));
    const PresElement rest = mixed_yz(m - 1, n - 1);
    PresElement out = rest;
    PresElement x2_part;
    for (const auto& [mono, c] : rest.terms()) {
        PresElement prod = core_mul(Monomial::x2(), strip_g(mono));
        if (mono.has_g()) prod = prod.times_g();
        prod *= 2 * c;
        x2_part += prod;
    }
    return out + x2_part;
}

// y^m·X_{n,η} (use_y) or z^m·X_{n,η}
PresElement power_times_band(bool use_y, unsigned m, const Monomial& band) {
    const unsigned n = band.n();
    PresElement out;
    GroupRingPair g_power{1, 0};  // accumulated g^k from the gX terms
    for (unsigned k = m; k >= 1; --k) {
        // y·X = n g x² + g X, z·X = n x² + g X, applied to y^{k-1}(...)
        // the x² term absorbs the remaining k-1 factors: x² y^{k-1} = (1+2g)^{k-1} x²
        const GroupRingPair absorb = one_plus_2g_pow(k - 1);
        GroupRingPair coeff = use_y ? GroupRingPair{absorb.c1, absorb.c0} : absorb;
        coeff.c0 *= n;
        coeff.c1 *= n;
        // multiply by the g^k accumulated so far
        const GroupRingPair total{g_power.c0 * coeff.c0 + g_power.c1 * coeff.c1,
                                  g_power.c0 * coeff.c1 + g_power.c1 * coeff.c0};
        out += scaled(total, Monomial::x2());
        g_power = {g_power.c1, g_power.c0};
    }
    out += scaled(g_power, band);
    return out;
}

PresElement core_mul(const Monomial& a, const Monomial& b) {
    if (b.core() < a.core()) return core_mul(b, a);
    const Core ca = a.core();
    const Core cb = b.core();

    if (ca == Core::One) return PresElement(b);

    if (ca == Core::Y && cb == Core::Y) return PresElement(Monomial::y(a.n() + b.n()));
    if (ca == Core::Z && cb == Core::Z) return PresElement(Monomial::z(a.n() + b.n()));
    if (ca == Core::Y && cb == Core::Z) return mixed_yz(a.n(), b.n());

    if ((ca == Core::Y || ca == Core::Z) && (cb == Core::X || cb == Core::X2)) {
        // xy = xz = x(1+2g)
        return scaled(one_plus_2g_pow(a.n()), b);
    }
    if ((ca == Core::Y || ca == Core::Z) && cb == Core::Band) return power_times_band(ca == Core::Y, a.n(), b);

    if (ca == Core::X && cb == Core::X) return PresElement(Monomial::x2());
    if (ca == Core::X && cb == Core::X2) return scaled({2, 2}, Monomial::x());    // x³ = 2x(1+g)
    if (ca == Core::X2 && cb == Core::X2) return scaled({2, 2}, Monomial::x2());  // x⁴ = 2x²(1+g)
    if ((ca == Core::X || ca == Core::X2) && cb == Core::Band) {
        // xX_{n,η} = n(1+g)x
        const Integer n = b.n();
        return scaled({n, n}, ca == Core::X ? Monomial::x() : Monomial::x2());
    }

    // X_{n,η}·X_{s,α}
    const Integer ns = Integer(a.n()) * b.n();
    if (!(a.eta() == b.eta())) return PresElement(Monomial::x2(true), ns);
    const unsigned lo = std::min(a.n(), b.n());
    const unsigned hi = std::max(a.n(), b.n());
    PresElement out(Monomial::x2(true), Integer(lo) * (hi - 1));
    out.add(Monomial::band(lo, a.eta()), 1);
    out.add(Monomial::band(lo, a.eta(), true), 1);
    return out;
}

}  // namespace

PresElement nf_mul(const Monomial& a, const Monomial& b) {
    PresElement prod = core_mul(strip_g(a), strip_g(b));
    return a.has_g() != b.has_g() ? prod.times_g() : prod;
}

PresElement nf_mul(const PresElement& p, const PresElement& q) {
    PresElement out;
    for (const auto& [ma, ca] : p.terms())
        for (const auto& [mb, cb] : q.terms()) {
            PresElement prod = nf_mul(ma, mb);
            prod *= ca * cb;
            out += prod;
        }
    return out;
}

PresElement nf_pow(const PresElement& p, unsigned k) {
    PresElement out(Monomial::one());
    for (unsigned i = 0; i < k; ++i) out = nf_mul(out, p);
    return out;
}

namespace {

const ModuleLabel& p_label(int r) {
    static const ModuleLabel p0 = ModuleLabel::projective(Z2(0));
    static const ModuleLabel p1 = ModuleLabel::projective(Z2(1));
    return r == 0 ? p0 : p1;
}

// Image of a g-free or g-carrying monomial.
GreenElement monomial_to_green(const Monomial& m) {
    const Z2 r(m.has_g() ? 1 : 0);
    switch (m.core()) {
    case Core::One: return GreenElement(ModuleLabel::simple(r));
    case Core::X: return GreenElement(ModuleLabel::simple_two(r));
    case Core::X2: return GreenElement(ModuleLabel::projective(r + 1));  // x² = P(1), gx² = P(0)
    case Core::Y:
    case Core::Z: {
        // y^n = [Ω^n V(0)] + f_n x², with f_n x² = c0 [P(1)] + c1 [P(0)]
        const auto f = f_poly(m.n());
        const ModuleLabel omega =
            m.core() == Core::Y ? ModuleLabel::syzygy(m.n(), r) : ModuleLabel::cosyzygy(m.n(), r);
        GreenElement out(omega);
        const int p_for_c0 = m.has_g() ? 0 : 1;
        out.add(p_label(p_for_c0), f.c0);
        out.add(p_label(1 - p_for_c0), f.c1);
        return out;
    }
    case Core::Band: return GreenElement(ModuleLabel::band(m.n(), r, m.eta()));
    }
    throw std::logic_error("monomial_to_green: unreachable");
}

PresElement label_to_pres(const ModuleLabel& label) {
    using Kind = ModuleLabel::Kind;
    const bool g = label.r().value() == 1;
    switch (label.kind()) {
    case Kind::SimpleOne: return PresElement(Monomial::one(g));
    case Kind::SimpleTwo: return PresElement(Monomial::x(g));
    case Kind::Projective: return PresElement(Monomial::x2(!g));
    case Kind::Syzygy:
    case Kind::Cosyzygy: {
        const unsigned n = label.s();
        const Monomial power = label.kind() == Kind::Syzygy ? Monomial::y(n, g) : Monomial::z(n, g);
        // [Ω^n V(0)] = y^n - f_n x², and [Ω^n V(1)] = g·(that)
        const auto f = f_poly(n);
        PresElement out(power);
        out.add(Monomial::x2(g), -f.c0);
        out.add(Monomial::x2(!g), -f.c1);
        return out;
    }
    case Kind::Band: return PresElement(Monomial::band(label.s(), label.eta(), g));
    }
    throw std::logic_error("label_to_pres: unreachable");
}

}  // namespace

GreenElement to_green(const PresElement& p) {
    GreenElement out;
    for (const auto& [m, c] : p.terms()) {
        GreenElement img = monomial_to_green(m);
        img *= c;
        out += img;
    }
    return out;
}

PresElement from_green(const GreenElement& e) {
    PresElement out;
    for (const auto& [label, c] : e.terms()) {
        PresElement img = label_to_pres(label);
        img *= c;
        out += img;
    }
    return out;
}

std::vector<IdealGenerator> ideal_generator_images(unsigned max_n, const std::vector<EtaParam>& etas) {
    const GreenElement one(ModuleLabel::simple(Z2(0)));
    const GreenElement g(ModuleLabel::simple(Z2(1)));
    const GreenElement x(ModuleLabel::simple_two(Z2(0)));
    const GreenElement y(ModuleLabel::syzygy(1, Z2(0)));
    const GreenElement z(ModuleLabel::cosyzygy(1, Z2(0)));
    const GreenElement x2 = x * x;
    const GreenElement gx2 = g * x2;
    const auto band = [](unsigned n, const EtaParam& eta) { return GreenElement(ModuleLabel::band(n, Z2(0), eta)); };
    const auto num = [](unsigned v) { return Integer(v); };

    std::vector<IdealGenerator> out;
    out.push_back({"g^2 - 1", "g^2 - 1", g * g - one});
    out.push_back({"x^3 - 2x(1+g)", "x^3 - 2x(1+g)", x * x2 - num(2) * (x * (one + g))});
    out.push_back({"x(y - 1 - 2g)", "x(y - 1 - 2g)", x * (y - one - num(2) * g)});
    out.push_back({"x(y - z)", "x(y - z)", x * (y - z)});
    out.push_back({"yz - 1 - 2x^2", "yz - 1 - 2x^2", y * z - one - num(2) * x2});

    for (unsigned n = 1; n <= max_n; ++n)
        for (const auto& eta : etas) {
            const std::string tag = "_{" + std::to_string(n) + "," + to_string(eta) + "}";
            const GreenElement X = band(n, eta);
            out.push_back({"xX_{n,eta} - n(1+g)x", "xX" + tag + " - n(1+g)x", x * X - num(n) * ((one + g) * x)});
            out.push_back({"yX_{n,eta} - ngx^2 - gX", "yX" + tag + " - ngx^2 - gX", y * X - num(n) * gx2 - g * X});
            out.push_back({"zX_{n,eta} - nx^2 - gX", "zX" + tag + " - nx^2 - gX", z * X - num(n) * x2 - g * X});
        }

    for (unsigned n = 1; n <= max_n; ++n)
        for (unsigned s = 1; s <= max_n; ++s)
            for (const auto& eta : etas)
                for (const auto& alpha : etas) {
                    const GreenElement Xn = band(n, eta);
                    const GreenElement Xs = band(s, alpha);
                    const std::string tag = "X_{" + std::to_string(n) + "," + to_string(eta) + "}X_{" +
                                            std::to_string(s) + "," + to_string(alpha) + "}";
                    if (!(eta == alpha)) {
                        out.push_back({"X_{n,eta}X_{s,alpha} - nsgx^2 (eta != alpha)", tag + " - nsgx^2", Xn * Xs - num(n * s) * gx2});
                    } else if (s >= n) {
                        out.push_back({"X_{n,eta}X_{t,eta} - n(t-1)gx^2 - X - gX (n <= t)", tag + " - n(t-1)gx^2 - X - gX", Xn * Xs - num(n * (s - 1)) * gx2 - Xn - g * Xn});
                    }
                }
    return out;
}

std::string to_string(const Monomial& m) {
    std::string core;
    switch (m.core()) {
    case Core::One: core = ""; break;
    case Core::X: core = "x"; break;
    case Core::X2: core = "x^2"; break;
    case Core::Y: core = m.n() == 1 ? "y" : "y^" + std::to_string(m.n()); break;
    case Core::Z: core = m.n() == 1 ? "z" : "z^" + std::to_string(m.n()); break;
    case Core::Band: core = "X_{" + std::to_string(m.n()) + "," + to_string(m.eta()) + "}"; break;
    }
    if (m.has_g()) return core.empty() ? "g" : "g*" + core;
    return core.empty() ? "1" : core;
}

std::string to_string(const PresElement& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        const Integer mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        const bool bare_one = m.core() == Core::One && !m.has_g();
        if (bare_one) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << to_string(m);
        }
        first = false;
    }
    return os.str();
}

}  // namespace greend4::pres
