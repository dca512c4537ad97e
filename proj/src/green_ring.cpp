#include "greend4/green_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace greend4 {

const Rational& EtaParam::value() const {
    if (!value_) throw std::logic_error("EtaParam::value on infinity");
    return *value_;
}

std::strong_ordering operator<=>(const EtaParam& a, const EtaParam& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    const int c = cmp(*a.value_, *b.value_);
    return c <=> 0;
}

ModuleLabel ModuleLabel::syzygy(unsigned s, Z2 r) {
    if (s == 0) return simple(r);
    return {Kind::Syzygy, s, r, std::nullopt};
}

ModuleLabel ModuleLabel::cosyzygy(unsigned s, Z2 r) {
    if (s == 0) return simple(r);
    return {Kind::Cosyzygy, s, r, std::nullopt};
}

ModuleLabel ModuleLabel::omega(long n, Z2 r) {
    return n >= 0 ? syzygy(static_cast<unsigned>(n), r) : cosyzygy(static_cast<unsigned>(-n), r);
}

ModuleLabel ModuleLabel::band(unsigned s, Z2 r, EtaParam eta) {
    if (s == 0) throw std::invalid_argument("band module needs s >= 1");
    return {Kind::Band, s, r, std::move(eta)};
}

const EtaParam& ModuleLabel::eta() const {
    if (!eta_) throw std::logic_error("eta() on a non-band label");
    return *eta_;
}

ModuleLabel ModuleLabel::twisted(Z2 shift) const {
    ModuleLabel out = *this;
    out.r_ = r_ + shift;
    return out;
}

std::strong_ordering operator<=>(const ModuleLabel& a, const ModuleLabel& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.s_ <=> b.s_; c != 0) return c;
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (a.eta_ && b.eta_) return *a.eta_ <=> *b.eta_;
    return std::strong_ordering::equal;
}

GreenElement::GreenElement(const ModuleLabel& label, Integer coeff) { add(label, coeff); }

GreenElement GreenElement::from_terms(std::initializer_list<std::pair<ModuleLabel, long>> terms) {
    GreenElement e;
    for (const auto& [label, c] : terms) e.add(label, Integer(c));
    return e;
}

Integer GreenElement::coeff(const ModuleLabel& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GreenElement::add(const ModuleLabel& label, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GreenElement& GreenElement::operator+=(const GreenElement& other) {
    for (const auto& [label, c] : other.terms_) add(label, c);
    return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& other) {
    for (const auto& [label, c] : other.terms_) add(label, -c);
    return *this;
}

GreenElement& GreenElement::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [label, c] : terms_) c *= scalar;
    return *this;
}

namespace {

using Kind = ModuleLabel::Kind;

// Rank of a variant in the case analysis: V < T < P < Ω^{±} < M.
int table_rank(Kind k) {
    switch (k) {
    case Kind::SimpleOne: return 0;
    case Kind::SimpleTwo: return 1;
    case Kind::Projective: return 2;
    case Kind::Syzygy:
    case Kind::Cosyzygy: return 3;
    case Kind::Band: return 4;
    }
    return 5;
}

bool is_omega(Kind k) { return k == Kind::Syzygy || k == Kind::Cosyzygy; }

// Orders the pair so that the first factor has the smaller table rank,
// with Ω^s before Ω^-t when both are syzygy-type.
std::pair<const ModuleLabel*, const ModuleLabel*> ordered(const ModuleLabel& a, const ModuleLabel& b) {
    const int ra = table_rank(a.kind());
    const int rb = table_rank(b.kind());
    if (ra < rb) return {&a, &b};
    if (rb < ra) return {&b, &a};
    if (a.kind() == Kind::Cosyzygy && b.kind() == Kind::Syzygy) return {&b, &a};
    return {&a, &b};
}

GreenElement term(const ModuleLabel& l, const Integer& c) { return GreenElement(l, c); }

Integer z(unsigned v) { return Integer(v); }

}  // namespace

std::string to_string(ProductCase c) { return "C" + std::to_string(static_cast<int>(c)); }

ProductCase classify_product(const ModuleLabel& lhs, const ModuleLabel& rhs) {
    const auto [a, b] = ordered(lhs, rhs);
    const Kind ka = a->kind();
    const Kind kb = b->kind();
    if (ka == Kind::SimpleOne) {
        switch (kb) {
        case Kind::SimpleOne: return ProductCase::C1;
        case Kind::SimpleTwo: return ProductCase::C2;
        case Kind::Projective: return ProductCase::C3;
        case Kind::Syzygy:
        case Kind::Cosyzygy: return ProductCase::C4;
        case Kind::Band: return ProductCase::C5;
        }
    }
    if (ka == Kind::SimpleTwo) {
        switch (kb) {
        case Kind::SimpleTwo: return ProductCase::C6;
        case Kind::Syzygy:
        case Kind::Cosyzygy: return ProductCase::C7;
        case Kind::Band: return ProductCase::C8;
        case Kind::Projective: return ProductCase::C9;
        default: break;
        }
    }
    if (ka == Kind::Projective) {
        if (is_omega(kb)) return ProductCase::C10;
        if (kb == Kind::Band) return ProductCase::C11;
        return ProductCase::C12;
    }
    if (ka == Kind::Syzygy && kb == Kind::Syzygy) return ProductCase::C13;
    if (ka == Kind::Cosyzygy && kb == Kind::Cosyzygy) return ProductCase::C14;
    if (ka == Kind::Syzygy && kb == Kind::Cosyzygy) return ProductCase::C15;
    if (ka == Kind::Syzygy && kb == Kind::Band) return ProductCase::C16;
    if (ka == Kind::Cosyzygy && kb == Kind::Band) return ProductCase::C17;
    return a->eta() == b->eta() ? ProductCase::C19 : ProductCase::C18;
}

GreenElement mul_labels(const ModuleLabel& lhs, const ModuleLabel& rhs) {
    const auto [a, b] = ordered(lhs, rhs);
    const Z2 rr = a->r() + b->r();
    const auto P = [](Z2 r) { return ModuleLabel::projective(r); };
    const auto T = [](Z2 r) { return ModuleLabel::simple_two(r); };

    switch (classify_product(lhs, rhs)) {
    case ProductCase::C1:
    case ProductCase::C2:
    case ProductCase::C3:
    case ProductCase::C4:
    case ProductCase::C5:
        return GreenElement(b->twisted(a->r()));
    case ProductCase::C6:
        return GreenElement(P(rr + 1));
    case ProductCase::C7: {
        const unsigned s = b->s();
        const Z2 low = (s % 2 == 1) ? rr : rr + 1;
        return term(T(low), z(s)) + term(T(low + 1), z(s + 1));
    }
    case ProductCase::C8:
        return term(T(Z2(0)), z(b->s())) + term(T(Z2(1)), z(b->s()));
    case ProductCase::C9:
        return term(T(Z2(0)), 2) + term(T(Z2(1)), 2);
    case ProductCase::C10: {
        const unsigned s = b->s();
        const Z2 low = (s % 2 == 1) ? rr : rr + 1;
        return term(P(low), z(s)) + term(P(low + 1), z(s + 1));
    }
    case ProductCase::C11:
        return term(P(Z2(0)), z(b->s())) + term(P(Z2(1)), z(b->s()));
    case ProductCase::C12:
        return term(P(Z2(0)), 2) + term(P(Z2(1)), 2);
    case ProductCase::C13:
    case ProductCase::C14: {
        const unsigned s = a->s();
        const unsigned t = b->s();
        const long total = static_cast<long>(s + t);
        const ModuleLabel omega = ModuleLabel::omega(a->kind() == Kind::Syzygy ? total : -total, rr);
        return GreenElement(omega) + term(P(rr + static_cast<int>((s + t) % 2)), z(s) * z(t));
    }
    case ProductCase::C15: {
        const unsigned s = a->s();
        const unsigned t = b->s();
        const unsigned lo = std::min(s, t);
        const unsigned hi = std::max(s, t);
        const ModuleLabel omega = ModuleLabel::omega(static_cast<long>(s) - static_cast<long>(t), rr);
        return GreenElement(omega) + term(P(rr + static_cast<int>((s + t + 1) % 2)), z(hi + 1) * z(lo));
    }
    case ProductCase::C16:
    case ProductCase::C17: {
        // a = Ω^{±s}V(r'), b = M_t(r, η)
        const unsigned s = a->s();
        const unsigned t = b->s();
        const bool odd = s % 2 == 1;
        const bool syz = a->kind() == Kind::Syzygy;
        const Z2 proj_shift = Z2((syz ? 0 : 1) + (odd ? 0 : 1));
        const Z2 band_shift = Z2(odd ? 1 : 0);
        return term(P(rr + proj_shift), z(s) * z(t)) +
               GreenElement(ModuleLabel::band(t, rr + band_shift, b->eta()));
    }
    case ProductCase::C18:
        return term(P(rr), z(a->s()) * z(b->s()));
    case ProductCase::C19: {
        const unsigned s = std::min(a->s(), b->s());
        const unsigned t = std::max(a->s(), b->s());
        const EtaParam& eta = a->eta();
        return term(P(rr), z(s) * z(t - 1)) + GreenElement(ModuleLabel::band(s, Z2(0), eta)) +
               GreenElement(ModuleLabel::band(s, Z2(1), eta));
    }
    }
    throw std::logic_error("mul_labels: unreachable");
}

GreenElement mul(const GreenElement& lhs, const GreenElement& rhs, const LabelProduct& table) {
    GreenElement out;
    for (const auto& [la, ca] : lhs.terms())
        for (const auto& [lb, cb] : rhs.terms()) {
            GreenElement prod = table(la, lb);
            prod *= ca * cb;
            out += prod;
        }
    return out;
}

GreenElement mul(const GreenElement& lhs, const GreenElement& rhs) { return mul(lhs, rhs, mul_labels); }

GreenElement operator*(const GreenElement& a, const GreenElement& b) { return mul(a, b); }

ModuleLabel dual(const ModuleLabel& label) {
    switch (label.kind()) {
    case Kind::SimpleOne:
    case Kind::Projective: return label;
    case Kind::SimpleTwo: return label.twisted(Z2(1));
    case Kind::Syzygy: return ModuleLabel::cosyzygy(label.s(), label.r());
    case Kind::Cosyzygy: return ModuleLabel::syzygy(label.s(), label.r());
    case Kind::Band: return label.twisted(Z2(1));
    }
    throw std::logic_error("dual: unreachable");
}

GreenElement dual(const GreenElement& e) {
    GreenElement out;
    for (const auto& [label, c] : e.terms()) out.add(dual(label), c);
    return out;
}

unsigned label_dimension(const ModuleLabel& label) {
    switch (label.kind()) {
    case Kind::SimpleOne: return 1;
    case Kind::SimpleTwo: return 2;
    case Kind::Projective: return 4;
    case Kind::Syzygy:
    case Kind::Cosyzygy: return 2 * label.s() + 1;
    case Kind::Band: return 2 * label.s();
    }
    return 0;
}

Integer dimension(const GreenElement& e) {
    Integer total = 0;
    for (const auto& [label, c] : e.terms()) total += c * label_dimension(label);
    return total;
}

FactorVector composition_factors(const ModuleLabel& label) {
    FactorVector v{0, 0, 0, 0};
    const int r = label.r().value();
    const int r1 = (label.r() + 1).value();
    switch (label.kind()) {
    case Kind::SimpleOne: v[r] = 1; break;
    case Kind::SimpleTwo: v[2 + r] = 1; break;
    case Kind::Projective:
        v[r] = 2;
        v[r1] = 2;
        break;
    case Kind::Syzygy:
    case Kind::Cosyzygy: {
        const unsigned s = label.s();
        if (s % 2 == 1) {
            v[r] = s;
            v[r1] = s + 1;
        } else {
            v[r] = s + 1;
            v[r1] = s;
        }
        break;
    }
    case Kind::Band:
        v[r] = label.s();
        v[r1] = label.s();
        break;
    }
    return v;
}

FactorVector grothendieck_image(const GreenElement& e) {
    FactorVector v{0, 0, 0, 0};
    for (const auto& [label, c] : e.terms()) {
        const auto f = composition_factors(label);
        for (std::size_t i = 0; i < 4; ++i) v[i] += c * f[i];
    }
    return v;
}

FactorVector grothendieck_mul(const FactorVector& lhs, const FactorVector& rhs) {
    static const std::array<ModuleLabel, 4> simples = {
        ModuleLabel::simple(Z2(0)), ModuleLabel::simple(Z2(1)), ModuleLabel::simple_two(Z2(0)),
        ModuleLabel::simple_two(Z2(1))};
    FactorVector out{0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        if (lhs[i] == 0) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            if (rhs[j] == 0) continue;
            const auto f = grothendieck_image(mul_labels(simples[i], simples[j]));
            for (std::size_t k = 0; k < 4; ++k) out[k] += lhs[i] * rhs[j] * f[k];
        }
    }
    return out;
}

std::string to_string(const EtaParam& eta) { return eta.is_infinite() ? "oo" : eta.value().get_str(); }

std::string to_string(const ModuleLabel& label) {
    const std::string r = std::to_string(label.r().value());
    switch (label.kind()) {
    case Kind::SimpleOne: return "V(" + r + ")";
    case Kind::SimpleTwo: return "V(2," + r + ")";
    case Kind::Projective: return "P(" + r + ")";
    case Kind::Syzygy: return "O^" + std::to_string(label.s()) + "V(" + r + ")";
    case Kind::Cosyzygy: return "O^-" + std::to_string(label.s()) + "V(" + r + ")";
    case Kind::Band: return "M_" + std::to_string(label.s()) + "(" + r + "," + to_string(label.eta()) + ")";
    }
    return "?";
}

std::string to_string(const GreenElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : e.terms()) {
        const bool negative = sgn(c) < 0;
        const Integer mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << '[' << to_string(label) << ']';
        first = false;
    }
    return os.str();
}

}  // namespace greend4
