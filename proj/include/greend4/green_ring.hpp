#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace greend4 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Residue class mod 2.
class Z2 {
public:
    constexpr Z2() = default;
    constexpr explicit Z2(int v) : value_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}

    constexpr int value() const { return value_; }
    /// (-1)^r
    constexpr int sign() const { return value_ == 0 ? 1 : -1; }

    friend constexpr Z2 operator+(Z2 a, Z2 b) { return Z2(a.value_ + b.value_); }
    friend constexpr Z2 operator+(Z2 a, int b) { return Z2(a.value_ + b); }
    friend constexpr auto operator<=>(Z2, Z2) = default;

private:
    std::uint8_t value_ = 0;
};

/// A point of the projective line over Q: a rational number or infinity.
class EtaParam {
public:
    static EtaParam infinity() { return EtaParam(); }
    static EtaParam finite(Rational q) {
        q.canonicalize();
        return EtaParam(std::move(q));
    }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::logic_error on infinity.
    const Rational& value() const;

    friend bool operator==(const EtaParam& a, const EtaParam& b) { return a.value_ == b.value_; }
    /// Rationals by value, infinity last.
    friend std::strong_ordering operator<=>(const EtaParam& a, const EtaParam& b);

private:
    EtaParam() = default;
    explicit EtaParam(Rational q) : value_(std::move(q)) {}
    std::optional<Rational> value_;
};

/// Isomorphism class of one indecomposable D4-module.
///
/// Variants, with dimensions:
///   SimpleOne  V(r)        1
///   SimpleTwo  V(2,r)      2
///   Syzygy     Ω^s V(r)    2s+1
///   Cosyzygy   Ω^-s V(r)   2s+1
///   Band       M_s(r,η)    2s
///   Projective P(r)        4
///
/// The enumerator order is the canonical label order used for printing.
class ModuleLabel {
public:
    enum class Kind : std::uint8_t { SimpleOne, SimpleTwo, Syzygy, Cosyzygy, Band, Projective };

    static ModuleLabel simple(Z2 r) { return {Kind::SimpleOne, 0, r, std::nullopt}; }
    static ModuleLabel simple_two(Z2 r) { return {Kind::SimpleTwo, 0, r, std::nullopt}; }
    static ModuleLabel projective(Z2 r) { return {Kind::Projective, 0, r, std::nullopt}; }
    /// Ω^s V(r) for s >= 1; s == 0 gives V(r).
    static ModuleLabel syzygy(unsigned s, Z2 r);
    /// Ω^-s V(r) for s >= 1; s == 0 gives V(r).
    static ModuleLabel cosyzygy(unsigned s, Z2 r);
    /// Ω^n V(r) for any integer n.
    static ModuleLabel omega(long n, Z2 r);
    /// M_s(r,η); throws std::invalid_argument for s == 0.
    static ModuleLabel band(unsigned s, Z2 r, EtaParam eta);

    Kind kind() const { return kind_; }
    /// Parameter s of Ω^{±s} and M_s; 0 for the other variants.
    unsigned s() const { return s_; }
    Z2 r() const { return r_; }
    /// Band parameter; throws std::logic_error on non-band labels.
    const EtaParam& eta() const;

    /// Same variant and parameters with r shifted by `shift`.
    ModuleLabel twisted(Z2 shift) const;

    friend bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
    friend std::strong_ordering operator<=>(const ModuleLabel& a, const ModuleLabel& b);

private:
    ModuleLabel(Kind kind, unsigned s, Z2 r, std::optional<EtaParam> eta)
        : kind_(kind), s_(s), r_(r), eta_(std::move(eta)) {}

    Kind kind_;
    unsigned s_;
    Z2 r_;
    std::optional<EtaParam> eta_;
};

/// Element of the Green ring: finite integer combination of labels.
class GreenElement {
public:
    using Terms = std::map<ModuleLabel, Integer>;

    GreenElement() = default;
    explicit GreenElement(const ModuleLabel& label, Integer coeff = 1);

    /// Sum of labels with multiplicities; convenient for multisets.
    static GreenElement from_terms(std::initializer_list<std::pair<ModuleLabel, long>> terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(const ModuleLabel& label) const;

    void add(const ModuleLabel& label, const Integer& coeff);

    GreenElement& operator+=(const GreenElement& other);
    GreenElement& operator-=(const GreenElement& other);
    GreenElement& operator*=(const Integer& scalar);

    friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
    friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }
    friend GreenElement operator*(const Integer& s, GreenElement e) { return e *= s; }
    friend GreenElement operator*(const GreenElement& a, const GreenElement& b);
    friend bool operator==(const GreenElement&, const GreenElement&) = default;

private:
    Terms terms_;
};

/// One of the 19 closed-form cases of the multiplication table.
enum class ProductCase : std::uint8_t {
    C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10,
    C11, C12, C13, C14, C15, C16, C17, C18, C19
};

std::string to_string(ProductCase c);
ProductCase classify_product(const ModuleLabel& lhs, const ModuleLabel& rhs);

/// Decomposition of lhs ⊗ rhs into indecomposables.
GreenElement mul_labels(const ModuleLabel& lhs, const ModuleLabel& rhs);

/// A label-level multiplication table, so callers can substitute a modified table.
using LabelProduct = std::function<GreenElement(const ModuleLabel&, const ModuleLabel&)>;

/// Bilinear extension of `table` (mul_labels by default).
GreenElement mul(const GreenElement& lhs, const GreenElement& rhs);
GreenElement mul(const GreenElement& lhs, const GreenElement& rhs, const LabelProduct& table);

ModuleLabel dual(const ModuleLabel& label);
GreenElement dual(const GreenElement& e);

unsigned label_dimension(const ModuleLabel& label);
Integer dimension(const GreenElement& e);

/// Multiplicities of (V(0), V(1), V(2,0), V(2,1)) among composition factors.
using FactorVector = std::array<Integer, 4>;
FactorVector composition_factors(const ModuleLabel& label);
FactorVector grothendieck_image(const GreenElement& e);
/// Product in G0 induced by the table on simple modules.
FactorVector grothendieck_mul(const FactorVector& lhs, const FactorVector& rhs);

/// Canonical text, e.g. "V(2,1)", "O^-3V(0)", "M_2(1,5/7)", "M_1(0,oo)".
std::string to_string(const EtaParam& eta);
std::string to_string(const ModuleLabel& label);
/// Canonical text, e.g. "[O^1V(1)] + 3*[P(1)]"; "0" for the zero element.
std::string to_string(const GreenElement& e);

}  // namespace greend4
