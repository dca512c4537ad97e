#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greend4/green_ring.hpp"

#include <vector>

using namespace greend4;

namespace {

const Z2 r0(0), r1(1);

ModuleLabel V(int r) { return ModuleLabel::simple(Z2(r)); }
ModuleLabel T(int r) { return ModuleLabel::simple_two(Z2(r)); }
ModuleLabel P(int r) { return ModuleLabel::projective(Z2(r)); }
ModuleLabel Om(long n, int r) { return ModuleLabel::omega(n, Z2(r)); }
ModuleLabel M(unsigned s, int r, const EtaParam& eta) { return ModuleLabel::band(s, Z2(r), eta); }
EtaParam eta(long num, long den = 1) { return EtaParam::finite(Rational(num, den)); }
const EtaParam oo = EtaParam::infinity();

GreenElement el(std::initializer_list<std::pair<ModuleLabel, long>> terms) { return GreenElement::from_terms(terms); }

std::vector<ModuleLabel> grid(unsigned max_s, const std::vector<EtaParam>& etas) {
    std::vector<ModuleLabel> out;
    for (int r = 0; r < 2; ++r) {
        out.push_back(V(r));
        out.push_back(T(r));
        out.push_back(P(r));
        for (unsigned s = 1; s <= max_s; ++s) {
            out.push_back(Om(s, r));
            out.push_back(Om(-static_cast<long>(s), r));
            for (const auto& e : etas) out.push_back(M(s, r, e));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("Z2 arithmetic") {
    CHECK((r1 + r1) == r0);
    CHECK((r1 + 3) == r0);
    CHECK(Z2(-1) == r1);
    CHECK(r1.sign() == -1);
}

TEST_CASE("eta parameters are normalized and ordered with infinity last") {
    CHECK(eta(2, 4) == eta(1, 2));
    CHECK(eta(3, -6) == eta(-1, 2));
    CHECK(eta(-2) < eta(0));
    CHECK(eta(1000) < oo);
    CHECK_THROWS_AS(oo.value(), std::logic_error);
}

TEST_CASE("labels: construction rules and canonical text") {
    CHECK(Om(0, 1) == V(1));
    CHECK(to_string(Om(3, 1)) == "O^3V(1)");
    CHECK(to_string(Om(-3, 1)) == "O^-3V(1)");
    CHECK(to_string(M(2, 0, eta(5, 7))) == "M_2(0,5/7)");
    CHECK(to_string(M(1, 0, oo)) == "M_1(0,oo)");
    CHECK(to_string(T(1)) == "V(2,1)");
    CHECK_THROWS(M(0, 0, oo));
    CHECK_THROWS(ModuleLabel::syzygy(0, r0).eta());
}

TEST_CASE("worked products") {
    CHECK(mul_labels(T(0), T(0)) == el({{P(1), 1}}));
    CHECK(mul_labels(Om(1, 0), Om(1, 0)) == el({{Om(2, 0), 1}, {P(0), 1}}));
    CHECK(mul_labels(Om(2, 1), Om(-1, 0)) == el({{Om(1, 1), 1}, {P(1), 3}}));
    CHECK(mul_labels(M(1, 0, eta(0)), M(1, 0, oo)) == el({{P(0), 1}}));
    for (const auto& e : {eta(0), eta(5, 7), oo})
        CHECK(mul_labels(M(1, 0, e), M(1, 0, e)) == el({{M(1, 0, e), 1}, {M(1, 1, e), 1}}));
}

TEST_CASE("V(0) is the unit") {
    for (const auto& l : grid(3, {eta(0), eta(-2), oo})) CHECK(mul_labels(V(0), l) == GreenElement(l));
}

TEST_CASE("case classification") {
    CHECK(classify_product(V(0), V(1)) == ProductCase::C1);
    CHECK(classify_product(T(0), V(1)) == ProductCase::C2);
    CHECK(classify_product(T(1), Om(-2, 0)) == ProductCase::C7);
    CHECK(classify_product(P(0), M(1, 1, oo)) == ProductCase::C11);
    CHECK(classify_product(Om(2, 0), Om(-1, 1)) == ProductCase::C15);
    CHECK(classify_product(Om(-2, 0), Om(1, 1)) == ProductCase::C15);
    CHECK(classify_product(M(1, 0, eta(1)), M(2, 0, eta(0))) == ProductCase::C18);
    CHECK(classify_product(M(3, 0, eta(1)), M(2, 1, eta(1))) == ProductCase::C19);
    CHECK(to_string(ProductCase::C19) == "C19");
}

TEST_CASE("C15 at s = t collapses to a simple") {
    CHECK(mul_labels(Om(2, 0), Om(-2, 1)) == el({{V(1), 1}, {P(0), 6}}));
    CHECK(mul_labels(Om(1, 0), Om(-1, 0)) == el({{V(0), 1}, {P(1), 2}}));
}

TEST_CASE("C19 swaps so that s <= t") {
    const auto e = eta(5, 7);
    CHECK(mul_labels(M(3, 1, e), M(2, 0, e)) == el({{P(1), 4}, {M(2, 0, e), 1}, {M(2, 1, e), 1}}));
}

TEST_CASE("bilinear extension") {
    CHECK(mul(el({{V(1), 2}}), GreenElement(T(0))) == el({{T(1), 2}}));
    CHECK(mul(GreenElement(), GreenElement(Om(3, 0))).is_zero());
    CHECK(mul(el({{Om(1, 0), 1}, {V(1), 1}}), GreenElement(Om(1, 0))) ==
          el({{Om(2, 0), 1}, {P(0), 1}, {Om(1, 1), 1}}));
}

TEST_CASE("a substituted table drives mul") {
    const LabelProduct doubled = [](const ModuleLabel& a, const ModuleLabel& b) {
        GreenElement e = mul_labels(a, b);
        e *= Integer(2);
        return e;
    };
    CHECK(mul(GreenElement(T(0)), GreenElement(T(0)), doubled) == el({{P(1), 2}}));
}

TEST_CASE("element arithmetic keeps no zero coefficients") {
    GreenElement e = el({{V(0), 1}, {P(1), 2}});
    e -= el({{V(0), 1}});
    CHECK(e == el({{P(1), 2}}));
    CHECK(e.coeff(V(0)) == 0);
    e += el({{P(1), -2}});
    CHECK(e.is_zero());
    CHECK(to_string(e) == "0");
}

TEST_CASE("canonical rendering order") {
    const GreenElement e = el({{P(1), 3}, {Om(1, 1), 1}});
    CHECK(to_string(e) == "[O^1V(1)] + 3*[P(1)]");
    CHECK(to_string(el({{M(2, 0, oo), -1}, {M(2, 0, eta(5, 7)), 1}})) == "[M_2(0,5/7)] - [M_2(0,oo)]");
}

TEST_CASE("dual on labels") {
    CHECK(dual(Om(2, 1)) == Om(-2, 1));
    CHECK(dual(V(0)) == V(0));
    CHECK(dual(M(3, 0, eta(5, 7))) == M(3, 1, eta(5, 7)));
    CHECK(dual(T(0)) == T(1));
    CHECK(dual(P(1)) == P(1));
}

TEST_CASE("dimensions") {
    CHECK(label_dimension(Om(3, 0)) == 7);
    CHECK(label_dimension(P(1)) == 4);
    CHECK(label_dimension(M(2, 1, oo)) == 4);
    CHECK(dimension(el({{P(0), 2}, {V(1), -1}})) == 7);
}

TEST_CASE("composition factors and the Grothendieck image") {
    CHECK(composition_factors(P(0)) == FactorVector{2, 2, 0, 0});
    CHECK(composition_factors(Om(1, 0)) == FactorVector{1, 2, 0, 0});
    CHECK(composition_factors(Om(2, 0)) == FactorVector{3, 2, 0, 0});
    CHECK(composition_factors(T(1)) == FactorVector{0, 0, 0, 1});
    CHECK(grothendieck_image(el({{P(0), 1}, {V(1), 1}})) == FactorVector{2, 3, 0, 0});
    CHECK(grothendieck_image(GreenElement()) == FactorVector{0, 0, 0, 0});
    CHECK(grothendieck_image(GreenElement(M(2, 0, eta(1, 2)))) == FactorVector{2, 2, 0, 0});
}

TEST_CASE("property: commutativity, dimension and Grothendieck homomorphisms over a grid") {
    const auto labels = grid(4, {eta(0), eta(1), eta(-2), eta(5, 7), oo});
    for (const auto& a : labels)
        for (const auto& b : labels) {
            const GreenElement ab = mul_labels(a, b);
            CHECK(ab == mul_labels(b, a));
            CHECK(dimension(ab) == Integer(label_dimension(a)) * label_dimension(b));
            CHECK(grothendieck_image(ab) == grothendieck_mul(composition_factors(a), composition_factors(b)));
            for (const auto& [label, coeff] : ab.terms()) CHECK(coeff > 0);
        }
}

TEST_CASE("property: associativity on sampled triples") {
    const auto labels = grid(3, {eta(0), eta(1), oo});
    for (std::size_t i = 0; i < labels.size(); i += 2)
        for (std::size_t j = 1; j < labels.size(); j += 3)
            for (std::size_t k = 0; k < labels.size(); k += 5) {
                const GreenElement a(labels[i]), b(labels[j]), c(labels[k]);
                CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            }
}

TEST_CASE("property: duality is an involutive ring map") {
    const auto labels = grid(3, {eta(0), eta(5, 7), oo});
    for (const auto& a : labels) {
        CHECK(dual(dual(a)) == a);
        for (const auto& b : labels) CHECK(dual(mul_labels(a, b)) == mul_labels(dual(a), dual(b)));
    }
    CHECK(dual(GreenElement(T(0))) == mul(GreenElement(V(1)), GreenElement(T(0))));
}

TEST_CASE("property: projectives absorb") {
    const auto labels = grid(3, {eta(0), oo});
    for (const auto& p : {P(0), P(1), T(0), T(1)})
        for (const auto& l : labels) {
            const GreenElement prod = mul_labels(p, l);
            for (const auto& [label, coeff] : prod.terms()) {
                const bool projective = label.kind() == ModuleLabel::Kind::Projective ||
                                        label.kind() == ModuleLabel::Kind::SimpleTwo;
                CHECK(projective);
            }
        }
}

TEST_CASE("large coefficients stay exact") {
    const GreenElement e = mul_labels(M(200, 0, oo), M(300, 1, oo));
    CHECK(e.coeff(P(1)) == 200 * 299);
    CHECK(dimension(e) == 400 * 600);
}
