#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greend4/cli.hpp"

#include <json.hpp>

using namespace greend4;
using namespace greend4::cli;

namespace {

EtaParam eta(long num, long den = 1) { return EtaParam::finite(Rational(num, den)); }
const EtaParam oo = EtaParam::infinity();

std::size_t error_position(std::string_view src) {
    try {
        parse_element(src);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("parse_element: basic elements") {
    CHECK(parse_element("[V(2,0)] + 2*[P(1)]") ==
          GreenElement::from_terms({{ModuleLabel::simple_two(Z2(0)), 1}, {ModuleLabel::projective(Z2(1)), 2}}));
    CHECK(parse_element("[O^-3V(1)]") == GreenElement(ModuleLabel::cosyzygy(3, Z2(1))));
    const GreenElement e = parse_element("[M_2(0,5/7)] - [M_2(0,oo)]");
    CHECK(e.terms().size() == 2);
    CHECK(e.coeff(ModuleLabel::band(2, Z2(0), eta(5, 7))) == 1);
    CHECK(e.coeff(ModuleLabel::band(2, Z2(0), oo)) == -1);
}

TEST_CASE("parse_element: normalization and whitespace") {
    CHECK(parse_element(" [V(0)]+[V(0)] - 2*[V(0)] ").is_zero());
    CHECK(parse_element("0").is_zero());
    CHECK(parse_element("-[P(0)]") == GreenElement(ModuleLabel::projective(Z2(0)), -1));
    CHECK(parse_element("[M_1(1,-4/6)]") == GreenElement(ModuleLabel::band(1, Z2(1), eta(-2, 3))));
    CHECK(parse_element("[O^1V(0)]") == GreenElement(ModuleLabel::syzygy(1, Z2(0))));
}

TEST_CASE("parse_element: errors carry a position") {
    CHECK(error_position("[V(2)]") == 3);
    CHECK(error_position("[O^0V(1)]") == 3);
    CHECK(error_position("[M_0(0,1)]") == 3);
    CHECK(error_position("[M_1(0,1/0)]") == 9);
    CHECK(error_position("[Q(0)]") == 1);
    CHECK(error_position("[V(0)] +") == 8);
    CHECK(error_position("[V(0)] [V(1)]") == 7);
    CHECK(error_position("2[V(0)]") == 1);
    CHECK_THROWS_AS(parse_label("V(0"), ParseError);
}

TEST_CASE("property: render and parse are inverse on canonical text") {
    std::vector<ModuleLabel> labels;
    for (int r = 0; r < 2; ++r) {
        labels.push_back(ModuleLabel::simple(Z2(r)));
        labels.push_back(ModuleLabel::simple_two(Z2(r)));
        labels.push_back(ModuleLabel::projective(Z2(r)));
        for (unsigned s = 1; s <= 12; ++s) {
            labels.push_back(ModuleLabel::syzygy(s, Z2(r)));
            labels.push_back(ModuleLabel::cosyzygy(s, Z2(r)));
            for (const auto& e : {eta(0), eta(-2), eta(5, 7), oo}) labels.push_back(ModuleLabel::band(s, Z2(r), e));
        }
    }
    GreenElement sum;
    long k = 1;
    for (const auto& l : labels) {
        const std::string text = to_string(GreenElement(l));
        CHECK(parse_element(text) == GreenElement(l));
        CHECK(to_string(parse_element(text)) == text);
        CHECK(parse_label(to_string(l)) == l);
        sum.add(l, (k % 3 == 0) ? -k : k);
        ++k;
    }
    CHECK(parse_element(to_string(sum)) == sum);
}

TEST_CASE("presentation grammar") {
    CHECK(pres::to_string(parse_presentation("y*z")) == "1 + 2*x^2");
    CHECK(pres::to_string(parse_presentation("g*g")) == "1");
    CHECK(pres::to_string(parse_presentation("2*(x + g*x) - x^3")) == "0");
    CHECK(pres::to_string(parse_presentation("X_{2,1/3}")) == "X_{2,1/3}");
    CHECK(pres::to_string(parse_presentation("-y^2 + y^2")) == "0");
    CHECK_THROWS_AS(parse_presentation("y*"), ParseError);
    CHECK_THROWS_AS(parse_presentation("X_{0,1}"), ParseError);
    CHECK_THROWS_AS(parse_presentation("w"), ParseError);
}

TEST_CASE("eta lists") {
    CHECK(parse_eta_list("").empty());
    CHECK(parse_eta_list("0,1,-2,5/7,oo").size() == 5);
    CHECK(parse_eta_list("oo").front() == oo);
    CHECK_THROWS_AS(parse_eta_list("1,,2"), ParseError);
}

TEST_CASE("cmd_multiply") {
    CHECK(cmd_multiply("[V(2,0)]", "[V(2,0)]", Format::Text).out == "[P(1)]\n");
    CHECK(cmd_multiply("[V(0)]", "[V(0)]", Format::Text).out == "[V(0)]\n");
    CHECK(cmd_multiply("[O^2V(1)]", "[O^-1V(0)]", Format::Text).out == "[O^1V(1)] + 3*[P(1)]\n");
    const Outcome bad = cmd_multiply("[V(3)]", "[V(0)]", Format::Text);
    CHECK(bad.exit_code == kExitUsage);
    CHECK(bad.err.find("position 3") != std::string::npos);
}

TEST_CASE("cmd_dual") {
    CHECK(cmd_dual("[O^2V(0)]", Format::Text).out == "[O^-2V(0)]\n");
    CHECK(cmd_dual("[P(0)]", Format::Text).out == "[P(0)]\n");
    CHECK(cmd_dual("[M_1(0,oo)]", Format::Text).out == "[M_1(1,oo)]\n");
}

TEST_CASE("cmd_presentation") {
    CHECK(cmd_presentation("normal-form", "y*z", Format::Text).out == "1 + 2*x^2\n");
    CHECK(cmd_presentation("from-modules", "[O^2V(0)]", Format::Text).out == "y^2 - g*x^2\n");
    CHECK(cmd_presentation("to-modules", "X_{2,1/3}", Format::Text).out == "[M_2(0,1/3)]\n");
    CHECK(cmd_presentation("to-modules", "y^", Format::Text).exit_code == kExitUsage);
    CHECK(cmd_presentation("sideways", "y", Format::Text).exit_code == kExitUsage);
}

TEST_CASE("JSON output follows the documented schema") {
    const auto j = nlohmann::json::parse(cmd_multiply("[O^2V(1)]", "[O^-1V(0)]", Format::Json).out);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["label"]["kind"] == "syzygy");
    CHECK(j["terms"][0]["label"]["s"] == 1);
    CHECK(j["terms"][0]["label"]["r"] == 1);
    CHECK(j["terms"][0]["coeff"] == 1);
    CHECK(j["terms"][1]["label"]["kind"] == "projective");
    CHECK(j["terms"][1]["coeff"] == 3);

    const auto band = nlohmann::json::parse(cmd_dual("[M_2(0,5/7)] - [M_1(0,oo)]", Format::Json).out);
    CHECK(band["terms"][0]["label"]["eta"] == "infinity");
    CHECK(band["terms"][0]["coeff"] == -1);
    CHECK(band["terms"][1]["label"]["eta"] == "5/7");

    const auto p = nlohmann::json::parse(cmd_presentation("from-modules", "[O^2V(0)]", Format::Json).out);
    CHECK(p["terms"][0]["monomial"]["core"] == "y");
    CHECK(p["terms"][0]["monomial"]["n"] == 2);
    CHECK(p["terms"][1]["monomial"]["g"] == true);
    CHECK(p["terms"][1]["coeff"] == -1);
}

TEST_CASE("JSON output is stable") {
    const std::string a = cmd_multiply("[M_2(0,1)] + [O^-2V(1)]", "[M_3(1,1)] + [V(2,1)]", Format::Json).out;
    for (int i = 0; i < 5; ++i)
        CHECK(cmd_multiply("[M_2(0,1)] + [O^-2V(1)]", "[M_3(1,1)] + [V(2,1)]", Format::Json).out == a);
}

TEST_CASE("verify: table with s <= 2 and two band parameters") {
    VerifyOptions opt;
    opt.scope = Scope::Table;
    opt.max_s = 2;
    opt.etas = {eta(0), oo};
    opt.seed = 7;
    opt.jobs = 4;
    const Outcome o = cmd_verify(opt, Format::Text);
    CHECK(o.exit_code == kExitOk);
    CHECK(o.out.find("PASS") != std::string::npos);
    CHECK(o.out.find("seed=7") != std::string::npos);
    const VerifyReport report = run_verify(opt);
    REQUIRE(report.sections.size() == 1);
    for (const auto& c : report.sections[0].checks) {
        INFO(c.name);
        CHECK(c.count > 0);
        CHECK(c.failures == 0);
    }
}

TEST_CASE("verify: presentation scope") {
    VerifyOptions opt;
    opt.scope = Scope::Presentation;
    opt.max_s = 4;
    opt.etas = {eta(0), eta(1), oo};
    const Outcome o = cmd_verify(opt, Format::Json);
    CHECK(o.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["passed"] == true);
    CHECK(j["mismatches"].empty());
}

TEST_CASE("verify: an injected fault fails and names the case") {
    VerifyOptions opt;
    opt.scope = Scope::Table;
    opt.max_s = 1;
    opt.inject_fault = ProductCase::C7;
    const Outcome o = cmd_verify(opt, Format::Text);
    CHECK(o.exit_code == kExitVerifyFailed);
    CHECK(o.out.find("FAIL  C7") != std::string::npos);
    CHECK(o.out.find("mismatch [table / C7]") != std::string::npos);
    CHECK(o.out.find("pass  C6") != std::string::npos);
}

TEST_CASE("verify: results do not depend on the worker count") {
    VerifyOptions opt;
    opt.scope = Scope::All;
    opt.max_s = 1;
    opt.etas = {eta(1), oo};
    opt.jobs = 1;
    const std::string serial = cmd_verify(opt, Format::Json).out;
    opt.jobs = 6;
    const std::string parallel = cmd_verify(opt, Format::Json).out;
    CHECK(serial == parallel);
}

TEST_CASE("verify rejects max_s = 0") {
    VerifyOptions opt;
    opt.max_s = 0;
    CHECK(cmd_verify(opt, Format::Text).exit_code == kExitUsage);
}
