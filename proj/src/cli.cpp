#include "greend4/cli.hpp"

#include "greend4/rep_lab.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <sstream>
#include <thread>

namespace greend4::cli {

using nlohmann::ordered_json;

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// ---- lexing helpers ----------------------------------------------------------------

class Cursor {
public:
    explicit Cursor(std::string_view src) : src_(src) {}

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= src_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool accept(std::string_view word) {
        skip_ws();
        if (src_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void expect(std::string_view word) {
        if (!accept(word)) fail("expected '" + std::string(word) + "'");
    }

    Integer uint() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a non-negative integer");
        return Integer(std::string(src_.substr(start, pos_ - start)));
    }

    unsigned small_uint(const char* what, unsigned min_value) {
        const std::size_t start = position();
        const Integer v = uint();
        if (v < min_value) throw ParseError(std::string(what) + " must be at least " + std::to_string(min_value), start);
        if (!v.fits_uint_p() || v > 100000) throw ParseError(std::string(what) + " is too large", start);
        return static_cast<unsigned>(v.get_ui());
    }

    Z2 residue() {
        const std::size_t start = position();
        const Integer v = uint();
        if (v != 0 && v != 1) throw ParseError("r must be 0 or 1", start);
        return Z2(static_cast<int>(v.get_si()));
    }

    EtaParam eta() {
        if (accept("oo")) return EtaParam::infinity();
        const bool negative = accept('-');
        Integer num = uint();
        Integer den = 1;
        if (accept('/')) {
            const std::size_t at = position();
            den = uint();
            if (den == 0) throw ParseError("zero denominator", at);
        }
        if (negative) num = -num;
        return EtaParam::finite(Rational(num, den));
    }

    std::size_t position() {
        skip_ws();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(message, position()); }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

ModuleLabel label_at(Cursor& cur) {
    if (cur.accept("V(2,")) {
        const Z2 r = cur.residue();
        cur.expect(')');
        return ModuleLabel::simple_two(r);
    }
    if (cur.accept("V(")) {
        const Z2 r = cur.residue();
        cur.expect(')');
        return ModuleLabel::simple(r);
    }
    if (cur.accept("P(")) {
        const Z2 r = cur.residue();
        cur.expect(')');
        return ModuleLabel::projective(r);
    }
    if (cur.accept("O^")) {
        const bool co = cur.accept('-');
        const unsigned s = cur.small_uint("s", 1);
        cur.expect("V(");
        const Z2 r = cur.residue();
        cur.expect(')');
        return co ? ModuleLabel::cosyzygy(s, r) : ModuleLabel::syzygy(s, r);
    }
    if (cur.accept("M_")) {
        const unsigned s = cur.small_uint("s", 1);
        cur.expect('(');
        const Z2 r = cur.residue();
        cur.expect(',');
        const EtaParam eta = cur.eta();
        cur.expect(')');
        return ModuleLabel::band(s, r, eta);
    }
    cur.fail("expected a module label (V, P, O^ or M_)");
}

// ---- presentation grammar ----------------------------------------------------------

pres::PresElement pres_expr(Cursor& cur);

pres::PresElement pres_atom(Cursor& cur) {
    using pres::Monomial;
    using pres::PresElement;
    if (cur.peek_digit()) return PresElement::from_int(cur.uint());
    if (cur.accept('(')) {
        PresElement inner = pres_expr(cur);
        cur.expect(')');
        return inner;
    }
    if (cur.accept("X_{")) {
        const unsigned n = cur.small_uint("n", 1);
        cur.expect(',');
        const EtaParam eta = cur.eta();
        cur.expect('}');
        return PresElement(Monomial::band(n, eta));
    }
    if (cur.accept('g')) return PresElement(Monomial::one(true));
    if (cur.accept('x')) return PresElement(Monomial::x());
    if (cur.accept('y')) return PresElement(Monomial::y(1));
    if (cur.accept('z')) return PresElement(Monomial::z(1));
    cur.fail("expected g, x, y, z, X_{n,eta}, an integer or '('");
}

pres::PresElement pres_factor(Cursor& cur) {
    pres::PresElement base = pres_atom(cur);
    if (cur.accept('^')) base = pres::nf_pow(base, cur.small_uint("exponent", 0));
    return base;
}

pres::PresElement pres_term(Cursor& cur) {
    pres::PresElement acc = pres_factor(cur);
    while (cur.accept('*')) acc = pres::nf_mul(acc, pres_factor(cur));
    return acc;
}

pres::PresElement pres_expr(Cursor& cur) {
    pres::PresElement acc;
    if (cur.accept('-')) {
        acc -= pres_term(cur);
    } else {
        acc = pres_term(cur);
    }
    for (;;) {
        if (cur.accept('+')) {
            acc += pres_term(cur);
        } else if (cur.accept('-')) {
            acc -= pres_term(cur);
        } else {
            return acc;
        }
    }
}

void expect_end(Cursor& cur) {
    if (!cur.at_end()) cur.fail("unexpected trailing input");
}

// ---- JSON ----------------------------------------------------------------------------

ordered_json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

std::string eta_json(const EtaParam& eta) { return eta.is_infinite() ? "infinity" : eta.value().get_str(); }

ordered_json label_json(const ModuleLabel& label) {
    ordered_json j;
    switch (label.kind()) {
    case ModuleLabel::Kind::SimpleOne: j["kind"] = "simple"; break;
    case ModuleLabel::Kind::SimpleTwo: j["kind"] = "simple_two"; break;
    case ModuleLabel::Kind::Syzygy: j["kind"] = "syzygy"; break;
    case ModuleLabel::Kind::Cosyzygy: j["kind"] = "cosyzygy"; break;
    case ModuleLabel::Kind::Band: j["kind"] = "band"; break;
    case ModuleLabel::Kind::Projective: j["kind"] = "projective"; break;
    }
    const bool has_s = label.kind() == ModuleLabel::Kind::Syzygy || label.kind() == ModuleLabel::Kind::Cosyzygy ||
                       label.kind() == ModuleLabel::Kind::Band;
    if (has_s) j["s"] = label.s();
    j["r"] = label.r().value();
    if (label.kind() == ModuleLabel::Kind::Band) j["eta"] = eta_json(label.eta());
    j["text"] = to_string(label);
    return j;
}

ordered_json element_json(const GreenElement& e) {
    ordered_json terms = ordered_json::array();
    for (const auto& [label, coeff] : e.terms()) terms.push_back({{"label", label_json(label)}, {"coeff", integer_json(coeff)}});
    return {{"terms", terms}};
}

ordered_json monomial_json(const pres::Monomial& m) {
    using Core = pres::Monomial::Core;
    ordered_json j;
    switch (m.core()) {
    case Core::One: j["core"] = "one"; break;
    case Core::X: j["core"] = "x"; break;
    case Core::X2: j["core"] = "x^2"; break;
    case Core::Y: j["core"] = "y"; break;
    case Core::Z: j["core"] = "z"; break;
    case Core::Band: j["core"] = "band"; break;
    }
    if (m.core() == Core::Y || m.core() == Core::Z || m.core() == Core::Band) j["n"] = m.n();
    if (m.core() == Core::Band) j["eta"] = eta_json(m.eta());
    j["g"] = m.has_g();
    j["text"] = pres::to_string(m);
    return j;
}

ordered_json pres_json(const pres::PresElement& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, coeff] : p.terms()) terms.push_back({{"monomial", monomial_json(mono)}, {"coeff", integer_json(coeff)}});
    return {{"terms", terms}};
}

Outcome parse_failure(const ParseError& e) { return {kExitUsage, "", "parse error: " + std::string(e.what()) + "\n"}; }

// ---- verification ----------------------------------------------------------------------

// Runs task(i) for i in [0, n) on up to `jobs` threads; task must not throw.
template <class Task>
void parallel_for(std::size_t n, unsigned jobs, Task task) {
    const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) task(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

struct CheckResult {
    bool ok = true;
    std::string expected;
    std::string actual;
};

CheckTally& tally(Section& section, const std::string& name) {
    for (auto& c : section.checks)
        if (c.name == name) return c;
    section.checks.push_back({name, 0, 0});
    return section.checks.back();
}

void record(VerifyReport& report, Section& section, const std::string& check, const std::string& subject, const CheckResult& o) {
    CheckTally& t = tally(section, check);
    ++t.count;
    if (!o.ok) {
        ++t.failures;
        report.mismatches.push_back({section.name, check, subject, o.expected, o.actual});
    }
}

LabelProduct make_table(const VerifyOptions& options) {
    if (!options.inject_fault) return mul_labels;
    const ProductCase fault = *options.inject_fault;
    return [fault](const ModuleLabel& a, const ModuleLabel& b) {
        GreenElement e = mul_labels(a, b);
        if (classify_product(a, b) == fault) e += GreenElement(ModuleLabel::simple(Z2(0)));
        return e;
    };
}

std::vector<std::pair<std::size_t, std::size_t>> unordered_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
    return out;
}

Section verify_table(VerifyReport& report, const LabelProduct& table) {
    const VerifyOptions& opt = report.options;
    Section section{"table", {}};
    for (int c = 1; c <= 19; ++c) section.checks.push_back({to_string(static_cast<ProductCase>(c)), 0, 0});

    const auto labels = grid_labels(opt.max_s, opt.etas);
    std::vector<rep::Representation> built(labels.size());
    parallel_for(labels.size(), opt.jobs, [&](std::size_t i) { built[i] = rep::build(labels[i]); });

    const auto pairs = unordered_pairs(labels.size());
    std::vector<CheckResult> results(pairs.size());
    parallel_for(pairs.size(), opt.jobs, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        CheckResult& o = results[k];
        try {
            const GreenElement expected = table(labels[i], labels[j]);
            o.expected = to_string(expected);
            const GreenElement actual = rep::decompose(rep::tensor(built[i], built[j]), opt.seed);
            o.actual = to_string(actual);
            o.ok = expected == actual;
        } catch (const std::exception& e) {
            o.ok = false;
            o.actual = std::string("error: ") + e.what();
        }
    });
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        record(report, section, to_string(classify_product(labels[i], labels[j])),
               to_string(labels[i]) + " x " + to_string(labels[j]), results[k]);
    }
    return section;
}

std::vector<pres::Monomial> grid_monomials(unsigned max_s, const std::vector<EtaParam>& etas) {
    using pres::Monomial;
    std::vector<Monomial> out;
    for (bool g : {false, true}) {
        out.push_back(Monomial::one(g));
        out.push_back(Monomial::x(g));
        out.push_back(Monomial::x2(g));
        for (unsigned n = 1; n <= max_s; ++n) {
            out.push_back(Monomial::y(n, g));
            out.push_back(Monomial::z(n, g));
            for (const auto& eta : etas) out.push_back(Monomial::band(n, eta, g));
        }
    }
    return out;
}

Section verify_presentation(VerifyReport& report, const LabelProduct& table) {
    const VerifyOptions& opt = report.options;
    Section section{"presentation", {}};

    for (const auto& m : grid_monomials(opt.max_s, opt.etas)) {
        const pres::PresElement p(m);
        const pres::PresElement back = pres::from_green(pres::to_green(p));
        record(report, section, "from_green(to_green(m)) = m", pres::to_string(p),
               {back == p, pres::to_string(p), pres::to_string(back)});
    }
    for (const auto& label : grid_labels(opt.max_s, opt.etas)) {
        const GreenElement e(label);
        const GreenElement back = pres::to_green(pres::from_green(e));
        record(report, section, "to_green(from_green(L)) = L", to_string(label), {back == e, to_string(e), to_string(back)});
    }

    const auto monos = grid_monomials(opt.max_s, opt.etas);
    const auto pairs = unordered_pairs(monos.size());
    std::vector<CheckResult> results(pairs.size());
    parallel_for(pairs.size(), opt.jobs, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        CheckResult& o = results[k];
        try {
            const pres::PresElement p(monos[i]), q(monos[j]);
            const GreenElement lhs = pres::to_green(pres::nf_mul(p, q));
            const GreenElement rhs = mul(pres::to_green(p), pres::to_green(q), table);
            o = {lhs == rhs, to_string(rhs), to_string(lhs)};
        } catch (const std::exception& e) {
            o = {false, "", std::string("error: ") + e.what()};
        }
    });
    for (std::size_t k = 0; k < pairs.size(); ++k)
        record(report, section, "to_green(pq) = to_green(p) to_green(q)",
               pres::to_string(monos[pairs[k].first]) + " * " + pres::to_string(monos[pairs[k].second]), results[k]);

    for (const auto& gen : pres::ideal_generator_images(opt.max_s, opt.etas))
        record(report, section, "G: " + gen.family, gen.name, {gen.image.is_zero(), "0", to_string(gen.image)});
    return section;
}

Section verify_braiding(VerifyReport& report) {
    const VerifyOptions& opt = report.options;
    Section section{"braiding", {}};
    const auto labels = grid_labels(opt.max_s, opt.etas);
    std::vector<rep::Representation> built(labels.size());
    parallel_for(labels.size(), opt.jobs, [&](std::size_t i) { built[i] = rep::build(labels[i]); });
    const auto pairs = unordered_pairs(labels.size());
    std::vector<CheckResult> results(pairs.size());
    parallel_for(pairs.size(), opt.jobs, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        try {
            const bool ok = rep::braiding_check(built[i], built[j]);
            results[k] = {ok, "invertible intertwiner", ok ? "invertible intertwiner" : "not an invertible intertwiner"};
        } catch (const std::exception& e) {
            results[k] = {false, "invertible intertwiner", std::string("error: ") + e.what()};
        }
    });
    for (std::size_t k = 0; k < pairs.size(); ++k)
        record(report, section, "flip o R : M x N -> N x M",
               to_string(labels[pairs[k].first]) + " x " + to_string(labels[pairs[k].second]), results[k]);
    return section;
}

std::string scope_name(Scope s) {
    switch (s) {
    case Scope::Table: return "table";
    case Scope::Presentation: return "presentation";
    case Scope::Braiding: return "braiding";
    case Scope::All: return "all";
    }
    return "all";
}

std::string etas_text(const std::vector<EtaParam>& etas) {
    std::string out;
    for (std::size_t i = 0; i < etas.size(); ++i) out += (i ? "," : "") + to_string(etas[i]);
    return out;
}

}  // namespace

// ---- parsing ------------------------------------------------------------------------

GreenElement parse_element(std::string_view src) {
    Cursor cur(src);
    if (cur.peek() == '0') {
        cur.accept('0');
        expect_end(cur);
        return {};
    }
    GreenElement out;
    bool negative = cur.accept('-');
    for (;;) {
        Integer coeff = 1;
        if (cur.peek_digit()) {
            coeff = cur.uint();
            cur.expect('*');
        }
        cur.expect('[');
        const ModuleLabel label = label_at(cur);
        cur.expect(']');
        out.add(label, negative ? Integer(-coeff) : coeff);
        if (cur.accept('+')) {
            negative = false;
        } else if (cur.accept('-')) {
            negative = true;
        } else {
            break;
        }
    }
    expect_end(cur);
    return out;
}

ModuleLabel parse_label(std::string_view src) {
    Cursor cur(src);
    const bool bracketed = cur.accept('[');
    const ModuleLabel label = label_at(cur);
    if (bracketed) cur.expect(']');
    expect_end(cur);
    return label;
}

EtaParam parse_eta(std::string_view src) {
    Cursor cur(src);
    const EtaParam eta = cur.eta();
    expect_end(cur);
    return eta;
}

std::vector<EtaParam> parse_eta_list(std::string_view csv) {
    std::vector<EtaParam> out;
    Cursor cur(csv);
    if (cur.at_end()) return out;
    do {
        out.push_back(cur.eta());
    } while (cur.accept(','));
    expect_end(cur);
    return out;
}

pres::PresElement parse_presentation(std::string_view src) {
    Cursor cur(src);
    pres::PresElement out = pres_expr(cur);
    expect_end(cur);
    return out;
}

// ---- rendering ----------------------------------------------------------------------

std::string render(const GreenElement& e, Format format) {
    return format == Format::Json ? element_json(e).dump() : to_string(e);
}

std::string render(const pres::PresElement& p, Format format) {
    return format == Format::Json ? pres_json(p).dump() : pres::to_string(p);
}

// ---- commands -----------------------------------------------------------------------

Outcome cmd_multiply(std::string_view lhs, std::string_view rhs, Format format) {
    try {
        return {kExitOk, render(mul(parse_element(lhs), parse_element(rhs)), format) + "\n", ""};
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
}

Outcome cmd_dual(std::string_view element, Format format) {
    try {
        return {kExitOk, render(dual(parse_element(element)), format) + "\n", ""};
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
}

Outcome cmd_presentation(std::string_view sub, std::string_view arg, Format format) {
    try {
        if (sub == "normal-form") return {kExitOk, render(parse_presentation(arg), format) + "\n", ""};
        if (sub == "to-modules") return {kExitOk, render(pres::to_green(parse_presentation(arg)), format) + "\n", ""};
        if (sub == "from-modules") return {kExitOk, render(pres::from_green(parse_element(arg)), format) + "\n", ""};
    } catch (const ParseError& e) {
        return parse_failure(e);
    }
    return {kExitUsage, "", "unknown presentation subcommand '" + std::string(sub) + "'\n"};
}

std::optional<Scope> parse_scope(std::string_view name) {
    for (Scope s : {Scope::Table, Scope::Presentation, Scope::Braiding, Scope::All})
        if (scope_name(s) == name) return s;
    return std::nullopt;
}

std::vector<ModuleLabel> grid_labels(unsigned max_s, const std::vector<EtaParam>& etas) {
    std::vector<ModuleLabel> out;
    for (int r = 0; r < 2; ++r) {
        const Z2 z(r);
        out.push_back(ModuleLabel::simple(z));
        out.push_back(ModuleLabel::simple_two(z));
        out.push_back(ModuleLabel::projective(z));
        for (unsigned s = 1; s <= max_s; ++s) {
            out.push_back(ModuleLabel::syzygy(s, z));
            out.push_back(ModuleLabel::cosyzygy(s, z));
            for (const auto& eta : etas) out.push_back(ModuleLabel::band(s, z, eta));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t VerifyReport::total_checks() const {
    std::size_t n = 0;
    for (const auto& s : sections)
        for (const auto& c : s.checks) n += c.count;
    return n;
}

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    report.options = options;
    if (report.options.jobs == 0) report.options.jobs = 1;
    const LabelProduct table = make_table(options);
    const Scope s = options.scope;
    if (s == Scope::Table || s == Scope::All) report.sections.push_back(verify_table(report, table));
    if (s == Scope::Presentation || s == Scope::All) report.sections.push_back(verify_presentation(report, table));
    if (s == Scope::Braiding || s == Scope::All) report.sections.push_back(verify_braiding(report));
    return report;
}

std::string render(const VerifyReport& report, Format format) {
    const VerifyOptions& opt = report.options;
    if (format == Format::Json) {
        ordered_json j;
        j["scope"] = scope_name(opt.scope);
        j["max_s"] = opt.max_s;
        ordered_json etas = ordered_json::array();
        for (const auto& e : opt.etas) etas.push_back(eta_json(e));
        j["etas"] = etas;
        j["seed"] = opt.seed;
        if (opt.inject_fault) j["inject_fault"] = to_string(*opt.inject_fault);
        ordered_json sections = ordered_json::array();
        for (const auto& s : report.sections) {
            ordered_json checks = ordered_json::array();
            for (const auto& c : s.checks)
                checks.push_back({{"name", c.name},
                                  {"status", c.count == 0 ? "skip" : (c.failures == 0 ? "pass" : "fail")},
                                  {"count", c.count},
                                  {"failures", c.failures}});
            sections.push_back({{"name", s.name}, {"checks", checks}});
        }
        j["sections"] = sections;
        ordered_json mismatches = ordered_json::array();
        for (const auto& m : report.mismatches)
            mismatches.push_back({{"section", m.section},
                                  {"check", m.check},
                                  {"subject", m.subject},
                                  {"expected", m.expected},
                                  {"actual", m.actual}});
        j["mismatches"] = mismatches;
        j["total_checks"] = report.total_checks();
        j["passed"] = report.passed();
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "verify scope=" << scope_name(opt.scope) << " max-s=" << opt.max_s << " etas=" << etas_text(opt.etas)
        << " seed=" << opt.seed << " jobs=" << opt.jobs;
    if (opt.inject_fault) out << " inject-fault=" << to_string(*opt.inject_fault);
    out << "\n";
    for (const auto& s : report.sections) {
        out << "[" << s.name << "]\n";
        for (const auto& c : s.checks) {
            const char* status = c.count == 0 ? "skip" : (c.failures == 0 ? "pass" : "FAIL");
            out << "  " << status << "  " << c.name << "  (" << c.count << " checked";
            if (c.failures) out << ", " << c.failures << " failed";
            out << ")\n";
        }
    }
    for (const auto& m : report.mismatches) {
        out << "mismatch [" << m.section << " / " << m.check << "] " << m.subject << "\n"
            << "    expected: " << m.expected << "\n"
            << "    actual:   " << m.actual << "\n";
    }
    out << (report.passed() ? "PASS" : "FAIL") << ": " << report.total_checks() << " checks, "
        << report.mismatches.size() << " failed, seed " << opt.seed << "\n";
    return out.str();
}

Outcome cmd_verify(const VerifyOptions& options, Format format) {
    if (options.max_s < 1) return {kExitUsage, "", "--max-s must be at least 1\n"};
    const VerifyReport report = run_verify(options);
    return {report.passed() ? kExitOk : kExitVerifyFailed, render(report, format), ""};
}

}  // namespace greend4::cli
