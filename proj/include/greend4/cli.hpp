#pragma once

#include "greend4/green_ring.hpp"
#include "greend4/presentation.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace greend4::cli {

/// Syntax or range error in user input; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// element := term (('+'|'-') term)* ; term := [uint '*'] '[' label ']'  (or the literal "0")
GreenElement parse_element(std::string_view src);
ModuleLabel parse_label(std::string_view src);
/// rational | "oo"
EtaParam parse_eta(std::string_view src);
/// Comma-separated list of eta values; the empty string gives an empty list.
std::vector<EtaParam> parse_eta_list(std::string_view csv);
/// Integer combinations of products of g, x, y, z, X_{n,eta}, with '^', '*' and parentheses.
pres::PresElement parse_presentation(std::string_view src);

enum class Format { Text, Json };

std::string render(const GreenElement& e, Format format);
std::string render(const pres::PresElement& p, Format format);

/// What a command would print and how the process should exit.
struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

Outcome cmd_multiply(std::string_view lhs, std::string_view rhs, Format format);
Outcome cmd_dual(std::string_view element, Format format);
/// sub is one of "normal-form", "to-modules", "from-modules".
Outcome cmd_presentation(std::string_view sub, std::string_view arg, Format format);

enum class Scope { Table, Presentation, Braiding, All };
std::optional<Scope> parse_scope(std::string_view name);

struct VerifyOptions {
    Scope scope = Scope::All;
    unsigned max_s = 2;
    std::vector<EtaParam> etas;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    /// Corrupts every table entry of this case by an extra [V(0)]; exercises the failure path.
    std::optional<ProductCase> inject_fault;
};

struct CheckTally {
    std::string name;
    std::size_t count = 0;
    std::size_t failures = 0;
};

struct Section {
    std::string name;
    std::vector<CheckTally> checks;
};

struct Mismatch {
    std::string section;
    std::string check;
    std::string subject;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<Section> sections;
    std::vector<Mismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
    std::size_t total_checks() const;
};

/// Labels of the verification grid: V, V(2,·), P, and Ω^{±s}, M_s(·,η) for 1 <= s <= max_s.
std::vector<ModuleLabel> grid_labels(unsigned max_s, const std::vector<EtaParam>& etas);

VerifyReport run_verify(const VerifyOptions& options);
std::string render(const VerifyReport& report, Format format);
Outcome cmd_verify(const VerifyOptions& options, Format format);

}  // namespace greend4::cli
