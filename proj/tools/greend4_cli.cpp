// greend4: command-line calculator for the Green ring of D4.

#include "greend4/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

namespace {

int emit(const greend4::cli::Outcome& o) {
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace greend4::cli;

    CLI::App app{"Green ring calculator for the Drinfeld double D(H4)"};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string lhs, rhs;
    auto* multiply = app.add_subcommand("multiply", "Product of two elements, e.g. multiply \"[V(2,0)]\" \"[V(2,0)]\"");
    multiply->add_option("lhs", lhs, "left factor")->required();
    multiply->add_option("rhs", rhs, "right factor")->required();

    std::string element;
    auto* dual = app.add_subcommand("dual", "Dual of an element");
    dual->add_option("element", element, "element")->required();

    std::string pres_arg;
    auto* presentation = app.add_subcommand("presentation", "Work in the presentation Z[X]/J");
    presentation->require_subcommand(1);
    auto* normal_form = presentation->add_subcommand("normal-form", "Normal form of a polynomial in g, x, y, z, X_{n,eta}");
    normal_form->add_option("expr", pres_arg, "expression")->required();
    auto* to_modules = presentation->add_subcommand("to-modules", "Convert a polynomial to a combination of modules");
    to_modules->add_option("expr", pres_arg, "expression")->required();
    auto* from_modules = presentation->add_subcommand("from-modules", "Convert a combination of modules to a polynomial");
    from_modules->add_option("element", pres_arg, "element")->required();

    std::string scope_name = "all";
    VerifyOptions verify_opts;
    std::string etas_csv = "0,1,-2,5/7,oo";
    std::string fault_name;
    verify_opts.jobs = std::max(1U, std::thread::hardware_concurrency());
    auto* verify = app.add_subcommand("verify", "Check the multiplication table and presentation against the matrix oracle");
    verify->add_option("scope", scope_name, "table | presentation | braiding | all")
        ->check(CLI::IsMember({"table", "presentation", "braiding", "all"}))
        ->capture_default_str();
    verify->add_option("--max-s", verify_opts.max_s, "Largest s in the label grid")->capture_default_str();
    verify->add_option("--etas", etas_csv, "Comma-separated band parameters (rationals or oo)")->capture_default_str();
    verify->add_option("--seed", verify_opts.seed, "Seed for randomized splitting")->capture_default_str();
    verify->add_option("--jobs", verify_opts.jobs, "Worker threads")->capture_default_str();
    verify->add_option("--inject-fault", fault_name, "Corrupt one table case (C1..C19) to test the failure path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Text;

    if (*multiply) return emit(cmd_multiply(lhs, rhs, format));
    if (*dual) return emit(cmd_dual(element, format));
    if (*normal_form) return emit(cmd_presentation("normal-form", pres_arg, format));
    if (*to_modules) return emit(cmd_presentation("to-modules", pres_arg, format));
    if (*from_modules) return emit(cmd_presentation("from-modules", pres_arg, format));

    if (*verify) {
        verify_opts.scope = *parse_scope(scope_name);
        try {
            verify_opts.etas = parse_eta_list(etas_csv);
        } catch (const ParseError& e) {
            std::cerr << "--etas: " << e.what() << "\n";
            return kExitUsage;
        }
        if (!fault_name.empty()) {
            bool found = false;
            for (int c = 1; c <= 19; ++c) {
                const auto pc = static_cast<greend4::ProductCase>(c);
                if (greend4::to_string(pc) == fault_name) {
                    verify_opts.inject_fault = pc;
                    found = true;
                }
            }
            if (!found) {
                std::cerr << "--inject-fault: expected C1..C19, got '" << fault_name << "'\n";
                return kExitUsage;
            }
        }
        return emit(cmd_verify(verify_opts, format));
    }
    return kExitUsage;
}
