#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fano/builtin.hpp"
#include "fano/runner.hpp"

namespace {

struct CommonFlags {
    std::string order;
    int trunc = 0;
    int threads = 1;
    int power_bound = 0;
    std::string out;
    std::string only;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--order", flags.order, "force a monomial order for every ideal task")
        ->check(CLI::IsMember({"lex", "grlex", "degrevlex"}));
    cmd->add_option("--trunc", flags.trunc, "override the truncation order of local equations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", flags.threads, "worker threads for independent tasks")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--power-bound", flags.power_bound,
                    "override the pure-power search bound of origin certificates")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", flags.out, "write the report to this path instead of stdout");
    cmd->add_option("--only", flags.only, "run only the task with this label");
}

fano::RunOptions to_options(const CommonFlags& flags) {
    fano::RunOptions opts;
    opts.threads = flags.threads;
    if (!flags.order.empty()) opts.force_order = fano::order_kind_from_name(flags.order);
    if (flags.trunc > 0) opts.force_trunc = flags.trunc;
    if (flags.power_bound > 0) opts.force_bound = flags.power_bound;
    if (!flags.only.empty()) opts.only = flags.only;
    return opts;
}

int emit(const fano::VerificationReport& report, const CommonFlags& flags) {
    std::string doc = report.to_json();
    if (flags.out.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(flags.out);
        if (!out) {
            std::cerr << "cannot write " << flags.out << "\n";
            return 2;
        }
        out << doc;
        for (const auto& t : report.tasks)
            std::cout << "[" << fano::task_status_name(t.status) << "] " << t.label << "\n";
        std::cout << (report.overall_pass ? "PASS" : "FAIL") << " " << report.scenario
                  << "\n";
    }
    return report.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verification toolkit for the Fano threefold certificates"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string scenario_path;
    auto* run_cmd = app.add_subcommand("run", "run a scenario file");
    run_cmd->add_option("file", scenario_path, "scenario file")->required();
    add_common(run_cmd, run_flags);

    CommonFlags builtin_flags;
    std::string case_name;
    auto* builtin_cmd = app.add_subcommand("builtin", "run an embedded paper case");
    std::string case_help = "one of:";
    for (const auto& n : fano::builtin_names()) case_help += " " + n;
    builtin_cmd->add_option("case", case_name, case_help)->required();
    add_common(builtin_cmd, builtin_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            std::ifstream in(scenario_path);
            if (!in) {
                std::cerr << "cannot read " << scenario_path << "\n";
                return 2;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            std::string name = scenario_path;
            if (auto slash = name.find_last_of('/'); slash != std::string::npos)
                name.erase(0, slash + 1);
            fano::Scenario sc = fano::parse_scenario(buf.str(), name);
            return emit(fano::run_scenario(sc, to_options(run_flags)), run_flags);
        }
        fano::Scenario sc = fano::builtin_scenario(case_name);
        return emit(fano::run_scenario(sc, to_options(builtin_flags)), builtin_flags);
    } catch (const fano::scenario_parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
