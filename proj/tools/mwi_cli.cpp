#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mwi/report.hpp"
#include "mwi/scenario.hpp"

namespace {

std::string read_document(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string apply_overrides(std::string text, const std::vector<std::string>& sets) {
    for (const std::string& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--set expects key=value, got '" + kv + "'");
        text += "\n" + kv.substr(0, eq) + " = " + kv.substr(eq + 1) + "\n";
    }
    return text;
}

int run_and_emit(const mwi::Scenario& s, const std::string& format) {
    const mwi::ScenarioReport rep = mwi::run_scenario(s);
    std::cout << mwi::emit(rep, mwi::report_format_from_name(format));
    return rep.within_tolerance() ? 0 : 2;
}

int run_check(const std::string& inject_name) {
    const mwi::SignError inject = inject_name.empty()
                                      ? mwi::SignError::None
                                      : mwi::sign_error_from_name(inject_name);
    const char* env = std::getenv("MWI_COLOR");
    const bool color = env && std::string(env) == "always";
    const auto checks = mwi::run_checks(inject);
    bool all_pass = true;
    for (const auto& c : checks) {
        const char* tag = c.pass ? "PASS" : "FAIL";
        if (color) std::printf("%s%s\033[0m", c.pass ? "\033[32m" : "\033[31m", tag);
        else std::printf("%s", tag);
        std::printf("  %-28s value=%.3e tolerance=%.3e\n", c.name.c_str(), c.value,
                    c.tolerance);
        all_pass = all_pass && c.pass;
    }
    std::printf("%s\n", all_pass ? "all checks passed" : "CHECK FAILURES PRESENT");
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matter-wave interferometer scenario runner"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string file;
    std::vector<std::string> sets;
    std::string demo_name = "four-situations";
    std::string inject;

    auto* run = app.add_subcommand("run", "run a scenario file ('-' for stdin)");
    run->add_option("file", file, "scenario file")->required();
    run->add_option("--format", format, "json | csv | table");
    run->add_option("--set", sets, "override key=value")->take_all();

    auto* demo = app.add_subcommand("demo", "run a built-in scenario");
    demo->add_option("name", demo_name, "built-in scenario name");
    demo->add_option("--format", format, "json | csv | table");

    auto* check = app.add_subcommand("check", "run the full invariant suite");
    check->add_option("--inject-sign-error", inject,
                      "flip one route's sign: proper-time | sliding | golden-rule");

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    sweep->add_option("file", file, "base scenario file (optional)");
    sweep->add_option("--set", sets, "override key=value, e.g. sweep.g=4.9,9.8")
        ->take_all();
    sweep->add_option("--format", format, "json | csv | table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const std::string text = apply_overrides(read_document(file), sets);
            return run_and_emit(mwi::parse_scenario(text), format);
        }
        if (demo->parsed()) {
            if (demo_name != "four-situations")
                throw std::runtime_error("unknown demo '" + demo_name + "'");
            return run_and_emit(mwi::four_situations_scenario(), format);
        }
        if (check->parsed()) return run_check(inject);
        if (sweep->parsed()) {
            std::string text = file.empty()
                                   ? std::string("name = sweep\ndevice = atom\nframe = lab\n"
                                                 "params.m = 2.2e-25\nparams.g = 9.8\n"
                                                 "params.T = 0.1\nparams.kappa = 1.6e7\n")
                                   : read_document(file);
            return run_and_emit(mwi::parse_scenario(apply_overrides(text, sets)), format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
