// Prints one line per acceptance criterion; exit status 0 iff all pass.

#include "galdens/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    galdens::AcceptanceOptions o;
    std::vector<int> only;
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", o.seed, "seed");
    app.add_option("--only", only, "criteria to run")->delimiter(',')->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (const auto& r : galdens::run_acceptance(o, only)) {
        std::cout << galdens::format_result(r) << std::endl;
        all = all && r.passed;
    }
    std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
