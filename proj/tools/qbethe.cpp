#include <iostream>

#include "qb/cli/run.hpp"

int main(int argc, char** argv) {
    using namespace qb::cli;
    std::optional<JobConfig> cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const ConfigError& ex) {
        std::cerr << "qbethe: " << ex.what() << "\n";
        return 2;
    }
    if (!cfg) return 0;
    auto r = run(*cfg);
    for (const auto& f : r.files) std::cout << f << "\n";
    (r.exit_code == 0 ? std::cout : std::cerr) << "qbethe: " << r.message << "\n";
    return r.exit_code;
}
