#include <cstdlib>
#include <iostream>

#include "radii_atlas/acceptance.hpp"

int main(int argc, char** argv) {
    radii_atlas::VerifyOptions opt;
    if (argc > 1) opt.level = radii_atlas::parse_verify_level(argv[1]);
    bool ok = true;
    for (const auto& r : radii_atlas::run_acceptance(opt, std::cout)) ok = ok && r.pass;
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
