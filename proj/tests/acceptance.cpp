// Runs the ten acceptance criteria on the bundled fixtures, one line each.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "parhox/selfcheck.hpp"

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : PARHOX_FIXTURES_DIR;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<parhox::CriterionResult> results;
    try {
        results = parhox::run_acceptance(parhox::load_fixtures(dir));
    } catch (const std::exception& e) {
        std::cout << "acceptance suite could not start: " << e.what() << "\n";
        return 2;
    }
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s (%s; %.2f s)\n", r.pass ? "PASS" : "FAIL", r.number, r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        failed += !r.pass;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%zu of %zu criteria passed in %.1f s\n", results.size() - static_cast<std::size_t>(failed),
                results.size(), total);
    return failed == 0 ? 0 : 1;
}
