#pragma once

#include <string>
#include <vector>

#include "parhox/io.hpp"

namespace parhox {

struct Fixture {
    std::string name;  // file stem
    ProblemSpec spec;
};

// Every *.json under dir, sorted by name.
std::vector<Fixture> load_fixtures(const std::string& dir);

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// The ten acceptance criteria over the given fixtures.
std::vector<CriterionResult> run_acceptance(const std::vector<Fixture>& fixtures);

}  // namespace parhox
