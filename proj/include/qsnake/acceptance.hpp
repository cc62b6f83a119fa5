#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qsnake {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::vector<std::string> details;
};

// Runs the acceptance suite (all criteria, or the listed subset) and prints
// one pass/fail line per criterion. Returns true when every criterion passed.
bool run_acceptance(std::ostream& out, const std::vector<int>& only = {});

} // namespace qsnake
