#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace falsetheta {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double elapsed_seconds = 0.0;
};

/// Runs the ten release criteria with their pinned truncations and
/// tolerances.  When progress is non-null a line is written as each
/// criterion finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

/// One pass/fail line per criterion plus a summary; returns 0 when all
/// criteria passed, 1 otherwise.
int print_scoreboard(std::span<const CriterionResult> results, std::ostream& os);

}  // namespace falsetheta
