// Release-criteria suite: one pass/fail line per criterion, nonzero exit on
// any failure.  Run directly or through ctest (test name "acceptance").

#include <iostream>

#include "falsetheta/acceptance.hpp"

int main() {
    const auto results = falsetheta::run_acceptance(&std::cerr);
    return falsetheta::print_scoreboard(results, std::cout);
}
