#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uur/bounds.hpp"

namespace uur {

// One row of the acceptance battery. `worst_deviation` is the largest
// violation observed across the row's sweep (0 when every check held
// exactly); the row passes when it stays within `tolerance`.
struct CriterionResult {
    std::string criterion;
    double tolerance = 0.0;
    double worst_deviation = 0.0;
    bool pass = false;
};

// Runs the whole battery. Deterministic for a fixed seed; the default seed
// is the library-wide default so repeated runs agree bit for bit.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = default_search_seed);

bool all_passed(const std::vector<CriterionResult>& results);

// One line per row: status tag, name, worst deviation, tolerance.
void print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

// JSON array of {criterion, tolerance, worst_deviation, pass}.
void write_acceptance_report(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace uur
