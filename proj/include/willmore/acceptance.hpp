#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace willmore {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full acceptance suite; one entry per criterion, in order.
/// Progress lines go to *log when provided.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

}  // namespace willmore
