#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sts/core.hpp"
#include "sts/invariants.hpp"

namespace sts {

// Exhaustive generation of small systems by backtracking over the
// lexicographically least uncovered pair, which emits every labeled block
// set exactly once.
//
// Normalized mode pins the blocks through point 0 to {0,1,2}, {0,3,4}, ...,
// {0,n-2,n-1}; every isomorphism class appears among the normalized systems
// (relabel any representative to move its point-0 star onto that matching).

// Emits raw (or normalized) labeled systems as sorted block lists.
void enumerate_labeled(Point n, bool normalized,
                       const std::function<void(const std::vector<Triple>&)>& emit);

// Number of labeled systems with no normalization. Practical for n <= 9.
std::int64_t count_all_labeled(Point n);

struct CensusClass {
    SteinerTripleSystem rep;           // first normalized member found
    std::int64_t normalized_count = 0;
    std::int64_t labeled_count = 0;    // normalized_count * (n-2)!!
    std::int64_t aut_order = 0;        // n! / labeled_count
    InvariantReport report;
};

struct CensusResult {
    Point n = 0;
    std::int64_t normalized_total = 0;
    std::int64_t labeled_total = 0;
    std::vector<CensusClass> classes;
    // Checked on every generated system, not just representatives.
    bool bounds_violation = false;
    bool gamma_gap_violation = false;  // some system with gamma = (1/3)C(n,2) - 1
};

// Full normalized enumeration with isomorphism-class bucketing.
// Supported n: 7, 9, 13. Throws UnsupportedOrder otherwise.
CensusResult census(Point n);

}  // namespace sts
