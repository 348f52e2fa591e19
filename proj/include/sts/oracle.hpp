#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sts/core.hpp"

namespace sts {

// Brute-force reference implementations, written directly against the
// definitions. They deliberately avoid the fast engine: no star-table
// shortcuts, only the block list and a locally built pair-coverage map.

// Labels four blocks as a quadrilateral {a,b,c},{a,d,e},{f,b,d},{f,c,e} when
// their union has exactly six points, each lying in exactly two blocks.
std::optional<PaschConfig> pasch_pattern_match(const std::array<Triple, 4>& blocks);

// A(S) from its primary definition: B is included iff S with B added
// contains a quadrilateral through B. The search tests block triples of S
// against each candidate.
TripleSet a_set_by_definition(const SteinerTripleSystem& s);

// Counts quadrilaterals by scanning 4-subsets of the block set. The block
// limit is a soft guard against accidental C(b,4) blowups.
// Throws TooLargeForOracle unless force is set.
std::int64_t pasch_count_by_4subsets(const SteinerTripleSystem& s, std::int64_t block_limit = 160,
                                     bool force = false);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct SuiteOptions {
    bool with_oracles = true;  // subject to the size guards below
    bool force_oracle = false;
    Point oracle_order_limit = 15;       // a_set oracle guard
    std::int64_t oracle_block_limit = 160;  // 4-subset oracle guard
    int worker_count = 1;
    int relabel_rounds = 3;
    std::uint32_t relabel_seed = 0x5745u;
};

// Machine-checks every stated consequence on one system: the quasigroup
// axioms, the fixed-point and union laws, the inequality chain, the class
// equivalences, the per-block quadrilateral characterization, the preimage
// bounds, the gamma gap, relabeling invariance, and (within the size
// guards) agreement with the brute-force oracles.
SuiteReport theorem_suite(const SteinerTripleSystem& s, const SuiteOptions& opts = {});

}  // namespace sts
