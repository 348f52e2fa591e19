#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "sts/constructions.hpp"
#include "sts/core.hpp"

namespace sts {

struct InvariantFlags {
    bool projective = false;
    bool anti_pasch = false;
    bool strongly_anti_pasch = false;
    bool enough_pasch = false;
};

// alpha = |A(S)|, beta = |B(S)|, gamma = beta - alpha, where A(S) collects
// the triple images {a*b, b*c, c*a} of non-blocks and B(S) those of all
// triples. bounds_ok is the inequality chain
//   (1/3)C(n,2) <= alpha <= beta <= alpha + (1/3)C(n,2) <= C(n,3),
// meaningful for n > 3; degenerate marks the orders n <= 3 where it and the
// projective test are vacuous.
struct InvariantReport {
    Point n = 0;
    std::int64_t block_count = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 0;
    std::int64_t pasch_count = 0;
    InvariantFlags flags;
    bool bounds_ok = true;
    bool degenerate = false;
};

struct ImageSets {
    TripleSet a_set;  // images of non-blocks
    TripleSet b_set;  // a_set united with the blocks
};

// Single pass over all C(n,3) triples against the dense star table.
// worker_count 0 picks the hardware concurrency; results are identical for
// any worker count.
ImageSets compute_image_sets(const SteinerTripleSystem& s, int worker_count = 1);
TripleSet a_set(const SteinerTripleSystem& s, int worker_count = 1);
TripleSet psi_image(const SteinerTripleSystem& s, int worker_count = 1);

// Number of distinct four-block quadrilateral configurations inside S.
// Every pair of blocks sharing a point is tested for its two
// cross-completions; a found configuration is counted only when the pair is
// the lexicographically least of its six block pairs, so each configuration
// counts exactly once.
std::int64_t pasch_count(const SteinerTripleSystem& s, int worker_count = 1);

// All configurations, sorted by signature.
std::vector<PaschConfig> pasch_configs(const SteinerTripleSystem& s);

// True iff some quadrilateral inside S uses the block b.
// Throws BlockNotInSystem.
bool block_in_pasch(const SteinerTripleSystem& s, const Triple& b);

InvariantReport invariant_report(const SteinerTripleSystem& s, int worker_count = 1);

// beta and the projective test alone, skipping the quadrilateral scan.
std::int64_t beta_of(const SteinerTripleSystem& s, int worker_count = 1);

struct ProductPrediction {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 0;
};

// Closed forms for the invariants of a direct product in terms of the
// factors' reports. Exact integer arithmetic.
ProductPrediction product_formulas(const InvariantReport& s, const InvariantReport& t);

// Preimage sizes of the map from non-blocks onto A(S). Requires n > 3.
std::unordered_map<TripleKey, std::int64_t> phi_preimage_census(const SteinerTripleSystem& s);

// For every block B of a difference-constructed system: B lies in a
// quadrilateral iff 2B or B/2 (elementwise field scaling) is a block.
// Throws NotANettoSystem if the system does not match the spec.
bool brouwer_criterion_check(const SteinerTripleSystem& s, const NettoSpec& spec);

}  // namespace sts
