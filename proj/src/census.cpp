#include "sts/census.hpp"

#include <algorithm>

#include "sts/combinatorics.hpp"

namespace sts {

namespace {

struct PairBacktracker {
    Point n;
    std::vector<char> covered;  // n*n pair matrix
    std::vector<Triple> blocks;
    const std::function<void(const std::vector<Triple>&)>* emit;

    explicit PairBacktracker(Point order,
                             const std::function<void(const std::vector<Triple>&)>& fn)
        : n(order), covered(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0),
          emit(&fn) {}

    char& cov(Point a, Point b) {
        return covered[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(b)];
    }

    void place(Point a, Point b, Point c) {
        cov(a, b) = cov(b, a) = 1;
        cov(a, c) = cov(c, a) = 1;
        cov(b, c) = cov(c, b) = 1;
        blocks.push_back(Triple{{a, b, c}});
    }
    void remove(Point a, Point b, Point c) {
        cov(a, b) = cov(b, a) = 0;
        cov(a, c) = cov(c, a) = 0;
        cov(b, c) = cov(c, b) = 0;
        blocks.pop_back();
    }

    void search() {
        // Lexicographically least uncovered pair; any completing block must
        // use a third point above the pair, so each system appears once.
        for (Point a = 0; a < n; ++a)
            for (Point b = a + 1; b < n; ++b) {
                if (cov(a, b)) continue;
                for (Point c = b + 1; c < n; ++c) {
                    if (cov(a, c) || cov(b, c)) continue;
                    place(a, b, c);
                    search();
                    remove(a, b, c);
                }
                return;  // the least uncovered pair must be covered by some block
            }
        (*emit)(blocks);
    }
};

}  // namespace

void enumerate_labeled(Point n, bool normalized,
                       const std::function<void(const std::vector<Triple>&)>& emit) {
    if (n < 3 || (n % 6 != 1 && n % 6 != 3))
        throw Error("UnsupportedOrder", "no systems of order " + std::to_string(n));
    PairBacktracker bt(n, emit);
    if (normalized)
        for (Point i = 1; i + 1 < n; i += 2) bt.place(0, i, i + 1);
    bt.search();
}

std::int64_t count_all_labeled(Point n) {
    std::int64_t count = 0;
    enumerate_labeled(n, false, [&](const std::vector<Triple>&) { ++count; });
    return count;
}

namespace {

std::int64_t double_factorial(std::int64_t k) {
    std::int64_t out = 1;
    for (std::int64_t v = k; v > 1; v -= 2) out *= v;
    return out;
}

std::int64_t factorial(std::int64_t k) {
    std::int64_t out = 1;
    for (std::int64_t v = 2; v <= k; ++v) out *= v;
    return out;
}

}  // namespace

CensusResult census(Point n) {
    if (n != 7 && n != 9 && n != 13)
        throw Error("UnsupportedOrder",
                    "census supports orders 7, 9 and 13; got " + std::to_string(n));

    CensusResult result;
    result.n = n;
    const std::int64_t third = third_binom2(n);

    enumerate_labeled(n, true, [&](const std::vector<Triple>& blocks) {
        ++result.normalized_total;
        SteinerTripleSystem sys = SteinerTripleSystem::validate(n, blocks);
        const ImageSets sets = compute_image_sets(sys);
        const std::int64_t alpha = sets.a_set.size();
        const std::int64_t beta = sets.b_set.size();
        const std::int64_t gamma = beta - alpha;
        const std::int64_t paschs = pasch_count(sys);

        if (gamma == third - 1) result.gamma_gap_violation = true;
        if (!(third <= alpha && alpha <= beta && beta <= alpha + third &&
              alpha + third <= binom3(n)))
            result.bounds_violation = true;

        for (CensusClass& cls : result.classes) {
            if (cls.report.alpha != alpha || cls.report.beta != beta ||
                cls.report.pasch_count != paschs)
                continue;
            if (are_isomorphic(sys, cls.rep)) {
                ++cls.normalized_count;
                return;
            }
        }
        CensusClass cls{std::move(sys), 1, 0, 0, {}};
        cls.report = invariant_report(cls.rep);
        result.classes.push_back(std::move(cls));
    });

    const std::int64_t matchings = double_factorial(n - 2);
    for (CensusClass& cls : result.classes) {
        cls.labeled_count = cls.normalized_count * matchings;
        cls.aut_order = factorial(n) / cls.labeled_count;
        result.labeled_total += cls.labeled_count;
    }
    return result;
}

}  // namespace sts
