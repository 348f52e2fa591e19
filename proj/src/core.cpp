#include "sts/core.hpp"

#include <algorithm>
#include <numeric>

#include "sts/combinatorics.hpp"

namespace sts {

Triple make_triple(Point a, Point b, Point c) {
    Triple t{{a, b, c}};
    std::sort(t.p.begin(), t.p.end());
    if (t.p[0] == t.p[1] || t.p[1] == t.p[2])
        throw Error("BadBlock", "repeated point in block {" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + "}");
    return t;
}

TripleSet::TripleSet(std::vector<TripleKey> keys, Point n) : keys_(std::move(keys)), n_(n) {
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

bool TripleSet::contains(TripleKey k) const {
    return std::binary_search(keys_.begin(), keys_.end(), k);
}

std::vector<Triple> TripleSet::triples() const {
    std::vector<Triple> out;
    out.reserve(keys_.size());
    for (TripleKey k : keys_) out.push_back(Triple::from_key(k, n_));
    return out;
}

TripleSet TripleSet::set_union(const TripleSet& a, const TripleSet& b) {
    std::vector<TripleKey> merged;
    merged.reserve(a.keys_.size() + b.keys_.size());
    std::merge(a.keys_.begin(), a.keys_.end(), b.keys_.begin(), b.keys_.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    TripleSet out;
    out.keys_ = std::move(merged);
    out.n_ = a.n_ ? a.n_ : b.n_;
    return out;
}

std::array<TripleKey, 4> PaschConfig::signature(Point n) const {
    std::array<TripleKey, 4> sig{blocks[0].key(n), blocks[1].key(n), blocks[2].key(n),
                                 blocks[3].key(n)};
    std::sort(sig.begin(), sig.end());
    return sig;
}

SteinerTripleSystem SteinerTripleSystem::validate(Point n, const std::vector<Triple>& raw_blocks) {
    if (n < 0 || n > kMaxOrder)
        throw Error("PointOutOfRange", "order " + std::to_string(n) + " unsupported");

    for (const Triple& t : raw_blocks) {
        if (t.p[0] < 0 || t.p[2] >= n)
            throw Error("PointOutOfRange", "block point " + std::to_string(t.p[0] < 0 ? t.p[0] : t.p[2]) +
                                               " outside [0," + std::to_string(n) + ")");
        if (t.p[0] >= t.p[1] || t.p[1] >= t.p[2])
            throw Error("BadBlock", "block not a strictly ascending 3-set");
    }

    // Pair coverage table: third[a*n+b] = c for the block {a,b,c}, -1 if the
    // pair is not covered yet. Doubled pairs are reported before missing ones
    // so that a system with one block removed reads as PairUncovered.
    const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<Point> third(nn, -1);
    auto at = [&](Point a, Point b) -> Point& {
        return third[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(b)];
    };
    for (const Triple& t : raw_blocks) {
        const Point others[3][3] = {{t.p[0], t.p[1], t.p[2]},
                                    {t.p[0], t.p[2], t.p[1]},
                                    {t.p[1], t.p[2], t.p[0]}};
        for (const auto& e : others) {
            if (at(e[0], e[1]) != -1)
                throw Error("PairDoubled", "pair {" + std::to_string(e[0]) + "," +
                                               std::to_string(e[1]) + "} covered twice");
            at(e[0], e[1]) = e[2];
            at(e[1], e[0]) = e[2];
        }
    }
    for (Point a = 0; a < n; ++a)
        for (Point b = a + 1; b < n; ++b)
            if (at(a, b) == -1)
                throw Error("PairUncovered", "pair {" + std::to_string(a) + "," +
                                                 std::to_string(b) + "} not covered");

    const std::int64_t expected = third_binom2(n);
    if (static_cast<std::int64_t>(raw_blocks.size()) != expected)
        throw Error("WrongBlockCount", "got " + std::to_string(raw_blocks.size()) +
                                           " blocks, expected " + std::to_string(expected));
    if (n != 0 && n % 6 != 1 && n % 6 != 3)
        throw Error("BadOrderModSix", "order " + std::to_string(n) + " is not 1 or 3 mod 6");
    if (n == 0) throw Error("BadOrderModSix", "order 0");

    SteinerTripleSystem s;
    s.n_ = n;
    s.blocks_ = raw_blocks;
    std::sort(s.blocks_.begin(), s.blocks_.end());
    s.block_keys_.reserve(s.blocks_.size());
    for (const Triple& t : s.blocks_) s.block_keys_.push_back(t.key(n));

    s.star_ = std::move(third);
    for (Point a = 0; a < n; ++a) s.star_[static_cast<std::size_t>(a) * n + a] = a;

    s.blocks_through_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < s.blocks_.size(); ++i)
        for (Point p : s.blocks_[i].p)
            s.blocks_through_[static_cast<std::size_t>(p)].push_back(static_cast<std::int32_t>(i));
    return s;
}

SteinerTripleSystem SteinerTripleSystem::validate(Point n,
                                                  const std::vector<std::array<Point, 3>>& raw) {
    std::vector<Triple> blocks;
    blocks.reserve(raw.size());
    for (const auto& b : raw) blocks.push_back(make_triple(b[0], b[1], b[2]));
    return validate(n, blocks);
}

bool SteinerTripleSystem::contains_key(TripleKey k) const {
    return std::binary_search(block_keys_.begin(), block_keys_.end(), k);
}

SteinerTripleSystem SteinerTripleSystem::relabel(std::span<const Point> perm) const {
    if (static_cast<Point>(perm.size()) != n_)
        throw Error("NotAPermutation", "permutation length " + std::to_string(perm.size()) +
                                           " for order " + std::to_string(n_));
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (Point v : perm) {
        if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)])
            throw Error("NotAPermutation", "not a bijection on [0," + std::to_string(n_) + ")");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Triple> mapped;
    mapped.reserve(blocks_.size());
    for (const Triple& t : blocks_)
        mapped.push_back(make_triple(perm[static_cast<std::size_t>(t.p[0])],
                                     perm[static_cast<std::size_t>(t.p[1])],
                                     perm[static_cast<std::size_t>(t.p[2])]));
    return validate(n_, mapped);
}

namespace {

// State for the isomorphism backtracking: a partial point map S -> T plus
// its inverse, extended by quasigroup closure.
struct IsoState {
    std::vector<Point> img;   // -1 when unmapped
    std::vector<Point> pre;   // inverse map
    std::vector<Point> placed;

    explicit IsoState(Point n) : img(static_cast<std::size_t>(n), -1),
                                 pre(static_cast<std::size_t>(n), -1) {}
};

bool assign_and_close(const SteinerTripleSystem& s, const SteinerTripleSystem& t, IsoState& st,
                      Point a, Point u) {
    std::vector<std::pair<Point, Point>> queue{{a, u}};
    while (!queue.empty()) {
        auto [x, v] = queue.back();
        queue.pop_back();
        Point& slot = st.img[static_cast<std::size_t>(x)];
        if (slot != -1) {
            if (slot != v) return false;
            continue;
        }
        if (st.pre[static_cast<std::size_t>(v)] != -1) return false;
        slot = v;
        st.pre[static_cast<std::size_t>(v)] = x;
        st.placed.push_back(x);
        // Closure: for every previously placed y, x*y must map to v*img(y).
        for (Point y : st.placed) {
            if (y == x) continue;
            queue.emplace_back(s.star_fast(x, y),
                               t.star_fast(v, st.img[static_cast<std::size_t>(y)]));
        }
    }
    return true;
}

bool extend(const SteinerTripleSystem& s, const SteinerTripleSystem& t, IsoState& st) {
    const Point n = s.order();
    if (static_cast<Point>(st.placed.size()) == n) return true;

    // Branch on the unmapped point lying in the most blocks that already
    // touch the mapped set.
    Point best = -1;
    int best_score = -1;
    for (Point x = 0; x < n; ++x) {
        if (st.img[static_cast<std::size_t>(x)] != -1) continue;
        int score = 0;
        for (Point y : st.placed)
            if (st.img[static_cast<std::size_t>(s.star_fast(x, y))] != -1) ++score;
        if (score > best_score) {
            best_score = score;
            best = x;
        }
    }

    for (Point v = 0; v < n; ++v) {
        if (st.pre[static_cast<std::size_t>(v)] != -1) continue;
        IsoState saved = st;
        if (assign_and_close(s, t, st, best, v) && extend(s, t, st)) return true;
        st = std::move(saved);
    }
    return false;
}

}  // namespace

std::optional<std::vector<Point>> are_isomorphic(const SteinerTripleSystem& s,
                                                 const SteinerTripleSystem& t) {
    if (s.order() != t.order()) return std::nullopt;
    const Point n = s.order();

    IsoState st(n);
    if (!extend(s, t, st)) return std::nullopt;

    // Full verification of the found map before handing it out.
    for (const Triple& b : s.blocks()) {
        Triple image = make_triple(st.img[static_cast<std::size_t>(b.p[0])],
                                   st.img[static_cast<std::size_t>(b.p[1])],
                                   st.img[static_cast<std::size_t>(b.p[2])]);
        if (!t.contains(image)) return std::nullopt;
    }
    return st.img;
}

}  // namespace sts
