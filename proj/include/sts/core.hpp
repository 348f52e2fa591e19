#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sts/error.hpp"

namespace sts {

using Point = std::int32_t;
using TripleKey = std::uint64_t;

// Largest order for which triple keys stay injective in 64 bits.
inline constexpr Point kMaxOrder = 1 << 20;

// A canonical 3-subset of points: p0 < p1 < p2.
struct Triple {
    std::array<Point, 3> p{};

    Point operator[](int i) const { return p[static_cast<std::size_t>(i)]; }
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;

    bool contains(Point x) const { return p[0] == x || p[1] == x || p[2] == x; }

    // Key packing: ((p0*n)+p1)*n+p2, injective for n <= 2^20.
    TripleKey key(Point n) const {
        const auto w = static_cast<TripleKey>(n);
        return (static_cast<TripleKey>(p[0]) * w + static_cast<TripleKey>(p[1])) * w +
               static_cast<TripleKey>(p[2]);
    }
    static Triple from_key(TripleKey k, Point n) {
        const auto w = static_cast<TripleKey>(n);
        Triple t;
        t.p[2] = static_cast<Point>(k % w);
        t.p[1] = static_cast<Point>((k / w) % w);
        t.p[0] = static_cast<Point>(k / (w * w));
        return t;
    }
};

// Sorts the three points; rejects repeated points.
Triple make_triple(Point a, Point b, Point c);

// A set of canonical triples over a common order n, stored as sorted unique
// keys. Merging sorted runs keeps results identical no matter how the
// producing loop was partitioned.
class TripleSet {
public:
    TripleSet() = default;
    TripleSet(std::vector<TripleKey> keys, Point n);  // sorts and dedups

    bool contains(TripleKey k) const;
    bool contains(const Triple& t) const { return contains(t.key(n_)); }
    std::int64_t size() const { return static_cast<std::int64_t>(keys_.size()); }
    Point order() const { return n_; }
    const std::vector<TripleKey>& keys() const { return keys_; }
    std::vector<Triple> triples() const;

    bool operator==(const TripleSet&) const = default;

    static TripleSet set_union(const TripleSet& a, const TripleSet& b);

private:
    std::vector<TripleKey> keys_;
    Point n_ = 0;
};

// Four blocks {a,b,c},{a,d,e},{f,b,d},{f,c,e} on six distinct points.
struct PaschConfig {
    std::array<Point, 6> pts{};    // a,b,c,d,e,f
    std::array<Triple, 4> blocks;  // in the pattern order above

    // Sorted block keys; the deduplication identity of the configuration.
    std::array<TripleKey, 4> signature(Point n) const;
};

// An order-n Steiner triple system: every pair of distinct points lies in
// exactly one block. Immutable after construction; safe to share across
// threads.
class SteinerTripleSystem {
public:
    // Checks pair coverage, block count and order admissibility, then builds
    // the quasigroup table and membership indexes.
    // Throws: BadBlock, PointOutOfRange, PairDoubled, PairUncovered,
    // WrongBlockCount, BadOrderModSix.
    static SteinerTripleSystem validate(Point n, const std::vector<Triple>& raw_blocks);
    static SteinerTripleSystem validate(Point n, const std::vector<std::array<Point, 3>>& raw);

    Point order() const { return n_; }
    std::int64_t block_count() const { return static_cast<std::int64_t>(blocks_.size()); }
    const std::vector<Triple>& blocks() const { return blocks_; }
    const std::vector<TripleKey>& block_keys() const { return block_keys_; }

    // The Steiner quasigroup: a*a = a, otherwise the third point of the
    // unique block through {a,b}.
    Point star(Point a, Point b) const {
        check_point(a);
        check_point(b);
        return star_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(b)];
    }
    // Unchecked variant for hot loops; a and b must be valid points.
    Point star_fast(Point a, Point b) const {
        return star_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(b)];
    }

    bool is_block(Point a, Point b, Point c) const {
        return a != b && b != c && a != c && star(a, b) == c;
    }
    bool contains_key(TripleKey k) const;
    bool contains(const Triple& t) const { return contains_key(t.key(n_)); }

    TripleKey key_of(const Triple& t) const { return t.key(n_); }

    // Block ids (indexes into blocks()) through each point.
    const std::vector<std::vector<std::int32_t>>& blocks_through() const {
        return blocks_through_;
    }

    // Applies a point bijection and revalidates. Throws NotAPermutation.
    SteinerTripleSystem relabel(std::span<const Point> perm) const;

    bool same_blocks(const SteinerTripleSystem& other) const {
        return n_ == other.n_ && block_keys_ == other.block_keys_;
    }

private:
    SteinerTripleSystem() = default;
    void check_point(Point a) const {
        if (a < 0 || a >= n_) throw Error("PointOutOfRange", "point " + std::to_string(a));
    }

    Point n_ = 0;
    std::vector<Triple> blocks_;       // sorted by key
    std::vector<TripleKey> block_keys_;  // sorted, parallel to blocks_
    std::vector<Point> star_;          // dense n*n table
    std::vector<std::vector<std::int32_t>> blocks_through_;
};

// Backtracking search for a block-preserving point bijection from S onto T.
// Assignments are propagated through the quasigroup (mapping a and b forces
// a*b), branching on the most constrained unmapped point. Returns the
// bijection, or nullopt if the systems are not isomorphic.
std::optional<std::vector<Point>> are_isomorphic(const SteinerTripleSystem& s,
                                                 const SteinerTripleSystem& t);

}  // namespace sts
