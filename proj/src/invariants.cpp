#include "sts/invariants.hpp"

#include <algorithm>
#include <thread>

#include "sts/combinatorics.hpp"

namespace sts {

namespace {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(worker, first) for first points striped across workers and
// concatenates the per-worker outputs in worker order.
template <typename Fn>
std::vector<TripleKey> striped_keys(Point n, int workers, Fn&& fn) {
    std::vector<std::vector<TripleKey>> parts(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        for (Point a = w; a < n; a += workers) fn(parts[static_cast<std::size_t>(w)], a);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<TripleKey> out;
    out.reserve(total);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

ImageSets compute_image_sets(const SteinerTripleSystem& s, int worker_count) {
    const Point n = s.order();
    const int workers = resolve_workers(worker_count);

    // Images of non-blocks. A block {a,b,c} maps to itself (a*b = c and so
    // on), so blocks are folded in afterwards via the set union.
    std::vector<TripleKey> keys = striped_keys(n, workers, [&](std::vector<TripleKey>& out, Point a) {
        for (Point b = a + 1; b < n; ++b) {
            const Point ab = s.star_fast(a, b);
            for (Point c = b + 1; c < n; ++c) {
                if (ab == c) continue;
                out.push_back(
                    make_triple(ab, s.star_fast(b, c), s.star_fast(c, a)).key(n));
            }
        }
    });

    ImageSets sets;
    sets.a_set = TripleSet(std::move(keys), n);
    TripleSet blocks(s.block_keys(), n);
    sets.b_set = TripleSet::set_union(sets.a_set, blocks);
    return sets;
}

TripleSet a_set(const SteinerTripleSystem& s, int worker_count) {
    return compute_image_sets(s, worker_count).a_set;
}

TripleSet psi_image(const SteinerTripleSystem& s, int worker_count) {
    return compute_image_sets(s, worker_count).b_set;
}

namespace {

// Tries to close the block pair {p,u,v}, {p,w,x} into a quadrilateral with
// the cross blocks {u,w,f}, {v,x,f}. star(u,w) == f already certifies that
// {u,w,f} is a block, and likewise for {v,x,f}.
bool complete_pair(const SteinerTripleSystem& s, Point p, Point u, Point v, Point w, Point x,
                   PaschConfig* out) {
    const Point f = s.star_fast(u, w);
    if (f != s.star_fast(v, x)) return false;
    if (f == p || f == u || f == v || f == w || f == x) return false;
    if (out) {
        out->pts = {p, u, v, w, x, f};
        out->blocks = {make_triple(p, u, v), make_triple(p, w, x), make_triple(u, w, f),
                       make_triple(v, x, f)};
    }
    return true;
}

// Counted (or reported) only when {B1,B2} is the least of the six block
// pairs of the configuration, which visits each configuration exactly once.
bool is_canonical_discovery(const SteinerTripleSystem& s, const PaschConfig& cfg) {
    const Point n = s.order();
    const TripleKey k1 = cfg.blocks[0].key(n), k2 = cfg.blocks[1].key(n);
    const TripleKey k3 = cfg.blocks[2].key(n), k4 = cfg.blocks[3].key(n);
    return std::max(k1, k2) < std::min(k3, k4);
}

template <typename Sink>
void scan_pasch_at_point(const SteinerTripleSystem& s, Point p, Sink&& sink) {
    const auto& through = s.blocks_through()[static_cast<std::size_t>(p)];
    const auto& blocks = s.blocks();
    for (std::size_t i = 0; i < through.size(); ++i) {
        const Triple& b1 = blocks[static_cast<std::size_t>(through[i])];
        Point u = b1.p[0] == p ? b1.p[1] : b1.p[0];
        Point v = b1.p[2] == p ? b1.p[1] : b1.p[2];
        for (std::size_t j = i + 1; j < through.size(); ++j) {
            const Triple& b2 = blocks[static_cast<std::size_t>(through[j])];
            Point w = b2.p[0] == p ? b2.p[1] : b2.p[0];
            Point x = b2.p[2] == p ? b2.p[1] : b2.p[2];
            PaschConfig cfg;
            if (complete_pair(s, p, u, v, w, x, &cfg) && is_canonical_discovery(s, cfg)) sink(cfg);
            if (complete_pair(s, p, u, v, x, w, &cfg) && is_canonical_discovery(s, cfg)) sink(cfg);
        }
    }
}

}  // namespace

std::int64_t pasch_count(const SteinerTripleSystem& s, int worker_count) {
    const Point n = s.order();
    const int workers = resolve_workers(worker_count);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(workers), 0);
    auto run = [&](int w) {
        std::int64_t local = 0;
        for (Point p = w; p < n; p += workers)
            scan_pasch_at_point(s, p, [&](const PaschConfig&) { ++local; });
        counts[static_cast<std::size_t>(w)] = local;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    std::int64_t total = 0;
    for (std::int64_t c : counts) total += c;
    return total;
}

std::vector<PaschConfig> pasch_configs(const SteinerTripleSystem& s) {
    std::vector<PaschConfig> out;
    for (Point p = 0; p < s.order(); ++p)
        scan_pasch_at_point(s, p, [&](const PaschConfig& cfg) { out.push_back(cfg); });
    std::sort(out.begin(), out.end(), [&](const PaschConfig& a, const PaschConfig& b) {
        return a.signature(s.order()) < b.signature(s.order());
    });
    return out;
}

bool block_in_pasch(const SteinerTripleSystem& s, const Triple& b) {
    if (!s.contains(b))
        throw Error("BlockNotInSystem", "block {" + std::to_string(b.p[0]) + "," +
                                            std::to_string(b.p[1]) + "," + std::to_string(b.p[2]) +
                                            "} is not in the system");
    const auto& blocks = s.blocks();
    for (Point p : b.p) {
        const Point u = b.p[0] == p ? b.p[1] : b.p[0];
        const Point v = b.p[2] == p ? b.p[1] : b.p[2];
        for (std::int32_t id : s.blocks_through()[static_cast<std::size_t>(p)]) {
            const Triple& other = blocks[static_cast<std::size_t>(id)];
            if (other == b) continue;
            const Point w = other.p[0] == p ? other.p[1] : other.p[0];
            const Point x = other.p[2] == p ? other.p[1] : other.p[2];
            if (complete_pair(s, p, u, v, w, x, nullptr)) return true;
            if (complete_pair(s, p, u, v, x, w, nullptr)) return true;
        }
    }
    return false;
}

InvariantReport invariant_report(const SteinerTripleSystem& s, int worker_count) {
    const Point n = s.order();
    InvariantReport rep;
    rep.n = n;
    rep.block_count = s.block_count();
    rep.degenerate = n <= 3;

    const ImageSets sets = compute_image_sets(s, worker_count);
    rep.alpha = sets.a_set.size();
    rep.beta = sets.b_set.size();
    rep.gamma = rep.beta - rep.alpha;
    rep.pasch_count = pasch_count(s, worker_count);

    const std::int64_t third = third_binom2(n);
    rep.flags.projective = !rep.degenerate && rep.beta == third;
    rep.flags.anti_pasch = rep.pasch_count == 0;
    rep.flags.strongly_anti_pasch = rep.beta == binom3(n);
    rep.flags.enough_pasch = rep.gamma == 0;
    rep.bounds_ok = rep.degenerate ||
                    (third <= rep.alpha && rep.alpha <= rep.beta && rep.beta <= rep.alpha + third &&
                     rep.alpha + third <= binom3(n));
    return rep;
}

std::int64_t beta_of(const SteinerTripleSystem& s, int worker_count) {
    return compute_image_sets(s, worker_count).b_set.size();
}

ProductPrediction product_formulas(const InvariantReport& s, const InvariantReport& t) {
    const std::int64_t m = s.n, n = t.n;
    const std::int64_t a = s.alpha, b = s.beta, g = s.gamma;
    const std::int64_t a2 = t.alpha, b2 = t.beta, g2 = t.gamma;
    const std::int64_t cm = binom2(m), cn = binom2(n);
    ProductPrediction p;
    p.alpha = 6 * a * b2 + 6 * b * a2 - 6 * a * a2 + 6 * cn * b + 6 * cm * b2 + n * a + m * a2 +
              4 * cm * cn;
    p.beta = 6 * b * b2 + (6 * cn + n) * b + (6 * cm + m) * b2 + 4 * cm * cn;
    p.gamma = 6 * g * g2 + n * g + m * g2;
    return p;
}

std::unordered_map<TripleKey, std::int64_t> phi_preimage_census(const SteinerTripleSystem& s) {
    const Point n = s.order();
    if (n <= 3) throw Error("DegenerateOrder", "preimage census needs n > 3");
    std::unordered_map<TripleKey, std::int64_t> census;
    for (Point a = 0; a < n; ++a)
        for (Point b = a + 1; b < n; ++b) {
            const Point ab = s.star_fast(a, b);
            for (Point c = b + 1; c < n; ++c) {
                if (ab == c) continue;
                ++census[make_triple(ab, s.star_fast(b, c), s.star_fast(c, a)).key(n)];
            }
        }
    return census;
}

bool brouwer_criterion_check(const SteinerTripleSystem& s, const NettoSpec& spec) {
    const Field& f = spec.field;
    if (s.order() != f.size())
        throw Error("NotANettoSystem", "system order " + std::to_string(s.order()) +
                                           " does not match q = " + std::to_string(f.size()));
    const Field::Elem two = 2;
    const Field::Elem half = f.inv(two);
    for (const Triple& b : s.blocks()) {
        const bool in_pasch = block_in_pasch(s, b);
        const Triple doubled =
            make_triple(f.mul(b.p[0], two), f.mul(b.p[1], two), f.mul(b.p[2], two));
        const Triple halved =
            make_triple(f.mul(b.p[0], half), f.mul(b.p[1], half), f.mul(b.p[2], half));
        const bool scaled_in = s.contains(doubled) || s.contains(halved);
        if (in_pasch != scaled_in) return false;
    }
    return true;
}

}  // namespace sts
