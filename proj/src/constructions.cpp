#include "sts/constructions.hpp"

#include <algorithm>

#include "sts/combinatorics.hpp"

namespace sts {

NettoSpec make_netto_spec(const Field& field, std::vector<Field::Elem> c) {
    const std::int64_t q = field.size();
    if (q % 6 != 1)
        throw Error("BadOrderModSix", "q = " + std::to_string(q) + " is not 1 mod 6");
    const std::int64_t t = (q - 1) / 6;

    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (Field::Elem e : c)
        if (e == 0) throw Error("ZeroInC", "0 is not allowed in the multiplier set");
    if (static_cast<std::int64_t>(c.size()) != t)
        throw Error("WrongCSize", "multiplier set has " + std::to_string(c.size()) +
                                      " elements, expected t = " + std::to_string(t));

    NettoSpec spec{field, t, find_primitive(field), 0, std::move(c), {}};
    spec.y = field.pow(spec.x, 2 * t);
    spec.exponents.reserve(spec.c.size());
    for (Field::Elem e : spec.c) spec.exponents.push_back(discrete_log(field, spec.x, e));

    for (std::size_t i = 0; i < spec.exponents.size(); ++i)
        for (std::size_t j = i + 1; j < spec.exponents.size(); ++j)
            if ((spec.exponents[i] - spec.exponents[j]) % t == 0)
                throw Error("CosetCollision",
                            "elements " + field.element_name(spec.c[i]) + " and " +
                                field.element_name(spec.c[j]) +
                                " have discrete logs congruent mod t = " + std::to_string(t));
    return spec;
}

SteinerTripleSystem netto(const NettoSpec& spec) {
    const Field& f = spec.field;
    const Field::Elem y2 = f.mul(spec.y, spec.y);
    std::vector<Triple> blocks;
    blocks.reserve(static_cast<std::size_t>(spec.t) * static_cast<std::size_t>(f.size()));
    for (Field::Elem c : spec.c) {
        const Field::Elem b0 = c, b1 = f.mul(c, spec.y), b2 = f.mul(c, y2);
        for (Field::Elem a = 0; a < f.size(); ++a)
            blocks.push_back(make_triple(f.add(b0, a), f.add(b1, a), f.add(b2, a)));
    }
    return SteinerTripleSystem::validate(f.size(), blocks);
}

SteinerTripleSystem netto(const Field& field, std::vector<Field::Elem> c) {
    return netto(make_netto_spec(field, std::move(c)));
}

NettoSpec choose_enough_c(const Field& field) {
    const std::int64_t q = field.size();
    if (q % 6 != 1)
        throw Error("BadOrderModSix", "q = " + std::to_string(q) + " is not 1 mod 6");
    const std::int64_t t = (q - 1) / 6;
    const Field::Elem x = find_primitive(field);
    const std::int64_t s = discrete_log(field, x, 2);
    if (s % t == 0)
        throw Error("SDivisibleByT", "log_x(2) = " + std::to_string(s) +
                                         " is divisible by t = " + std::to_string(t));

    // covered[r] holds the member exponent in residue class r mod t, or -1.
    std::vector<std::int64_t> covered(static_cast<std::size_t>(t), -1);
    std::vector<std::int64_t> exps;
    auto add_exp = [&](std::int64_t e) {
        e = ((e % (q - 1)) + (q - 1)) % (q - 1);
        covered[static_cast<std::size_t>(e % t)] = e;
        exps.push_back(e);
    };
    add_exp(0);  // element 1
    add_exp(s);  // element 2

    while (static_cast<std::int64_t>(exps.size()) < t) {
        std::int64_t j = 0;
        while (covered[static_cast<std::size_t>(j)] != -1) ++j;
        if (covered[static_cast<std::size_t>((j + s) % t)] == -1) {
            add_exp(j);
            add_exp(j + s);  // element 2*x^j
        } else {
            const std::int64_t r = covered[static_cast<std::size_t>((j + s) % t)];
            add_exp(r - s);  // element x^r / 2
        }
    }

    std::vector<Field::Elem> c;
    c.reserve(exps.size());
    for (std::int64_t e : exps) c.push_back(field.pow(x, e));
    NettoSpec spec = make_netto_spec(field, std::move(c));

    // The recursion guarantees 2c in C or c/2 in C; keep it checked.
    const Field::Elem two = 2;
    for (Field::Elem e : spec.c) {
        const bool doubled = std::binary_search(spec.c.begin(), spec.c.end(), field.mul(e, two));
        const bool halved =
            std::binary_search(spec.c.begin(), spec.c.end(), field.mul(e, field.inv(two)));
        if (!doubled && !halved)
            throw Error("FieldInternal", "multiplier set lost the doubling closure");
    }
    return spec;
}

SteinerTripleSystem pg(int k) {
    if (k < 2) throw Error("KTooSmall", "projective dimension must be at least 2");
    const Point n = (1 << (k + 1)) - 1;
    std::vector<Triple> blocks;
    blocks.reserve(static_cast<std::size_t>(third_binom2(n)));
    // Vectors are 1..n; {a, b, a^b} appears once with a < b < (a^b).
    for (Point a = 1; a <= n; ++a)
        for (Point b = a + 1; b <= n; ++b) {
            const Point c = a ^ b;
            if (c > b) blocks.push_back(Triple{{a - 1, b - 1, c - 1}});
        }
    return SteinerTripleSystem::validate(n, blocks);
}

namespace {

// Third point of the affine line through u != v in (Z_3)^m: -(u+v) digitwise.
Point z3_third(Point u, Point v, int m) {
    Point out = 0;
    Point base = 1;
    for (int i = 0; i < m; ++i) {
        const Point du = (u / base) % 3, dv = (v / base) % 3;
        out += ((6 - du - dv) % 3) * base;
        base *= 3;
    }
    return out;
}

}  // namespace

SteinerTripleSystem ag_power(int m) {
    if (m < 1) throw Error("MTooSmall", "power must be at least 1");
    Point n = 1;
    for (int i = 0; i < m; ++i) n *= 3;
    std::vector<Triple> blocks;
    blocks.reserve(static_cast<std::size_t>(third_binom2(n)));
    for (Point u = 0; u < n; ++u)
        for (Point v = u + 1; v < n; ++v) {
            const Point w = z3_third(u, v, m);
            if (w > v) blocks.push_back(Triple{{u, v, w}});
        }
    return SteinerTripleSystem::validate(n, blocks);
}

SteinerTripleSystem direct_product(const SteinerTripleSystem& s, const SteinerTripleSystem& t) {
    const Point m = s.order(), n = t.order();
    const Point mn = m * n;
    std::vector<Triple> blocks;
    blocks.reserve(static_cast<std::size_t>(third_binom2(mn)));
    for (Point u = 0; u < mn; ++u) {
        const Point ua = u / n, ux = u % n;
        for (Point v = u + 1; v < mn; ++v) {
            const Point va = v / n, vx = v % n;
            const Point w = s.star_fast(ua, va) * n + t.star_fast(ux, vx);
            if (w > v) blocks.push_back(Triple{{u, v, w}});
        }
    }
    return SteinerTripleSystem::validate(mn, blocks);
}

SteinerTripleSystem bose(Point n) {
    if (n % 6 != 3) throw Error("BadOrderModSix", "order " + std::to_string(n) + " is not 3 mod 6");
    const Point t = (n - 3) / 6;
    const Point m = 2 * t + 1;
    const Point half = t + 1;  // inverse of 2 mod m
    auto qop = [&](Point a, Point b) { return static_cast<Point>((a + b) * half % m); };
    auto idx = [&](Point a, Point i) { return 3 * a + i; };

    std::vector<Triple> blocks;
    blocks.reserve(static_cast<std::size_t>(third_binom2(n)));
    for (Point a = 0; a < m; ++a) blocks.push_back(make_triple(idx(a, 0), idx(a, 1), idx(a, 2)));
    for (Point a = 0; a < m; ++a)
        for (Point b = a + 1; b < m; ++b)
            for (Point i = 0; i < 3; ++i)
                blocks.push_back(make_triple(idx(a, i), idx(b, i), idx(qop(a, b), (i + 1) % 3)));
    return SteinerTripleSystem::validate(n, blocks);
}

}  // namespace sts
