#include "sts/field.hpp"

namespace sts {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Irreducible over GF(p) iff the monic quadratic z^2 + c1 z + c0 has no root.
bool quadratic_irreducible(Field::Elem p, Field::Elem c1, Field::Elem c0) {
    for (Field::Elem x = 0; x < p; ++x)
        if (((static_cast<std::int64_t>(x) * x + static_cast<std::int64_t>(c1) * x + c0) % p) == 0)
            return false;
    return true;
}

}  // namespace

Field::Field(Elem p, int deg, std::array<Elem, 2> modulus)
    : p_(p), deg_(deg), q_(deg == 1 ? p : p * p), modulus_(modulus) {}

Field Field::prime(Elem p) {
    if (!is_prime(p)) throw Error("NotPrime", std::to_string(p) + " is not prime");
    return Field(p, 1, {0, 0});
}

Field Field::prime_square(Elem p) {
    if (!is_prime(p)) throw Error("NotPrime", std::to_string(p) + " is not prime");
    // Smallest modulus in encoding order c0 + p*c1.
    for (Elem enc = 0; enc < p * p; ++enc) {
        const Elem c0 = enc % p, c1 = enc / p;
        if (quadratic_irreducible(p, c1, c0)) return Field(p, 2, {c0, c1});
    }
    throw Error("NoIrreducible", "no irreducible quadratic over GF(" + std::to_string(p) + ")");
}

Field Field::of_order(Elem q) {
    if (q >= 2 && is_prime(q)) return prime(q);
    for (Elem p = 2; static_cast<std::int64_t>(p) * p <= q; ++p)
        if (static_cast<std::int64_t>(p) * p == q && is_prime(p)) return prime_square(p);
    throw Error("BadPrimePower",
                std::to_string(q) + " is neither a prime nor the square of a prime");
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (deg_ == 1) return static_cast<Elem>((a + b) % p_);
    const Elem a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    return static_cast<Elem>((a0 + b0) % p_ + p_ * ((a1 + b1) % p_));
}

Field::Elem Field::neg(Elem a) const {
    if (deg_ == 1) return static_cast<Elem>((p_ - a) % p_);
    const Elem a0 = a % p_, a1 = a / p_;
    return static_cast<Elem>((p_ - a0) % p_ + p_ * ((p_ - a1) % p_));
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
    if (deg_ == 1)
        return static_cast<Elem>(static_cast<std::int64_t>(a) * b % p_);
    const std::int64_t a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    const std::int64_t c0 = modulus_[0], c1 = modulus_[1];
    // (a0 + a1 z)(b0 + b1 z) with z^2 = -c1 z - c0.
    const std::int64_t zz = a1 * b1 % p_;
    const std::int64_t r0 = ((a0 * b0 - zz * c0) % p_ + p_) % p_;
    const std::int64_t r1 = ((a0 * b1 + a1 * b0 - zz * c1) % p_ + p_) % p_;
    return static_cast<Elem>(r0 + p_ * r1);
}

Field::Elem Field::pow(Elem a, std::int64_t e) const {
    const std::int64_t m = q_ - 1;
    if (a != 0 && (e >= m || e < 0)) e = ((e % m) + m) % m;
    Elem acc = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw Error("ZeroDivision", "inverse of 0");
    return pow(a, q_ - 2);
}

std::int64_t Field::order_of(Elem a) const {
    if (a == 0) throw Error("ZeroDivision", "order of 0");
    std::int64_t ord = 1;
    Elem acc = a;
    while (acc != 1) {
        acc = mul(acc, a);
        ++ord;
        if (ord > q_) throw Error("FieldInternal", "element order runaway");
    }
    return ord;
}

std::string Field::element_name(Elem a) const {
    if (deg_ == 1) return std::to_string(a);
    const Elem a0 = a % p_, a1 = a / p_;
    if (a1 == 0) return std::to_string(a0);
    std::string z = (a1 == 1) ? "z" : std::to_string(a1) + "z";
    if (a0 == 0) return z;
    return std::to_string(a0) + "+" + z;
}

Field::Elem find_primitive(const Field& f) {
    const std::int64_t m = f.size() - 1;
    const auto factors = prime_factors(m);
    for (Field::Elem x = 2; x < f.size(); ++x) {
        bool primitive = true;
        for (std::int64_t r : factors)
            if (f.pow(x, m / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return x;
    }
    throw Error("FieldInternal", "no primitive element found");
}

std::int64_t discrete_log(const Field& f, Field::Elem x, Field::Elem target) {
    if (target == 0) throw Error("ZeroTarget", "discrete log of 0");
    Field::Elem acc = 1;
    for (std::int64_t e = 0; e < f.size() - 1; ++e) {
        if (acc == target) return e;
        acc = f.mul(acc, x);
    }
    throw Error("NotPrimitive", "base does not generate the multiplicative group");
}

}  // namespace sts
