#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sts/error.hpp"

namespace sts {

// GF(p) or GF(p^2), with elements encoded as integers in [0, q):
// degree 1 encodes the residue itself, degree 2 encodes a0 + a1*z as
// a0 + a1*p. The encoding fixes the element-to-point map used by the
// difference constructions, so emitted systems are reproducible.
class Field {
public:
    using Elem = std::int32_t;

    static Field prime(Elem p);
    static Field prime_square(Elem p);  // modulus by smallest-coefficient search
    // Infers p and deg from q (a prime or the square of a prime).
    static Field of_order(Elem q);

    Elem characteristic() const { return p_; }
    int degree() const { return deg_; }
    Elem size() const { return q_; }
    // Coefficients (c0, c1) of the monic modulus z^2 + c1 z + c0; degree 2 only.
    std::array<Elem, 2> modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // a != 0
    Elem pow(Elem a, std::int64_t e) const;

    // Multiplicative order of a nonzero element.
    std::int64_t order_of(Elem a) const;

    std::string element_name(Elem a) const;  // "7" or "3+2z"

    bool operator==(const Field& other) const {
        return p_ == other.p_ && deg_ == other.deg_ && modulus_ == other.modulus_;
    }

private:
    Field(Elem p, int deg, std::array<Elem, 2> modulus);

    Elem p_ = 0;
    int deg_ = 1;
    Elem q_ = 0;
    std::array<Elem, 2> modulus_{0, 0};
};

bool is_prime(std::int64_t n);

// Prime factors of n, ascending and without repeats.
std::vector<std::int64_t> prime_factors(std::int64_t n);

// Smallest element (in encoding order) of multiplicative order q-1, verified
// with x^((q-1)/r) != 1 for every prime r dividing q-1.
Field::Elem find_primitive(const Field& f);

// The unique e in [0, q-1) with x^e = target, by multiplication walk.
// Throws ZeroTarget; x must be primitive.
std::int64_t discrete_log(const Field& f, Field::Elem x, Field::Elem target);

}  // namespace sts
