#pragma once

#include <cstdint>
#include <vector>

#include "sts/core.hpp"
#include "sts/field.hpp"

namespace sts {

// Parameters of a difference construction S_C over GF(q), q = 6t+1:
// blocks are c*{1, y, y^2} + a for c in the multiplier set C and a in the
// field, where y = x^{2t} is a primitive cube root of unity.
struct NettoSpec {
    Field field;
    std::int64_t t = 0;
    Field::Elem x = 0;  // primitive element
    Field::Elem y = 0;  // x^{2t}
    std::vector<Field::Elem> c;          // sorted by encoding
    std::vector<std::int64_t> exponents;  // discrete logs base x, aligned with c
};

// Validates a multiplier set against GF(q), q = 6t+1: 0 not in C, |C| = t,
// and no two members with discrete logs congruent mod t.
// Throws BadOrderModSix, ZeroInC, WrongCSize, CosetCollision.
NettoSpec make_netto_spec(const Field& field, std::vector<Field::Elem> c);

// The system S_C. Field elements become point indices through their integer
// encoding. Output passes validate.
SteinerTripleSystem netto(const NettoSpec& spec);
SteinerTripleSystem netto(const Field& field, std::vector<Field::Elem> c);

// Picks C = {1, 2, ...} recursively so that every c in C has 2c or c/2 in C
// (on top of the transversal condition). Deterministic: always extends from
// the smallest uncovered exponent class mod t.
// Throws SDivisibleByT when log 2 is divisible by t (this covers t = 1),
// BadOrderModSix.
NettoSpec choose_enough_c(const Field& field);

// Points are the nonzero bit vectors of length k+1 (index = value - 1),
// blocks all {a, b, a xor b}. Order 2^(k+1) - 1. Throws KTooSmall for k < 2.
SteinerTripleSystem pg(int k);

// The m-fold power of the one-block system: points are vectors in (Z_3)^m,
// blocks the coordinatewise zero-sum triples. Point index reads the vector
// with coordinate 0 most significant, which makes the result equal, block
// for block, to the iterated direct product. Throws MTooSmall for m < 1.
SteinerTripleSystem ag_power(int m);

// Direct product: points (a, x) -> a*order(t) + x, star computed
// coordinatewise in each factor.
SteinerTripleSystem direct_product(const SteinerTripleSystem& s, const SteinerTripleSystem& t);

// Bose construction for n = 6t+3 over the idempotent commutative quasigroup
// on Z_{2t+1}. Throws BadOrderModSix otherwise.
SteinerTripleSystem bose(Point n);

}  // namespace sts
