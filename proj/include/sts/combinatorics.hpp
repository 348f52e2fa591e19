#pragma once

#include <cstdint>

namespace sts {

inline std::int64_t binom2(std::int64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

inline std::int64_t binom3(std::int64_t n) {
    return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3;
}

// n(n-1)/6, the block count of an order-n system and also (1/3)C(n,2).
inline std::int64_t third_binom2(std::int64_t n) {
    return n * (n - 1) / 6;
}

}  // namespace sts
