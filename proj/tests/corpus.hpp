#pragma once

#include <string>
#include <vector>

#include "sts/core.hpp"

namespace sts::testing {

// Fixed small systems shared by the unit and acceptance suites.

// Cyclic STS(7): blocks {i, i+1, i+3} mod 7.
SteinerTripleSystem cyclic_sts7();

// Cyclic STS(13) from the difference family {0,1,4}, {0,2,7} mod 13.
SteinerTripleSystem cyclic_sts13();

// A representative of the second isomorphism class of order 13, frozen from
// the exhaustive census.
SteinerTripleSystem noncyclic_sts13();

struct NamedSystem {
    std::string name;
    SteinerTripleSystem system;
};

// The built-in corpus with n <= 15 used by the oracle-equivalence and
// invariance checks: Fano, STS(9), both order-13 classes, PG(3,2),
// bose(15), netto(13).
std::vector<NamedSystem> builtin_corpus();

// The same extended with a few larger systems (netto(19), 3^3) for
// relabeling-invariance rounds.
std::vector<NamedSystem> extended_corpus();

}  // namespace sts::testing
