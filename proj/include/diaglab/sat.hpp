#ifndef DIAGLAB_SAT_HPP
#define DIAGLAB_SAT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "diaglab/formula.hpp"

namespace diaglab::sat {

// Satisfiability of (/\ positives) /\ (/\ !negatives).
// Clause sets are produced by a Tseitin transformation cached per formula
// node; auxiliary variables live in an integer space disjoint from interned
// atoms, so they can never collide with user atom names.
bool check(std::span<const Formula> positives,
           std::span<const Formula> negatives);

// Number of check() calls made by the calling thread so far. Serves as a
// deterministic cost measure for reproducible benchmark accounting.
std::uint64_t thread_checks();

}  // namespace diaglab::sat

#endif
