#pragma once

#include <vector>

#include "combrank/numerics.hpp"

namespace combrank {

// Compositions of n into k ordered non-negative parts. There are
// C(n+k-1, n) of them; the enumeration order is ascending lexicographic
// on the reversed part vector (last part varies slowest).

Count count_compositions(int n, int k);

// Serial -> composition. Walks an implicit triangular table of binomial
// coefficients row by row, accumulating entries while the running sum stays
// within s-1; the entries consumed per row give the parts from the last one
// backwards, and the first part is the remaining complement. Only the
// binomial indices are carried, never the table itself.
std::vector<int> unrank_composition(const Serial& s, int n, int k);

// Composition -> serial, replaying the same walk with the loop bounds read
// off the given parts. n is the sum of the parts, k their number.
Serial rank_composition(const std::vector<int>& parts);

}  // namespace combrank
