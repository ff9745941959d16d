#pragma once

#include <vector>

#include "combrank/numerics.hpp"

namespace combrank {

// k-element subsets of {1..n} in ascending lexicographic order, written as
// strictly increasing element vectors.

Count count_ksubsets(int n, int k);

// Serial -> subset. Skip-counts over an implicit tree of binomial
// coefficients: only the coefficient indices and a running element label
// are carried.
std::vector<int> unrank_ksubset(const Serial& s, int n, int k);

// Subset -> serial; the gap between consecutive chosen elements bounds the
// number of skipped coefficients per position.
Serial rank_ksubset(const std::vector<int>& elements, int n);

// All C(n,k) subsets in lexicographic order by direct recursion. Test and
// reference use only; capped at n <= 20.
std::vector<std::vector<int>> generate_ksubsets_lex(int n, int k);

}  // namespace combrank
