#pragma once

#include <vector>

#include "combrank/numerics.hpp"

namespace combrank {

// All 2^n subsets of {1..n} as 0/1 inclusion masks, flag i (0-based)
// standing for element i+1. Consecutive serials differ in exactly one
// flag: the order is the binary reflected Gray code read LSB-first.

Count count_subsets(int n);

// Serial -> mask; flag k is ((s-1+2^k) mod 2^{k+2}) / 2^{k+1}, evaluated
// with exact unbounded integer arithmetic.
std::vector<int> unrank_subset(const Serial& s, int n);

// Mask -> serial, scanning flags from most significant to least and
// tracking direct/inverted sweeps with an xor test.
Serial rank_subset(const std::vector<int>& flags);

}  // namespace combrank
