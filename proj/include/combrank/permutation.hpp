#pragma once

#include <vector>

#include "combrank/numerics.hpp"

namespace combrank {

// Permutations of {1..m} in the order in which the offset (inversion)
// vector digits sweep back and forth, digit k with period (k+1)!;
// consecutive serials differ by a single transposition. A permutation is a
// vector of the values 1..m, each exactly once; its offset vector d has
// m-1 entries with d_k = number of entries left of position k+1 that
// exceed the entry there, 0 <= d_k <= k.

Count count_permutations(int m);

// Serial -> offset vector. Digit k of the offset vector cycles with period
// (k+1)!, alternating ascending (direct) and descending (inverted) sweeps.
std::vector<int> serial_to_offset(const Serial& s, int m);

// Offset vector -> the unique permutation whose inversion counts reproduce
// it. Entry k+1 is placed so that exactly d_k larger values precede it.
std::vector<int> offset_to_permutation(const std::vector<int>& offsets);

// Permutation -> offset vector (direct inversion count).
std::vector<int> permutation_to_offset(const std::vector<int>& perm);

// Offset vector -> serial, walking the digits from most significant to
// least and tracking whether each digit sits in a direct or inverted sweep.
Serial offset_to_serial(const std::vector<int>& offsets);

std::vector<int> unrank_permutation(const Serial& s, int m);
Serial rank_permutation(const std::vector<int>& perm);

}  // namespace combrank
