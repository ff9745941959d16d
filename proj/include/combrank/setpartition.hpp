#pragma once

#include <string>
#include <vector>

#include "combrank/numerics.hpp"

namespace combrank {

// Set partitions of {1..n}, encoded as restricted growth strings: entry i
// is the 0-based block index of element i+1, entry 0 is 0, and each entry
// may exceed the running maximum by at most one.

// Upper-triangular table of subtree sizes for the implicit partition tree.
// Row u, column v exists for u + v <= n-1. Column 0 holds Bell numbers in
// descending order, D(v, 0) = B_{n-v}; the rest follow
// D(u, v) = D(u, v-1) - v * D(u+1, v-1). Immutable once built.
class DMatrix {
public:
    explicit DMatrix(int n);

    int size() const { return n_; }
    const Count& entry(int u, int v) const;

private:
    int n_;
    std::vector<std::vector<Count>> rows_;
};

inline DMatrix build_d_matrix(int n) { return DMatrix(n); }

// B_n; equals DMatrix(n).entry(0, 0).
Count count_setpartitions(int n);

// Serial -> restricted growth string. For each element, scan the existing
// blocks; joining one descends a row in D, exhausting the scan opens a new
// block and advances a column.
std::vector<int> unrank_setpartition(const Serial& s, int n);
std::vector<int> unrank_setpartition(const Serial& s, const DMatrix& d);

// Restricted growth string -> serial, adding one D entry per sibling
// subtree the unranking walk would have skipped.
Serial rank_setpartition(const std::vector<int>& blocks);
Serial rank_setpartition(const std::vector<int>& blocks, const DMatrix& d);

// Human-readable block listing, e.g. (0,1,1,0,0) -> "(1, 4, 5)(2, 3)":
// non-empty blocks in ascending index order, 1-based elements ascending,
// comma-space inside groups, nothing between them.
std::string stylize(const std::vector<int>& blocks);

}  // namespace combrank
