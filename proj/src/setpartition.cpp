#include "combrank/setpartition.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace combrank {

namespace {

void check_rgs(const std::vector<int>& blocks) {
    if (blocks.empty())
        throw std::invalid_argument("partition vector: must have at least one entry");
    if (blocks[0] != 0)
        throw std::invalid_argument("partition vector: first entry must be 0");
    int max_seen = 0;
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        if (blocks[i] < 0 || blocks[i] > max_seen + 1)
            throw std::invalid_argument(
                "partition vector: entry " + std::to_string(i) +
                " breaks restricted growth (allowed 0.." + std::to_string(max_seen + 1) + ")");
        max_seen = std::max(max_seen, blocks[i]);
    }
}

}  // namespace

DMatrix::DMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("DMatrix: n must be positive");
    rows_.resize(n);
    for (int v = 0; v < n; ++v) {
        rows_[v].resize(n - v);
        rows_[v][0] = bell(n - v);
    }
    for (int v = 1; v < n; ++v)
        for (int u = 0; u + v <= n - 1; ++u)
            rows_[u][v] = rows_[u][v - 1] - v * rows_[u + 1][v - 1];
}

const Count& DMatrix::entry(int u, int v) const {
    if (u < 0 || v < 0 || u + v > n_ - 1)
        throw std::out_of_range("DMatrix::entry: outside the triangle");
    return rows_[u][v];
}

Count count_setpartitions(int n) {
    if (n < 1) throw std::invalid_argument("count_setpartitions: n must be positive");
    return bell(n);
}

std::vector<int> unrank_setpartition(const Serial& s, const DMatrix& d) {
    const int n = d.size();
    const Count& total = d.entry(0, 0);
    if (s < 1 || s > total)
        throw std::out_of_range("unrank_setpartition: serial outside [1, " + total.str() + "]");

    // row + col equals the number of elements placed; col is the current
    // maximum block index. All subtrees under the existing blocks share the
    // size d.entry(row, col).
    std::vector<int> blocks(n);
    int row = 0, col = 0;
    Count acc = 0;
    for (int element = 0; element < n; ++element) {
        int chosen = -1;
        for (int t = 0; t <= col; ++t) {
            if (acc + d.entry(row, col) >= s) {
                ++row;
                chosen = t;
                break;
            }
            acc += d.entry(row, col);
        }
        if (chosen < 0) {
            ++col;  // scan exhausted: open a new block
            chosen = col;
        }
        blocks[element] = chosen;
    }
    return blocks;
}

std::vector<int> unrank_setpartition(const Serial& s, int n) {
    return unrank_setpartition(s, DMatrix(n));
}

Serial rank_setpartition(const std::vector<int>& blocks, const DMatrix& d) {
    check_rgs(blocks);
    const int n = d.size();
    if (static_cast<int>(blocks.size()) != n)
        throw std::invalid_argument("rank_setpartition: vector length must equal matrix size");

    Serial s = 1;
    int row = 1, col = 0, max_seen = 0;
    for (int element = 1; element < n; ++element) {
        const int b = blocks[element];
        for (int t = 0; t < b; ++t) s += d.entry(row, col);
        if (b <= max_seen) {
            ++row;  // joined an existing block
        } else {
            ++col;  // opened a new one
            max_seen = b;
        }
    }
    return s;
}

Serial rank_setpartition(const std::vector<int>& blocks) {
    check_rgs(blocks);
    return rank_setpartition(blocks, DMatrix(static_cast<int>(blocks.size())));
}

std::string stylize(const std::vector<int>& blocks) {
    check_rgs(blocks);
    const int nblocks = 1 + *std::max_element(blocks.begin(), blocks.end());
    std::vector<std::vector<int>> groups(nblocks);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        groups[blocks[i]].push_back(static_cast<int>(i) + 1);

    std::string out;
    for (const auto& group : groups) {
        out += '(';
        for (std::size_t j = 0; j < group.size(); ++j) {
            if (j > 0) out += ", ";
            out += std::to_string(group[j]);
        }
        out += ')';
    }
    return out;
}

}  // namespace combrank
