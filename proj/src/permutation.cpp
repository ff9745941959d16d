#include "combrank/permutation.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace combrank {

namespace {

void check_offsets(const std::vector<int>& offsets) {
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        if (offsets[i] < 0 || offsets[i] > k)
            throw std::invalid_argument("offset vector: entry " + std::to_string(k) +
                                        " must lie in [0, " + std::to_string(k) + "]");
    }
}

}  // namespace

Count count_permutations(int m) {
    if (m < 1) throw std::invalid_argument("count_permutations: m must be positive");
    return factorial(m);
}

std::vector<int> serial_to_offset(const Serial& s, int m) {
    if (m < 1) throw std::invalid_argument("serial_to_offset: m must be positive");
    if (s < 1 || s > factorial(m))
        throw std::out_of_range("serial_to_offset: serial outside [1, " +
                                factorial(m).str() + "]");

    const Count base = s - 1;
    std::vector<int> offsets(m - 1);
    Count fact_k = 1;  // k!
    for (int k = 1; k < m; ++k) {
        const Count fact_k1 = fact_k * (k + 1);
        const Count digit = base % fact_k1 / fact_k;
        const Count sweep = base / fact_k1 % 2;  // 0 = direct, 1 = inverted
        offsets[k - 1] =
            sweep == 0 ? digit.convert_to<int>() : k - digit.convert_to<int>();
        fact_k = fact_k1;
    }
    return offsets;
}

std::vector<int> offset_to_permutation(const std::vector<int>& offsets) {
    check_offsets(offsets);
    const int m = static_cast<int>(offsets.size()) + 1;

    // chain holds vector positions ordered by ascending value; placing
    // position k+1 with offsets[k-1] members to its right gives it exactly
    // that many larger predecessors.
    std::vector<int> chain;
    chain.reserve(m);
    chain.push_back(1);
    for (int k = 1; k < m; ++k)
        chain.insert(chain.end() - offsets[k - 1], k + 1);

    std::vector<int> perm(m);
    for (int v = 0; v < m; ++v) perm[chain[v] - 1] = v + 1;
    return perm;
}

std::vector<int> permutation_to_offset(const std::vector<int>& perm) {
    const int m = static_cast<int>(perm.size());
    if (m < 1) throw std::invalid_argument("permutation: must have at least one entry");
    std::vector<bool> seen(m, false);
    for (int v : perm) {
        if (v < 1 || v > m || seen[v - 1])
            throw std::invalid_argument("permutation: entries must be a bijection on {1.." +
                                        std::to_string(m) + "}");
        seen[v - 1] = true;
    }

    std::vector<int> offsets(m - 1);
    for (int i = 1; i < m; ++i) {
        int larger = 0;
        for (int j = 0; j < i; ++j)
            if (perm[j] > perm[i]) ++larger;
        offsets[i - 1] = larger;
    }
    return offsets;
}

Serial offset_to_serial(const std::vector<int>& offsets) {
    check_offsets(offsets);
    const int m = static_cast<int>(offsets.size()) + 1;
    if (m == 1) return 1;

    std::vector<Count> fact(m);  // fact[k] = k!
    fact[0] = 1;
    for (int k = 1; k < m; ++k) fact[k] = fact[k - 1] * k;

    // Most significant digit always sits in a direct sweep; moving left,
    // the sweep flips exactly when the digit to the right is odd.
    Serial s = Count(offsets[m - 2]) * fact[m - 1];
    bool direct = true;
    for (int k = m - 2; k >= 1; --k) {
        if (offsets[k] % 2 != 0) direct = !direct;
        s += direct ? Count(offsets[k - 1]) * fact[k]
                    : Count(k - offsets[k - 1]) * fact[k];
    }
    return s + 1;
}

std::vector<int> unrank_permutation(const Serial& s, int m) {
    return offset_to_permutation(serial_to_offset(s, m));
}

Serial rank_permutation(const std::vector<int>& perm) {
    return offset_to_serial(permutation_to_offset(perm));
}

}  // namespace combrank
