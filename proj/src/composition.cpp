#include "combrank/composition.hpp"

#include <limits>
#include <stdexcept>

namespace combrank {

Count count_compositions(int n, int k) {
    if (n < 0 || k < 1)
        throw std::invalid_argument("count_compositions: need n >= 0 and k >= 1");
    return binomial(n + k - 1, n);
}

std::vector<int> unrank_composition(const Serial& s, int n, int k) {
    const Count total = count_compositions(n, k);
    if (s < 1 || s > total)
        throw std::out_of_range("unrank_composition: serial outside [1, " + total.str() + "]");

    std::vector<int> parts(k, 0);
    if (k == 1) {  // zero-row table: the single part is forced
        parts[0] = n;
        return parts;
    }

    // Row r column c of the implicit table holds C(n+k-2-r-c, n-c), the
    // number of compositions sharing the trailing parts fixed so far.
    // Consuming an entry bumps the current part; rows assign parts from the
    // last one down to the second.
    const Count target = s - 1;
    Count acc = 0;
    int col = 0;
    for (int row = 0; row <= k - 2; ++row) {
        int consumed = 0;
        while (col <= n) {
            const Count entry = binomial(n + k - 2 - row - col, n - col);
            if (acc + entry > target) break;
            acc += entry;
            ++col;
            ++consumed;
        }
        parts[k - 1 - row] = consumed;
    }
    parts[0] = n - col;
    return parts;
}

Serial rank_composition(const std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k < 1) throw std::invalid_argument("composition: needs at least one part");
    long long total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("composition: parts must be non-negative");
        total += p;
    }
    if (total > std::numeric_limits<int>::max())
        throw std::invalid_argument("composition: parts sum too large");
    const int n = static_cast<int>(total);

    Serial s = 1;
    int col = 0;
    for (int row = 0; row <= k - 2; ++row) {
        for (int t = 0; t < parts[k - 1 - row]; ++t) {
            s += binomial(n + k - 2 - row - col, n - col);
            ++col;
        }
    }
    return s;
}

}  // namespace combrank
