#include "combrank/ksubset.hpp"

#include <stdexcept>
#include <string>

namespace combrank {

namespace {

void check_elements(const std::vector<int>& elements, int n) {
    int prev = 0;
    for (int e : elements) {
        if (e <= prev || e > n)
            throw std::invalid_argument(
                "k-subset: elements must be strictly increasing within [1, " +
                std::to_string(n) + "]");
        prev = e;
    }
}

}  // namespace

Count count_ksubsets(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("count_ksubsets: need 0 <= k <= n");
    return binomial(n, k);
}

std::vector<int> unrank_ksubset(const Serial& s, int n, int k) {
    const Count total = count_ksubsets(n, k);
    if (s < 1 || s > total)
        throw std::out_of_range("unrank_ksubset: serial outside [1, " + total.str() + "]");

    // (x, y) index the current binomial subtree, r is the running element
    // label. Skipping past a subtree of C(x-j, y) subsets advances the label
    // by one; settling into one fixes the next element.
    std::vector<int> elements(k);
    int x = n, y = k - 1, r = 0;
    Count acc = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j <= x - y + 1; ++j) {
            const Count skip = binomial(x - j, y);
            if (acc + skip < s) {
                acc += skip;
            } else {
                x -= j;
                --y;
                r += j;
                break;
            }
        }
        elements[i] = r;
    }
    return elements;
}

Serial rank_ksubset(const std::vector<int>& elements, int n) {
    const int k = static_cast<int>(elements.size());
    if (n < 0 || k > n) throw std::invalid_argument("rank_ksubset: need 0 <= k <= n");
    check_elements(elements, n);

    Serial s = 1;
    int x = n, y = k - 1, r = 0;
    for (int i = 0; i < k; ++i) {
        const int gap = elements[i] - r;  // subtrees skipped before this element, plus one
        for (int j = 1; j < gap; ++j) s += binomial(x - j, y);
        x -= gap;
        --y;
        r = elements[i];
    }
    return s;
}

std::vector<std::vector<int>> generate_ksubsets_lex(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("generate_ksubsets_lex: need 0 <= k <= n");
    if (n > 20)
        throw std::invalid_argument("generate_ksubsets_lex: supported only for n <= 20");

    std::vector<std::vector<int>> out;
    std::vector<int> current(k);
    auto expand = [&](auto&& self, int pos, int low) -> void {
        if (pos == k) {
            out.push_back(current);
            return;
        }
        for (int v = low; v <= n - (k - 1 - pos); ++v) {
            current[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    expand(expand, 0, 1);
    return out;
}

}  // namespace combrank
