#include "combrank/subset.hpp"

#include <stdexcept>

namespace combrank {

Count count_subsets(int n) {
    if (n < 0) throw std::invalid_argument("count_subsets: n must be non-negative");
    return Count(1) << n;
}

std::vector<int> unrank_subset(const Serial& s, int n) {
    const Count total = count_subsets(n);
    if (s < 1 || s > total)
        throw std::out_of_range("unrank_subset: serial outside [1, " + total.str() + "]");

    const Count base = s - 1;
    std::vector<int> flags(n);
    for (int k = 0; k < n; ++k) {
        // the 2^k shift aligns the flag's cycle so it changes once per
        // 2^{k+1} serials, half a period out of phase with plain binary
        const Count v = (base + (Count(1) << k)) % (Count(1) << (k + 2)) >> (k + 1);
        flags[k] = v.convert_to<int>();
    }
    return flags;
}

Serial rank_subset(const std::vector<int>& flags) {
    const int n = static_cast<int>(flags.size());
    for (int f : flags)
        if (f != 0 && f != 1)
            throw std::invalid_argument("subset mask: components must be 0 or 1");

    Serial s = 1;
    bool direct = true;
    for (int i = n - 1; i >= 0; --i) {
        if ((flags[i] == 1) != direct) {  // (flag set) xor direct
            direct = true;
        } else {
            direct = false;
            s += Count(1) << i;
        }
    }
    return s;
}

}  // namespace combrank
