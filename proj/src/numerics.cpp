#include "combrank/numerics.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace combrank {

Count factorial(int m) {
    if (m < 0) throw std::invalid_argument("factorial: m must be non-negative");
    Count r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

Count binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Count r = 1;
    for (int i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;  // exact: i+1 consecutive factors are divisible by (i+1)!
    }
    return r;
}

Count stirling2(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("stirling2: need 1 <= k <= n");
    Count sum = 0;
    for (int i = 0; i < k; ++i) {
        Count term = binomial(k, i) *
                     boost::multiprecision::pow(Count(k - i), static_cast<unsigned>(n));
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    Count q, r;
    boost::multiprecision::divide_qr(sum, factorial(k), q, r);
    if (r != 0) throw std::logic_error("stirling2: alternating sum not divisible by k!");
    return q;
}

Count bell(int n) {
    if (n < 1) throw std::invalid_argument("bell: n must be positive");
    std::vector<Count> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<Count> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const Count& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.back();
}

}  // namespace combrank
