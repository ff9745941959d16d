#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace combrank {

// Arbitrary-precision integer carrying every count in the library.
// Factorials outgrow 64 bits already at 21!, so fixed-width types are out.
using Count = boost::multiprecision::cpp_int;

// 1-based position of an object in its family's enumeration order.
using Serial = Count;

// m!
Count factorial(int m);

// C(a, b); zero when b lies outside [0, a].
Count binomial(int a, int b);

// Stirling number of the second kind, 1 <= k <= n, computed from the
// alternating binomial sum with a single exact division by k! at the end.
Count stirling2(int n, int k);

// Bell number B_n (n >= 1), via the Bell triangle.
Count bell(int n);

}  // namespace combrank
