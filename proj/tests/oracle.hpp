#pragma once

// Small independent reference computations, deliberately naive.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace oracle {

inline int valuation(long n, long p) {
    int v = 0;
    n = std::labs(n);
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Chordal distance at infinity for [x1:y1], [x2:y2].
inline double chordal_inf(double x1, double y1, double x2, double y2) {
    return std::abs(x1 * y2 - x2 * y1) / (std::hypot(x1, y1) * std::hypot(x2, y2));
}

inline std::pair<long, long> reduce(long a, long b) {
    const long g = std::gcd(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

inline double height(long a, long b) {
    const auto [x, y] = reduce(a, b);
    return std::log(static_cast<double>(std::max(std::labs(x), std::labs(y))));
}

}  // namespace oracle
