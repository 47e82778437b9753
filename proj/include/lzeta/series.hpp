#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lzeta/errors.hpp"

namespace lzeta {

// Finite prefix of an arithmetic sequence, 1-based, with a claimed growth
// exponent theta: |c_n| = O(n^theta).
struct CoefficientSeries {
    std::vector<double> values; // values[0] holds c_1
    double growth_exponent = 0.0;

    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }

    double at(std::int64_t n) const {
        if (n < 1 || n > size())
            throw Error(errc::insufficient_coeffs, "CoefficientSeries: index out of range");
        return values[static_cast<std::size_t>(n - 1)];
    }

    // Least-squares slope of log|c_n| against log n over n in [N/2, N],
    // skipping zero entries.
    double fitted_slope() const {
        std::int64_t n1 = size() / 2;
        if (n1 < 1) n1 = 1;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::int64_t m = 0;
        for (std::int64_t n = n1; n <= size(); ++n) {
            double v = std::abs(at(n));
            if (v == 0.0) continue;
            double x = std::log(static_cast<double>(n));
            double y = std::log(v);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++m;
        }
        if (m < 2) return 0.0;
        double denom = m * sxx - sx * sx;
        if (denom == 0.0) return 0.0;
        return (m * sxy - sx * sy) / denom;
    }
};

} // namespace lzeta
