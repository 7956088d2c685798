#include "hypflux/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hypflux {

namespace {

struct Attempt {
    double value = 0.0;
    double error = 0.0;
    bool ok = false;
};

// Neville polynomial extrapolation to x = 0.
Attempt neville_at_zero(const std::vector<double>& x,
                        const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> p = y;
    double last_correction = 0.0;
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i) {
            const double xi = x[i];
            const double xim = x[i + m];
            p[i] = (xi * p[i + 1] - xim * p[i]) / (xi - xim);
        }
        last_correction = std::abs(p[0] - p[1]);
    }
    Attempt a;
    a.value = p[0];
    a.error = last_correction;
    a.ok = std::isfinite(a.value);
    return a;
}

// Bulirsch-Stoer diagonal rational extrapolation to x = 0.  Returns
// ok = false when the recurrence degenerates (pole through the origin or
// exactly polynomial data), in which case the caller falls back to the
// polynomial table.
Attempt rational_at_zero(const std::vector<double>& x,
                         const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> c = y;
    std::vector<double> d = y;
    const double tiny = 1e-300;

    std::size_t ns = n - 1; // nearest point to 0 after descending sort
    double value = y[ns];
    double last_correction = 0.0;
    --ns;

    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i) {
            const double w = c[i + 1] - d[i];
            const double h = x[i + m];
            const double t = x[i] * d[i] / h;
            double dd = t - c[i + 1];
            if (dd == 0.0) return {};
            dd = w / dd;
            d[i] = c[i + 1] * dd;
            c[i] = t * dd;
            if (std::abs(d[i]) > 1.0 / tiny || std::abs(c[i]) > 1.0 / tiny)
                return {};
        }
        double dy;
        if (2 * (ns + 1) < n - m) {
            dy = c[ns + 1];
        } else {
            dy = d[ns];
            if (ns > 0) --ns;
        }
        value += dy;
        last_correction = std::abs(dy);
    }
    Attempt a;
    a.value = value;
    a.error = last_correction;
    a.ok = std::isfinite(value);
    return a;
}

} // namespace

ExtrapolationResult
regulator_extrapolate(std::span<const std::pair<double, double>> samples) {
    if (samples.size() < 3)
        throw DomainError("regulator_extrapolate requires >= 3 points");

    std::vector<std::pair<double, double>> pts(samples.begin(), samples.end());
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<double> x, x2, y;
    x.reserve(pts.size());
    x2.reserve(pts.size());
    y.reserve(pts.size());
    for (const auto& [eps, v] : pts) {
        if (!(eps > 0.0))
            throw DomainError("regulator_extrapolate: eps values must be > 0");
        if (!x.empty() && eps == x.back())
            throw DomainError("regulator_extrapolate: duplicate eps value");
        x.push_back(eps);
        x2.push_back(eps * eps);
        y.push_back(v);
    }

    // Candidate tables in eps and eps^2, rational and polynomial; the one
    // whose final correction is smallest wins.  Regulated values that are
    // even in eps (the vacuum closed forms) are caught exactly by the
    // eps^2 tables; generic ladders fall back to the eps ones.
    const Attempt candidates[] = {
        rational_at_zero(x, y), neville_at_zero(x, y),
        rational_at_zero(x2, y), neville_at_zero(x2, y)};

    const Attempt* best = nullptr;
    for (const Attempt& a : candidates) {
        if (!a.ok) continue;
        if (!best || a.error < best->error) best = &a;
    }
    if (!best)
        throw ConvergenceError("regulator_extrapolate: extrapolation failed");
    return {best->value, best->error};
}

} // namespace hypflux
