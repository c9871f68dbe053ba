#pragma once

#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fpplab {

struct MeanEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t count = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Sample mean with a two-sided 95% t-interval.
inline MeanEstimate mean_with_ci(const std::vector<double>& xs) {
    MeanEstimate m;
    m.count = xs.size();
    if (xs.empty()) return m;
    double s = 0.0;
    for (double x : xs) s += x;
    m.mean = s / static_cast<double>(xs.size());
    if (xs.size() < 2) {
        m.ci_low = m.ci_high = m.mean;
        return m;
    }
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    m.std_error = std::sqrt(var / static_cast<double>(xs.size()));
    const boost::math::students_t dist(static_cast<double>(xs.size() - 1));
    const double t = boost::math::quantile(dist, 0.975);
    m.ci_low = m.mean - t * m.std_error;
    m.ci_high = m.mean + t * m.std_error;
    return m;
}

struct ProportionEstimate {
    double p_hat = 0.0;
    std::size_t successes = 0;
    std::size_t trials = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Wilson score interval at 95%.
inline ProportionEstimate wilson_interval(std::size_t successes, std::size_t trials) {
    ProportionEstimate e;
    e.successes = successes;
    e.trials = trials;
    if (trials == 0) return e;
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    e.p_hat = p;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    e.ci_low = std::max(0.0, center - half);
    e.ci_high = std::min(1.0, center + half);
    return e;
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t count = 0;
};

inline LineFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("linear_fit needs >= 2 paired samples");
    LineFit f;
    f.count = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissa");
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

} // namespace fpplab
