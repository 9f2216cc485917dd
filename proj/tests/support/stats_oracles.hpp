#pragma once

// Independent statistical oracles for the traffic tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle
{
    /// Least-squares slope of y over x.
    inline double slope(const std::vector<double> &x, const std::vector<double> &y)
    {
        const double n = static_cast<double>(x.size());
        const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
        const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
        double sxy = 0.0;
        double sxx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            sxy += (x[i] - mx) * (y[i] - my);
            sxx += (x[i] - mx) * (x[i] - mx);
        }
        return sxy / sxx;
    }

    inline double variance(const std::vector<double> &v)
    {
        const double n = static_cast<double>(v.size());
        const double m = std::accumulate(v.begin(), v.end(), 0.0) / n;
        double s = 0.0;
        for (double x : v)
        {
            s += (x - m) * (x - m);
        }
        return s / (n - 1.0);
    }

    /// Aggregated-variance Hurst estimate: Var(X^(m)) ~ m^(2H - 2) over block
    /// sizes m = 2^k, min_level <= k, keeping at least min_blocks blocks.
    inline double hurst_aggregated_variance(const std::vector<double> &series, int min_level,
                                            std::size_t min_blocks = 32)
    {
        std::vector<double> log_m;
        std::vector<double> log_var;
        for (std::size_t m = std::size_t{1} << min_level; series.size() / m >= min_blocks; m *= 2)
        {
            std::vector<double> means(series.size() / m);
            for (std::size_t b = 0; b < means.size(); ++b)
            {
                double s = 0.0;
                for (std::size_t i = 0; i < m; ++i)
                {
                    s += series[b * m + i];
                }
                means[b] = s / static_cast<double>(m);
            }
            log_m.push_back(std::log(static_cast<double>(m)));
            log_var.push_back(std::log(variance(means)));
        }
        return 1.0 + slope(log_m, log_var) / 2.0;
    }

    /// Kolmogorov-Smirnov distance of a sample from Exp(mean).
    inline double ks_exponential(std::vector<double> sample, double mean)
    {
        std::sort(sample.begin(), sample.end());
        const double n = static_cast<double>(sample.size());
        double d = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i)
        {
            const double f = 1.0 - std::exp(-sample[i] / mean);
            d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
        }
        return d;
    }

    /// Asymptotic KS critical value at the 1 % level.
    inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

    inline double coefficient_of_variation(const std::vector<double> &v)
    {
        const double m = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        return std::sqrt(variance(v)) / m;
    }
} // namespace oracle
