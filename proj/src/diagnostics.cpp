#include "hsens/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hsens {

namespace {

double mean_of(std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double autocov(std::span<const double> x, double mean, std::size_t lag) {
    const std::size_t n = x.size();
    double s = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) s += (x[i] - mean) * (x[i + lag] - mean);
    return s / static_cast<double>(n);
}

// Exact test: a rounded mean leaves a constant series with a tiny nonzero variance.
bool is_constant(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
}

double sample_variance(std::span<const double> x) {
    if (x.size() < 2) return 0.0;
    const double m = mean_of(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

}  // namespace

double integrated_autocorr_time(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 4 || is_constant(x)) return 1.0;
    const double m = mean_of(x);
    const double c0 = autocov(x, m, 0);
    if (!(c0 > 0.0)) return 1.0;

    double tau = -1.0;
    double prev_pair = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        double pair = (autocov(x, m, k) + autocov(x, m, k + 1)) / c0;
        if (pair <= 0.0) break;
        pair = std::min(pair, prev_pair);
        tau += 2.0 * pair;
        prev_pair = pair;
    }
    return std::max(tau, 1.0 / static_cast<double>(n));
}

double effective_sample_size(std::span<const double> x) {
    if (x.empty()) return 0.0;
    return static_cast<double>(x.size()) / integrated_autocorr_time(x);
}

double geweke_z(std::span<const double> x, double first, double last) {
    if (!(first > 0.0) || !(last > 0.0) || first + last > 1.0) {
        throw std::invalid_argument("geweke: invalid segment fractions");
    }
    const std::size_t n = x.size();
    const auto na = static_cast<std::size_t>(std::floor(first * static_cast<double>(n)));
    const auto nb = static_cast<std::size_t>(std::floor(last * static_cast<double>(n)));
    if (na < 2 || nb < 2) return 0.0;
    const auto a = x.first(na);
    const auto b = x.last(nb);
    if (is_constant(a) && is_constant(b)) {
        if (a.front() == b.front()) return 0.0;
        return std::copysign(std::numeric_limits<double>::infinity(), a.front() - b.front());
    }
    const double mean_diff = mean_of(a) - mean_of(b);
    const double var_a = sample_variance(a) * integrated_autocorr_time(a) / static_cast<double>(na);
    const double var_b = sample_variance(b) * integrated_autocorr_time(b) / static_cast<double>(nb);
    const double denom = std::sqrt(var_a + var_b);
    if (denom == 0.0) {
        return mean_diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), mean_diff);
    }
    return mean_diff / denom;
}

double split_rhat(const std::vector<std::span<const double>>& chains) {
    if (chains.empty()) throw std::invalid_argument("split_rhat: no chains");
    std::vector<std::span<const double>> halves;
    for (const auto& c : chains) {
        const std::size_t h = c.size() / 2;
        if (h < 2) throw std::invalid_argument("split_rhat: chain too short");
        halves.push_back(c.first(h));
        halves.push_back(c.subspan(c.size() - h, h));
    }
    if (std::all_of(chains.begin(), chains.end(), [&](auto c) {
            return is_constant(c) && c.front() == chains.front().front();
        })) {
        return 1.0;
    }
    std::size_t n = halves.front().size();
    for (const auto& h : halves) n = std::min(n, h.size());

    const double m = static_cast<double>(halves.size());
    std::vector<double> means;
    double w = 0.0;
    for (const auto& h : halves) {
        const auto s = h.first(n);
        means.push_back(mean_of(s));
        w += sample_variance(s);
    }
    w /= m;
    const double grand = std::accumulate(means.begin(), means.end(), 0.0) / m;
    double b = 0.0;
    for (double mu : means) b += (mu - grand) * (mu - grand);
    b *= static_cast<double>(n) / (m - 1.0);
    if (w == 0.0) return b == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    const double nd = static_cast<double>(n);
    const double var_plus = (nd - 1.0) / nd * w + b / nd;
    return std::sqrt(var_plus / w);
}

}  // namespace hsens
