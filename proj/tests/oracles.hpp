#pragma once
// Brute-force reference implementations used only by tests. Each one takes
// the slow, literal route (exhaustive threshold search, per-depth set
// intersection, midrank counting) so it shares no code path with the
// library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

// Largest h in 0..n with at least h values >= h, checked exhaustively.
inline int h_exhaustive(const std::vector<int>& values) {
    int best = 0;
    for (int h = 0; h <= static_cast<int>(values.size()); ++h) {
        int at_least = 0;
        for (int v : values)
            if (v >= h) ++at_least;
        if (at_least >= h) best = h;
    }
    return best;
}

inline int g_exhaustive(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    int best = 0;
    for (int g = 0; g <= static_cast<int>(values.size()); ++g) {
        long long sum = 0;
        for (int i = 0; i < g; ++i) sum += values[i];
        if (sum >= static_cast<long long>(g) * g) best = g;
    }
    return best;
}

inline int h2_exhaustive(const std::vector<int>& values) {
    int best = 0;
    for (int h = 0; h <= static_cast<int>(values.size()); ++h) {
        int at_least = 0;
        for (int v : values)
            if (v >= h * h) ++at_least;
        if (at_least >= h) best = h;
    }
    return best;
}

inline int w_exhaustive(const std::vector<int>& values) {
    int best = 0;
    for (int w = 0; w <= static_cast<int>(values.size()); ++w) {
        int at_least = 0;
        for (int v : values)
            if (v >= 10 * w) ++at_least;
        if (at_least >= w) best = w;
    }
    return best;
}

inline std::vector<int> h_core(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    values.resize(h_exhaustive(values));
    return values;
}

inline double a_direct(const std::vector<int>& values) {
    std::vector<int> core = h_core(values);
    if (core.empty()) return 0.0;
    return std::accumulate(core.begin(), core.end(), 0.0) / core.size();
}

inline double m_direct(const std::vector<int>& values) {
    std::vector<int> core = h_core(values);
    if (core.empty()) return 0.0;
    std::size_t n = core.size();
    return n % 2 == 1 ? core[n / 2] : (core[n / 2 - 1] + core[n / 2]) / 2.0;
}

inline double r_direct(const std::vector<int>& values) {
    std::vector<int> core = h_core(values);
    return std::sqrt(std::accumulate(core.begin(), core.end(), 0.0));
}

// Extrapolated RBO by per-depth set intersections recomputed from scratch.
inline double rbo_direct(const std::vector<std::string>& a,
                         const std::vector<std::string>& b, double p) {
    std::size_t k = std::min(a.size(), b.size());
    double sum = 0.0;
    double last_agreement = 0.0;
    for (std::size_t d = 1; d <= k; ++d) {
        std::set<std::string> top_a(a.begin(), a.begin() + d);
        std::set<std::string> top_b(b.begin(), b.begin() + d);
        std::vector<std::string> shared;
        std::set_intersection(top_a.begin(), top_a.end(), top_b.begin(),
                              top_b.end(), std::back_inserter(shared));
        last_agreement = static_cast<double>(shared.size()) / d;
        sum += std::pow(p, static_cast<double>(d - 1)) * last_agreement;
    }
    return (1.0 - p) * sum + last_agreement * std::pow(p, static_cast<double>(k));
}

// Spearman via midrank counting and the plain Pearson formula.
inline double spearman_direct(const std::vector<double>& xs,
                              const std::vector<double>& ys) {
    auto midranks = [](const std::vector<double>& v) {
        std::vector<double> ranks(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            int smaller = 0, equal = 0;
            for (double other : v) {
                if (other < v[i]) ++smaller;
                if (other == v[i]) ++equal;
            }
            ranks[i] = smaller + (equal + 1) / 2.0;
        }
        return ranks;
    };
    std::vector<double> rx = midranks(xs), ry = midranks(ys);
    std::size_t n = rx.size();
    double sx = std::accumulate(rx.begin(), rx.end(), 0.0);
    double sy = std::accumulate(ry.begin(), ry.end(), 0.0);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += rx[i] * ry[i];
        sxx += rx[i] * rx[i];
        syy += ry[i] * ry[i];
    }
    double num = n * sxy - sx * sy;
    double den = std::sqrt(n * sxx - sx * sx) * std::sqrt(n * syy - sy * sy);
    return num / den;
}

// Tiny deterministic generator for property tests (same constants as
// splitmix64, independently written out).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    std::vector<int> counts(int max_size, int max_value) {
        std::vector<int> out(below(max_size + 1));
        for (int& v : out) v = below(max_value + 1);
        return out;
    }

  private:
    std::uint64_t state_;
};

}  // namespace oracles
