#pragma once
// Size-biased component sampling with replacement and its repeat-time
// statistics. Each draw picks a uniform vertex and takes its component,
// which selects component C with probability |C|/n. The stream stops at
// the first repeated component (t_1) or at max_len.
//
// no_repeat_prob_exact is the independent oracle for the repeat time: with
// p_i = sizes[i]/sum, P(t_1 > k) = k! * e_k(p), computed by a stable
// all-positive DP on q_j = j! * e_j over component prefixes (O(m*k)).

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rstre/components.hpp"
#include "rstre/errors.hpp"
#include "rstre/rng.hpp"

namespace rstre {

struct RepeatTrace {
    std::vector<std::uint32_t> component_ids;  // S_1, S_2, ... (stored 0-based)
    std::optional<std::uint64_t> t_1;          // 1-based first repeat index, >= 2
    double s_n = 0.0;
};

// s_n = (1/n) * sqrt(sum of squared component sizes).
inline double s_statistic(const ComponentDecomposition& d) {
    if (d.n == 0) throw std::invalid_argument("s_statistic: empty decomposition");
    std::uint64_t sum_sq = 0;
    for (std::uint64_t s : d.sizes) sum_sq += s * s;
    return std::sqrt(static_cast<double>(sum_sq)) / static_cast<double>(d.n);
}

inline RepeatTrace size_biased_stream(const ComponentDecomposition& d,
                                      std::uint64_t max_len, std::uint64_t seed) {
    if (max_len < 1) throw std::invalid_argument("size_biased_stream: max_len must be >= 1");
    Xoshiro256pp rng(seed);
    RepeatTrace trace;
    trace.s_n = s_statistic(d);
    std::vector<char> seen(d.component_count(), 0);
    for (std::uint64_t i = 1; i <= max_len; ++i) {
        const auto v = static_cast<Vertex>(rng.uniform_below(d.n));
        const std::uint32_t c = d.label[v];
        trace.component_ids.push_back(c);
        if (seen[c]) {
            trace.t_1 = i;
            break;
        }
        seen[c] = 1;
    }
    return trace;
}

// P(t_1 > k) for sampling with replacement with probabilities sizes[i]/sum.
// q_0 = 1 and appending a component of probability p updates
// q_j += j * p * q_{j-1}; after all components, q_k is the answer.
inline double no_repeat_prob_exact(const std::vector<std::uint64_t>& sizes, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("no_repeat_prob_exact: k must be >= 0");
    if (sizes.empty()) throw std::invalid_argument("no_repeat_prob_exact: sizes empty");
    const auto m = static_cast<std::int64_t>(sizes.size());
    if (k <= 1) return 1.0;
    if (k > m) return 0.0;

    // Neumaier-compensated total for the probability normalization
    double total = 0.0, comp = 0.0;
    for (std::uint64_t s : sizes) {
        const double x = static_cast<double>(s);
        const double t = total + x;
        comp += std::fabs(total) >= std::fabs(x) ? (total - t) + x : (x - t) + total;
        total = t;
    }
    total += comp;

    std::vector<double> q(static_cast<std::size_t>(k) + 1, 0.0);
    q[0] = 1.0;
    for (std::uint64_t s : sizes) {
        const double p = static_cast<double>(s) / total;
        for (std::size_t j = static_cast<std::size_t>(k); j >= 1; --j)
            q[j] += static_cast<double>(j) * p * q[j - 1];
    }
    return q[k];
}

// Same DP in exact arithmetic (any exact scalar, e.g. a rational type).
// Intended for <= 20 components; anchors the floating-point oracle.
template <class Rat>
Rat no_repeat_prob_exact_rational(const std::vector<std::uint64_t>& sizes, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("no_repeat_prob_exact_rational: k must be >= 0");
    if (sizes.empty()) throw std::invalid_argument("no_repeat_prob_exact_rational: sizes empty");
    const auto m = static_cast<std::int64_t>(sizes.size());
    if (m > 20) throw SizeLimitError("no_repeat_prob_exact_rational: more than 20 components");
    if (k <= 1) return Rat(1);
    if (k > m) return Rat(0);

    std::int64_t total = 0;
    for (std::uint64_t s : sizes) total += static_cast<std::int64_t>(s);

    std::vector<Rat> q(static_cast<std::size_t>(k) + 1, Rat(0));
    q[0] = Rat(1);
    for (std::uint64_t s : sizes) {
        const Rat p(static_cast<std::int64_t>(s), total);
        for (std::size_t j = static_cast<std::size_t>(k); j >= 1; --j)
            q[j] += Rat(static_cast<std::int64_t>(j)) * p * q[j - 1];
    }
    return q[k];
}

// Survival envelope exp(-r^2/2) for the scaled repeat time s_n * t_1.
inline double repeat_envelope(double r) {
    if (r < 0.0) throw std::invalid_argument("repeat_envelope: r must be >= 0");
    return std::exp(-0.5 * r * r);
}

}  // namespace rstre
