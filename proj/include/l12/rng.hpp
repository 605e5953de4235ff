#pragma once

#include "l12/core.hpp"

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace l12 {

/// Deterministic random source used everywhere randomness is needed.
///
/// The raw stream is std::mt19937_64 (its output sequence is pinned by the
/// standard). Uniforms map the top 53 bits into (0, 1]; normals use
/// Box-Muller on those uniforms rather than std::normal_distribution, whose
/// output is implementation-defined. The order of draws is part of each
/// generator's reproducibility contract — do not reorder calls.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on (0, 1].
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; generates pairs, caches the spare.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Uniform integer in [0, n). Modulo reduction: bias is negligible for
    /// the index ranges used here and keeps the mapping trivially portable.
    Index below(Index n) {
        return static_cast<Index>(engine_() % static_cast<std::uint64_t>(n));
    }

    Vector normal_vector(Index d) {
        Vector v(d);
        for (Index i = 0; i < d; ++i) v[i] = normal();
        return v;
    }

    /// Column-major fill, matching Eigen's storage order.
    Matrix normal_matrix(Index rows, Index cols) {
        Matrix m(rows, cols);
        for (Index c = 0; c < cols; ++c)
            for (Index r = 0; r < rows; ++r) m(r, c) = normal();
        return m;
    }

    /// First k entries of a Fisher-Yates shuffle of 0..n-1: a uniform sample
    /// of k distinct indices.
    std::vector<Index> index_prefix(Index n, Index k) {
        std::vector<Index> idx(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (Index i = 0; i < k && i < n - 1; ++i) {
            const Index j = i + below(n - i);
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        }
        idx.resize(static_cast<std::size_t>(std::min(k, n)));
        return idx;
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace l12
