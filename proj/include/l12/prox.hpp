#pragma once

#include "l12/core.hpp"

#include <algorithm>
#include <cstddef>

namespace l12 {

/// Elementwise soft threshold: sign(z_i) * max(|z_i| - lambda, 0).
inline Vector prox_l1(const Vector& z, PenaltyWeight lambda) {
    require_finite(z, "prox_l1");
    const double lam = lambda.value;
    Vector out(z.size());
    for (Index i = 0; i < z.size(); ++i)
        out[i] = sign(z[i]) * std::max(std::abs(z[i]) - lam, 0.0);
    return out;
}

/// phi(x) = 1/2 ||x - z||^2 + lambda (||x||_1 - ||x||_2), the objective whose
/// global minimizer prox_l12 returns. Kept separate so oracles can score
/// candidate points without going through the closed form.
inline double phi_objective(const Vector& x, const Vector& z, PenaltyWeight lambda) {
    if (x.size() != z.size())
        throw std::invalid_argument("phi_objective: dimension mismatch");
    return 0.5 * (x - z).squaredNorm() + lambda.value * (x.lpNorm<1>() - x.norm());
}

/// Global minimizer of phi, computed in closed form.
///
/// With w = soft-threshold(z, lambda): if w != 0 the minimizer is
/// (1 + lambda/||w||_2) w; if w == 0 it keeps the single largest-magnitude
/// coordinate of z (lowest index on ties) and zeros the rest. Output is zero
/// exactly when z is zero.
inline Vector prox_l12(const Vector& z, PenaltyWeight lambda) {
    require_finite(z, "prox_l12");
    if (z.size() == 0) throw std::invalid_argument("prox_l12: empty input");
    const double lam = lambda.value;

    Vector w(z.size());
    for (Index i = 0; i < z.size(); ++i)
        w[i] = sign(z[i]) * std::max(std::abs(z[i]) - lam, 0.0);

    const double wnorm = w.norm();
    if (wnorm > 0) return (1.0 + lam / wnorm) * w;

    Vector x = Vector::Zero(z.size());
    Index j = 0;
    double best = std::abs(z[0]);
    for (Index i = 1; i < z.size(); ++i) {
        if (std::abs(z[i]) > best) {  // strict: ties keep the lowest index
            best = std::abs(z[i]);
            j = i;
        }
    }
    x[j] = z[j];
    return x;
}

/// Iterative baseline for prox_l12: fixed-point iteration
/// x_{t+1} = prox_l1(z + lambda s_t) with s_t = x_t/||x_t||_2 (s_t = 0 at
/// x_t = 0), started from x_1 = 0. Stops when
/// ||x_{t+1} - x_t|| <= tol * max(1, ||x_t||) or the budget runs out.
/// Exists for timing comparisons and as a cross-check of the closed form;
/// note it stalls at 0 whenever the soft threshold kills every coordinate,
/// since 0 is a critical point of phi in that regime.
inline Vector prox_l12_numerical(const Vector& z, PenaltyWeight lambda,
                                 std::size_t max_iters = 200, double tol = 1e-10) {
    require_finite(z, "prox_l12_numerical");
    if (max_iters < 1) throw std::invalid_argument("prox_l12_numerical: max_iters must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("prox_l12_numerical: tol must be > 0");
    const double lam = lambda.value;

    Vector x = Vector::Zero(z.size());
    for (std::size_t t = 0; t < max_iters; ++t) {
        const double xnorm = x.norm();
        Vector arg = xnorm > 0 ? Vector(z + (lam / xnorm) * x) : z;
        Vector xn = prox_l1(arg, lambda);
        const bool done = (xn - x).norm() <= tol * std::max(1.0, xnorm);
        x.swap(xn);
        if (done) break;
    }
    return x;
}

/// Minimizer of 1/2 ||X - Z||_F^2 + lambda (||X||_* - ||X||_F), expressed on
/// the singular values of Z: the input is a precomputed thin SVD (callers
/// pick dense or structure-exploiting factorization), the output reuses its
/// singular vectors. Zero-valued singular directions are dropped.
inline ThinSvd prox_nuc_minus_frob(const ThinSvd& svd_z, PenaltyWeight lambda) {
    const Vector& sig = svd_z.sigma;
    require_finite(sig, "prox_nuc_minus_frob");
    for (Index i = 0; i + 1 < sig.size(); ++i)
        if (sig[i + 1] > sig[i])
            throw std::invalid_argument("prox_nuc_minus_frob: singular values not sorted nonincreasing");
    if (sig.size() > 0 && sig[sig.size() - 1] < 0)
        throw std::invalid_argument("prox_nuc_minus_frob: negative singular value");

    const Index k = sig.size();
    if (k == 0) return ThinSvd{Matrix(svd_z.U.rows(), 0), Vector(0), Matrix(svd_z.V.rows(), 0)};

    const double lam = lambda.value;
    Vector w = (sig.array() - lam).max(0.0).matrix();
    const double wnorm = w.norm();

    if (wnorm > 0) {
        Vector shrunk = (1.0 + lam / wnorm) * w;
        Index r = 0;
        while (r < k && shrunk[r] > 0) ++r;  // survivors form a prefix: sigma is sorted
        return ThinSvd{svd_z.U.leftCols(r), shrunk.head(r), svd_z.V.leftCols(r)};
    }
    // All singular values at or below lambda: keep the leading pair unshrunk
    // (the one-sparse solution on the singular-value vector).
    if (sig[0] == 0)
        return ThinSvd{Matrix(svd_z.U.rows(), 0), Vector(0), Matrix(svd_z.V.rows(), 0)};
    return ThinSvd{svd_z.U.leftCols(1), sig.head(1), svd_z.V.leftCols(1)};
}

/// Row-wise prox for d x 2 gradient pairs: each output row is
/// prox_l12 of the corresponding input row. Rows are independent.
inline Matrix prox_l1_minus_l21_rows(const Matrix& Z, PenaltyWeight lambda) {
    if (Z.cols() != 2)
        throw std::invalid_argument("prox_l1_minus_l21_rows: expected exactly 2 columns");
    require_finite(Z, "prox_l1_minus_l21_rows");
    Matrix out(Z.rows(), 2);
    Vector row(2);
    for (Index i = 0; i < Z.rows(); ++i) {
        row[0] = Z(i, 0);
        row[1] = Z(i, 1);
        out.row(i) = prox_l12(row, lambda).transpose();
    }
    return out;
}

}  // namespace l12
