#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>

namespace l12 {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Nonnegative regularization weight. Implicitly convertible from double so
/// call sites can pass literals; rejects negative or non-finite values.
struct PenaltyWeight {
    PenaltyWeight(double lambda) : value{lambda} {
        if (!std::isfinite(lambda) || lambda < 0)
            throw std::invalid_argument("PenaltyWeight: lambda must be finite and >= 0");
    }
    double value;
};

inline void require_finite(const Vector& v, const char* where) {
    if (!v.allFinite())
        throw std::invalid_argument(std::string(where) + ": non-finite entries");
}

inline void require_finite(const Matrix& m, const char* where) {
    if (!m.allFinite())
        throw std::invalid_argument(std::string(where) + ": non-finite entries");
}

inline double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

/// Thin SVD factors: U diag(sigma) V^T with orthonormal columns and sigma
/// sorted nonincreasing, sigma >= 0. rank() may be zero (empty factors).
struct ThinSvd {
    Matrix U;      // m x k
    Vector sigma;  // k
    Matrix V;      // n x k

    Index rank() const { return sigma.size(); }

    Matrix materialize() const {
        if (rank() == 0) return Matrix::Zero(U.rows(), V.rows());
        return U * sigma.asDiagonal() * V.transpose();
    }

    /// Max deviation of U^T U and V^T V from identity; tests use this to
    /// enforce the <= 1e-8 orthonormality contract.
    double orthonormality_error() const {
        if (rank() == 0) return 0.0;
        const Index k = rank();
        double eu = (U.transpose() * U - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
        double ev = (V.transpose() * V - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
        return std::max(eu, ev);
    }
};

}  // namespace l12
