#pragma once

#include <vector>

#include "lmt/complex_matrix.hpp"

namespace lmt {

/// Eigendecomposition of a Hermitian matrix.  values ascending,
/// vectors unitary with eigenvectors as columns: A V = V diag(values).
struct HermitianEig {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// t = left diag(singulars) right*, singulars descending >= 0,
/// left and right unitary.
struct SvdResult {
    ComplexMatrix left;
    std::vector<double> singulars;
    ComplexMatrix right;
};

/// Canonical polar decomposition t = u p with p = |t| positive
/// semidefinite and u the partial isometry with null(u) = null(t).
/// rankTol is the singular-value truncation threshold that was used.
struct PolarParts {
    ComplexMatrix u;
    ComplexMatrix p;
    double rankTol = 0.0;
};

/// Eigenvalues of a general square matrix plus a residual diagnostic
/// (trace defect relative to the input scale).
struct SpectrumResult {
    CVec eigenvalues;
    double residual = 0.0;
};

/// Closed interval, used for certified scalar enclosures.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Numerical-rank threshold: n * eps * sigmaMax (binary64 eps).
double default_rank_tol(std::size_t n, double sigmaMax);

/// Cyclic Jacobi eigensolver for Hermitian input.
/// pre: ||a - a*|| <= tol * ||a||; throws NotHermitian otherwise.
/// post: ||A V - V diag(values)|| <= 10 n eps ||a||; throws NoConvergence
/// if the sweep cap is reached.
HermitianEig hermitian_eig(const ComplexMatrix& a, double tol = 1e-10);

/// Largest/smallest eigenvalue of a Hermitian matrix, values-only fast path.
double hermitian_lambda_max(const ComplexMatrix& a);
double hermitian_lambda_min(const ComplexMatrix& a);

/// Top eigenpair of a Hermitian matrix (full Jacobi, returns the max column).
std::pair<double, CVec> hermitian_top_eigenpair(const ComplexMatrix& a);

/// SVD of a square complex matrix via the eigendecomposition of t*t,
/// with singular values refreshed as ||t v_i|| and left vectors built
/// column-wise against a rank threshold.
SvdResult svd(const ComplexMatrix& t);

/// Canonical polar decomposition.  rankTol = 0 selects the default
/// n * eps * sigmaMax threshold.
PolarParts polar_decompose(const ComplexMatrix& t, double rankTol = 0.0);

/// p^t for positive semidefinite p and t in [0, 1].  p^0 is the
/// orthogonal projection onto range(p), not the identity, so that
/// u p^0 keeps partial-isometry semantics on singular input.
ComplexMatrix fractional_power(const ComplexMatrix& p, double t, double tol = 1e-10);

/// Positive square root shortcut, fractional_power(p, 1/2).
ComplexMatrix psd_sqrt(const ComplexMatrix& p);

/// Largest singular value.
double operator_norm(const ComplexMatrix& t);

/// Eigenvalues via Householder Hessenberg reduction plus Wilkinson-shift
/// QR iteration.  Throws NoConvergence (with the Gelfand fallback bracket
/// in the message) if the iteration cap is reached.
SpectrumResult eigenvalues(const ComplexMatrix& t);

/// max |eigenvalue|.
double spectral_radius(const ComplexMatrix& t);

/// Certified enclosure of the spectral radius from norm/trace power
/// sequences: max_k (|tr t^k|/n)^(1/k) <= r(t) <= min_k ||t^k||^(1/k).
/// Used as the cross-check and as the QR fallback.
Interval gelfand_bracket(const ComplexMatrix& t, int kMax = 32);

/// Spectral radius that never throws: QR value when it converges,
/// otherwise the Gelfand enclosure.
Interval spectral_radius_bracket(const ComplexMatrix& t);

}  // namespace lmt
