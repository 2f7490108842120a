#pragma once

#include "lmt/complex_matrix.hpp"
#include "lmt/linalg.hpp"

namespace lmt {

/// Parameters of the transform family: lambda in [0,1], the exponent
/// t in [0,1/2] for the generalized mean, and an iteration count.
struct TransformParams {
    double lambda = 0.5;
    double t = 0.5;
    int iterations = 1;
};

/// Every transform takes an optional singular-value truncation threshold
/// for its internal canonical polar decomposition (0 = the default
/// n * eps * sigmaMax cut).  The canonical factor, and with it the
/// Duggal transform, is discontinuous across rank decisions, so
/// pipelines that compare two independently computed transform chains
/// should pass a matched, wider threshold.

/// Duggal transform |t| u from the canonical polar parts.
ComplexMatrix duggal(const ComplexMatrix& t, double rankTol = 0.0);
ComplexMatrix duggal(const PolarParts& parts);

/// Aluthge transform |t|^(1/2) u |t|^(1/2).
ComplexMatrix aluthge(const ComplexMatrix& t, double rankTol = 0.0);
ComplexMatrix aluthge(const PolarParts& parts);

/// lambda-mean transform lambda t + (1 - lambda) |t| u.  The convex
/// combination takes the original t, so lambda = 1 returns t exactly
/// and lambda = 0 returns the Duggal transform exactly.
ComplexMatrix lambda_mean(const ComplexMatrix& t, double lambda, double rankTol = 0.0);
ComplexMatrix lambda_mean_from(const ComplexMatrix& t, const ComplexMatrix& duggalOfT,
                               double lambda);

/// Mean transform, lambda_mean at 1/2.
ComplexMatrix mean_transform(const ComplexMatrix& t, double rankTol = 0.0);

/// Generalized mean (|t|^s u |t|^(1-s) + |t|^(1-s) u |t|^s)/2 for
/// s in [0, 1/2].  |t|^0 is the range projection; on singular input the
/// s = 0 endpoint therefore differs from the plain mean transform.
ComplexMatrix generalized_mean(const ComplexMatrix& t, double s, double rankTol = 0.0);

/// n-fold lambda-mean iteration; every step re-derives fresh polar
/// parts because rank can drop between steps.  n = 0 returns t.
ComplexMatrix iterate_lambda_mean(const ComplexMatrix& t, double lambda, int n,
                                  double rankTol = 0.0);

/// Q_lambda = lambda^2 |t|^2 + (1-lambda)^2 |t^D|^2 (Hermitian PSD).
ComplexMatrix q_lambda(const ComplexMatrix& t, double lambda, double rankTol = 0.0);
ComplexMatrix q_lambda_from(const ComplexMatrix& t, const ComplexMatrix& duggalOfT,
                            double lambda);

}  // namespace lmt
