#pragma once

#include <cstddef>
#include <vector>

#include "lmt/complex_matrix.hpp"

namespace lmt {

/// Tolerance-parameterized operator-class flags with the residuals that
/// back them.  Residuals are scaled by powers of ||t|| (floor 1e-14),
/// and the chain normal => quasinormal => hyponormal is enforced on the
/// flags so boundary rounding cannot break monotonicity.
struct ClassReport {
    bool normal = false;
    bool quasinormal = false;
    bool hyponormal = false;
    bool partialIsometry = false;
    bool isometry = false;
    bool unitary = false;

    double normalResidual = 0.0;          // ||t t* - t* t|| / s^2
    double quasinormalResidual = 0.0;     // ||t (t* t) - (t* t) t|| / s^3
    double hyponormalResidual = 0.0;      // max(0, -lambda_min(t* t - t t*)) / s^2
    double partialIsometryResidual = 0.0; // ||t t* t - t|| / s
    double isometryResidual = 0.0;        // ||t* t - I||
    double unitaryResidual = 0.0;         // max(||t* t - I||, ||t t* - I||)

    double tol = 0.0;
};

inline constexpr double kDefaultClassifyTol = 1e-9;

ClassReport classify(const ComplexMatrix& t, double tol = kDefaultClassifyTol);

bool is_quasinormal(const ComplexMatrix& t, double tol = kDefaultClassifyTol);

/// A weighted shift is hyponormal exactly when its weights are
/// nondecreasing; tested over the supplied window.
bool shift_is_hyponormal(const std::vector<double>& weights, double tol = 1e-12);

/// Complex-symmetry criterion for a truncated shift on C^m built from
/// m-1 nonzero weights: the weight moduli must form a palindrome.
bool shift_cs_criterion(const std::vector<Complex>& weights, double tol = 1e-12);
bool shift_cs_criterion(const std::vector<double>& weights, double tol = 1e-12);

/// Complex symmetry of the lambda-mean of the truncated shift with the
/// given weights, evaluated directly on the weight recurrences.  Agrees
/// with shift_cs_criterion applied to the transformed weight sequence.
bool lambda_mean_cs_criterion(const std::vector<Complex>& weights, double lambda,
                              double tol = 1e-12);
bool lambda_mean_cs_criterion(const std::vector<double>& weights, double lambda,
                              double tol = 1e-12);

}  // namespace lmt
