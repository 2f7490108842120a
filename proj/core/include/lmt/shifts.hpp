#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmt/complex_matrix.hpp"

namespace lmt {

/// Shift convention.  Lower: W e_n = alpha_n e_{n+1} (weights on the
/// subdiagonal, the in-repo default).  Upper: weights on the
/// superdiagonal, the transpose picture used by the complex-symmetry
/// criteria.  The two are bridged by transposition and tested, not
/// silently identified.
enum class ShiftConvention { Lower, Upper };

/// Finite window of positive shift weights alpha_0 .. alpha_{m-2}.
struct WeightSequence {
    std::vector<double> weights;
    ShiftConvention convention = ShiftConvention::Lower;
};

/// Generator rule for infinite weight sequences (inf/sup experiments).
///   harmonic:   alpha_n = 1/(n+1)            decreasing, inf 0
///   geometric:  alpha_n = q^n                decreasing for q < 1, inf 0
///   saturating: alpha_n = 1 - q^(n+1)        increasing, sup 1
///   constant:   alpha_n = c
///   custom:     explicit list
struct WeightRule {
    enum class Kind { Harmonic, Geometric, Saturating, Constant, Custom };
    Kind kind = Kind::Constant;
    double param = 1.0;  // q or c
    std::vector<double> list;

    double at(std::size_t n) const;
    bool monotone_decreasing() const;
    /// Limit of the iterated-transform weights: inf for decreasing
    /// rules, sup for increasing ones.
    double limit_value() const;

    static WeightRule harmonic();
    static WeightRule geometric(double q);
    static WeightRule saturating(double q);
    static WeightRule constant(double c);
    static WeightRule custom(std::vector<double> w);
    static WeightRule from_name(const std::string& name, double param);
};

/// Rank-one data pair for x (x) y experiments.
struct RankOnePair {
    CVec x;
    CVec y;
};

/// m x m truncated weighted-shift matrix in the declared convention.
/// Needs at least m-1 weights; the matrix is nilpotent.
ComplexMatrix build_shift(const WeightSequence& ws, std::size_t m);
ComplexMatrix build_shift(const WeightRule& rule, std::size_t m,
                          ShiftConvention convention = ShiftConvention::Lower);

/// Weight sequence of the lambda-mean of the shift.  Lower convention:
/// out_n = lambda alpha_n + (1-lambda) alpha_{n+1}; truncated mode sets
/// alpha_{m-1} := 0 at the boundary so the result matches the
/// matrix-level transform of the truncated shift exactly.  Upper
/// convention mixes n with n-1 and the boundary zero enters at index 0.
WeightSequence lambda_mean_weights(const WeightSequence& ws, double lambda, bool truncated);

/// Pointwise lambda-mean weight of an infinite rule (lower convention).
double lambda_mean_weight_at(const WeightRule& rule, double lambda, std::size_t n);

/// Binomial closed form for the weight at index n after mIter
/// lambda-mean iterations:
///   sum_i C(mIter, i) lambda^(mIter-i) (1-lambda)^i alpha_{n+i}.
double iterated_weights(const WeightRule& rule, double lambda, int mIter, std::size_t n);
/// Finite-list variant; throws IndexOutOfWindow when the list is too short.
double iterated_weights(const std::vector<double>& weights, double lambda, int mIter,
                        std::size_t n);

/// Convergence experiment for monotone rules: per iteration count, the
/// max deviation of the iterated weights from the limit value over the
/// index window.
struct ConvergenceReport {
    double limit = 0.0;
    std::vector<int> iteration;
    std::vector<double> windowError;
};

ConvergenceReport convergence_experiment(const WeightRule& rule, double lambda, int mMax,
                                         std::size_t window);

/// Closed form of the n-fold lambda-mean iterate of x (x) y:
///   (lambda^n x + (1 - lambda^n) <x, y>/||y||^2 y) (x) y.
RankOnePair rank_one_iterate(const RankOnePair& p, double lambda, int n);

/// Numerical radius of that iterate in closed form:
///   (|<x,y>| + sqrt(lambda^(2n) ||x||^2 ||y||^2 + (1-lambda^(2n)) |<x,y>|^2))/2.
double rank_one_iterated_radius(const RankOnePair& p, double lambda, int n);

/// Scaled spectral-radius inequality
///   2 sqrt(lambda - lambda^2) r(t) <= r(M_lambda(t)) + tol.
bool scaled_spectrum_check(const ComplexMatrix& t, double lambda, double tol);

}  // namespace lmt
