#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lmt/complex_matrix.hpp"

namespace lmt {

/// Certified enclosure [lo, hi] of a gauge value.  On success
/// hi - lo <= the requested tolerance; evaluations counts the
/// underlying eigenvalue (or integrand) evaluations spent.
struct GaugeBracket {
    double lo = 0.0;
    double hi = 0.0;
    long evaluations = 0;
    enum class Method { GridRefine, Quadrature, ClosedForm };
    Method method = Method::GridRefine;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

std::string method_name(GaugeBracket::Method m);

/// A numerical-range boundary sample: value = <t x, x> for the top
/// eigenvector x of Re(e^{i theta} t); support = lambda_max of that
/// Hermitian part, so Re(e^{i theta} value) = support.
struct RangePoint {
    double theta = 0.0;
    Complex value;
    double support = 0.0;
};

inline constexpr long kDefaultGaugeBudget = 4096;

/// lambda_max(Re(e^{i theta} t)).  Sweeping theta over a full circle
/// and taking the sup yields the numerical radius.
double support_function(const ComplexMatrix& t, double theta);

/// Certified numerical radius by branch-and-bound on support directions.
/// Adjacent support lines give a second-order vertex upper bound on the
/// max modulus of the (convex) numerical range, so flat ranges (disks)
/// still certify within a few thousand evaluations.
/// Throws BudgetExceeded if the cap is reached before hi - lo <= tol.
GaugeBracket numerical_radius(const ComplexMatrix& t, double tol,
                              long budget = kDefaultGaugeBudget);

/// m boundary points of the numerical range on a uniform theta grid.
std::vector<RangePoint> range_boundary(const ComplexMatrix& t, int m);

/// Support-function test of closure(W(a)) inside closure(W(b)) on a
/// theta grid: h_a(theta) <= h_b(theta) + tol everywhere.
bool range_inclusion(const ComplexMatrix& a, const ComplexMatrix& b, int grid,
                     double tol);

/// Certified integral of a convex bracket-valued integrand on [a, b]:
/// midpoint rule bounds below, trapezoid above, adaptive on the gap.
GaugeBracket convex_integral(const std::function<GaugeBracket(double)>& f, double a,
                             double b, double tol, int maxNodes = 1024);

/// Integral over s in [0,1] of the numerical radius of the lambda-mean
/// path s t + (1-s) t^D; the integrand is convex in s.
GaugeBracket radius_integral(const ComplexMatrix& t, double tol,
                             long budgetPerNode = kDefaultGaugeBudget);

/// sup over theta of ||Re(e^{i theta} t) Re(e^{i theta} t^D)||, certified
/// by Lipschitz branch-and-bound with constant 2 ||t|| ||t^D|| on [0, pi]
/// (the product is pi-periodic).
GaugeBracket cross_term_sup(const ComplexMatrix& t, double tol = 0.0,
                            long budget = kDefaultGaugeBudget);
GaugeBracket cross_term_sup_from(const ComplexMatrix& t, const ComplexMatrix& duggalOfT,
                                 double tol = 0.0, long budget = kDefaultGaugeBudget);

/// Closed-form numerical radius of the rank-one operator x (x) y:
/// (|<x, y>| + ||x|| ||y||)/2.
double rank_one_radius(const CVec& x, const CVec& y);

/// Norm-equality witness: value = lambda_max(Re((t^D)* t)), the maximum of
/// Re<t x, t^D x> over unit x; attained flags value = ||t||^2 within
/// eqTol * ||t||^2.  The flag matches ||M_lambda(t)|| = ||t|| for
/// lambda in (0, 1).
struct EqualityWitness {
    double value = 0.0;
    bool attained = false;
};

inline constexpr double kEqualityTol = 1e-7;

EqualityWitness equality_witness(const ComplexMatrix& t, double lambda,
                                 double eqTol = kEqualityTol);

}  // namespace lmt
