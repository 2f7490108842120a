#include <doctest.h>

#include <cmath>

#include "lmt/errors.hpp"
#include "lmt/gauges.hpp"
#include "lmt/generate.hpp"
#include "lmt/linalg.hpp"
#include "lmt/transforms.hpp"
#include "test_util.hpp"

using namespace lmt;
using lmt::test::mat;

namespace {

// Brute-force lower-bound oracle: max |<t x, x>| over random unit vectors.
double sampled_radius(const ComplexMatrix& t, long samples, std::uint64_t seed) {
    Rng rng(seed);
    double best = 0.0;
    const std::size_t n = t.dim();
    for (long k = 0; k < samples; ++k) {
        CVec x = rng.cgaussian_vec(n);
        const double nx = vec_norm(x);
        for (Complex& z : x) z /= nx;
        best = std::max(best, std::abs(inner(t.apply(x), x)));
    }
    return best;
}

}  // namespace

TEST_CASE("support function basics") {
    CHECK(support_function(mat({{1, 0}, {0, -1}}), 0.0) == doctest::Approx(1.0));
    for (double theta : {0.0, 0.7, 2.4})
        CHECK(support_function(ComplexMatrix::identity(3), theta) ==
              doctest::Approx(std::cos(theta)));
}

TEST_CASE("numerical radius of the nilpotent block is one half") {
    const ComplexMatrix jordan = mat({{0, 1}, {0, 0}});
    const GaugeBracket g = numerical_radius(jordan, 1e-6);
    CHECK(g.width() <= 1e-6);
    const double oracle = sampled_radius(jordan, 1000000, 5);
    CHECK(oracle <= g.hi + 1e-9);       // certified upper bound
    CHECK(g.lo <= 0.5 + 1e-9);
    CHECK(g.mid() == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(oracle == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("numerical radius matches the closed forms of the workhorse") {
    const ComplexMatrix t = mat({{0, 1}, {0, 1}});
    const GaugeBracket wt = numerical_radius(t, 1e-8);
    CHECK(wt.mid() == doctest::Approx((1.0 + std::sqrt(2.0)) / 2.0).epsilon(1e-7));
    const GaugeBracket wm = numerical_radius(mean_transform(t), 1e-8);
    CHECK(wm.mid() == doctest::Approx((2.0 + std::sqrt(5.0)) / 4.0).epsilon(1e-7));
}

TEST_CASE("numerical radius respects the evaluation budget") {
    const ComplexMatrix jordan = mat({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(numerical_radius(jordan, 1e-13, 64), BudgetExceeded);
}

TEST_CASE("range boundary has consistent support values") {
    const ComplexMatrix t = lmt::test::random_ginibre(4, 6);
    for (const RangePoint& p : range_boundary(t, 24)) {
        const Complex rotated = std::polar(1.0, p.theta) * p.value;
        CHECK(rotated.real() == doctest::Approx(p.support).epsilon(1e-9));
    }
}

TEST_CASE("range boundary of normal and scalar operators") {
    for (const RangePoint& p : range_boundary(mat({{0, 0}, {0, 1}}), 16)) {
        CHECK(p.value.real() >= -1e-9);
        CHECK(p.value.real() <= 1.0 + 1e-9);
        CHECK(std::abs(p.value.imag()) <= 1e-9);
    }
    for (const RangePoint& p : range_boundary(mat({{0, 1}, {0, 0}}), 16))
        CHECK(std::abs(p.value) == doctest::Approx(0.5).epsilon(1e-9));
    ComplexMatrix zi = ComplexMatrix::identity(3);
    zi *= Complex(0.3, -0.7);
    for (const RangePoint& p : range_boundary(zi, 8)) {
        CHECK(p.value.real() == doctest::Approx(0.3));
        CHECK(p.value.imag() == doctest::Approx(-0.7));
    }
}

TEST_CASE("range inclusion") {
    const ComplexMatrix t = lmt::test::random_ginibre(4, 7);
    const double tol = 1e-9 * operator_norm(t);
    for (double lam : {0.0, 0.3, 0.8})
        CHECK(range_inclusion(lambda_mean(t, lam), t, 64, tol));
    CHECK(range_inclusion(duggal(t), t, 64, tol));
    CHECK(!range_inclusion(2.0 * ComplexMatrix::identity(3), ComplexMatrix::identity(3), 16,
                           1e-9));
}

TEST_CASE("convex integral certifies a quadratic") {
    auto f = [](double x) {
        GaugeBracket g;
        g.lo = g.hi = x * x;
        return g;
    };
    const GaugeBracket integral = convex_integral(f, 0.0, 1.0, 1e-6);
    CHECK(integral.width() <= 1e-6);
    CHECK(integral.mid() == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
}

TEST_CASE("radius integral of the workhorse matches the analytic value") {
    // integrand (1 + sqrt(1 + t^2))/2 integrates to 1/2 + sqrt(2)/4 + asinh(1)/4
    const double analytic = 0.5 + std::sqrt(2.0) / 4.0 + std::log(1.0 + std::sqrt(2.0)) / 4.0;
    const GaugeBracket g = radius_integral(mat({{0, 1}, {0, 1}}), 1e-4);
    CHECK(g.width() <= 1e-4);
    CHECK(g.lo <= analytic + 1e-9);
    CHECK(analytic <= g.hi + 1e-9);
    CHECK(g.mid() == doctest::Approx(1.0739).epsilon(1e-3));
}

TEST_CASE("radius integral of a quasinormal operator is its radius") {
    OperatorSpec spec;
    spec.kind = OperatorKind::Quasinormal;
    spec.dim = 4;
    spec.seed = 8;
    const ComplexMatrix t = generate(spec);
    const GaugeBracket w = numerical_radius(t, 1e-8);
    const GaugeBracket integral = radius_integral(t, 1e-5);
    CHECK(std::abs(integral.mid() - w.mid()) <= 1e-4 * operator_norm(t));
}

TEST_CASE("radius integral sandwich on a small random operator") {
    const ComplexMatrix t = lmt::test::random_ginibre(3, 9);
    const ComplexMatrix td = duggal(t);
    const GaugeBracket integral = radius_integral(t, 1e-5);
    const GaugeBracket wMean = numerical_radius(mean_transform(t), 1e-7);
    const GaugeBracket wT = numerical_radius(t, 1e-7);
    const GaugeBracket wTD = numerical_radius(td, 1e-7);
    CHECK(wMean.lo <= integral.hi + 1e-9);
    CHECK(integral.lo <= 0.25 * (wT.hi + wTD.hi + 2.0 * wMean.hi) + 1e-9);
    CHECK(integral.lo <= wT.hi + 1e-9);
}

TEST_CASE("cross term sup on the worked example and degenerate cases") {
    const ComplexMatrix t = mat({{0, 1}, {0, 1}});
    const GaugeBracket g = cross_term_sup(t, 1e-5, 1 << 17);
    CHECK(g.mid() == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-4));

    CHECK(cross_term_sup(ComplexMatrix(3)).hi == 0.0);

    // normal sign matrix: t^D = t and the dense sweep oracle gives 1
    const ComplexMatrix sign = mat({{1, 0}, {0, -1}});
    double oracle = 0.0;
    for (int k = 0; k < 20000; ++k) {
        const double theta = 3.14159265358979323846 * k / 20000.0;
        oracle = std::max(oracle,
                          operator_norm(rotated_hermitian_part(sign, theta) *
                                        rotated_hermitian_part(duggal(sign), theta)));
    }
    const GaugeBracket gs = cross_term_sup(sign, 1e-5, 1 << 17);
    CHECK(gs.mid() == doctest::Approx(oracle).epsilon(1e-4));
    CHECK(gs.mid() == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("rank one radius closed form") {
    CVec e1{1.0, 0.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0, 0.0};
    CHECK(rank_one_radius(e1, e1) == doctest::Approx(1.0));
    CHECK(rank_one_radius(e1, e2) == doctest::Approx(0.5));

    const CVec x = lmt::test::random_vec(4, 10);
    const CVec y = lmt::test::random_vec(4, 11);
    const GaugeBracket g = numerical_radius(outer(x, y), 1e-7);
    CHECK(rank_one_radius(x, y) == doctest::Approx(g.mid()).epsilon(1e-6));
}

TEST_CASE("equality witness separates the equality and strict cases") {
    OperatorSpec spec;
    spec.kind = OperatorKind::Quasinormal;
    spec.dim = 4;
    spec.seed = 12;
    const ComplexMatrix q = generate(spec);
    const EqualityWitness wq = equality_witness(q, 0.5);
    const double n2 = operator_norm(q) * operator_norm(q);
    CHECK(wq.value == doctest::Approx(n2).epsilon(1e-9));
    CHECK(wq.attained);
    CHECK(operator_norm(lambda_mean(q, 0.5)) == doctest::Approx(operator_norm(q)));

    const ComplexMatrix jordan = mat({{0, 1}, {0, 0}});
    const EqualityWitness wj = equality_witness(jordan, 0.5);
    CHECK(std::abs(wj.value) <= 1e-12);
    CHECK(!wj.attained);
    CHECK(operator_norm(lambda_mean(jordan, 0.5)) == doctest::Approx(0.5));

    for (std::uint64_t seed : {13u, 14u, 15u}) {
        const ComplexMatrix t = lmt::test::random_ginibre(4, seed);
        const EqualityWitness w = equality_witness(t, 0.3);
        const double nt = operator_norm(t);
        const bool normEq = std::abs(operator_norm(lambda_mean(t, 0.3)) - nt) <= 1e-7 * nt;
        CHECK(w.attained == normEq);
    }
}

TEST_CASE("radius chain of norm and spectral radius holds under fuzz") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const ComplexMatrix t = lmt::test::random_ginibre(2 + seed % 4, 600 + seed);
        const GaugeBracket w = numerical_radius(t, 1e-7 * operator_norm(t));
        const Interval r = spectral_radius_bracket(t);
        const double norm = operator_norm(t);
        CHECK(std::max(r.lo, 0.5 * norm) <= w.hi + 1e-8 * norm);
        CHECK(w.lo <= norm * (1.0 + 1e-12));
    }
}
