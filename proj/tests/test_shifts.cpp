#include <doctest.h>

#include <cmath>

#include "lmt/errors.hpp"
#include "lmt/gauges.hpp"
#include "lmt/generate.hpp"
#include "lmt/linalg.hpp"
#include "lmt/shifts.hpp"
#include "lmt/transforms.hpp"
#include "test_util.hpp"

using namespace lmt;
using lmt::test::mat;

TEST_CASE("build shift in both conventions") {
    WeightSequence lower{{1.0, 1.0}, ShiftConvention::Lower};
    const ComplexMatrix w = build_shift(lower, 3);
    CHECK(approx_equal(w, mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), 1e-15));
    CHECK(spectral_radius(w) <= 1e-12);

    WeightSequence upper{{1.0, 2.0, 2.0, 1.0}, ShiftConvention::Upper};
    const ComplexMatrix u = build_shift(upper, 5);
    CHECK(u(0, 1).real() == doctest::Approx(1.0));
    CHECK(u(1, 2).real() == doctest::Approx(2.0));
    CHECK(approx_equal(u, build_shift(WeightSequence{{1.0, 2.0, 2.0, 1.0},
                                                     ShiftConvention::Lower}, 5)
                              .transpose(),
                       1e-15));
    CHECK_THROWS_AS(build_shift(lower, 5), IndexOutOfWindow);
}

TEST_CASE("random truncated shifts are nilpotent") {
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        WeightSequence ws;
        ws.weights.resize(5);
        for (double& x : ws.weights) x = rng.uniform(0.2, 2.0);
        CHECK(spectral_radius(build_shift(ws, 6)) <= 1e-10);
    }
}

TEST_CASE("lambda mean weights: rules and the counterexample instance") {
    // constant weights stay constant
    const WeightRule c = WeightRule::constant(0.8);
    CHECK(lambda_mean_weight_at(c, 0.3, 5) == doctest::Approx(0.8));

    // beta = (1, 1/2, 1, 1, ...) at lambda = 1/3
    const WeightRule beta = WeightRule::custom({1.0, 0.5, 1.0, 1.0, 1.0, 1.0});
    CHECK(lambda_mean_weight_at(beta, 1.0 / 3.0, 0) == doctest::Approx(2.0 / 3.0));
    CHECK(lambda_mean_weight_at(beta, 1.0 / 3.0, 1) == doctest::Approx(5.0 / 6.0));
    CHECK(lambda_mean_weight_at(beta, 1.0 / 3.0, 2) == doctest::Approx(1.0));
}

TEST_CASE("truncated weight transform matches the matrix transform exactly") {
    Rng rng(32);
    for (std::size_t m : {3u, 8u, 17u, 32u}) {
        WeightSequence ws;
        ws.weights.resize(m - 1);
        double wmax = 0.0;
        for (double& x : ws.weights) {
            x = rng.uniform(0.2, 2.0);
            wmax = std::max(wmax, x);
        }
        for (double lam : {0.0, 0.31, 0.5, 1.0}) {
            const ComplexMatrix transformed = lambda_mean(build_shift(ws, m), lam);
            const WeightSequence predicted = lambda_mean_weights(ws, lam, true);
            for (std::size_t i = 0; i + 1 < m; ++i)
                CHECK(std::abs(transformed(i + 1, i).real() - predicted.weights[i]) <=
                      1e-12 * wmax);
        }
    }
}

TEST_CASE("iterated weights: constant rule and the harmonic spot value") {
    CHECK(iterated_weights(WeightRule::constant(0.7), 0.4, 9, 3) == doctest::Approx(0.7));
    // two-step average of (1, 1/2, 1/3): 1/4 + 1/4 + 1/12
    CHECK(iterated_weights(WeightRule::harmonic(), 0.5, 2, 0) ==
          doctest::Approx(0.25 + 0.25 + 1.0 / 12.0));
    CHECK_THROWS_AS(iterated_weights(std::vector<double>{1.0, 2.0}, 0.5, 2, 0),
                    IndexOutOfWindow);
}

TEST_CASE("binomial formula agrees with the matrix iteration in the interior") {
    Rng rng(33);
    const std::size_t m = 16;
    std::vector<double> weights(m - 1);
    for (double& x : weights) x = rng.uniform(0.2, 2.0);
    WeightSequence ws{weights, ShiftConvention::Lower};
    for (int mIter : {1, 3, 6}) {
        const ComplexMatrix iterated = iterate_lambda_mean(build_shift(ws, m), 0.35, mIter);
        for (std::size_t n = 0; n + 1 + mIter < m - 1; ++n)
            CHECK(std::abs(iterated(n + 1, n).real() -
                           iterated_weights(weights, 0.35, mIter, n)) <= 1e-10);
    }
}

TEST_CASE("convergence experiment limits") {
    const ConvergenceReport harmonic =
        convergence_experiment(WeightRule::harmonic(), 0.5, 40, 8);
    CHECK(harmonic.limit == 0.0);
    for (std::size_t i = 1; i < harmonic.windowError.size(); ++i)
        CHECK(harmonic.windowError[i] <= harmonic.windowError[i - 1] + 1e-12);

    const ConvergenceReport rising =
        convergence_experiment(WeightRule::saturating(0.5), 0.5, 60, 8);
    CHECK(rising.limit == 1.0);
    CHECK(rising.windowError.back() < 1e-3);

    const ConvergenceReport constant =
        convergence_experiment(WeightRule::constant(0.9), 0.5, 10, 4);
    for (double e : constant.windowError) CHECK(e <= 1e-12);

    const ConvergenceReport geometric =
        convergence_experiment(WeightRule::geometric(0.5), 0.5, 60, 8);
    CHECK(geometric.windowError.back() < 1e-6);
}

TEST_CASE("rank one iterates and their radii") {
    const CVec x = lmt::test::random_vec(4, 34);
    const CVec y = lmt::test::random_vec(4, 35);
    RankOnePair p{x, y};

    // parallel pair is a fixed point
    CVec x2 = y;
    for (Complex& z : x2) z *= Complex(0.4, 1.1);
    const RankOnePair fixed = rank_one_iterate({x2, y}, 0.3, 7);
    CHECK(operator_norm(outer(fixed.x, fixed.y) - outer(x2, y)) <= 1e-10 * vec_norm(x2));

    // radius formula against the certified gauge, n up to 10
    for (int n : {0, 1, 4, 10}) {
        const RankOnePair it = rank_one_iterate(p, 0.6, n);
        const double formula = rank_one_iterated_radius(p, 0.6, n);
        const GaugeBracket g = numerical_radius(outer(it.x, it.y), 1e-8);
        CHECK(formula >= g.lo - 1e-7);
        CHECK(formula <= g.hi + 1e-7);
    }

    // the limit is the spectral radius |<x, y>|
    const double limitRadius = rank_one_iterated_radius(p, 0.6, 4000);
    CHECK(limitRadius == doctest::Approx(std::abs(inner(x, y))).epsilon(1e-10));

    // orthogonal pair decays like lambda^n times the initial radius
    CVec e1{1.0, 0.0}, e2{0.0, 1.0};
    const double r3 = rank_one_iterated_radius({e1, e2}, 0.5, 3);
    CHECK(r3 == doctest::Approx(0.5 * std::pow(0.5, 3)).epsilon(1e-12));
}

TEST_CASE("scaled spectral radius inequality") {
    WeightSequence ws{{0.9, 1.4, 0.5}, ShiftConvention::Lower};
    CHECK(scaled_spectrum_check(build_shift(ws, 4), 0.4, 1e-10));

    // displayed spectrum example: strict inequality at every interior lambda
    ComplexMatrix m(4);
    m(0, 2) = 1.0;
    m(1, 3) = 2.0;
    for (double lam : {0.1, 0.5, 0.9}) CHECK(scaled_spectrum_check(m, lam, 1e-10));

    OperatorSpec spec;
    spec.kind = OperatorKind::Quasinormal;
    spec.dim = 4;
    spec.seed = 36;
    CHECK(scaled_spectrum_check(generate(spec), 0.3, 1e-9));
}

TEST_CASE("weight rules evaluate and bound as documented") {
    CHECK(WeightRule::harmonic().at(3) == doctest::Approx(0.25));
    CHECK(WeightRule::geometric(0.5).at(3) == doctest::Approx(0.125));
    CHECK(WeightRule::saturating(0.5).at(0) == doctest::Approx(0.5));
    CHECK(WeightRule::saturating(0.5).limit_value() == 1.0);
    CHECK(WeightRule::from_name("harmonic", 0.0).at(0) == 1.0);
    CHECK_THROWS(WeightRule::from_name("nope", 0.0));
    CHECK_THROWS_AS(WeightRule::custom({1.0}).at(5), IndexOutOfWindow);
}
