#include <doctest.h>

#include "lmt/classify.hpp"
#include "lmt/generate.hpp"
#include "lmt/linalg.hpp"
#include "lmt/transforms.hpp"
#include "test_util.hpp"

using namespace lmt;

TEST_CASE("generation is deterministic in the seed") {
    OperatorSpec spec;
    spec.kind = OperatorKind::Ginibre;
    spec.dim = 5;
    spec.seed = 7;
    const ComplexMatrix a = generate(spec);
    const ComplexMatrix b = generate(spec);
    CHECK(max_abs_diff(a, b) == 0.0);
    spec.seed = 8;
    CHECK(max_abs_diff(a, generate(spec)) > 1e-3);
}

TEST_CASE("every kind certifies at every small dimension") {
    for (OperatorKind kind : all_kinds()) {
        for (int dim : {2, 3, 5, 8}) {
            OperatorSpec spec;
            spec.kind = kind;
            spec.dim = dim;
            spec.seed = 100 + dim;
            CHECK_NOTHROW(generate(spec));
        }
    }
}

TEST_CASE("normal kind classifies normal") {
    OperatorSpec spec;
    spec.kind = OperatorKind::Normal;
    spec.dim = 3;
    spec.seed = 7;
    CHECK(classify(generate(spec)).normal);
}

TEST_CASE("quasinormal kind holds the fixed point") {
    OperatorSpec spec;
    spec.kind = OperatorKind::Quasinormal;
    spec.dim = 6;
    spec.seed = 11;
    const ComplexMatrix t = generate(spec);
    REQUIRE(classify(t).quasinormal);
    for (double lam : {0.2, 0.7})
        CHECK(operator_norm(lambda_mean(t, lam) - t) <= 1e-9 * operator_norm(t));
}

TEST_CASE("rank one kind has numerical rank one") {
    OperatorSpec spec;
    spec.kind = OperatorKind::RankOne;
    spec.dim = 6;
    spec.seed = 13;
    const ComplexMatrix t = generate(spec);
    const SvdResult s = svd(t);
    const double cut = default_rank_tol(t.dim(), s.singulars.front());
    int rank = 0;
    for (double sv : s.singulars)
        if (sv > cut) ++rank;
    CHECK(rank == 1);
}

TEST_CASE("partial isometry kind has a kernel and unit non-null singulars") {
    OperatorSpec spec;
    spec.kind = OperatorKind::PartialIsometry;
    spec.dim = 5;
    spec.seed = 17;
    const ComplexMatrix u = generate(spec);
    REQUIRE(classify(u).partialIsometry);
    const SvdResult s = svd(u);
    CHECK(s.singulars.front() == doctest::Approx(1.0));
    CHECK(s.singulars.back() <= 1e-10);
}

TEST_CASE("random unitary is unitary") {
    Rng rng(19);
    const ComplexMatrix v = random_unitary(6, rng);
    CHECK(operator_norm(v.adjoint() * v - ComplexMatrix::identity(6)) <= 1e-12);
}

TEST_CASE("kind names round-trip") {
    for (OperatorKind kind : all_kinds()) CHECK(kind_from_name(kind_name(kind)) == kind);
    CHECK_THROWS(kind_from_name("bogus"));
}
