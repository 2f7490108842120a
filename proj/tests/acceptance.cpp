// Acceptance suite: pinned-tolerance end-to-end checks.  Each criterion
// prints one PASS/FAIL line; the exit code is the number of failures.
// Run a single criterion with --criterion <k>.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "lmt/classify.hpp"
#include "lmt/gauges.hpp"
#include "lmt/generate.hpp"
#include "lmt/linalg.hpp"
#include "lmt/shifts.hpp"
#include "lmt/transforms.hpp"
#include "lmt/verify.hpp"

using namespace lmt;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

ComplexMatrix chain_matrix() {
    ComplexMatrix t(2);
    t(0, 1) = 1.0;
    t(1, 1) = 1.0;
    return t;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Outcome criterion1() {
    const double start = now_seconds();
    const ComplexMatrix t = chain_matrix();
    const ComplexMatrix td = duggal(t);
    const double normMean = operator_norm(mean_transform(t));
    const ComplexMatrix absT = polar_decompose(t).p;
    const ComplexMatrix absTD = psd_sqrt(td.adjoint() * td);
    const ComplexMatrix absTs = psd_sqrt(t * t.adjoint());
    const ComplexMatrix absTDs = psd_sqrt(td * td.adjoint());
    const double mixed = 0.25 * (hermitian_lambda_max(absT + absTD) +
                                 hermitian_lambda_max(absTs + absTDs));
    const double avg = 0.5 * (operator_norm(t) + operator_norm(td));
    const double norm = operator_norm(t);
    const double elapsed = now_seconds() - start;

    Outcome out;
    out.pass = close(normMean, 1.1180, 5e-4) && close(mixed, 1.1218, 5e-4) &&
               close(avg, 1.2071, 5e-4) && close(norm, 1.4142, 5e-4) &&
               normMean < mixed && mixed < avg && avg < norm && elapsed < 1.0;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "norm chain %.4f < %.4f < %.4f < %.4f (%.3fs)", normMean, mixed, avg,
                  norm, elapsed);
    out.detail = buf;
    return out;
}

Outcome criterion2() {
    const double start = now_seconds();
    const ComplexMatrix t = chain_matrix();
    const ComplexMatrix td = duggal(t);
    const double gaugeTol = 1e-5;
    const GaugeBracket wMean = numerical_radius(mean_transform(t), gaugeTol);
    const GaugeBracket wT = numerical_radius(t, gaugeTol);
    const GaugeBracket wTD = numerical_radius(td, gaugeTol);
    const GaugeBracket integral = radius_integral(t, 2e-4);
    const double quarter = 0.25 * (wT.mid() + wTD.mid() + 2.0 * wMean.mid());
    const double avg = 0.5 * (wT.mid() + wTD.mid());
    const double elapsed = now_seconds() - start;

    Outcome out;
    out.pass = close(wMean.mid(), 1.0590, 1e-3) && close(integral.mid(), 1.0739, 1e-3) &&
               close(quarter, 1.0812, 1e-3) && close(avg, 1.1035, 1e-3) &&
               close(wT.mid(), 1.2071, 1e-3) && wMean.hi < integral.lo &&
               integral.hi < quarter && quarter < avg && avg < wT.lo && elapsed < 10.0;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "radius chain %.4f < %.4f < %.4f < %.4f < %.4f (%.3fs)", wMean.mid(),
                  integral.mid(), quarter, avg, wT.mid(), elapsed);
    out.detail = buf;
    return out;
}

Outcome criterion3() {
    const ComplexMatrix t = chain_matrix();
    const ComplexMatrix td = duggal(t);
    const GaugeBracket cross = cross_term_sup_from(t, td, 1e-5, 1 << 17);
    const GaugeBracket wMean = numerical_radius(mean_transform(t), 1e-6);
    const GaugeBracket wT = numerical_radius(t, 1e-6);
    const GaugeBracket wTD = numerical_radius(td, 1e-6);
    const double diff = wT.mid() - wTD.mid();
    const double middle =
        0.25 * (wT.mid() + wTD.mid() + std::sqrt(diff * diff + 4.0 * cross.mid()));
    const double avg = 0.5 * (wT.mid() + wTD.mid());

    Outcome out;
    out.pass = close(cross.mid(), std::sqrt(5.0) / 2.0, 1e-4) &&
               close(middle, 1.0829, 1e-3) && wMean.hi <= middle && middle <= avg;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "cross sup %.6f (ref %.6f), middle %.4f in [%.4f, %.4f]",
                  cross.mid(), std::sqrt(5.0) / 2.0, middle, wMean.hi, avg);
    out.detail = buf;
    return out;
}

Outcome criterion4() {
    Outcome out;
    double worst = 0.0;
    for (double lam : {0.1, 0.25, 0.5, 0.9}) {
        ComplexMatrix m(4);
        m(0, 2) = lam;
        m(1, 3) = 2.0 * lam;
        m(2, 0) = 1.0 - lam;
        m(3, 1) = 2.0 * (1.0 - lam);
        const double g = std::sqrt(lam - lam * lam);
        std::vector<double> expected = {-2.0 * g, -g, g, 2.0 * g};
        const SpectrumResult spec = eigenvalues(m);
        std::vector<double> got;
        for (const Complex& z : spec.eigenvalues) {
            worst = std::max(worst, std::abs(z.imag()));
            got.push_back(z.real());
        }
        std::sort(got.begin(), got.end());
        for (std::size_t i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(got[i] - expected[i]));
    }
    out.pass = worst <= 1e-8;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "spectrum multiset deviation %.3e (cap 1e-8)", worst);
    out.detail = buf;
    return out;
}

Outcome criterion5() {
    std::vector<double> beta{1.0, 0.5, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    std::vector<double> transformed(beta.size() - 1);
    for (std::size_t i = 0; i + 1 < beta.size(); ++i)
        transformed[i] = beta[i] / 3.0 + 2.0 * beta[i + 1] / 3.0;
    const bool betaHypo = shift_is_hyponormal(beta);
    const bool meanHypo = shift_is_hyponormal(transformed);
    Outcome out;
    out.pass = !betaHypo && meanHypo;
    out.detail = std::string("original hyponormal=") + (betaHypo ? "true" : "false") +
                 ", mean transform hyponormal=" + (meanHypo ? "true" : "false");
    return out;
}

Outcome criterion6() {
    bool ok = shift_cs_criterion(std::vector<double>{1.0, 2.0, 2.0, 1.0});
    for (double lam : {0.2, 0.5, 0.8}) {
        ok = ok && !lambda_mean_cs_criterion(std::vector<double>{1.0, 2.0, 2.0, 1.0}, lam);
        const std::vector<double> fam{1.0 / lam, 1.0, 1.0};
        ok = ok && !shift_cs_criterion(fam);
        ok = ok && lambda_mean_cs_criterion(fam, lam);
    }
    Outcome out;
    out.pass = ok;
    out.detail = "palindrome weights stay symmetric, constructed family flips under the mean";
    return out;
}

Outcome criterion7() {
    const double start = now_seconds();
    VerifyOptions opts;
    opts.equivalences = false;
    opts.closedForms = false;
    const auto corpus = make_corpus(2000, 20260808, 2, 8);
    const VerifyReport rep = verify_suite(corpus, opts);
    const double elapsed = now_seconds() - start;

    Outcome out;
    double worst = 1.0;
    std::string worstName = "-";
    long pairs = 0;
    for (const CheckResult& c : rep.checks) {
        if (c.margin < worst) {
            worst = c.margin;
            worstName = c.name;
        }
        out.pass = out.pass && c.pass;
        pairs = std::max(pairs, c.count);
    }
    out.pass = out.pass && rep.pairCount == 10000 && elapsed < 600.0;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%ld pairs, worst margin %.3e (%s), %.1fs (cap 600s)", rep.pairCount,
                  worst, worstName.c_str(), elapsed);
    out.detail = buf;
    return out;
}

Outcome criterion8() {
    VerifyOptions opts;
    opts.inequalities = false;
    opts.closedForms = false;
    const auto corpus = make_corpus(1000, 9090, 2, 8);
    long constructed = 0;
    for (const OperatorSpec& spec : corpus)
        if (spec.kind == OperatorKind::Quasinormal || spec.kind == OperatorKind::Positive)
            ++constructed;
    const VerifyReport rep = verify_suite(corpus, opts);

    Outcome out;
    long disagreements = 0;
    for (const CheckResult& c : rep.checks)
        if (!c.pass) ++disagreements;
    out.pass = disagreements == 0 && constructed >= 200;
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "1000 operators (%ld constructed quasinormal/positive), %ld disagreements",
                  constructed, disagreements);
    out.detail = buf;
    return out;
}

Outcome criterion9() {
    Outcome out;
    char buf[256];

    // (a) binomial weights against the matrix iteration, interior indices
    double worstA = 0.0;
    Rng rng(31415);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t m = 16;
        std::vector<double> w(m - 1);
        for (double& x : w) x = rng.uniform(0.2, 2.0);
        WeightSequence ws{w, ShiftConvention::Lower};
        const double lam = rng.uniform(0.1, 0.9);
        for (int mIter = 1; mIter <= 6; ++mIter) {
            const ComplexMatrix it = iterate_lambda_mean(build_shift(ws, m), lam, mIter);
            for (std::size_t n = 0; n + 1 + mIter < m - 1; ++n)
                worstA = std::max(worstA, std::abs(it(n + 1, n).real() -
                                                   iterated_weights(w, lam, mIter, n)));
        }
    }
    const bool passA = worstA <= 1e-10;
    std::snprintf(buf, sizeof(buf), "  9a binomial vs matrix, worst %.3e (cap 1e-10)",
                  worstA);
    std::printf("%s %s\n", passA ? "  PASS" : "  FAIL", buf);

    // (b) rank-one radius formula against the certified gauge, n <= 10
    bool passB = true;
    double worstB = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        RankOnePair p{Rng(500 + rep).cgaussian_vec(4), Rng(900 + rep).cgaussian_vec(4)};
        const double lam = 0.1 + 0.04 * rep;
        for (int n = 0; n <= 10; ++n) {
            const double formula = rank_one_iterated_radius(p, lam, n);
            const RankOnePair it = rank_one_iterate(p, lam, n);
            const GaugeBracket g = numerical_radius(outer(it.x, it.y), 1e-8);
            const double dist = std::max({0.0, g.lo - formula, formula - g.hi});
            worstB = std::max(worstB, dist);
            passB = passB && dist <= 1e-7;
        }
    }
    std::snprintf(buf, sizeof(buf), "  9b rank-one radius vs gauge, worst excess %.3e",
                  worstB);
    std::printf("%s %s\n", passB ? "  PASS" : "  FAIL", buf);

    // (c) harmonic-weight convergence: window error < 1e-6 by mIter = 60.
    // The binomial average of 1/(k+1) at lambda = 1/2 decays like 2/(m+1),
    // so the measured error shows the actual scale.
    const ConvergenceReport conv =
        convergence_experiment(WeightRule::harmonic(), 0.5, 60, 8);
    const double err60 = conv.windowError.back();
    const bool passC = err60 < 1e-6;
    std::snprintf(buf, sizeof(buf),
                  "  9c harmonic window error at mIter=60: %.6e (required < 1e-6)", err60);
    std::printf("%s %s\n", passC ? "  PASS" : "  FAIL", buf);

    out.pass = passA && passB && passC;
    std::snprintf(buf, sizeof(buf), "closed-form cross-checks (a %s, b %s, c %s)",
                  passA ? "pass" : "fail", passB ? "pass" : "fail", passC ? "pass" : "fail");
    out.detail = buf;
    return out;
}

Outcome criterion10() {
    VerifyOptions opts;
    opts.threads = 2;
    const auto corpus = make_corpus(42, 42, 2, 6);
    const std::string a = report_to_json(verify_suite(corpus, opts));
    opts.threads = 1;
    const std::string b = report_to_json(verify_suite(corpus, opts));
    Outcome out;
    out.pass = (a == b) && !a.empty();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "seed-42 reports byte-identical: %s (%zu bytes)",
                  a == b ? "yes" : "no", a.size());
    out.detail = buf;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

    using Fn = Outcome (*)();
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                           criterion6, criterion7, criterion8, criterion9, criterion10};
    int failures = 0;
    for (int k = 1; k <= 10; ++k) {
        if (only != 0 && only != k) continue;
        const Outcome out = criteria[k - 1]();
        std::printf("%s criterion %2d: %s\n", out.pass ? "PASS" : "FAIL", k,
                    out.detail.c_str());
        if (!out.pass) ++failures;
    }
    return failures;
}
