#include "lmt/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmt/linalg.hpp"

namespace lmt {

namespace {

std::vector<Complex> to_complex(const std::vector<double>& w) {
    return std::vector<Complex>(w.begin(), w.end());
}

}  // namespace

ClassReport classify(const ComplexMatrix& t, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("classify: tol <= 0");
    ClassReport rep;
    rep.tol = tol;

    const std::size_t n = t.dim();
    const double norm = operator_norm(t);
    const double s = std::max(norm, 1e-14);

    const ComplexMatrix ts = t.adjoint();
    const ComplexMatrix tst = ts * t;   // t* t
    const ComplexMatrix tts = t * ts;   // t t*

    rep.normalResidual = operator_norm(tst - tts) / (s * s);
    rep.quasinormalResidual = operator_norm(t * tst - tst * t) / (s * s * s);
    rep.hyponormalResidual = std::max(0.0, -hermitian_lambda_min(tst - tts)) / (s * s);
    rep.partialIsometryResidual = operator_norm(t * tst - t) / s;
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    rep.isometryResidual = operator_norm(tst - eye);
    rep.unitaryResidual = std::max(rep.isometryResidual, operator_norm(tts - eye));

    rep.normal = rep.normalResidual <= tol;
    rep.quasinormal = rep.quasinormalResidual <= tol;
    rep.hyponormal = rep.hyponormalResidual <= tol;
    rep.partialIsometry = rep.partialIsometryResidual <= tol;
    rep.isometry = rep.isometryResidual <= tol;
    rep.unitary = rep.unitaryResidual <= tol;

    // normal => quasinormal => hyponormal, regardless of rounding.
    rep.quasinormal = rep.quasinormal || rep.normal;
    rep.hyponormal = rep.hyponormal || rep.quasinormal;
    return rep;
}

bool is_quasinormal(const ComplexMatrix& t, double tol) {
    return classify(t, tol).quasinormal;
}

bool shift_is_hyponormal(const std::vector<double>& weights, double tol) {
    double scale = 0.0;
    for (double w : weights) {
        if (w <= 0.0) throw std::invalid_argument("shift_is_hyponormal: weights must be positive");
        scale = std::max(scale, w);
    }
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
        if (weights[i + 1] < weights[i] - tol * scale) return false;
    return true;
}

bool shift_cs_criterion(const std::vector<Complex>& weights, double tol) {
    const std::size_t len = weights.size();  // m - 1 weights for an m x m shift
    double scale = 0.0;
    for (const Complex& w : weights) {
        if (std::abs(w) == 0.0)
            throw std::invalid_argument("shift_cs_criterion: weights must be nonzero");
        scale = std::max(scale, std::abs(w));
    }
    for (std::size_t i = 0; i < len; ++i)
        if (std::abs(std::abs(weights[i]) - std::abs(weights[len - 1 - i])) > tol * scale)
            return false;
    return true;
}

bool shift_cs_criterion(const std::vector<double>& weights, double tol) {
    return shift_cs_criterion(to_complex(weights), tol);
}

bool lambda_mean_cs_criterion(const std::vector<Complex>& weights, double lambda, double tol) {
    if (lambda <= 0.0 || lambda >= 1.0)
        throw std::invalid_argument("lambda_mean_cs_criterion: lambda outside (0, 1)");
    const std::size_t len = weights.size();
    const std::size_t m = len + 1;
    if (m < 3) throw std::invalid_argument("lambda_mean_cs_criterion: need m >= 3");

    std::vector<double> mod(len);
    double scale = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        mod[i] = std::abs(weights[i]);
        scale = std::max(scale, mod[i]);
    }
    if (mod[0] == 0.0)
        throw std::invalid_argument("lambda_mean_cs_criterion: first weight must be nonzero");
    for (std::size_t i = 0; i + 1 < len; ++i)
        if (lambda * mod[i + 1] + (1.0 - lambda) * mod[i] == 0.0)
            throw std::invalid_argument("lambda_mean_cs_criterion: degenerate interior weight");

    const double slack = tol * std::max(scale, 1e-14);
    // First pairing: lambda (|a_1| - |a_{m-1}|) = (1-lambda) |a_{m-2}|.
    if (std::abs(lambda * (mod[0] - mod[len - 1]) - (1.0 - lambda) * mod[len - 2]) > slack)
        return false;
    // Interior pairings, 2 <= k <= m-2 in 1-based weight indexing.
    for (std::size_t k = 2; k + 2 <= m; ++k) {
        const double lhs = lambda * (mod[k - 1] - mod[m - k - 1]);
        const double rhs = (1.0 - lambda) * (mod[m - k - 2] - mod[k - 2]);
        if (std::abs(lhs - rhs) > slack) return false;
    }
    return true;
}

bool lambda_mean_cs_criterion(const std::vector<double>& weights, double lambda, double tol) {
    return lambda_mean_cs_criterion(to_complex(weights), lambda, tol);
}

}  // namespace lmt
