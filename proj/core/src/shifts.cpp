#include "lmt/shifts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmt/errors.hpp"
#include "lmt/linalg.hpp"
#include "lmt/transforms.hpp"

namespace lmt {

double WeightRule::at(std::size_t n) const {
    switch (kind) {
        case Kind::Harmonic: return 1.0 / static_cast<double>(n + 1);
        case Kind::Geometric: return std::pow(param, static_cast<double>(n));
        case Kind::Saturating: return 1.0 - std::pow(param, static_cast<double>(n + 1));
        case Kind::Constant: return param;
        case Kind::Custom:
            if (n >= list.size())
                throw IndexOutOfWindow("weight rule: custom list too short for index " +
                                       std::to_string(n));
            return list[n];
    }
    throw std::logic_error("weight rule: unknown kind");
}

bool WeightRule::monotone_decreasing() const {
    switch (kind) {
        case Kind::Harmonic: return true;
        case Kind::Geometric: return param <= 1.0;
        case Kind::Saturating: return false;
        case Kind::Constant: return true;
        case Kind::Custom: return list.size() < 2 || std::is_sorted(list.rbegin(), list.rend());
    }
    return true;
}

double WeightRule::limit_value() const {
    switch (kind) {
        case Kind::Harmonic: return 0.0;
        case Kind::Geometric: return param < 1.0 ? 0.0 : 1.0;
        case Kind::Saturating: return 1.0;
        case Kind::Constant: return param;
        case Kind::Custom:
            if (list.empty()) throw std::invalid_argument("weight rule: empty custom list");
            return monotone_decreasing() ? *std::min_element(list.begin(), list.end())
                                         : *std::max_element(list.begin(), list.end());
    }
    throw std::logic_error("weight rule: unknown kind");
}

WeightRule WeightRule::harmonic() { return {Kind::Harmonic, 0.0, {}}; }
WeightRule WeightRule::geometric(double q) { return {Kind::Geometric, q, {}}; }
WeightRule WeightRule::saturating(double q) { return {Kind::Saturating, q, {}}; }
WeightRule WeightRule::constant(double c) { return {Kind::Constant, c, {}}; }
WeightRule WeightRule::custom(std::vector<double> w) { return {Kind::Custom, 0.0, std::move(w)}; }

WeightRule WeightRule::from_name(const std::string& name, double param) {
    if (name == "harmonic") return harmonic();
    if (name == "geometric") return geometric(param);
    if (name == "saturating") return saturating(param);
    if (name == "constant") return constant(param);
    throw std::invalid_argument("unknown weight rule: " + name);
}

ComplexMatrix build_shift(const WeightSequence& ws, std::size_t m) {
    if (m < 2) throw std::invalid_argument("build_shift: need m >= 2");
    if (ws.weights.size() + 1 < m)
        throw IndexOutOfWindow("build_shift: need at least m-1 weights");
    ComplexMatrix w(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (ws.convention == ShiftConvention::Lower)
            w(i + 1, i) = ws.weights[i];
        else
            w(i, i + 1) = ws.weights[i];
    }
    return w;
}

ComplexMatrix build_shift(const WeightRule& rule, std::size_t m, ShiftConvention convention) {
    WeightSequence ws;
    ws.convention = convention;
    ws.weights.resize(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) ws.weights[i] = rule.at(i);
    return build_shift(ws, m);
}

WeightSequence lambda_mean_weights(const WeightSequence& ws, double lambda, bool truncated) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("lambda_mean_weights: lambda outside [0, 1]");
    const std::size_t len = ws.weights.size();
    WeightSequence out;
    out.convention = ws.convention;

    if (ws.convention == ShiftConvention::Lower) {
        if (truncated) {
            out.weights.resize(len);
            for (std::size_t i = 0; i < len; ++i) {
                const double next = (i + 1 < len) ? ws.weights[i + 1] : 0.0;
                out.weights[i] = lambda * ws.weights[i] + (1.0 - lambda) * next;
            }
        } else {
            if (len < 2) throw IndexOutOfWindow("lambda_mean_weights: window too short");
            out.weights.resize(len - 1);
            for (std::size_t i = 0; i + 1 < len; ++i)
                out.weights[i] = lambda * ws.weights[i] + (1.0 - lambda) * ws.weights[i + 1];
        }
    } else {
        // Upper convention: the boundary zero enters at the low index.
        out.weights.resize(len);
        for (std::size_t i = 0; i < len; ++i) {
            const double prev = (i == 0) ? 0.0 : ws.weights[i - 1];
            out.weights[i] = lambda * ws.weights[i] + (1.0 - lambda) * prev;
        }
    }
    return out;
}

double lambda_mean_weight_at(const WeightRule& rule, double lambda, std::size_t n) {
    return lambda * rule.at(n) + (1.0 - lambda) * rule.at(n + 1);
}

namespace {

template <typename WeightAt>
double binomial_iterated(WeightAt&& at, double lambda, int mIter, std::size_t n) {
    if (mIter < 0) throw std::invalid_argument("iterated_weights: mIter < 0");
    if (lambda == 1.0) return at(n);
    if (lambda == 0.0) return at(n + static_cast<std::size_t>(mIter));
    // term_i = C(mIter, i) lambda^(mIter-i) (1-lambda)^i, built recursively
    // to keep intermediates bounded.
    double term = std::pow(lambda, mIter);
    double acc = term * at(n);
    for (int i = 1; i <= mIter; ++i) {
        term *= (static_cast<double>(mIter - i + 1) / static_cast<double>(i)) *
                ((1.0 - lambda) / lambda);
        acc += term * at(n + static_cast<std::size_t>(i));
    }
    return acc;
}

}  // namespace

double iterated_weights(const WeightRule& rule, double lambda, int mIter, std::size_t n) {
    return binomial_iterated([&rule](std::size_t k) { return rule.at(k); }, lambda, mIter, n);
}

double iterated_weights(const std::vector<double>& weights, double lambda, int mIter,
                        std::size_t n) {
    if (mIter < 0) throw std::invalid_argument("iterated_weights: mIter < 0");
    if (n + static_cast<std::size_t>(mIter) >= weights.size())
        throw IndexOutOfWindow("iterated_weights: finite list too short for window");
    return binomial_iterated([&weights](std::size_t k) { return weights[k]; }, lambda, mIter, n);
}

ConvergenceReport convergence_experiment(const WeightRule& rule, double lambda, int mMax,
                                         std::size_t window) {
    if (lambda < 0.0 || lambda >= 1.0)
        throw std::invalid_argument("convergence_experiment: lambda outside [0, 1)");
    if (window == 0) throw std::invalid_argument("convergence_experiment: empty window");
    ConvergenceReport rep;
    rep.limit = rule.limit_value();
    rep.iteration.reserve(mMax + 1);
    rep.windowError.reserve(mMax + 1);
    for (int m = 0; m <= mMax; ++m) {
        double err = 0.0;
        for (std::size_t j = 0; j < window; ++j)
            err = std::max(err, std::abs(iterated_weights(rule, lambda, m, j) - rep.limit));
        rep.iteration.push_back(m);
        rep.windowError.push_back(err);
    }
    return rep;
}

RankOnePair rank_one_iterate(const RankOnePair& p, double lambda, int n) {
    if (lambda <= 0.0 || lambda >= 1.0)
        throw std::invalid_argument("rank_one_iterate: lambda outside (0, 1)");
    if (n < 0) throw std::invalid_argument("rank_one_iterate: n < 0");
    const double ny2 = vec_norm(p.y) * vec_norm(p.y);
    if (ny2 == 0.0) throw std::invalid_argument("rank_one_iterate: y must be nonzero");
    const double ln = std::pow(lambda, n);
    const Complex mix = (1.0 - ln) * inner(p.x, p.y) / ny2;
    RankOnePair out;
    out.y = p.y;
    out.x.resize(p.x.size());
    for (std::size_t i = 0; i < p.x.size(); ++i) out.x[i] = ln * p.x[i] + mix * p.y[i];
    return out;
}

double rank_one_iterated_radius(const RankOnePair& p, double lambda, int n) {
    if (lambda <= 0.0 || lambda >= 1.0)
        throw std::invalid_argument("rank_one_iterated_radius: lambda outside (0, 1)");
    const double ip = std::abs(inner(p.x, p.y));
    const double prod = vec_norm(p.x) * vec_norm(p.y);
    const double l2n = std::pow(lambda, 2 * n);
    return 0.5 * (ip + std::sqrt(l2n * prod * prod + (1.0 - l2n) * ip * ip));
}

bool scaled_spectrum_check(const ComplexMatrix& t, double lambda, double tol) {
    if (lambda <= 0.0 || lambda >= 1.0)
        throw std::invalid_argument("scaled_spectrum_check: lambda outside (0, 1)");
    const double factor = 2.0 * std::sqrt(lambda - lambda * lambda);
    const Interval rT = spectral_radius_bracket(t);
    const Interval rM = spectral_radius_bracket(lambda_mean(t, lambda));
    return factor * rT.lo <= rM.hi + tol;
}

}  // namespace lmt
