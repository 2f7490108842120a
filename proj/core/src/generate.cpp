#include "lmt/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmt/classify.hpp"
#include "lmt/errors.hpp"
#include "lmt/linalg.hpp"
#include "lmt/shifts.hpp"
#include "lmt/transforms.hpp"

namespace lmt {

namespace {

constexpr double kCertTol = 1e-10;

ComplexMatrix ginibre(std::size_t n, Rng& rng) {
    ComplexMatrix g(n);
    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = scale * rng.cgaussian();
    return g;
}

ComplexMatrix conjugate_by(const ComplexMatrix& v, const ComplexMatrix& d) {
    return v * d * v.adjoint();
}

void certify(const ComplexMatrix& t, const OperatorSpec& spec) {
    const ClassReport rep = classify(t, kCertTol);
    bool ok = true;
    switch (spec.kind) {
        case OperatorKind::Ginibre:
            ok = t.is_finite();
            break;
        case OperatorKind::Normal:
        case OperatorKind::Quasinormal:
            // Finite-dimensional quasinormal operators are normal; the
            // quasinormal kind still exercises repeated moduli and kernels.
            ok = rep.quasinormal;
            break;
        case OperatorKind::PartialIsometry:
            ok = rep.partialIsometry;
            break;
        case OperatorKind::RankOne: {
            const SvdResult s = svd(t);
            const double cut = default_rank_tol(t.dim(), s.singulars.front());
            int rank = 0;
            for (double sv : s.singulars)
                if (sv > cut) ++rank;
            ok = (rank == 1);
            break;
        }
        case OperatorKind::TruncatedShift:
        case OperatorKind::Nilpotent:
            ok = spectral_radius_bracket(t).hi <= kCertTol * std::max(1.0, operator_norm(t));
            break;
        case OperatorKind::Positive: {
            const double lmin = hermitian_lambda_min(hermitian_part(t));
            ok = operator_norm(t - hermitian_part(t)) <=
                     kCertTol * std::max(1.0, operator_norm(t)) &&
                 lmin >= -kCertTol * std::max(1.0, operator_norm(t));
            break;
        }
    }
    if (!ok)
        throw KindUnsatisfied("generate: certification failed for kind " + kind_name(spec.kind));
}

}  // namespace

std::string kind_name(OperatorKind k) {
    switch (k) {
        case OperatorKind::Ginibre: return "ginibre";
        case OperatorKind::Normal: return "normal";
        case OperatorKind::Quasinormal: return "quasinormal";
        case OperatorKind::PartialIsometry: return "partialIsometry";
        case OperatorKind::RankOne: return "rankOne";
        case OperatorKind::TruncatedShift: return "truncatedShift";
        case OperatorKind::Nilpotent: return "nilpotent";
        case OperatorKind::Positive: return "positive";
    }
    return "unknown";
}

OperatorKind kind_from_name(const std::string& name) {
    for (OperatorKind k : all_kinds())
        if (kind_name(k) == name) return k;
    throw std::invalid_argument("unknown operator kind: " + name);
}

const std::vector<OperatorKind>& all_kinds() {
    static const std::vector<OperatorKind> kinds = {
        OperatorKind::Ginibre,         OperatorKind::Normal,
        OperatorKind::Quasinormal,     OperatorKind::PartialIsometry,
        OperatorKind::RankOne,         OperatorKind::TruncatedShift,
        OperatorKind::Nilpotent,       OperatorKind::Positive,
    };
    return kinds;
}

Rng::Rng(std::uint64_t seed) : eng_(seed) {}

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (haveSpare_) {
        haveSpare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    haveSpare_ = true;
    return r * std::cos(a);
}

Complex Rng::cgaussian() { return Complex(gaussian(), gaussian()); }

CVec Rng::cgaussian_vec(std::size_t n) {
    CVec v(n);
    for (Complex& z : v) z = cgaussian();
    return v;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 finalizer over the xored pair.
    std::uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    // Householder QR of a Ginibre draw; the Q factor is what we keep.
    ComplexMatrix a = ginibre(n, rng);
    ComplexMatrix q = ComplexMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        CVec v(n, Complex(0.0));
        double xnorm = 0.0;
        for (std::size_t i = k; i < n; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm <= 1e-300) continue;
        const Complex x0 = a(k, k);
        const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex(1.0);
        for (std::size_t i = k; i < n; ++i) v[i] = a(i, k);
        v[k] += phase * xnorm;
        const double vn = vec_norm(v);
        if (vn <= 1e-300) continue;
        for (Complex& z : v) z /= vn;
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
            dot *= 2.0;
            for (std::size_t i = k; i < n; ++i) a(i, j) -= dot * v[i];
        }
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * q(i, j);
            dot *= 2.0;
            for (std::size_t i = k; i < n; ++i) q(i, j) -= dot * v[i];
        }
    }
    return q.adjoint();
}

ComplexMatrix generate(const OperatorSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("generate: dim < 1");
    const std::size_t n = static_cast<std::size_t>(spec.dim);
    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(spec.kind) * 0x51ed2701ULL + n));

    ComplexMatrix t;
    switch (spec.kind) {
        case OperatorKind::Ginibre: {
            t = ginibre(n, rng);
            break;
        }
        case OperatorKind::Normal: {
            const ComplexMatrix v = random_unitary(n, rng);
            ComplexMatrix d(n);
            for (std::size_t i = 0; i < n; ++i) d(i, i) = rng.cgaussian();
            t = conjugate_by(v, d);
            break;
        }
        case OperatorKind::Quasinormal: {
            // Positive part with repeated moduli plus a kernel block, and a
            // block unitary commuting with it: u p = p u with null(u) = null(p).
            const ComplexMatrix v = random_unitary(n, rng);
            ComplexMatrix p(n), u(n);
            std::size_t i = 0;
            if (n >= 3) {
                // one repeated eigenvalue on a 2-dim block, mixed unitarily
                const double c = 0.5 + rng.uniform();
                Rng blockRng(rng.raw());
                const ComplexMatrix w2 = random_unitary(2, blockRng);
                for (std::size_t a = 0; a < 2; ++a) {
                    p(a, a) = c;
                    for (std::size_t b = 0; b < 2; ++b) u(a, b) = w2(a, b);
                }
                i = 2;
            }
            const std::size_t kernelStart = (n >= 2) ? n - 1 : n;  // last direction -> kernel
            for (; i < kernelStart; ++i) {
                p(i, i) = 0.25 + rng.uniform();
                u(i, i) = std::polar(1.0, rng.uniform(0.0, 2.0 * 3.14159265358979323846));
            }
            // kernel rows stay zero in both factors
            t = conjugate_by(v, u * p);
            break;
        }
        case OperatorKind::PartialIsometry: {
            const PolarParts parts = polar_decompose(ginibre(n, rng));
            if (n >= 2) {
                // drop the smallest singular direction to force a kernel
                const SvdResult s = svd(parts.u);
                ComplexMatrix u(n);
                for (std::size_t k = 0; k + 1 < n; ++k)
                    for (std::size_t a = 0; a < n; ++a)
                        for (std::size_t b = 0; b < n; ++b)
                            u(a, b) += s.left(a, k) * std::conj(s.right(b, k));
                t = u;
            } else {
                t = parts.u;
            }
            break;
        }
        case OperatorKind::RankOne: {
            const CVec x = spec.x.empty() ? rng.cgaussian_vec(n) : spec.x;
            const CVec y = spec.y.empty() ? rng.cgaussian_vec(n) : spec.y;
            if (x.size() != n || y.size() != n)
                throw std::invalid_argument("generate: rank-one vectors have wrong length");
            t = outer(x, y);
            break;
        }
        case OperatorKind::TruncatedShift: {
            WeightSequence ws;
            if (spec.weights.empty()) {
                ws.weights.resize(n - 1);
                for (double& w : ws.weights) w = rng.uniform(0.2, 2.0);
            } else {
                ws.weights = spec.weights;
            }
            t = build_shift(ws, n);
            break;
        }
        case OperatorKind::Nilpotent: {
            t = ComplexMatrix(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) t(i, j) = rng.cgaussian();
            break;
        }
        case OperatorKind::Positive: {
            const ComplexMatrix v = random_unitary(n, rng);
            ComplexMatrix d(n);
            for (std::size_t i = 0; i < n; ++i) d(i, i) = std::abs(rng.gaussian()) + 0.05;
            t = hermitian_part(conjugate_by(v, d));
            break;
        }
    }
    certify(t, spec);
    return t;
}

}  // namespace lmt
