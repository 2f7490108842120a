#include "lmt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "lmt/errors.hpp"

namespace lmt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxJacobiSweeps = 42;

double off_diagonal_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass; annihilates a(p,q) with the unitary rotation
//   R = I except R(p,p)=c, R(p,q)=s*u, R(q,p)=-s*conj(u), R(q,q)=c,
// where u = a(p,q)/|a(p,q)| and tan(2 theta) = 2|a(p,q)|/(a(q,q)-a(p,p)).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
    const std::size_t n = a.dim();
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double beta = (aqq - app) / (2.0 * mag);
    double t;
    if (beta == 0.0) {
        t = 1.0;
    } else {
        t = (beta > 0.0 ? 1.0 : -1.0) / (std::abs(beta) + std::sqrt(1.0 + beta * beta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex u = apq / mag;
    const Complex su = s * u;
    const Complex suc = s * std::conj(u);

    // Column update A <- A R.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - suc * akq;
        a(k, q) = su * akp + c * akq;
    }
    // Row update A <- R* A.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - su * aqk;
        a(q, k) = suc * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - suc * vkq;
            (*v)(k, q) = su * vkp + c * vkq;
        }
    }
}

// Core Jacobi loop on a pre-symmetrized matrix.  diag receives the
// eigenvalues in matrix order; v (optional) accumulates the rotations.
void jacobi_core(ComplexMatrix& a, ComplexMatrix* v, std::vector<double>& diag) {
    const std::size_t n = a.dim();
    const double frob = a.frobenius_norm();
    const double stop = std::max(kEps * static_cast<double>(n) * frob, 1e-300);

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        if (sweep == kMaxJacobiSweeps - 1 && off_diagonal_norm(a) > stop)
            throw NoConvergence("hermitian_eig: Jacobi sweep cap reached");
    }
    diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
}

void check_hermitian(const ComplexMatrix& a, double tol, const char* who) {
    const std::size_t n = a.dim();
    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            defect = std::max(defect, std::abs(a(i, j) - std::conj(a(j, i))));
    const double scale = std::max(a.max_abs(), 1e-14);
    if (defect > tol * scale)
        throw NotHermitian(std::string(who) + ": input is not Hermitian within tolerance");
}

// Complex Givens rotation: returns (c, s) with c real >= 0 such that
// [c s; -conj(s) c] [a; b] = [r; 0].
struct Givens {
    double c;
    Complex s;
};

Givens make_givens(Complex a, Complex b, Complex& r) {
    if (std::abs(b) == 0.0) {
        r = a;
        return {1.0, Complex(0.0)};
    }
    if (std::abs(a) == 0.0) {
        r = std::abs(b);
        return {0.0, std::conj(b) / std::abs(b)};
    }
    const double na = std::abs(a);
    const double d = std::hypot(na, std::abs(b));
    const Complex alpha = a / na;
    r = alpha * d;
    return {na / d, alpha * std::conj(b) / d};
}

// Householder reduction to upper Hessenberg form, in place.
void hessenberg(ComplexMatrix& h) {
    const std::size_t n = h.dim();
    if (n < 3) return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm <= 1e-300) continue;

        CVec v(n, Complex(0.0));
        const Complex x0 = h(k + 1, k);
        const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex(1.0);
        const Complex alpha = -phase * xnorm;
        for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
        v[k + 1] -= alpha;
        double vnorm = vec_norm(v);
        if (vnorm <= 1e-300) continue;
        for (Complex& z : v) z /= vnorm;

        // H <- (I - 2 v v*) H
        for (std::size_t j = k; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            dot *= 2.0;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
        }
        // H <- H (I - 2 v v*)
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            dot *= 2.0;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
        }
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

Complex wilkinson_shift(const ComplexMatrix& h, std::size_t m) {
    // Eigenvalue of the trailing 2x2 block closest to h(m, m).
    const Complex a = h(m - 1, m - 1);
    const Complex b = h(m - 1, m);
    const Complex c = h(m, m - 1);
    const Complex d = h(m, m);
    const Complex mid = 0.5 * (a + d);
    const Complex disc = std::sqrt(mid * mid - (a * d - b * c));
    const Complex m1 = mid + disc;
    const Complex m2 = mid - disc;
    return (std::abs(m1 - d) < std::abs(m2 - d)) ? m1 : m2;
}

// One explicit shifted QR step on the active block h[l..m, l..m].
void qr_step(ComplexMatrix& h, std::size_t l, std::size_t m, Complex mu) {
    for (std::size_t i = l; i <= m; ++i) h(i, i) -= mu;
    std::vector<Givens> rots;
    rots.reserve(m - l);
    for (std::size_t i = l; i < m; ++i) {
        Complex r;
        const Givens g = make_givens(h(i, i), h(i + 1, i), r);
        rots.push_back(g);
        h(i, i) = r;
        h(i + 1, i) = 0.0;
        for (std::size_t j = i + 1; j <= m; ++j) {
            const Complex hij = h(i, j);
            const Complex hi1j = h(i + 1, j);
            h(i, j) = g.c * hij + g.s * hi1j;
            h(i + 1, j) = -std::conj(g.s) * hij + g.c * hi1j;
        }
    }
    for (std::size_t i = l; i < m; ++i) {
        const Givens g = rots[i - l];
        const std::size_t top = std::min(i + 1, m);
        for (std::size_t k = l; k <= top; ++k) {
            const Complex hki = h(k, i);
            const Complex hki1 = h(k, i + 1);
            h(k, i) = g.c * hki + std::conj(g.s) * hki1;
            h(k, i + 1) = -g.s * hki + g.c * hki1;
        }
    }
    for (std::size_t i = l; i <= m; ++i) h(i, i) += mu;
}

}  // namespace

double default_rank_tol(std::size_t n, double sigmaMax) {
    return static_cast<double>(n) * kEps * sigmaMax;
}

HermitianEig hermitian_eig(const ComplexMatrix& a, double tol) {
    check_hermitian(a, tol, "hermitian_eig");
    const std::size_t n = a.dim();
    ComplexMatrix work = hermitian_part(a);
    ComplexMatrix vecs = ComplexMatrix::identity(n);
    std::vector<double> diag;
    jacobi_core(work, &vecs, diag);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&diag](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

    HermitianEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = vecs(i, order[j]);
    }
    return out;
}

double hermitian_lambda_max(const ComplexMatrix& a) {
    ComplexMatrix work = hermitian_part(a);
    std::vector<double> diag;
    jacobi_core(work, nullptr, diag);
    return *std::max_element(diag.begin(), diag.end());
}

double hermitian_lambda_min(const ComplexMatrix& a) {
    ComplexMatrix work = hermitian_part(a);
    std::vector<double> diag;
    jacobi_core(work, nullptr, diag);
    return *std::min_element(diag.begin(), diag.end());
}

std::pair<double, CVec> hermitian_top_eigenpair(const ComplexMatrix& a) {
    const HermitianEig eig = hermitian_eig(a, 1e-8);
    const std::size_t n = a.dim();
    CVec top(n);
    for (std::size_t i = 0; i < n; ++i) top[i] = eig.vectors(i, n - 1);
    return {eig.values.back(), top};
}

SvdResult svd(const ComplexMatrix& t) {
    const std::size_t n = t.dim();
    const HermitianEig eig = hermitian_eig(t.adjoint() * t, 1e-8);

    // Refresh each singular value as ||t v_i||: accurate near zero where
    // sqrt of the Gram eigenvalue is not.
    std::vector<double> sigma(n);
    std::vector<CVec> rightCols(n, CVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) rightCols[j][i] = eig.vectors(i, j);
        sigma[j] = vec_norm(t.apply(rightCols[j]));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&sigma](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdResult out;
    out.singulars.resize(n);
    out.left = ComplexMatrix(n);
    out.right = ComplexMatrix(n);

    const double sigmaMax = sigma.empty() ? 0.0 : sigma[order[0]];
    const double cut = default_rank_tol(n, sigmaMax);

    std::vector<CVec> leftCols;
    leftCols.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.singulars[j] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) out.right(i, j) = rightCols[src][i];
        if (sigma[src] > cut) {
            CVec u = t.apply(rightCols[src]);
            for (Complex& z : u) z /= sigma[src];
            // Modified Gram-Schmidt against earlier columns keeps the left
            // factor unitary when singular values cluster.
            for (const CVec& prev : leftCols) {
                const Complex proj = inner(u, prev);
                for (std::size_t i = 0; i < n; ++i) u[i] -= proj * prev[i];
            }
            const double un = vec_norm(u);
            if (un > 0.0)
                for (Complex& z : u) z /= un;
            leftCols.push_back(u);
        }
    }
    // Complete the left factor to a unitary basis: repeatedly take the
    // canonical vector with the largest residual against the current span.
    while (leftCols.size() < n) {
        CVec best;
        double bestNorm = -1.0;
        for (std::size_t k = 0; k < n; ++k) {
            CVec u(n, Complex(0.0));
            u[k] = 1.0;
            for (const CVec& prev : leftCols) {
                const Complex proj = inner(u, prev);
                for (std::size_t i = 0; i < n; ++i) u[i] -= proj * prev[i];
            }
            const double un = vec_norm(u);
            if (un > bestNorm) {
                bestNorm = un;
                best = u;
            }
        }
        if (bestNorm <= 1e-8) throw NoConvergence("svd: left basis completion failed");
        for (Complex& z : best) z /= bestNorm;
        // second orthogonalization pass tightens near-degenerate picks
        for (const CVec& prev : leftCols) {
            const Complex proj = inner(best, prev);
            for (std::size_t i = 0; i < n; ++i) best[i] -= proj * prev[i];
        }
        const double bn = vec_norm(best);
        for (Complex& z : best) z /= bn;
        leftCols.push_back(best);
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out.left(i, j) = leftCols[j][i];
    return out;
}

PolarParts polar_decompose(const ComplexMatrix& t, double rankTol) {
    if (rankTol < 0.0) throw std::invalid_argument("polar_decompose: rankTol < 0");
    const std::size_t n = t.dim();
    const SvdResult s = svd(t);
    const double sigmaMax = s.singulars.empty() ? 0.0 : s.singulars.front();
    const double cut = (rankTol == 0.0) ? default_rank_tol(n, sigmaMax) : rankTol;

    PolarParts parts;
    parts.rankTol = cut;
    parts.u = ComplexMatrix(n);
    parts.p = ComplexMatrix(n);
    // u = sum_{sigma > cut} u_i v_i*, p = sum_i sigma_i v_i v_i*.
    for (std::size_t k = 0; k < n; ++k) {
        const double sk = s.singulars[k];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Complex vv = s.right(i, k) * std::conj(s.right(j, k));
                parts.p(i, j) += sk * vv;
                if (sk > cut) parts.u(i, j) += s.left(i, k) * std::conj(s.right(j, k));
            }
        }
    }
    parts.p = hermitian_part(parts.p);
    return parts;
}

ComplexMatrix fractional_power(const ComplexMatrix& p, double t, double tol) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("fractional_power: t outside [0,1]");
    check_hermitian(p, tol, "fractional_power");
    const HermitianEig eig = hermitian_eig(p, tol);
    const std::size_t n = p.dim();
    const double lmax = eig.values.empty() ? 0.0 : std::max(0.0, eig.values.back());
    const double scale = std::max(lmax, 1e-14);
    if (!eig.values.empty() && eig.values.front() < -tol * scale)
        throw NotPsd("fractional_power: input has a negative eigenvalue");

    const double cut = default_rank_tol(n, lmax);
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(0.0, eig.values[k]);
        double f;
        if (t == 0.0) {
            f = (lam > cut) ? 1.0 : 0.0;  // range projection, not identity
        } else {
            f = (lam > 0.0) ? std::pow(lam, t) : 0.0;
        }
        if (f == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += f * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    return hermitian_part(out);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p) { return fractional_power(p, 0.5); }

double operator_norm(const ComplexMatrix& t) {
    if (t.dim() == 0) return 0.0;
    if (t.max_abs() == 0.0) return 0.0;
    const double lam = hermitian_lambda_max(t.adjoint() * t);
    return std::sqrt(std::max(0.0, lam));
}

SpectrumResult eigenvalues(const ComplexMatrix& t) {
    const std::size_t n = t.dim();
    SpectrumResult out;
    if (n == 0) return out;
    if (n == 1) {
        out.eigenvalues = {t(0, 0)};
        return out;
    }

    ComplexMatrix h = t;
    hessenberg(h);
    const double hnorm = std::max(h.frobenius_norm(), 1e-300);

    const long maxIter = 80 * static_cast<long>(n);
    long iter = 0;
    int stall = 0;
    std::size_t m = n - 1;
    while (true) {
        // Deflate negligible subdiagonals.
        for (std::size_t i = 1; i <= m; ++i) {
            const double bound =
                kEps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i))) + 1e-30 * hnorm;
            if (std::abs(h(i, i - 1)) <= bound) h(i, i - 1) = 0.0;
        }
        while (m > 0 && std::abs(h(m, m - 1)) == 0.0) {
            --m;
            stall = 0;
        }
        if (m == 0) break;

        std::size_t l = m;
        while (l > 0 && std::abs(h(l, l - 1)) != 0.0) --l;

        Complex mu = wilkinson_shift(h, m);
        if (++stall % 13 == 0) mu = h(m, m) + Complex(0.75 * std::abs(h(m, m - 1)), 0.0);
        qr_step(h, l, m, mu);

        if (++iter > maxIter) {
            const Interval g = gelfand_bracket(t);
            std::ostringstream msg;
            msg << "eigenvalues: QR iteration cap reached; Gelfand spectral-radius bracket ["
                << g.lo << ", " << g.hi << "]";
            throw NoConvergence(msg.str());
        }
    }

    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = h(i, i);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    const Complex traceDefect =
        std::accumulate(out.eigenvalues.begin(), out.eigenvalues.end(), Complex(0.0)) - t.trace();
    out.residual = std::abs(traceDefect) / std::max(t.frobenius_norm(), 1e-14);
    return out;
}

double spectral_radius(const ComplexMatrix& t) {
    const SpectrumResult s = eigenvalues(t);
    double r = 0.0;
    for (const Complex& z : s.eigenvalues) r = std::max(r, std::abs(z));
    return r;
}

Interval gelfand_bracket(const ComplexMatrix& t, int kMax) {
    const std::size_t n = t.dim();
    Interval out{0.0, operator_norm(t)};
    if (n == 0 || out.hi == 0.0) return {0.0, 0.0};
    ComplexMatrix pw = t;
    for (int k = 1; k <= kMax; ++k) {
        if (k > 1) pw = pw * t;
        const double nk = operator_norm(pw);
        out.hi = std::min(out.hi, std::pow(nk, 1.0 / k));
        const double tk = std::abs(pw.trace()) / static_cast<double>(n);
        if (tk > 0.0) out.lo = std::max(out.lo, std::pow(tk, 1.0 / k));
        if (nk == 0.0) {
            out.hi = 0.0;  // nilpotent
            break;
        }
    }
    out.lo = std::min(out.lo, out.hi);
    return out;
}

Interval spectral_radius_bracket(const ComplexMatrix& t) {
    try {
        const double r = spectral_radius(t);
        const double slack = 1e2 * kEps * std::max(t.frobenius_norm(), 1.0);
        return {std::max(0.0, r - slack), r + slack};
    } catch (const NoConvergence&) {
        return gelfand_bracket(t);
    }
}

}  // namespace lmt
