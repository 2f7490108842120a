#include "lmt/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lmt {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

CVec ComplexMatrix::apply(const CVec& x) const {
    if (x.size() != n_) throw std::invalid_argument("apply: dimension mismatch");
    CVec y(n_, Complex(0.0));
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = 0.0;
        const Complex* row = a_.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix add: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix sub: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& z : a_) z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    const std::size_t n = lhs.dim();
    if (rhs.dim() != n) throw std::invalid_argument("matrix mul: dimension mismatch");
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(double scale, ComplexMatrix m) {
    m *= Complex(scale, 0.0);
    return m;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

ComplexMatrix rotated_hermitian_part(const ComplexMatrix& a, double theta) {
    const Complex phase = std::polar(1.0, theta);
    const std::size_t n = a.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (phase * a(i, j) + std::conj(phase * a(j, i)));
    return h;
}

ComplexMatrix outer(const CVec& x, const CVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("outer: dimension mismatch");
    const std::size_t n = x.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i] * std::conj(y[j]);
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

Complex inner(const CVec& x, const CVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

double vec_norm(const CVec& x) {
    double s = 0.0;
    for (const Complex& z : x) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace lmt
