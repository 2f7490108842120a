#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lmt {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Dense square complex matrix, row-major, value semantics.
/// Equality of matrices is always tolerance-based (approx_equal), never bitwise.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, Complex(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n); }

    std::size_t dim() const { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::vector<Complex>& data() { return a_; }
    const std::vector<Complex>& data() const { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;

    CVec apply(const CVec& x) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(double scale, ComplexMatrix m);

/// Commutator helper: a*b - b*a.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian part (a + a*)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// Re(e^{i theta} a) = (e^{i theta} a + e^{-i theta} a*)/2.
ComplexMatrix rotated_hermitian_part(const ComplexMatrix& a, double theta);

/// Rank-one operator x (x) y : z -> <z, y> x, i.e. the matrix x y*.
ComplexMatrix outer(const CVec& x, const CVec& y);

/// Entrywise maximum distance; used by tolerance-based comparisons.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// <x, y> = sum_i x_i conj(y_i): linear in the first argument.
Complex inner(const CVec& x, const CVec& y);
double vec_norm(const CVec& x);

}  // namespace lmt
