#include "lmt/transforms.hpp"

#include <stdexcept>

namespace lmt {

namespace {

void check_lambda(double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("lambda outside [0, 1]");
}

}  // namespace

ComplexMatrix duggal(const ComplexMatrix& t, double rankTol) {
    return duggal(polar_decompose(t, rankTol));
}

ComplexMatrix duggal(const PolarParts& parts) { return parts.p * parts.u; }

ComplexMatrix aluthge(const ComplexMatrix& t, double rankTol) {
    return aluthge(polar_decompose(t, rankTol));
}

ComplexMatrix aluthge(const PolarParts& parts) {
    const ComplexMatrix root = psd_sqrt(parts.p);
    return root * parts.u * root;
}

ComplexMatrix lambda_mean_from(const ComplexMatrix& t, const ComplexMatrix& duggalOfT,
                               double lambda) {
    check_lambda(lambda);
    if (lambda == 0.0) return duggalOfT;
    if (lambda == 1.0) return t;
    return lambda * t + (1.0 - lambda) * duggalOfT;
}

ComplexMatrix lambda_mean(const ComplexMatrix& t, double lambda, double rankTol) {
    check_lambda(lambda);
    if (lambda == 1.0) return t;
    return lambda_mean_from(t, duggal(t, rankTol), lambda);
}

ComplexMatrix mean_transform(const ComplexMatrix& t, double rankTol) {
    return lambda_mean(t, 0.5, rankTol);
}

ComplexMatrix generalized_mean(const ComplexMatrix& t, double s, double rankTol) {
    if (s < 0.0 || s > 0.5)
        throw std::invalid_argument("generalized_mean: exponent outside [0, 1/2]");
    const PolarParts parts = polar_decompose(t, rankTol);
    const ComplexMatrix lowPow = fractional_power(parts.p, s);
    const ComplexMatrix highPow = fractional_power(parts.p, 1.0 - s);
    const ComplexMatrix a = lowPow * parts.u * highPow;
    const ComplexMatrix b = highPow * parts.u * lowPow;
    return 0.5 * (a + b);
}

ComplexMatrix iterate_lambda_mean(const ComplexMatrix& t, double lambda, int n,
                                  double rankTol) {
    check_lambda(lambda);
    if (n < 0) throw std::invalid_argument("iterate_lambda_mean: n < 0");
    ComplexMatrix cur = t;
    for (int k = 0; k < n; ++k) cur = lambda_mean(cur, lambda, rankTol);
    return cur;
}

ComplexMatrix q_lambda_from(const ComplexMatrix& t, const ComplexMatrix& duggalOfT,
                            double lambda) {
    check_lambda(lambda);
    const ComplexMatrix tt = t.adjoint() * t;
    const ComplexMatrix dd = duggalOfT.adjoint() * duggalOfT;
    return hermitian_part((lambda * lambda) * tt +
                          ((1.0 - lambda) * (1.0 - lambda)) * dd);
}

ComplexMatrix q_lambda(const ComplexMatrix& t, double lambda, double rankTol) {
    return q_lambda_from(t, duggal(t, rankTol), lambda);
}

}  // namespace lmt
