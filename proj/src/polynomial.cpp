#include "whf/polynomial.hpp"

#include "whf/error.hpp"

#include <Eigen/Dense>

namespace whf {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coefficients)
    : coeffs_(std::move(coefficients))
{
    trim();
}

void ComplexPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == cplx{})
        coeffs_.pop_back();
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const cplx> roots, cplx leading)
{
    std::vector<cplx> c{leading};
    for (cplx r : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return ComplexPolynomial(std::move(c));
}

cplx ComplexPolynomial::operator()(cplx z) const
{
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPolynomial(std::move(d));
}

std::vector<cplx> ComplexPolynomial::roots() const
{
    if (is_zero())
        fail(ErrorCode::InvalidArgument, "roots of the zero polynomial are undefined");
    const int n = degree();
    if (n == 0)
        return {};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k)
        companion(k, k - 1) = 1.0;
    for (int k = 0; k < n; ++k)
        companion(k, n - 1) = -coeffs_[k] / coeffs_[n];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::IllConditioned, "companion eigen-solve did not converge");

    const ComplexPolynomial dp = derivative();
    std::vector<cplx> out(n);
    for (int k = 0; k < n; ++k) {
        cplx z = solver.eigenvalues()[k];
        cplx d = dp(z);
        if (std::abs(d) > 0.0) {
            cplx step = (*this)(z) / d;
            if (std::isfinite(step.real()) && std::isfinite(step.imag()))
                z -= step;
        }
        out[k] = z;
    }
    return out;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b)
{
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return ComplexPolynomial(std::move(c));
}

} // namespace whf
