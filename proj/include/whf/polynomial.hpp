#pragma once

#include <complex>
#include <span>
#include <vector>

namespace whf {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

// Dense polynomial with ascending coefficients. The zero polynomial has no
// coefficients and degree -1.
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<cplx> coefficients);

    static ComplexPolynomial from_roots(std::span<const cplx> roots, cplx leading = 1.0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<cplx>& coefficients() const { return coeffs_; }
    cplx leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }

    cplx operator()(cplx z) const;
    ComplexPolynomial derivative() const;

    // Companion-matrix eigenvalues, each refined by one Newton step.
    std::vector<cplx> roots() const;

    friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
    friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);

private:
    void trim();
    std::vector<cplx> coeffs_;
};

} // namespace whf
