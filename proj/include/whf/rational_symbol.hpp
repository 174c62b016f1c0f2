#pragma once

#include "whf/polynomial.hpp"

#include <string>
#include <vector>

namespace whf {

// scale * prod(x - zeros) / prod(x - poles), stored by roots.
// Coinciding zero/pole pairs are cancelled on construction.
class RationalSymbol {
public:
    RationalSymbol() = default;
    RationalSymbol(std::vector<cplx> zeros, std::vector<cplx> poles, cplx scale);

    static RationalSymbol constant(cplx c);
    static RationalSymbol from_polynomials(const ComplexPolynomial& num, const ComplexPolynomial& den);
    /// r(x)^k with r(x) = (x - i)/(x + i).
    static RationalSymbol r_power(int k);
    static RationalSymbol lambda_plus(int k = 1);   // (x + i)^k
    static RationalSymbol lambda_minus(int k = 1);  // (x - i)^k

    const std::vector<cplx>& zeros() const { return zeros_; }
    const std::vector<cplx>& poles() const { return poles_; }
    cplx scale() const { return scale_; }

    ComplexPolynomial numerator() const;
    ComplexPolynomial denominator() const;

    int degree_balance() const { return static_cast<int>(zeros_.size()) - static_cast<int>(poles_.size()); }
    bool is_constant() const { return zeros_.empty() && poles_.empty(); }
    bool is_identity() const { return is_constant() && scale_ == cplx{1.0}; }

    cplx eval(cplx z) const;
    cplx eval_at_infinity() const;
    /// Real argument; +-inf evaluates the limit at infinity.
    cplx eval_real(double x) const;

    RationalSymbol reciprocal() const;
    RationalSymbol pow(int k) const;

    friend RationalSymbol operator*(const RationalSymbol& a, const RationalSymbol& b);
    friend RationalSymbol operator/(const RationalSymbol& a, const RationalSymbol& b);

private:
    void cancel();

    std::vector<cplx> zeros_;
    std::vector<cplx> poles_;
    cplx scale_{1.0};
};

struct RootClassification {
    std::vector<cplx> upper_zeros, lower_zeros, real_zeros;
    std::vector<cplx> upper_poles, lower_poles, real_poles;
};

RootClassification classify_roots(const RationalSymbol& g, double tau_axis = 1e-9);

struct EllipticityReport {
    bool elliptic = false;
    double min_modulus = 0.0;
    std::string reason;
};

EllipticityReport is_elliptic(const RationalSymbol& g, std::size_t samples = 4096, double tau_axis = 1e-9);

/// #zeros - #poles in the upper half-plane. Throws NotElliptic.
int winding_index(const RationalSymbol& g, double tau_axis = 1e-9);

} // namespace whf
