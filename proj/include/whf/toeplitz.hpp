#pragma once

#include "whf/factorisation.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace whf {

/// Symbol values on the grid nodes; jump nodes take the mean of the one-sided limits.
std::vector<cplx> sample_symbol(const Symbol& g, const Grid& grid);

struct ToeplitzOptions {
    SpectralOptions spectral;
    double plus_threshold = 0.99;
    bool strict = false;   // raise NotPlusFunction instead of warning
};

struct ToeplitzResult {
    GridFunction value;
    double input_plus_score = 1.0;
    bool not_plus_warning = false;
};

/// P+(g f) with g given on the nodes of f's grid.
ToeplitzResult toeplitz_apply(std::span<const cplx> g, const GridFunction& f, const ToeplitzOptions& opts = {});
ToeplitzResult toeplitz_apply(const Symbol& g, const GridFunction& f, const ToeplitzOptions& opts = {});

/// Matrix of f -> P+(g f) on the positive-frequency coefficients (N/2 x N/2).
Eigen::MatrixXcd toeplitz_matrix(std::span<const cplx> g, const Grid& grid, const SpectralOptions& opts = {});

struct PairedIdentityReport {
    double ap_q = 0.0;       // AP+Q vs (PAP+Q)(I+QAP)
    double pa_q = 0.0;       // PA+Q vs (I+PAQ)(PAP+Q)
    double inverse_qap = 0.0;// (I+QAP)(I-QAP) vs I
    double inverse_paq = 0.0;// (I+PAQ)(I-PAQ) vs I
    double max_deviation = 0.0;
};

/// Frobenius deviations of the paired-operator factorisation identities.
PairedIdentityReport paired_identity_check(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& P);

struct NumericFactorOptions {
    double solve_tolerance = 1e-8;
};

/// Canonical factorisation g = g_- g_+ from the two Toeplitz systems
/// T_g u = 1/(x+i), T_{1/g} v = 1/(x+i); g_+ = (x+i) v, g_- = g / g_+,
/// normalised to g_-(inf) = 1. Needs a Cayley grid.
WHFactorisation numeric_canonical_factorise(const Symbol& g, const Grid& grid, const NumericFactorOptions& opts = {});

/// Value at infinity of a function (x + i s) v on a Cayley grid, from its coefficients.
cplx cayley_value_at_infinity(const GridFunction& f);

GridFunction execute_recipe(const InverseRecipe& recipe, const GridFunction& f, const SpectralOptions& opts = {});

} // namespace whf
