#pragma once

#include <complex>
#include <cstdint>

#include "ratmeyer/bump.hpp"

namespace ratmeyer {

using Cx = std::complex<double>;
using CxProfile = std::function<Cx(double)>;

// Generator transform values: a central branch profile for j = 0, two
// shifted (and alternately conjugated) copies for j >= 1.
Cx eval_fj(int j, const CxProfile& phi, double xi);
Cx eval_fj(int j, const BumpProfile& phi, double xi);

// Exact support intervals of the j-th generator transform (one interval for
// j = 0, two for j >= 1).
std::vector<std::pair<Rational, Rational>> fj_support(int j, const Rational& delta);

// n-D tensor generator value and its support box union.
Cx eval_tensor(const std::vector<int>& jj, const BumpProfile& phi, const std::vector<double>& xi);
BoxUnion tensor_support(const std::vector<int>& jj, const Rational& delta);

struct DualGramianReport {
    double max_residual = 0;
    double worst_xi = 0;
    int worst_k = 0;
    int j_max = 0;
    int k_max = 0;
    long grid_points = 0;
};

// Max over a uniform grid on [xi_lo, xi_hi] and |k| <= k_max of
// |sum_j fhat_j(xi) conj(fhat_j(xi+k)) - delta_{k,0}|.
// Throws if j_max is too small to cover the window (message names the bound).
DualGramianReport dual_gramian_residual(const BumpProfile& phi, int j_max, double xi_lo, double xi_hi,
                                        long grid_points, int k_max, int threads = 1);

// Fourier-domain inner product <T_k w_j, T_k' w_j'> by composite quadrature
// over the joint support.
Cx sfs_inner_product(const BumpProfile& phi, const std::vector<int>& j0, const std::vector<long>& k0,
                     const std::vector<int>& j1, const std::vector<long>& k1, double nodes_per_unit = 64);

struct SfsOrthoReport {
    double max_deviation = 0;
    long pairs_tested = 0;
};

// Random (j,k) pairs in dimension n, deviations from the Kronecker delta.
SfsOrthoReport orthonormality_check_sfs(const BumpProfile& phi, int j_cap, long k_cap, int n, int trials,
                                        std::uint64_t seed);

} // namespace ratmeyer
