#pragma once

#include <functional>

#include "ratmeyer/boxes.hpp"

namespace ratmeyer {

// h(t) = exp(-1/t) for t > 0, else 0. Smooth, vanishes with all derivatives
// at 0.
double smooth_gate(double t);

// Monotone C^inf ramp: nu(t) = 0 for t <= 0, 1 for t >= 1, and
// nu(t)^2 + nu(1-t)^2 = 1 for all t.
struct Ramp {
    double operator()(double t) const;
    // Central finite differences for order >= 1 (diagnostic use).
    double derivative(double t, int order, double step = 1e-5) const;
};
Ramp make_ramp();

// Even C^inf profile with plateau 1 on [-1/4+delta, 1/4-delta], support in
// [-1/4-delta, 1/4+delta], and sum_k phi(xi + k/2)^2 = 1.
class BumpProfile {
public:
    explicit BumpProfile(const Rational& delta);

    const Rational& delta() const { return delta_; }
    double delta_d() const { return delta_d_; }
    double operator()(double xi) const;

private:
    Rational delta_;
    double delta_d_;
};
BumpProfile make_profile(const Rational& delta);

// xi -> sqrt(sum_i h(f_i(xi))); smooth whenever the f_i are smooth and
// nonnegative.
std::function<double(double)> smooth_sqrt_combine(std::vector<std::function<double(double)>> fs);

// C^inf mollification of the indicator of a box union K (boxes must have
// pairwise disjoint interiors). The mollifier is a tensor product of 1-D
// bumps with support [-eps, eps]; the +-eps sets below use the l_inf metric
// consistently.
class Mollified {
public:
    Mollified(BoxUnion K, Rational eps);

    double operator()(const std::vector<double>& xi) const;
    double eval1(double xi) const;  // 1-D convenience

    int dim() const { return region_.dim(); }
    const Rational& eps() const { return eps_; }
    const BoxUnion& region() const { return region_; }            // K
    const BoxUnion& plateau_region() const { return plateau_; }   // K^{-eps}: f = 1 there
    const BoxUnion& support_region() const { return support_; }   // K^{+eps}: supp f inside

private:
    BoxUnion region_, plateau_, support_;
    Rational eps_;
    double eps_d_;
    std::vector<std::vector<double>> lo_d_, hi_d_;
};

inline Mollified mollify_indicator(const BoxUnion& K, const Rational& eps) { return Mollified(K, eps); }

// Normalized cumulative of the 1-D mollifier profile on [-1, 1]; exposed for
// tests.
double mollifier_cdf(double u);

} // namespace ratmeyer
