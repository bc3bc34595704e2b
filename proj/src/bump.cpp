#include "ratmeyer/bump.hpp"

#include <cmath>
#include <mutex>

#include "ratmeyer/quadrature.hpp"

namespace ratmeyer {

double smooth_gate(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }

namespace {

constexpr double kPi = 3.14159265358979323846;

double smooth_step(double t) {
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    double a = smooth_gate(t);
    double b = smooth_gate(1.0 - t);
    return a / (a + b);
}

} // namespace

double Ramp::operator()(double t) const { return std::sin(0.5 * kPi * smooth_step(t)); }

double Ramp::derivative(double t, int order, double step) const {
    if (order <= 0) return (*this)(t);
    if (order == 1) return ((*this)(t + step) - (*this)(t - step)) / (2 * step);
    return (derivative(t + step, order - 1, step) - derivative(t - step, order - 1, step)) / (2 * step);
}

Ramp make_ramp() { return Ramp{}; }

BumpProfile::BumpProfile(const Rational& delta) : delta_(delta), delta_d_(delta.to_double()) {
    if (!(Rational(0) < delta && delta <= Rational(1, 4)))
        throw std::invalid_argument("BumpProfile: delta must lie in (0, 1/4]");
}

double BumpProfile::operator()(double xi) const {
    double ax = std::abs(xi);
    double b = 0.25 + delta_d_;
    if (ax >= b) return 0.0;
    if (ax <= 0.25 - delta_d_) return 1.0;
    return Ramp{}((b - ax) / (2 * delta_d_));
}

BumpProfile make_profile(const Rational& delta) { return BumpProfile(delta); }

std::function<double(double)> smooth_sqrt_combine(std::vector<std::function<double(double)>> fs) {
    return [fs = std::move(fs)](double xi) {
        double s = 0;
        for (const auto& f : fs) s += smooth_gate(f(xi));
        return std::sqrt(s);
    };
}

namespace {

// Cumulative of g0(u) = exp(-1/(1-u^2)) on [-1,1], normalized to [0,1].
// Hermite cubic interpolation between uniform nodes; the exact derivative
// g0/I at every node keeps the interpolation error well under 1e-10.
struct MollifierTable {
    static constexpr int kN = 8192;
    std::vector<double> cdf;    // size kN+1
    std::vector<double> slope;  // g0(u_i)/I

    MollifierTable() {
        auto g0 = [](double u) {
            double d = 1.0 - u * u;
            return d > 0 ? std::exp(-1.0 / d) : 0.0;
        };
        cdf.assign(kN + 1, 0.0);
        slope.assign(kN + 1, 0.0);
        double h = 2.0 / kN;
        for (int i = 0; i < kN; ++i) {
            Quad1D q;
            append_gl16(q, -1.0 + i * h, -1.0 + (i + 1) * h);
            double s = 0;
            for (size_t k = 0; k < q.x.size(); ++k) s += q.w[k] * g0(q.x[k]);
            cdf[i + 1] = cdf[i] + s;
        }
        double total = cdf[kN];
        for (int i = 0; i <= kN; ++i) {
            cdf[i] /= total;
            slope[i] = g0(-1.0 + i * h) / total;
        }
    }

    double eval(double u) const {
        if (u <= -1.0) return 0.0;
        if (u >= 1.0) return 1.0;
        double h = 2.0 / kN;
        double s = (u + 1.0) / h;
        int i = std::min(kN - 1, int(s));
        double t = s - i;
        double y0 = cdf[i], y1 = cdf[i + 1];
        double m0 = slope[i] * h, m1 = slope[i + 1] * h;
        double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
    }
};

const MollifierTable& mollifier_table() {
    static MollifierTable t;
    return t;
}

} // namespace

double mollifier_cdf(double u) { return mollifier_table().eval(u); }

Mollified::Mollified(BoxUnion K, Rational eps)
    : region_(std::move(K)), eps_(std::move(eps)), eps_d_(eps_.to_double()) {
    if (!(Rational(0) < eps_)) throw std::invalid_argument("Mollified: eps must be positive");
    if (!region_.interiors_disjoint())
        throw std::invalid_argument("Mollified: region boxes must have disjoint interiors");
    plateau_ = region_.deflated(eps_);
    support_ = region_.inflated(eps_);
    for (const auto& b : region_.boxes) {
        std::vector<double> lo(b.dim()), hi(b.dim());
        for (int i = 0; i < b.dim(); ++i) {
            lo[i] = b.lo[i].to_double();
            hi[i] = b.hi[i].to_double();
        }
        lo_d_.push_back(std::move(lo));
        hi_d_.push_back(std::move(hi));
    }
    mollifier_table();  // build once up front
}

double Mollified::operator()(const std::vector<double>& xi) const {
    const auto& tab = mollifier_table();
    double total = 0;
    for (size_t b = 0; b < lo_d_.size(); ++b) {
        double prod = 1.0;
        for (size_t i = 0; i < xi.size() && prod != 0.0; ++i) {
            double c =
                tab.eval((xi[i] - lo_d_[b][i]) / eps_d_) - tab.eval((xi[i] - hi_d_[b][i]) / eps_d_);
            prod *= c;
        }
        total += prod;
    }
    if (total < 0) total = 0;
    if (total > 1) total = 1;
    return total;
}

double Mollified::eval1(double xi) const { return (*this)(std::vector<double>{xi}); }

} // namespace ratmeyer
