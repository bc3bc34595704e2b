#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace ratmeyer {

// Composite 16-point Gauss-Legendre rule over a list of disjoint intervals.
struct Quad1D {
    std::vector<double> x;
    std::vector<double> w;
};

namespace detail {
// nodes/weights for [-1,1], symmetric half listed
inline const double gl16_x[8] = {0.0950125098376374402, 0.2816035507792589132, 0.4580167776572273863,
                                 0.6178762444026437484, 0.7554044083550030339, 0.8656312023878317439,
                                 0.9445750230732325761, 0.9894009349916499326};
inline const double gl16_w[8] = {0.1894506104550684963, 0.1826034150449235889, 0.1691565193950025382,
                                 0.1495959888165767320, 0.1246289712555338720, 0.0951585116824927848,
                                 0.0622535239386478929, 0.0271524594117540949};
} // namespace detail

inline void append_gl16(Quad1D& q, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 7; i >= 0; --i) {
        q.x.push_back(c - h * detail::gl16_x[i]);
        q.w.push_back(h * detail::gl16_w[i]);
    }
    for (int i = 0; i < 8; ++i) {
        q.x.push_back(c + h * detail::gl16_x[i]);
        q.w.push_back(h * detail::gl16_w[i]);
    }
}

inline Quad1D composite_gl(const std::vector<std::pair<double, double>>& intervals, double nodes_per_unit,
                           int min_nodes_per_interval = 16) {
    Quad1D q;
    for (auto [a, b] : intervals) {
        if (!(b > a)) continue;
        double want = std::max(double(min_nodes_per_interval), (b - a) * nodes_per_unit);
        int panels = std::max(1, int(std::ceil(want / 16.0)));
        double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) append_gl16(q, a + p * h, a + (p + 1) * h);
    }
    return q;
}

inline std::complex<double> integrate(const Quad1D& q, const std::function<std::complex<double>(double)>& f) {
    std::complex<double> s = 0;
    for (size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(q.x[i]);
    return s;
}

inline double integrate_real(const Quad1D& q, const std::function<double(double)>& f) {
    double s = 0;
    for (size_t i = 0; i < q.x.size(); ++i) s += q.w[i] * f(q.x[i]);
    return s;
}

// Tensor-product integration over per-axis composite rules.
std::complex<double> integrate_tensor(const std::vector<Quad1D>& axes,
                                      const std::function<std::complex<double>(const std::vector<double>&)>& f);

} // namespace ratmeyer
