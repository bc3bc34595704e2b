#include "ratmeyer/boxes.hpp"

#include "ratmeyer/quadrature.hpp"

namespace ratmeyer {

std::complex<double> integrate_tensor(const std::vector<Quad1D>& axes,
                                      const std::function<std::complex<double>(const std::vector<double>&)>& f) {
    int n = int(axes.size());
    std::vector<size_t> idx(n, 0);
    std::vector<double> pt(n);
    std::complex<double> sum = 0;
    for (int i = 0; i < n; ++i)
        if (axes[i].x.empty()) return 0.0;
    while (true) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            pt[i] = axes[i].x[idx[i]];
            w *= axes[i].w[idx[i]];
        }
        sum += w * f(pt);
        int ax = 0;
        while (ax < n) {
            if (++idx[ax] < axes[ax].x.size()) break;
            idx[ax] = 0;
            ++ax;
        }
        if (ax == n) break;
    }
    return sum;
}

bool Box::valid() const {
    for (size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) return false;
    return true;
}

bool Box::contains(const RatVector& x) const {
    for (size_t i = 0; i < lo.size(); ++i)
        if (x[i] < lo[i] || hi[i] < x[i]) return false;
    return true;
}

bool Box::contains_interior(const RatVector& x) const {
    for (size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < x[i] && x[i] < hi[i])) return false;
    return true;
}

Rational Box::volume() const {
    Rational v(1);
    for (size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
}

Box Box::inflated(const Rational& eps) const {
    Box b = *this;
    for (size_t i = 0; i < lo.size(); ++i) {
        b.lo[i] -= eps;
        b.hi[i] += eps;
    }
    return b;
}

bool Box::deflated(const Rational& eps, Box& out) const {
    out = *this;
    for (size_t i = 0; i < lo.size(); ++i) {
        out.lo[i] += eps;
        out.hi[i] -= eps;
        if (!(out.lo[i] < out.hi[i])) return false;
    }
    return true;
}

bool BoxUnion::contains(const RatVector& x) const {
    for (const auto& b : boxes)
        if (b.contains(x)) return true;
    return false;
}

bool BoxUnion::contains_interior(const RatVector& x) const {
    for (const auto& b : boxes)
        if (b.contains_interior(x)) return true;
    return false;
}

BoxUnion BoxUnion::inflated(const Rational& eps) const {
    BoxUnion u;
    for (const auto& b : boxes) u.boxes.push_back(b.inflated(eps));
    return u;
}

BoxUnion BoxUnion::deflated(const Rational& eps) const {
    BoxUnion u;
    for (const auto& b : boxes) {
        Box d;
        if (b.deflated(eps, d)) u.boxes.push_back(d);
    }
    return u;
}

Box BoxUnion::bounding() const {
    if (boxes.empty()) throw std::domain_error("bounding: empty union");
    Box b = boxes.front();
    for (const auto& x : boxes)
        for (size_t i = 0; i < b.lo.size(); ++i) {
            if (x.lo[i] < b.lo[i]) b.lo[i] = x.lo[i];
            if (b.hi[i] < x.hi[i]) b.hi[i] = x.hi[i];
        }
    return b;
}

Rational BoxUnion::volume() const {
    Rational v(0);
    for (const auto& b : boxes) v += b.volume();
    return v;
}

bool BoxUnion::interiors_disjoint() const {
    for (size_t i = 0; i < boxes.size(); ++i)
        for (size_t j = i + 1; j < boxes.size(); ++j) {
            bool overlap = true;
            for (int d = 0; d < boxes[i].dim() && overlap; ++d) {
                Rational lo = boxes[i].lo[d] > boxes[j].lo[d] ? boxes[i].lo[d] : boxes[j].lo[d];
                Rational hi = boxes[i].hi[d] < boxes[j].hi[d] ? boxes[i].hi[d] : boxes[j].hi[d];
                if (!(lo < hi)) overlap = false;
            }
            if (overlap) return false;
        }
    return true;
}

BoxUnion BoxUnion::interval(const Rational& a, const Rational& b) {
    BoxUnion u;
    u.boxes.push_back(Box{{a}, {b}});
    return u;
}

BoxUnion BoxUnion::product(const std::vector<std::vector<std::pair<Rational, Rational>>>& axes) {
    int n = int(axes.size());
    BoxUnion u;
    std::vector<size_t> idx(n, 0);
    for (const auto& ax : axes)
        if (ax.empty()) return u;
    while (true) {
        Box b;
        b.lo.resize(n);
        b.hi.resize(n);
        for (int i = 0; i < n; ++i) {
            b.lo[i] = axes[i][idx[i]].first;
            b.hi[i] = axes[i][idx[i]].second;
        }
        u.boxes.push_back(std::move(b));
        int ax = 0;
        while (ax < n) {
            if (++idx[ax] < axes[ax].size()) break;
            idx[ax] = 0;
            ++ax;
        }
        if (ax == n) break;
    }
    return u;
}

} // namespace ratmeyer
