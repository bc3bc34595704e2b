#pragma once

#include "ratmeyer/ratmatrix.hpp"

namespace ratmeyer {

// Closed axis-aligned box with exact rational corners.
struct Box {
    RatVector lo, hi;

    int dim() const { return int(lo.size()); }
    bool valid() const;
    bool contains(const RatVector& x) const;           // closed
    bool contains_interior(const RatVector& x) const;  // open
    Rational volume() const;
    Box inflated(const Rational& eps) const;
    // Deflation can empty a box; returns false in that case.
    bool deflated(const Rational& eps, Box& out) const;
};

struct BoxUnion {
    std::vector<Box> boxes;

    int dim() const { return boxes.empty() ? 0 : boxes.front().dim(); }
    bool empty() const { return boxes.empty(); }
    bool contains(const RatVector& x) const;
    bool contains_interior(const RatVector& x) const;
    BoxUnion inflated(const Rational& eps) const;
    BoxUnion deflated(const Rational& eps) const;
    Box bounding() const;
    Rational volume() const;  // meaningful for interior-disjoint unions
    bool interiors_disjoint() const;

    static BoxUnion interval(const Rational& a, const Rational& b);
    // Cartesian product of per-axis interval lists.
    static BoxUnion product(const std::vector<std::vector<std::pair<Rational, Rational>>>& axes);
};

} // namespace ratmeyer
