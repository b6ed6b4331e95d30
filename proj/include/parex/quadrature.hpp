#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "parex/geometry.hpp"

namespace parex {

// Gauss-Legendre rule on [-1,1], computed once per order by Newton iteration
// on the Legendre recurrence.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendre& get(int order);
};

// One quadrature axis: a sorted list of panel edges with a tensor GL rule per
// panel.  Panels aligned to dyadic lines and to mollifier band edges keep the
// integrands piecewise smooth, which is what makes order-8 panels accurate.
struct PanelAxis {
    std::vector<double> edges;    // size m+1, strictly increasing
    std::vector<double> nodes;    // size m*order
    std::vector<double> weights;  // size m*order

    std::size_t size() const { return nodes.size(); }

    static PanelAxis from_edges(std::vector<double> edges, int order);
    // Uniform panels over [a,b].
    static PanelAxis uniform(double a, double b, int panels, int order);
};

// Merge breakpoints, clip to [lo,hi], drop near-duplicates, and cap panel
// width at max_width by uniform subdivision (used for oscillatory phases).
std::vector<double> make_edges(std::vector<double> breaks, double lo, double hi,
                               double max_width);

// Tensor-product quadrature grid over a rectangle.
struct Grid2D {
    PanelAxis ax, ay;

    std::size_t size() const { return ax.size() * ay.size(); }
    Vec2 point(std::size_t i) const {
        return {ax.nodes[i / ay.size()], ay.nodes[i % ay.size()]};
    }
    double weight(std::size_t i) const {
        return ax.weights[i / ay.size()] * ay.weights[i % ay.size()];
    }
};

// Function samples on a Grid2D; inner products are plain weighted sums.
struct SampledField2D {
    Grid2D grid;
    std::vector<double> values;

    static SampledField2D zero(const Grid2D& g) {
        return {g, std::vector<double>(g.size(), 0.0)};
    }
    static SampledField2D from_function(const Grid2D& g,
                                        const std::function<double(Vec2)>& f);

    double integral() const;
    double inner(const SampledField2D& other) const;
    double l2_norm() const;
    SampledField2D& operator+=(const SampledField2D& other);
    SampledField2D& scale(double a);
};

// Complex-valued counterpart (modulated pieces and synthesized polynomials).
struct ComplexField2D {
    Grid2D grid;
    std::vector<complex_t> values;

    static ComplexField2D zero(const Grid2D& g) {
        return {g, std::vector<complex_t>(g.size(), complex_t{0.0, 0.0})};
    }
    complex_t integral() const;
    double l2_norm() const;
    double sup_norm() const;
    ComplexField2D& operator+=(const ComplexField2D& other);
};

// Fixed-order deterministic pairwise sum; reductions must not depend on the
// thread partition.
double pairwise_sum(std::span<const double> v);
complex_t pairwise_sum(std::span<const complex_t> v);

// Adaptive 2D quadrature (tensor GL with recursive bisection) used as an
// independent oracle in tests and cross-checks.
double adaptive_integrate(const std::function<double(Vec2)>& f, Rect box,
                          double tol, int max_depth = 14);
complex_t adaptive_integrate_complex(const std::function<complex_t(Vec2)>& f,
                                     Rect box, double tol, int max_depth = 14);

}  // namespace parex
