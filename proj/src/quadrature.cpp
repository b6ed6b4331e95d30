#include "parex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace parex {

namespace {

GaussLegendre compute_gl(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussLegendre& GaussLegendre::get(int order) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

PanelAxis PanelAxis::from_edges(std::vector<double> edges, int order) {
    if (edges.size() < 2) throw std::invalid_argument("PanelAxis: need >= 2 edges");
    const auto& gl = GaussLegendre::get(order);
    PanelAxis axis;
    axis.edges = std::move(edges);
    const std::size_t m = axis.edges.size() - 1;
    axis.nodes.reserve(m * order);
    axis.weights.reserve(m * order);
    for (std::size_t p = 0; p < m; ++p) {
        const double a = axis.edges[p], b = axis.edges[p + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int k = 0; k < order; ++k) {
            axis.nodes.push_back(mid + half * gl.nodes[k]);
            axis.weights.push_back(half * gl.weights[k]);
        }
    }
    return axis;
}

PanelAxis PanelAxis::uniform(double a, double b, int panels, int order) {
    std::vector<double> edges(panels + 1);
    for (int i = 0; i <= panels; ++i) edges[i] = a + (b - a) * i / panels;
    return from_edges(std::move(edges), order);
}

std::vector<double> make_edges(std::vector<double> breaks, double lo, double hi,
                               double max_width) {
    breaks.push_back(lo);
    breaks.push_back(hi);
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> edges;
    edges.push_back(lo);
    const double eps = 1e-12 * std::max(1.0, std::abs(hi - lo));
    for (double b : breaks) {
        if (b <= lo + eps || b >= hi - eps) continue;
        if (b - edges.back() > eps) edges.push_back(b);
    }
    edges.push_back(hi);
    if (max_width > 0.0) {
        std::vector<double> refined;
        refined.push_back(edges.front());
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double a = edges[i], b = edges[i + 1];
            const int sub = std::max(1, (int)std::ceil((b - a) / max_width));
            for (int k = 1; k <= sub; ++k) refined.push_back(a + (b - a) * k / sub);
        }
        edges = std::move(refined);
    }
    return edges;
}

SampledField2D SampledField2D::from_function(const Grid2D& g,
                                             const std::function<double(Vec2)>& f) {
    SampledField2D out{g, std::vector<double>(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = f(g.point(i));
    return out;
}

double SampledField2D::integral() const {
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        terms[i] = grid.weight(i) * values[i];
    return pairwise_sum(terms);
}

double SampledField2D::inner(const SampledField2D& other) const {
    if (other.values.size() != values.size())
        throw std::invalid_argument("SampledField2D::inner: grid mismatch");
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        terms[i] = grid.weight(i) * values[i] * other.values[i];
    return pairwise_sum(terms);
}

double SampledField2D::l2_norm() const { return std::sqrt(std::max(0.0, inner(*this))); }

SampledField2D& SampledField2D::operator+=(const SampledField2D& other) {
    if (other.values.size() != values.size())
        throw std::invalid_argument("SampledField2D::+=: grid mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
    return *this;
}

SampledField2D& SampledField2D::scale(double a) {
    for (double& v : values) v *= a;
    return *this;
}

complex_t ComplexField2D::integral() const {
    std::vector<complex_t> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        terms[i] = grid.weight(i) * values[i];
    return pairwise_sum(terms);
}

double ComplexField2D::l2_norm() const {
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        terms[i] = grid.weight(i) * std::norm(values[i]);
    return std::sqrt(std::max(0.0, pairwise_sum(terms)));
}

double ComplexField2D::sup_norm() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

ComplexField2D& ComplexField2D::operator+=(const ComplexField2D& other) {
    if (other.values.size() != values.size())
        throw std::invalid_argument("ComplexField2D::+=: grid mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
    return *this;
}

namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> v) {
    if (v.size() <= 8) {
        T s{};
        for (const T& x : v) s += x;
        return s;
    }
    const std::size_t h = v.size() / 2;
    return pairwise_sum_impl(v.subspan(0, h)) + pairwise_sum_impl(v.subspan(h));
}

double gl_box(const std::function<double(Vec2)>& f, Rect box, int order) {
    const auto& gl = GaussLegendre::get(order);
    const double mx = 0.5 * (box.x0 + box.x1), hx = 0.5 * (box.x1 - box.x0);
    const double my = 0.5 * (box.y0 + box.y1), hy = 0.5 * (box.y1 - box.y0);
    double s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        for (std::size_t j = 0; j < gl.nodes.size(); ++j)
            s += gl.weights[i] * gl.weights[j] *
                 f({mx + hx * gl.nodes[i], my + hy * gl.nodes[j]});
    return s * hx * hy;
}

complex_t gl_box_c(const std::function<complex_t(Vec2)>& f, Rect box, int order) {
    const auto& gl = GaussLegendre::get(order);
    const double mx = 0.5 * (box.x0 + box.x1), hx = 0.5 * (box.x1 - box.x0);
    const double my = 0.5 * (box.y0 + box.y1), hy = 0.5 * (box.y1 - box.y0);
    complex_t s{0.0, 0.0};
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        for (std::size_t j = 0; j < gl.nodes.size(); ++j)
            s += gl.weights[i] * gl.weights[j] *
                 f({mx + hx * gl.nodes[i], my + hy * gl.nodes[j]});
    return s * (hx * hy);
}

template <typename T, typename F, typename Q>
T adaptive_impl(const F& f, Rect box, double tol, int depth, const Q& quad) {
    const T coarse = quad(f, box, 6);
    const T fine = quad(f, box, 10);
    if (std::abs(fine - coarse) <= tol || depth <= 0) return fine;
    const double mx = 0.5 * (box.x0 + box.x1), my = 0.5 * (box.y0 + box.y1);
    const Rect q[4] = {{box.x0, mx, box.y0, my},
                       {mx, box.x1, box.y0, my},
                       {box.x0, mx, my, box.y1},
                       {mx, box.x1, my, box.y1}};
    T s{};
    for (const Rect& r : q) s += adaptive_impl<T>(f, r, tol / 4.0, depth - 1, quad);
    return s;
}

}  // namespace

double pairwise_sum(std::span<const double> v) { return pairwise_sum_impl(v); }
complex_t pairwise_sum(std::span<const complex_t> v) { return pairwise_sum_impl(v); }

double adaptive_integrate(const std::function<double(Vec2)>& f, Rect box,
                          double tol, int max_depth) {
    return adaptive_impl<double>(f, box, tol, max_depth, gl_box);
}

complex_t adaptive_integrate_complex(const std::function<complex_t(Vec2)>& f,
                                     Rect box, double tol, int max_depth) {
    return adaptive_impl<complex_t>(f, box, tol, max_depth, gl_box_c);
}

}  // namespace parex
