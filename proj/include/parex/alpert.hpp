#pragma once

#include <array>
#include <vector>

#include "parex/dyadic.hpp"
#include "parex/geometry.hpp"
#include "parex/quadrature.hpp"

namespace parex {
namespace alpert {

inline constexpr int kMaxKappa = 6;

// Dense bivariate polynomial sum c[i][j] u^i v^j on local coordinates.
struct Poly2 {
    int n = 0;                // coefficients for exponents 0..n-1 per axis
    std::vector<double> c;    // row-major, c[i*n + j]

    double at(int i, int j) const { return c[i * n + j]; }
    double& at(int i, int j) { return c[i * n + j]; }
    double eval(double u, double v) const;
};

// Exact piecewise polynomial on the unit square: one polynomial per child in
// child-local coordinates (each child mapped onto [0,1]^2).
struct PiecewisePoly {
    std::array<Poly2, 4> pieces;  // child order: LL, LR, UL, UR

    // x in unit-square coordinates; 0 outside [0,1]^2.
    double eval(Vec2 x) const;
    // Exact integral of this function times x1^bx x2^by over the unit square.
    double moment(int bx, int by) const;
    // Exact L2 inner product with another piecewise polynomial.
    double inner(const PiecewisePoly& other) const;
};

// Raw Alpert atoms at unit scale for a given kappa: an orthonormal basis of
// the space of piecewise polynomials of degree <= kappa-1 on the children
// whose moments against every x^beta, |beta| <= kappa-1, vanish.
class AlpertBasis {
public:
    static const AlpertBasis& get(int kappa);

    int kappa() const { return kappa_; }
    int count() const { return static_cast<int>(atoms_.size()); }
    const PiecewisePoly& atom(int a) const { return atoms_[a]; }

    // All raw atom values at a point (unit-square coordinates).
    void eval_all(Vec2 x, double* out) const;

    static int dimension(int kappa) { return 3 * kappa * (kappa + 1) / 2; }

private:
    explicit AlpertBasis(int kappa);
    int kappa_;
    std::vector<PiecewisePoly> atoms_;
};

// Mollifier phi = P(x) psi(x) on B(0,1), psi the standard exponential bump,
// with unit mass and vanishing moments of positive order below kappa.
class Mollifier {
public:
    static Mollifier build(double eta, int kappa, int radial_nodes = 192);

    double eta() const { return eta_; }
    int kappa() const { return kappa_; }

    // Base profile on the unit ball.
    double eval(Vec2 y) const;
    // phi_r(y) = r^{-2} phi(y/r).
    double eval_scaled(Vec2 y, double r) const {
        return eval({y.x / r, y.y / r}) / (r * r);
    }
    // Residual moments |gamma| < kappa measured with an independent
    // finer radial rule; index order matches moment_indices().
    std::vector<double> moment_residuals() const;
    static std::vector<std::pair<int, int>> moment_indices(int kappa);

    // Correction-polynomial coefficient for even multi-index (gx,gy).
    const std::vector<std::pair<std::pair<int, int>, double>>& coefficients()
        const {
        return coef_;
    }
    SampledField2D sampled(int panels_per_axis) const;

private:
    double eta_ = 0.0;
    int kappa_ = 0;
    std::vector<std::pair<std::pair<int, int>, double>> coef_;
};

// Smooth Alpert atoms at unit scale: the raw atoms convolved with
// phi_eta.  Values equal the raw polynomial away from the mollified bands
// around the child boundaries; inside the bands they come from tabulated
// convolutions (Chebyshev across each band, exact polynomial interpolation
// along it, dense 2D patches at line junctions).
class SmoothAtomFamily {
public:
    static const SmoothAtomFamily& get(int kappa, double eta);

    int kappa() const { return kappa_; }
    double eta() const { return eta_; }
    int count() const { return basis_->count(); }
    const AlpertBasis& raw() const { return *basis_; }
    const Mollifier& mollifier() const { return mollifier_; }

    // Support of every smooth atom is [-eta, 1+eta]^2, i.e. (1+2 eta)Q0.
    Rect support() const { return {-eta_, 1.0 + eta_, -eta_, 1.0 + eta_}; }

    // Fast tabulated evaluation of all atoms at x (unit coordinates).
    void eval_all(Vec2 x, double* out) const;
    // Direct convolution quadrature; the oracle the tables are checked
    // against.
    void eval_all_direct(Vec2 x, double* out) const;

    // Panel breakpoints (one axis, unit scale): dyadic lines of the square
    // and the band edges around them.  Pair quadratures align to these.
    std::vector<double> axis_breaks() const;

private:
    SmoothAtomFamily(int kappa, double eta);
    void build_tables();

    struct Patch {  // 2D Chebyshev table on a junction box
        double cx, cy;
        std::vector<double> values;  // [kx][ky][atom]
    };
    struct Segment {  // along-direction nodes between junction zones
        double a, b;
        int n;
        std::vector<double> values;  // [along][across][atom]
    };
    struct Strip {
        bool vertical;
        double line;  // 0, 0.5 or 1
        std::array<Segment, 2> segments;
    };

    void eval_strip(const Strip& s, Vec2 x, double* out) const;
    void eval_patch(const Patch& p, Vec2 x, double* out) const;

    int kappa_;
    double eta_;
    const AlpertBasis* basis_;
    Mollifier mollifier_;
    std::vector<Patch> patches_;
    std::vector<Strip> strips_;
};

// One Alpert wavelet attached to a dyadic square: the raw piecewise
// polynomial and its mollified variant, both affine images of the unit-scale
// family with L2 normalization.
struct WaveletAtom {
    dyadic::DyadicSquare square;
    int index = 0;
    int kappa = 2;
    double eta = 0.02;

    const SmoothAtomFamily& family() const {
        return SmoothAtomFamily::get(kappa, eta);
    }
    Rect support() const { return square.rect().scaled(1.0 + 2.0 * eta); }

    double raw(Vec2 x) const;
    double smooth(Vec2 x) const;

    // Raw coefficient table (child, alpha, coefficient) in child-local
    // coordinates; the CSV dump format reads straight off this.
    const PiecewisePoly& raw_poly() const {
        return AlpertBasis::get(kappa).atom(index);
    }

    // Mollified variant rendered on a uniform sampling grid,
    // samples_per_band GL nodes across each smoothing band.
    SampledField2D smooth_sampled(int samples_per_band = 16) const;
};

std::vector<WaveletAtom> build_alpert_basis(const dyadic::DyadicSquare& q,
                                            int kappa, double eta);

// Signed moment of a sampled field against x1^bx x2^by.
double moment(const SampledField2D& f, int bx, int by);
// Exact moment of a raw piecewise polynomial (unit square).
double moment(const PiecewisePoly& p, int bx, int by);
// Moment of a unit-scale smooth atom by band-aligned panel quadrature.
double smooth_atom_moment(const SmoothAtomFamily& fam, int atom, int bx,
                          int by, int order = 12);

}  // namespace alpert
}  // namespace parex
