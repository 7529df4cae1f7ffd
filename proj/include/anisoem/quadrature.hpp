#ifndef ANISOEM_QUADRATURE_HPP
#define ANISOEM_QUADRATURE_HPP

#include <Eigen/Dense>
#include <vector>

namespace anisoem {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on P_n. Deterministic for a given n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// One direction sample on the unit sphere with its solid-angle weight.
struct SphereNode {
    Eigen::Vector3d dir;
    double weight;  // includes sin(theta) Jacobian; sum over grid = 4*pi
};

/// Product grid: Gauss-Legendre in cos(theta) x uniform midpoint in phi.
/// Exact for spherical polynomials up to degree min(2*ntheta-1, nphi-1);
/// node order is (theta-major, phi-minor) and fixed, so reductions over the
/// grid are reproducible.
std::vector<SphereNode> sphere_product_grid(int ntheta, int nphi);

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
/// Power series (long double) below x = 20, asymptotic auxiliary expansion
/// above; absolute error < ~1e-9 over the real line. Odd in x.
double sine_integral(double x);

/// Integrate f over [a, b] with an n-point Gauss-Legendre rule.
template <typename F>
double gl_integrate(const F& f, double a, double b, const std::vector<double>& nodes,
                    const std::vector<double>& weights) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        acc += weights[i] * f(mid + half * nodes[i]);
    }
    return acc * half;
}

}  // namespace anisoem

#endif
