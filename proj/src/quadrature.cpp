#include "anisoem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace anisoem {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

std::vector<SphereNode> sphere_product_grid(int ntheta, int nphi) {
    if (ntheta < 1 || nphi < 1)
        throw std::invalid_argument("sphere_product_grid: node counts must be >= 1");
    std::vector<double> ct, wt;
    gauss_legendre(ntheta, ct, wt);

    std::vector<SphereNode> grid;
    grid.reserve(static_cast<std::size_t>(ntheta) * nphi);
    const double wphi = 2.0 * M_PI / nphi;
    for (int i = 0; i < ntheta; ++i) {
        const double c = ct[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int j = 0; j < nphi; ++j) {
            const double phi = wphi * (j + 0.5);
            SphereNode node;
            node.dir = Eigen::Vector3d(s * std::cos(phi), s * std::sin(phi), c);
            node.weight = wt[i] * wphi;
            grid.push_back(node);
        }
    }
    return grid;
}

double sine_integral(double x) {
    if (x < 0.0) return -sine_integral(-x);
    if (x == 0.0) return 0.0;

    if (x < 20.0) {
        // Si(x) = sum (-1)^k x^{2k+1} / ((2k+1)(2k+1)!), long double to absorb
        // the cancellation near the upper end of the range.
        long double term = x;  // k = 0 term
        long double sum = x;
        const long double x2 = static_cast<long double>(x) * x;
        for (int k = 1; k < 80; ++k) {
            term *= -x2 / ((2.0L * k) * (2.0L * k + 1.0L));
            const long double contrib = term / (2.0L * k + 1.0L);
            sum += contrib;
            if (std::abs(static_cast<double>(contrib)) < 1e-20 * std::abs(static_cast<double>(sum)))
                break;
        }
        return static_cast<double>(sum);
    }

    // Si(x) = pi/2 - f(x) cos(x) - g(x) sin(x) with the asymptotic auxiliary
    // series f ~ sum (-1)^k (2k)!/x^{2k+1}, g ~ sum (-1)^k (2k+1)!/x^{2k+2},
    // truncated where the terms stop decreasing.
    const double inv2 = 1.0 / (x * x);
    double f = 0.0, g = 0.0;
    double tf = 1.0 / x;   // (2k)!/x^{2k+1} at k = 0
    double tg = inv2;      // (2k+1)!/x^{2k+2} at k = 0
    for (int k = 0; k < 20; ++k) {
        f += (k % 2 == 0 ? tf : -tf);
        g += (k % 2 == 0 ? tg : -tg);
        const double nf = tf * (2.0 * k + 1.0) * (2.0 * k + 2.0) * inv2;
        const double ng = tg * (2.0 * k + 2.0) * (2.0 * k + 3.0) * inv2;
        if (nf >= tf || nf < 1e-18) break;
        tf = nf;
        tg = ng;
    }
    return M_PI / 2.0 - f * std::cos(x) - g * std::sin(x);
}

}  // namespace anisoem
