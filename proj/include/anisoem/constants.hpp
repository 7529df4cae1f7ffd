#ifndef ANISOEM_CONSTANTS_HPP
#define ANISOEM_CONSTANTS_HPP

namespace anisoem {

/// Physical constants in SI units. All fields are configurable so scaled
/// unit systems (hbar = c = 1, ...) can be used in tests and batch studies.
///
/// The default eps0 is derived as 1/(mu0*c^2) rather than taken from the
/// independently rounded CODATA decimal, so that vacuum dispersion closes to
/// machine precision: omega = |q|/sqrt(eps0*mu0) == c|q|.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;            // J s
    double mu0 = 1.25663706212e-6;            // H/m  (CODATA 2018)
    double c = 299792458.0;                   // m/s  (exact)
    double eps0 = 1.0 / (mu0 * c * c);        // F/m

    static PhysicalConstants natural() {
        PhysicalConstants k;
        k.hbar = 1.0;
        k.mu0 = 1.0;
        k.c = 1.0;
        k.eps0 = 1.0;
        return k;
    }
};

}  // namespace anisoem

#endif
