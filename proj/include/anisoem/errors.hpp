#ifndef ANISOEM_ERRORS_HPP
#define ANISOEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anisoem {

/// Bad configuration: malformed files, unknown keys, out-of-range parameters.
/// CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerics failed to converge or a linear system is too ill-conditioned to
/// trust. CLI exit code 3.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input violates a physical constraint (Onsager relations, positive
/// definiteness, metric signature, singular projector at q = 0, ...).
/// CLI exit code 4.
struct PhysicsError : std::runtime_error {
    explicit PhysicsError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace anisoem

#endif
