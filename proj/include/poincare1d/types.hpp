#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace poincare1d {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Shared comparison thresholds: `relative` for composed group/action laws,
/// `absolute` for identity-type residuals.
struct Tolerances {
    double relative = 1e-9;
    double absolute = 1e-12;
};

/// A boost speed violates |v| < c in a finite-c regime.
class VelocityOutOfRange : public std::domain_error {
public:
    explicit VelocityOutOfRange(const std::string& what) : std::domain_error(what) {}
};

/// An operation that divides by the central moment f was given f = 0.
class DegenerateOrbit : public std::domain_error {
public:
    explicit DegenerateOrbit(const std::string& what) : std::domain_error(what) {}
};

/// A finite-c-only quantity was requested in the Galilean regime.
class GalileanRegime : public std::domain_error {
public:
    explicit GalileanRegime(const std::string& what) : std::domain_error(what) {}
};

/// A grid specification is malformed, non-increasing, or inadmissible.
class InvalidGrid : public std::invalid_argument {
public:
    explicit InvalidGrid(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace poincare1d
