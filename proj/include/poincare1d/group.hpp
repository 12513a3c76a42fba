#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "poincare1d/types.hpp"

namespace poincare1d {

/// Kinematic regime: a finite speed of light, or the Galilean limit where
/// 1/c^2 is exactly zero. Immutable and threaded explicitly through every
/// operation; there is no global speed of light.
class KinematicParams {
public:
    /// Finite regime. Throws std::invalid_argument unless c is positive,
    /// finite, and small enough that c^2 does not overflow.
    static KinematicParams speed_of_light(double c) {
        if (!(c > 0.0) || !std::isfinite(c))
            throw std::invalid_argument("speed of light must be positive and finite");
        const double inv_c2 = 1.0 / (c * c);
        if (inv_c2 == 0.0)
            throw std::invalid_argument("speed of light too large: 1/c^2 underflows to zero");
        return KinematicParams(c, inv_c2);
    }

    /// Regime with 1/c^2 == 0: boosts become shears, velocities add linearly.
    static KinematicParams galilean() {
        return KinematicParams(std::numeric_limits<double>::infinity(), 0.0);
    }

    double c() const { return c_; }            ///< +infinity in the Galilean regime
    double inv_c2() const { return inv_c2_; }  ///< exactly 0 in the Galilean regime
    bool is_galilean() const { return inv_c2_ == 0.0; }

private:
    KinematicParams(double c, double inv_c2) : c_(c), inv_c2_(inv_c2) {}
    double c_;
    double inv_c2_;
};

/// Boost by v followed by translation by (tau, x).
struct GroupElement {
    double v = 0.0;    ///< boost speed
    double tau = 0.0;  ///< time translation
    double x = 0.0;    ///< space translation

    static GroupElement identity() { return {}; }
};

/// Group element of the central extension; zeta is the central parameter
/// (units length*time).
struct ExtendedGroupElement {
    double v = 0.0;
    double tau = 0.0;
    double x = 0.0;
    double zeta = 0.0;

    static ExtendedGroupElement identity() { return {}; }
    GroupElement projection() const { return {v, tau, x}; }
};

/// Fixed ordering of the extended-algebra basis. Every coefficient vector
/// and every structure-constant index in this library uses it.
enum class Basis : int { K = 0, P = 1, E = 2, F = 3 };

inline constexpr int kAlgebraDim = 4;

/// Element of the extended Lie algebra as coefficients on the ordered basis
/// (K, P, E, F): K boosts, P space translations, E time translations, F the
/// central generator.
struct AlgebraElement {
    Vec4 coeffs = Vec4::Zero();

    AlgebraElement() = default;
    AlgebraElement(double a_k, double a_p, double a_e, double a_f)
        : coeffs(a_k, a_p, a_e, a_f) {}

    static AlgebraElement basis(Basis b) {
        AlgebraElement out;
        out.coeffs[static_cast<int>(b)] = 1.0;
        return out;
    }

    double coeff(Basis b) const { return coeffs[static_cast<int>(b)]; }
};

namespace detail {

inline void require_admissible_speed(double v, const KinematicParams& params) {
    if (params.is_galilean()) return;
    if (!(std::abs(v) < params.c())) {
        std::ostringstream msg;
        msg << "speed " << v << " is not admissible: |v| must be < c = " << params.c();
        throw VelocityOutOfRange(msg.str());
    }
}

}  // namespace detail

/// Boost factor 1/sqrt(1 - v^2/c^2); exactly 1 in the Galilean regime.
inline double gamma_factor(double v, const KinematicParams& params) {
    detail::require_admissible_speed(v, params);
    return 1.0 / std::sqrt(1.0 - v * v * params.inv_c2());
}

/// Relativistic speed composition (v1 + v2)/(1 + v1 v2/c^2); plain addition
/// in the Galilean regime.
inline double velocity_add(double v1, double v2, const KinematicParams& params) {
    detail::require_admissible_speed(v1, params);
    detail::require_admissible_speed(v2, params);
    return (v1 + v2) / (1.0 + v1 * v2 * params.inv_c2());
}

/// Group multiplication g1 * g2.
inline GroupElement compose(const GroupElement& g1, const GroupElement& g2,
                            const KinematicParams& params) {
    const double g = gamma_factor(g1.v, params);
    const double v = velocity_add(g1.v, g2.v, params);
    return {v,
            g * g2.tau + g * g1.v * g2.x * params.inv_c2() + g1.tau,
            g * g1.v * g2.tau + g * g2.x + g1.x};
}

/// Closed-form group inverse: compose(g, inverse(g)) is the identity.
inline GroupElement inverse(const GroupElement& g1, const KinematicParams& params) {
    const double g = gamma_factor(g1.v, params);
    return {-g1.v,
            -g * (g1.tau - g1.v * g1.x * params.inv_c2()),
            -g * (g1.x - g1.v * g1.tau)};
}

/// Multiplication in the central extension. The (v, tau, x) part is the
/// base-group product; the zeta part adds the two-cocycle
/// (1/2) gamma (x - v tau) tau' - (1/2) gamma (tau - v x/c^2) x'.
inline ExtendedGroupElement compose(const ExtendedGroupElement& h1,
                                    const ExtendedGroupElement& h2,
                                    const KinematicParams& params) {
    const GroupElement base = compose(h1.projection(), h2.projection(), params);
    const double g = gamma_factor(h1.v, params);
    const double zeta = h1.zeta + h2.zeta +
                        0.5 * g * (h1.x - h1.v * h1.tau) * h2.tau -
                        0.5 * g * (h1.tau - h1.v * h1.x * params.inv_c2()) * h2.x;
    return {base.v, base.tau, base.x, zeta};
}

/// Structure constants c^k_{ij} of the extended algebra over (K, P, E, F):
/// [e_i, e_j] = sum_k c^k_{ij} e_k. The nonzero brackets are
/// [K, E] = P, [K, P] = (1/c^2) E, [P, E] = F; F is central.
class StructureConstants {
public:
    explicit StructureConstants(const KinematicParams& params) {
        for (auto& m : table_) m.setZero();
        set(Basis::K, Basis::E, Basis::P, 1.0);
        set(Basis::K, Basis::P, Basis::E, params.inv_c2());
        set(Basis::P, Basis::E, Basis::F, 1.0);
    }

    /// c^k_{ij}
    double coeff(Basis k, Basis i, Basis j) const {
        return table_[static_cast<int>(k)](static_cast<int>(i), static_cast<int>(j));
    }

    /// Matrix (i, j) -> c^k_{ij} for a fixed output component k.
    const Mat4& component(Basis k) const { return table_[static_cast<int>(k)]; }

private:
    void set(Basis i, Basis j, Basis k, double value) {
        table_[static_cast<int>(k)](static_cast<int>(i), static_cast<int>(j)) = value;
        table_[static_cast<int>(k)](static_cast<int>(j), static_cast<int>(i)) = -value;
    }

    std::array<Mat4, kAlgebraDim> table_;
};

/// Lie bracket [a, b], the bilinear antisymmetric product determined by the
/// structure constants. Evaluated over the upper triangle as
/// c^k_{ij} (a_i b_j - a_j b_i), which keeps antisymmetry exact in floating
/// point.
inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b,
                              const KinematicParams& params) {
    const StructureConstants sc(params);
    AlgebraElement out;
    for (int k = 0; k < kAlgebraDim; ++k) {
        double acc = 0.0;
        for (int i = 0; i < kAlgebraDim; ++i) {
            for (int j = i + 1; j < kAlgebraDim; ++j) {
                const double c = sc.component(static_cast<Basis>(k))(i, j);
                if (c != 0.0) acc += c * (a.coeffs[i] * b.coeffs[j] - a.coeffs[j] * b.coeffs[i]);
            }
        }
        out.coeffs[k] = acc;
    }
    return out;
}

/// Largest absolute value of the cyclic Jacobi sum
/// sum_m (c^m_{ij} c^n_{mk} + c^m_{jk} c^n_{mi} + c^m_{ki} c^n_{mj})
/// over all index choices; zero for a valid Lie algebra.
inline double jacobi_defect(const StructureConstants& sc) {
    double worst = 0.0;
    for (int i = 0; i < kAlgebraDim; ++i)
        for (int j = 0; j < kAlgebraDim; ++j)
            for (int k = 0; k < kAlgebraDim; ++k)
                for (int n = 0; n < kAlgebraDim; ++n) {
                    double sum = 0.0;
                    for (int m = 0; m < kAlgebraDim; ++m) {
                        const auto B = [&sc](int p, int q, int r) {
                            return sc.coeff(static_cast<Basis>(r), static_cast<Basis>(p),
                                            static_cast<Basis>(q));
                        };
                        sum += B(i, j, m) * B(m, k, n) + B(j, k, m) * B(m, i, n) +
                               B(k, i, m) * B(m, j, n);
                    }
                    worst = std::max(worst, std::abs(sum));
                }
    return worst;
}

}  // namespace poincare1d
