#ifndef SWIMGAIT_SHAPE_BASIS_HPP
#define SWIMGAIT_SHAPE_BASIS_HPP

#include <span>
#include <vector>

namespace swimgait {

// Legendre polynomial P_n(x) by the three-term recurrence. Throws
// std::domain_error for |x| > 1 (with a 1e-12 allowance) and
// std::invalid_argument for n < 0.
double legendre_p(int n, double x);

// Derivative P_n'(x), from the recurrence P'_{n+1} = (2n+1) P_n + P'_{n-1}.
double legendre_dp(int n, double x);

// Tangential deformation basis V_n(cos theta) = d/dtheta[P_n(cos theta)] / (n+1).
double basis_v(int n, double theta);

/// Coefficients of an axisymmetric deformation of the unit sphere.
///
/// alpha[n] scales the radial mode P_n(cos theta), beta[n] the tangential
/// mode V_n(cos theta). Both sequences hold entries for n = 0..order().
struct DeformationCoefficients {
    double epsilon = 1.0;
    std::vector<double> alpha;
    std::vector<double> beta;

    static DeformationCoefficients zeros(int order, double epsilon = 1.0);

    int order() const { return static_cast<int>(alpha.size()) - 1; }

    // Throws std::invalid_argument if any invariant is broken.
    void validate() const;
};

/// Time derivatives of the deformation coefficients; the control inputs.
struct CoefficientRates {
    std::vector<double> alpha_dot;
    std::vector<double> beta_dot;

    static CoefficientRates zeros(int order);
};

struct SurfacePoint {
    double r_star;
    double theta_star;
};

struct SurfaceVelocity {
    double v_r;
    double v_theta;
};

SurfacePoint deformed_surface(const DeformationCoefficients& c, double theta);

SurfaceVelocity surface_velocity(const CoefficientRates& rates, double epsilon, double theta);

struct SurfaceSample {
    double theta;
    double r_star;
    double theta_star;
};

struct SurfaceProfile {
    std::vector<SurfaceSample> samples;
    // True when r* <= 0 at some sample; the surface self-intersects.
    bool degenerate = false;
};

// Samples the deformed surface on a uniform theta grid over [0, pi].
SurfaceProfile sample_surface(const DeformationCoefficients& c, int points = 181);

}  // namespace swimgait

#endif
