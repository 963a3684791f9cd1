#ifndef SWIMGAIT_KINEMATIC_MODEL_HPP
#define SWIMGAIT_KINEMATIC_MODEL_HPP

#include "swimgait/shape_basis.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace swimgait {

// A point in the base (shape) space: Legendre coefficients for the
// spherical swimmer, joint angles in radians for the Purcell swimmer.
using ShapePoint = Eigen::VectorXd;

// Covector W(x) with hdot = W(x) . xdot.
using DisplacementForm = Eigen::VectorXd;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v, double slack = 0.0) const { return v >= lo - slack && v <= hi + slack; }
    double width() const { return hi - lo; }
};

using Bounds = std::vector<Interval>;

enum class ModelKind { SphericalRadial, SphericalAzimuthal, SphericalSeries, Purcell };

enum class DeformationMode { Radial, Azimuthal };

// One base coordinate of a series model: alpha_index or beta_index.
struct SeriesCoordinate {
    DeformationMode mode;
    int index;

    std::string label() const;
    // Parses "alpha3" / "beta2".
    static SeriesCoordinate parse(const std::string& text);
};

// Translational velocity of the spherical swimmer from the epsilon^2 series,
// summed over n = 2 .. N-1 where N is the common truncation order.
double spherical_hdot(const DeformationCoefficients& c, const CoefficientRates& rates);

/// Principal-kinematic swimmer model with group R (translation along e_z).
///
/// Pair models couple two successive modes n, n+1 only. Series models take
/// an arbitrary selection of alpha/beta coordinates and read the form off
/// the full series with every other coefficient held at zero. The Purcell
/// model is the symmetric four-limb swimmer on two joint angles.
class KinematicModel {
public:
    static KinematicModel spherical_radial(int n, double epsilon = 1.0);
    static KinematicModel spherical_azimuthal(int n, double epsilon = 1.0);
    static KinematicModel spherical_series(std::vector<SeriesCoordinate> coords, double epsilon = 1.0);
    // alpha_2..alpha_N followed by beta_2..beta_N.
    static KinematicModel spherical_full(int order, double epsilon = 1.0);
    static KinematicModel purcell(double drag = 1.0, double limb_length = 1.0);

    ModelKind kind() const { return kind_; }
    std::string name() const;
    int dimension() const { return static_cast<int>(bounds_.size()); }
    int full_space_dimension() const { return dimension() + 1; }
    double epsilon() const { return epsilon_; }
    int mode_index() const { return n_; }
    double drag() const { return drag_; }
    double limb_length() const { return limb_length_; }
    const std::vector<SeriesCoordinate>& series_coordinates() const { return coords_; }
    const Bounds& bounds() const { return bounds_; }

    // Returns a copy with different bounds; throws on empty intervals or a
    // dimension mismatch.
    KinematicModel with_bounds(Bounds bounds) const;

    bool contains(const ShapePoint& x, double slack = 1e-12) const;

    DisplacementForm displacement_form(const ShapePoint& x) const;

    // Lifted control fields on (h, x): field i is (W_i(x), e_i).
    std::vector<Eigen::VectorXd> control_fields(const ShapePoint& x) const;

private:
    KinematicModel() = default;
    void check_point(const ShapePoint& x) const;

    ModelKind kind_ = ModelKind::SphericalRadial;
    double epsilon_ = 1.0;
    int n_ = 2;
    double drag_ = 1.0;
    double limb_length_ = 1.0;
    std::vector<SeriesCoordinate> coords_;
    Bounds bounds_;
};

}  // namespace swimgait

#endif
