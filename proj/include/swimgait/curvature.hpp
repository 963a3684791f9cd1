#ifndef SWIMGAIT_CURVATURE_HPP
#define SWIMGAIT_CURVATURE_HPP

#include "swimgait/kinematic_model.hpp"

#include <vector>

namespace swimgait {

// kappa = dW2/dx1 - dW1/dx2 by central differences. 2-D models only.
double curvature_numeric(const KinematicModel& model, const ShapePoint& x, double step = 1e-5);

bool has_analytic_curvature(const KinematicModel& model);

// Closed-form curvature; throws std::invalid_argument for series models.
double curvature_analytic(const KinematicModel& model, const ShapePoint& x);

// Analytic where available, numeric otherwise.
double curvature(const KinematicModel& model, const ShapePoint& x);

/// Curvature sampled on a uniform rectangular grid, stored row-major with
/// the first coordinate as the outer index.
struct CurvatureGrid {
    Interval axis1;
    Interval axis2;
    int resolution1 = 0;
    int resolution2 = 0;
    std::vector<double> values;

    double coordinate1(int i) const;
    double coordinate2(int j) const;
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * resolution2 + j]; }
    ShapePoint point(int i, int j) const;
};

CurvatureGrid curvature_grid(const KinematicModel& model, const Interval& axis1, const Interval& axis2,
                             int resolution1, int resolution2);

// Grid over the model bounds: 181 x 181 for Purcell, 41 x 41 otherwise.
CurvatureGrid curvature_grid(const KinematicModel& model);

struct CurvatureExtrema {
    ShapePoint argmax;
    double max = 0.0;
    ShapePoint argmin;
    double min = 0.0;
};

// Grid extrema refined by a compass search on curvature_numeric, kept
// inside the grid's bounds.
CurvatureExtrema find_extrema(const KinematicModel& model, const CurvatureGrid& grid);

}  // namespace swimgait

#endif
