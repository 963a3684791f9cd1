#ifndef SWIMGAIT_LIE_ANALYSIS_HPP
#define SWIMGAIT_LIE_ANALYSIS_HPP

#include "swimgait/kinematic_model.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace swimgait {

// A vector field on the full space q = (h, x).
using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Central-difference Jacobian; entry (i, j) = d field_i / d q_j.
Eigen::MatrixXd jacobian_fd(const VectorField& field, const Eigen::VectorXd& q, double step = 1e-5);

// [f, g](q) = Dg(q) f(q) - Df(q) g(q).
Eigen::VectorXd lie_bracket(const VectorField& f, const VectorField& g, const Eigen::VectorXd& q,
                            double step = 1e-5);

// The model's lifted control fields as functions of the full-space point.
std::vector<VectorField> lifted_fields(const KinematicModel& model);

struct BracketEntry {
    int first;
    int second;
    Eigen::VectorXd value;
};

struct ControllabilityReport {
    ShapePoint point;
    std::vector<Eigen::VectorXd> fields_evaluated;
    std::vector<BracketEntry> brackets;
    Eigen::VectorXd singular_values;
    int rank = 0;
    int full_space_dim = 0;
    bool verdict = false;
    // Some singular value sits within two decades of the rank cutoff.
    bool ill_conditioned = false;
};

struct RankOptions {
    double step = 1e-5;
    double relative_tolerance = 1e-8;
};

// Rank test of the span of the fields and their first-order brackets at q.
ControllabilityReport analyze_fields(const std::vector<VectorField>& fields, const Eigen::VectorXd& q,
                                     const RankOptions& options = {});

// Chow rank condition at the lifted point (h = 0, x).
ControllabilityReport is_locally_controllable(const KinematicModel& model, const ShapePoint& x,
                                              const RankOptions& options = {});

}  // namespace swimgait

#endif
