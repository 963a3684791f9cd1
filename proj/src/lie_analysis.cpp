#include "swimgait/lie_analysis.hpp"

#include <stdexcept>

namespace swimgait {

Eigen::MatrixXd jacobian_fd(const VectorField& field, const Eigen::VectorXd& q, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("finite-difference step must be positive");

    const auto n = q.size();
    Eigen::MatrixXd jac;
    Eigen::VectorXd probe = q;
    for (Eigen::Index j = 0; j < n; ++j) {
        probe[j] = q[j] + step;
        const Eigen::VectorXd plus = field(probe);
        probe[j] = q[j] - step;
        const Eigen::VectorXd minus = field(probe);
        probe[j] = q[j];
        if (!plus.allFinite() || !minus.allFinite())
            throw std::domain_error("vector field evaluated to a non-finite value");
        if (j == 0)
            jac.resize(plus.size(), n);
        jac.col(j) = (plus - minus) / (2.0 * step);
    }
    return jac;
}

Eigen::VectorXd lie_bracket(const VectorField& f, const VectorField& g, const Eigen::VectorXd& q, double step)
{
    const Eigen::VectorXd fq = f(q);
    const Eigen::VectorXd gq = g(q);
    return jacobian_fd(g, q, step) * fq - jacobian_fd(f, q, step) * gq;
}

std::vector<VectorField> lifted_fields(const KinematicModel& model)
{
    std::vector<VectorField> fields;
    for (int i = 0; i < model.dimension(); ++i) {
        // Fields do not depend on h: the form is translation invariant.
        fields.emplace_back([model, i](const Eigen::VectorXd& q) {
            const ShapePoint x = q.tail(q.size() - 1);
            return model.control_fields(x)[i];
        });
    }
    return fields;
}

ControllabilityReport analyze_fields(const std::vector<VectorField>& fields, const Eigen::VectorXd& q,
                                     const RankOptions& options)
{
    if (fields.size() < 2)
        throw std::invalid_argument("controllability test needs at least two control fields");

    ControllabilityReport report;
    report.full_space_dim = static_cast<int>(q.size());

    for (const auto& f : fields)
        report.fields_evaluated.push_back(f(q));
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j)
            report.brackets.push_back({static_cast<int>(i), static_cast<int>(j),
                                       lie_bracket(fields[i], fields[j], q, options.step)});

    const auto columns = report.fields_evaluated.size() + report.brackets.size();
    Eigen::MatrixXd span(q.size(), static_cast<Eigen::Index>(columns));
    Eigen::Index col = 0;
    for (const auto& v : report.fields_evaluated)
        span.col(col++) = v;
    for (const auto& b : report.brackets)
        span.col(col++) = b.value;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(span);
    report.singular_values = svd.singularValues();
    const double sigma_max = report.singular_values.size() ? report.singular_values[0] : 0.0;
    const double cutoff = options.relative_tolerance * sigma_max;
    for (Eigen::Index i = 0; i < report.singular_values.size(); ++i) {
        const double s = report.singular_values[i];
        if (s > cutoff)
            ++report.rank;
        if (sigma_max > 0.0 && s > cutoff * 1e-2 && s < cutoff * 1e2)
            report.ill_conditioned = true;
    }
    report.verdict = report.rank == report.full_space_dim;
    return report;
}

ControllabilityReport is_locally_controllable(const KinematicModel& model, const ShapePoint& x,
                                              const RankOptions& options)
{
    if (x.size() != model.dimension())
        throw std::invalid_argument("shape point dimension does not match the model");
    Eigen::VectorXd q(model.full_space_dimension());
    q[0] = 0.0;
    q.tail(model.dimension()) = x;
    auto report = analyze_fields(lifted_fields(model), q, options);
    report.point = x;
    return report;
}

}  // namespace swimgait
