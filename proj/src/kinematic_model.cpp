#include "swimgait/kinematic_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swimgait {

namespace {

constexpr double kSphericalBound = 0.2;

double pair_denominator(int n) { return (2.0 * n + 1.0) * (2.0 * n + 3.0); }

Bounds uniform_bounds(int dim, double lo, double hi) { return Bounds(dim, Interval{lo, hi}); }

}  // namespace

std::string SeriesCoordinate::label() const
{
    return (mode == DeformationMode::Radial ? "alpha" : "beta") + std::to_string(index);
}

SeriesCoordinate SeriesCoordinate::parse(const std::string& text)
{
    auto parse_index = [&](std::size_t prefix) {
        const auto digits = text.substr(prefix);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("bad series coordinate '" + text + "'");
        return std::stoi(digits);
    };
    if (text.rfind("alpha", 0) == 0)
        return {DeformationMode::Radial, parse_index(5)};
    if (text.rfind("beta", 0) == 0)
        return {DeformationMode::Azimuthal, parse_index(4)};
    throw std::invalid_argument("bad series coordinate '" + text + "' (expected alphaN or betaN)");
}

double spherical_hdot(const DeformationCoefficients& c, const CoefficientRates& rates)
{
    c.validate();
    const int order = c.order();
    if (order < 3)
        throw std::invalid_argument("the series needs truncation order >= 3");
    if (rates.alpha_dot.size() != c.alpha.size() || rates.beta_dot.size() != c.beta.size())
        throw std::invalid_argument("coefficient and rate sequences differ in length");

    const auto& a = c.alpha;
    const auto& b = c.beta;
    const auto& ad = rates.alpha_dot;
    const auto& bd = rates.beta_dot;

    double sum = 0.0;
    for (int n = 2; n <= order - 1; ++n) {
        const double nn = n;
        const double radial = (nn + 1) * (nn + 1) * a[n] * ad[n + 1] - (nn * nn - 4 * nn - 2) * a[n + 1] * ad[n];
        const double cross1 = (nn + 1) * (nn + 2) * a[n] * bd[n + 1] - nn * (nn + 1) * b[n + 1] * ad[n];
        const double cross2 = nn * (3 * nn + 2) * a[n + 1] * bd[n] + nn * (nn + 2) * b[n] * ad[n + 1];
        const double azimuthal = nn * (nn + 2) * b[n] * bd[n + 1] - nn * nn * b[n + 1] * bd[n];
        sum += (radial - cross1 + cross2 - azimuthal) / pair_denominator(n);
    }
    return c.epsilon * c.epsilon * sum;
}

KinematicModel KinematicModel::spherical_radial(int n, double epsilon)
{
    if (n < 2)
        throw std::invalid_argument("spherical pair models need n >= 2");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("epsilon must be positive");
    KinematicModel m;
    m.kind_ = ModelKind::SphericalRadial;
    m.n_ = n;
    m.epsilon_ = epsilon;
    m.coords_ = {{DeformationMode::Radial, n}, {DeformationMode::Radial, n + 1}};
    m.bounds_ = uniform_bounds(2, -kSphericalBound, kSphericalBound);
    return m;
}

KinematicModel KinematicModel::spherical_azimuthal(int n, double epsilon)
{
    auto m = spherical_radial(n, epsilon);
    m.kind_ = ModelKind::SphericalAzimuthal;
    m.coords_ = {{DeformationMode::Azimuthal, n}, {DeformationMode::Azimuthal, n + 1}};
    return m;
}

KinematicModel KinematicModel::spherical_series(std::vector<SeriesCoordinate> coords, double epsilon)
{
    if (coords.empty())
        throw std::invalid_argument("series model needs at least one coordinate");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("epsilon must be positive");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].index < 2)
            throw std::invalid_argument("series coordinates start at index 2, got " + coords[i].label());
        for (std::size_t j = 0; j < i; ++j)
            if (coords[j].mode == coords[i].mode && coords[j].index == coords[i].index)
                throw std::invalid_argument("duplicate series coordinate " + coords[i].label());
    }
    KinematicModel m;
    m.kind_ = ModelKind::SphericalSeries;
    m.epsilon_ = epsilon;
    m.coords_ = std::move(coords);
    m.bounds_ = uniform_bounds(static_cast<int>(m.coords_.size()), -kSphericalBound, kSphericalBound);
    return m;
}

KinematicModel KinematicModel::spherical_full(int order, double epsilon)
{
    if (order < 3)
        throw std::invalid_argument("spherical-full needs order >= 3");
    std::vector<SeriesCoordinate> coords;
    for (int n = 2; n <= order; ++n)
        coords.push_back({DeformationMode::Radial, n});
    for (int n = 2; n <= order; ++n)
        coords.push_back({DeformationMode::Azimuthal, n});
    return spherical_series(std::move(coords), epsilon);
}

KinematicModel KinematicModel::purcell(double drag, double limb_length)
{
    if (!(drag > 0.0) || !std::isfinite(drag) || !(limb_length > 0.0) || !std::isfinite(limb_length))
        throw std::invalid_argument("Purcell drag coefficient and limb length must be positive");
    KinematicModel m;
    m.kind_ = ModelKind::Purcell;
    m.drag_ = drag;
    m.limb_length_ = limb_length;
    m.bounds_ = uniform_bounds(2, 0.0, std::numbers::pi);
    return m;
}

std::string KinematicModel::name() const
{
    switch (kind_) {
    case ModelKind::SphericalRadial:
        return "spherical-radial(" + std::to_string(n_) + ")";
    case ModelKind::SphericalAzimuthal:
        return "spherical-azimuthal(" + std::to_string(n_) + ")";
    case ModelKind::SphericalSeries: {
        std::string s = "spherical-series(";
        for (std::size_t i = 0; i < coords_.size(); ++i)
            s += (i ? "," : "") + coords_[i].label();
        return s + ")";
    }
    case ModelKind::Purcell:
        return "purcell-symmetric";
    }
    return "unknown";
}

KinematicModel KinematicModel::with_bounds(Bounds bounds) const
{
    if (static_cast<int>(bounds.size()) != dimension())
        throw std::invalid_argument("bounds dimension does not match model dimension");
    for (const auto& iv : bounds)
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo <= iv.hi))
            throw std::invalid_argument("bounds must be nonempty finite intervals");
    KinematicModel m = *this;
    m.bounds_ = std::move(bounds);
    return m;
}

bool KinematicModel::contains(const ShapePoint& x, double slack) const
{
    if (x.size() != dimension())
        return false;
    for (int i = 0; i < dimension(); ++i)
        if (!bounds_[i].contains(x[i], slack))
            return false;
    return true;
}

void KinematicModel::check_point(const ShapePoint& x) const
{
    if (x.size() != dimension())
        throw std::invalid_argument(name() + ": shape point has dimension " + std::to_string(x.size()) +
                                    ", expected " + std::to_string(dimension()));
}

DisplacementForm KinematicModel::displacement_form(const ShapePoint& x) const
{
    check_point(x);
    DisplacementForm w(dimension());
    const double eps2 = epsilon_ * epsilon_;

    switch (kind_) {
    case ModelKind::SphericalRadial: {
        const double n = n_;
        const double d = pair_denominator(n_);
        w[0] = -eps2 * (n * n - 4 * n - 2) * x[1] / d;
        w[1] = eps2 * (n + 1) * (n + 1) * x[0] / d;
        break;
    }
    case ModelKind::SphericalAzimuthal: {
        const double n = n_;
        const double d = pair_denominator(n_);
        w[0] = -eps2 * n * n * x[1] / d;
        w[1] = -eps2 * n * (n + 2) * x[0] / d;
        break;
    }
    case ModelKind::SphericalSeries: {
        int top = 3;
        for (const auto& c : coords_)
            top = std::max(top, c.index);
        auto coeffs = DeformationCoefficients::zeros(top, epsilon_);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            auto& seq = coords_[i].mode == DeformationMode::Radial ? coeffs.alpha : coeffs.beta;
            seq[coords_[i].index] = x[static_cast<Eigen::Index>(i)];
        }
        // hdot is linear in the rates: probe each coordinate with a unit rate.
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            auto rates = CoefficientRates::zeros(top);
            auto& seq = coords_[i].mode == DeformationMode::Radial ? rates.alpha_dot : rates.beta_dot;
            seq[coords_[i].index] = 1.0;
            w[static_cast<Eigen::Index>(i)] = spherical_hdot(coeffs, rates);
        }
        break;
    }
    case ModelKind::Purcell: {
        const double s1 = std::sin(x[0]);
        const double s2 = std::sin(x[1]);
        const double denom = 2 * s1 * s1 + 2 * s2 * s2 + 5;
        // Uniform drag cancels from the force balance; lengths scale with L.
        w[0] = limb_length_ * 4 * s1 / denom;
        w[1] = -limb_length_ * 4 * s2 / denom;
        break;
    }
    }

    if (!w.allFinite())
        throw std::domain_error(name() + ": displacement form is not finite");
    return w;
}

std::vector<Eigen::VectorXd> KinematicModel::control_fields(const ShapePoint& x) const
{
    const auto w = displacement_form(x);
    std::vector<Eigen::VectorXd> fields;
    fields.reserve(dimension());
    for (int i = 0; i < dimension(); ++i) {
        Eigen::VectorXd f = Eigen::VectorXd::Zero(full_space_dimension());
        f[0] = w[i];
        f[i + 1] = 1.0;
        fields.push_back(std::move(f));
    }
    return fields;
}

}  // namespace swimgait
