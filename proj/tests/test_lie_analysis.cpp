#include "oracles.hpp"

#include "swimgait/curvature.hpp"
#include "swimgait/lie_analysis.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace swimgait;
using doctest::Approx;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v)
{
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v)
        out[i++] = x;
    return out;
}

Eigen::VectorXd random_point(int dim, double half_width)
{
    Eigen::VectorXd x(dim);
    for (int i = 0; i < dim; ++i)
        x[i] = oracle::uniform(-half_width, half_width);
    return x;
}

}  // namespace

TEST_CASE("jacobian_fd on constant and linear fields")
{
    const VectorField constant = [](const Eigen::VectorXd&) { return vec({1, 2, 3}); };
    CHECK(jacobian_fd(constant, vec({0.3, 0.1, -0.2})).norm() == 0.0);

    Eigen::MatrixXd m(3, 3);
    m << 1, 2, 3, -4, 5, 0.5, 0, 7, -1;
    const VectorField linear = [m](const Eigen::VectorXd& q) -> Eigen::VectorXd { return m * q; };
    CHECK((jacobian_fd(linear, vec({0.3, -0.1, 2.0})) - m).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("jacobian of the radial n=2 field")
{
    const auto fields = lifted_fields(KinematicModel::spherical_radial(2));
    const auto j = jacobian_fd(fields[0], vec({0, 0, 0}));
    CHECK(j(0, 2) == Approx(6.0 / 35).epsilon(1e-9));
    CHECK(j(0, 1) == Approx(0.0));
}

TEST_CASE("lie_bracket examples")
{
    const auto radial = lifted_fields(KinematicModel::spherical_radial(2));
    const auto q0 = vec({0, 0, 0});
    CHECK(lie_bracket(radial[0], radial[0], q0).norm() == 0.0);

    const auto b = lie_bracket(radial[0], radial[1], q0);
    CHECK(b[0] == Approx(3.0 / 35).epsilon(1e-8));
    CHECK(std::abs(b[1]) < 1e-12);
    CHECK(std::abs(b[2]) < 1e-12);

    const auto az = lifted_fields(KinematicModel::spherical_azimuthal(2));
    CHECK(lie_bracket(az[0], az[1], q0)[0] == Approx(-4.0 / 35).epsilon(1e-8));
}

TEST_CASE("bracket antisymmetry, vanishing base components and agreement with curvature")
{
    std::vector<KinematicModel> models;
    for (int n = 2; n <= 6; ++n) {
        models.push_back(KinematicModel::spherical_radial(n));
        models.push_back(KinematicModel::spherical_azimuthal(n));
    }
    models.push_back(KinematicModel::purcell());
    for (const auto& model : models) {
        const auto f = lifted_fields(model);
        const bool purcell = model.kind() == ModelKind::Purcell;
        for (int trial = 0; trial < 30; ++trial) {
            Eigen::VectorXd q(3);
            q[0] = oracle::uniform(-1, 1);
            q[1] = purcell ? oracle::uniform(0.1, 3.0) : oracle::uniform(-0.2, 0.2);
            q[2] = purcell ? oracle::uniform(0.1, 3.0) : oracle::uniform(-0.2, 0.2);
            const auto fg = lie_bracket(f[0], f[1], q);
            const auto gf = lie_bracket(f[1], f[0], q);
            CHECK((fg + gf).norm() <= 1e-8);
            CHECK(fg.tail(2).norm() <= 1e-9);
            CHECK(std::abs(fg[0] - curvature_numeric(model, q.tail(2))) <= 1e-6);
        }
    }
}

TEST_CASE("controllability of successive pairs")
{
    for (int n = 2; n <= 6; ++n) {
        for (const auto& model : {KinematicModel::spherical_radial(n), KinematicModel::spherical_azimuthal(n)}) {
            const auto report = is_locally_controllable(model, vec({0, 0}));
            CHECK(report.rank == 3);
            CHECK(report.full_space_dim == 3);
            CHECK(report.verdict);
            CHECK(report.fields_evaluated.size() == 2);
            CHECK(report.brackets.size() == 1);
        }
    }
    const auto purcell = is_locally_controllable(KinematicModel::purcell(), vec({0.8, 0.8}));
    CHECK(purcell.verdict);
}

TEST_CASE("non-successive pair is not controllable")
{
    const auto model = KinematicModel::spherical_series(
        {SeriesCoordinate::parse("alpha2"), SeriesCoordinate::parse("alpha4")});
    const auto report = is_locally_controllable(model, vec({0.05, -0.1}));
    CHECK(report.rank == 2);
    CHECK_FALSE(report.verdict);
}

TEST_CASE("Purcell on the zero-curvature set loses first-order rank")
{
    const auto report = is_locally_controllable(KinematicModel::purcell(), vec({1.0, 3.141592653589793 - 1.0}));
    CHECK(report.rank == 2);
    CHECK_FALSE(report.verdict);
}

TEST_CASE("full spherical model at order 4 is controllable at the origin")
{
    const auto model = KinematicModel::spherical_full(4);
    const auto report = is_locally_controllable(model, Eigen::VectorXd::Zero(model.dimension()));
    CHECK(report.full_space_dim == 7);
    CHECK(report.rank == 7);
    CHECK(report.verdict);
    CHECK(report.brackets.size() == 15);
}

TEST_CASE("rank is invariant under nonzero rescaling of the fields")
{
    const auto base = lifted_fields(KinematicModel::spherical_radial(3));
    for (int trial = 0; trial < 10; ++trial) {
        const double s1 = oracle::uniform(0.5, 4.0), s2 = -oracle::uniform(0.5, 4.0);
        const std::vector<VectorField> scaled = {
            [&base, s1](const Eigen::VectorXd& q) -> Eigen::VectorXd { return s1 * base[0](q); },
            [&base, s2](const Eigen::VectorXd& q) -> Eigen::VectorXd { return s2 * base[1](q); }};
        const auto q = random_point(3, 0.2);
        CHECK(analyze_fields(scaled, q).rank == analyze_fields(base, q).rank);
    }
}

TEST_CASE("analyze_fields input checks")
{
    const auto fields = lifted_fields(KinematicModel::spherical_radial(2));
    CHECK_THROWS_AS(analyze_fields({fields[0]}, vec({0, 0, 0})), std::invalid_argument);
    RankOptions bad;
    bad.step = 0.0;
    CHECK_THROWS_AS(analyze_fields(fields, vec({0, 0, 0}), bad), std::invalid_argument);
}
