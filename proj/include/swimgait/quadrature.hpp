#ifndef SWIMGAIT_QUADRATURE_HPP
#define SWIMGAIT_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace swimgait {

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct GaussLegendreRule {
    static constexpr int kPoints = 10;
    double nodes[kPoints];
    double weights[kPoints];
};

// Nodes and weights on [-1, 1], computed once by Newton iteration on P_10.
const GaussLegendreRule& gauss_legendre_rule();

// Composite Gauss-Legendre with bisection until the panel estimate and the
// sum over its halves agree to the tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                          int max_depth = 40);

// Tensor Gauss-Legendre over [a1,b1] x [a2,b2] with quadtree refinement.
double integrate_adaptive_2d(const std::function<double(double, double)>& f, double a1, double b1, double a2,
                             double b2, double abs_tol, int max_depth = 16);

}  // namespace swimgait

#endif
