#include "rotvac/quadrature.hpp"

#include "rotvac/constants.hpp"
#include "rotvac/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace rotvac {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

void check_converged(const char* where, double value, double error, double l1,
                     const QuadratureOptions& opts)
{
    const double target = std::max(opts.abs_tol, opts.rel_tol * l1);
    if (!std::isfinite(value) || error > 10.0 * target) {
        std::ostringstream diag;
        diag << "value=" << value << " error=" << error << " L1=" << l1
             << " rel_tol=" << opts.rel_tol << " max_depth=" << opts.max_depth;
        throw NumericError(std::string(where) + ": quadrature did not converge",
                           diag.str());
    }
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts)
{
    double error = 0.0;
    double l1 = 0.0;
    const double value =
        Kronrod::integrate(f, a, b, opts.max_depth, opts.rel_tol, &error, &l1);
    check_converged("integrate", value, error, l1, opts);
    return {value, error};
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a, const QuadratureOptions& opts)
{
    double error = 0.0;
    double l1 = 0.0;
    const double value = Kronrod::integrate(
        f, a, std::numeric_limits<double>::infinity(), opts.max_depth,
        opts.rel_tol, &error, &l1);
    check_converged("integrate_to_infinity", value, error, l1, opts);
    return {value, error};
}

QuadratureResult integrate_angles(const std::function<double(double, double)>& f,
                                  const QuadratureOptions& opts)
{
    QuadratureOptions inner = opts;
    inner.rel_tol = opts.rel_tol * 0.1;
    inner.abs_tol = opts.abs_tol * 0.1 / two_pi;
    double inner_error = 0.0;
    auto outer = [&](double theta) {
        auto row = [&](double phi) { return f(theta, phi); };
        double err = 0.0;
        double l1 = 0.0;
        const double v = Kronrod::integrate(row, 0.0, two_pi, inner.max_depth,
                                            inner.rel_tol, &err, &l1);
        check_converged("integrate_angles (phi)", v, err, l1, inner);
        inner_error = std::max(inner_error, err);
        // A row that cancels to roundoff would otherwise drive the outer
        // relative tolerance to chase noise.
        if (std::abs(v) <= 64.0 * std::numeric_limits<double>::epsilon() * l1) {
            return 0.0;
        }
        return v;
    };
    double error = 0.0;
    double l1 = 0.0;
    const double value = Kronrod::integrate(outer, 0.0, pi, opts.max_depth,
                                            opts.rel_tol, &error, &l1);
    check_converged("integrate_angles (theta)", value, error, l1, opts);
    return {value, error + pi * inner_error};
}

} // namespace rotvac
