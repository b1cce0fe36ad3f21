// numerics.hpp — small derivative and line-search helpers shared by spectral and noise code.

#pragma once

#include "transmon/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace transmon::numerics {

/// Finite-difference step per noise variable (units of that variable).
struct FiniteDifferenceSteps {
    double charge{1e-2};            // ng
    double flux{1e-4};              // Φ/Φ0
    double critical_current{1e-5};  // fractional EJΣ deviation
};

/// 5-point central difference at steps h and h/2, combined by one Richardson step
/// (fourth-order stencil, so the weights are 16/15 and -1/15).
template <class F>
double richardson_derivative(F&& f, double x, double h) {
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x), 1.0);
    if (!(h / 2.0 >= floor)) {
        throw StepUnderflow("finite-difference step " + std::to_string(h) +
                            " is below 64 ulp of the evaluation point");
    }
    auto stencil = [&](double step) {
        return (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) - f(x + 2.0 * step)) /
               (12.0 * step);
    };
    const double coarse = stencil(h);
    const double fine = stencil(h / 2.0);
    return fine + (fine - coarse) / 15.0;
}

struct LineMaximum {
    double x;
    double value;
};

/// Golden-section maximization of a unimodal f on [lo, hi]; stops when the bracket is
/// narrower than x_tol. Returns the best point evaluated.
template <class F>
LineMaximum golden_section_max(F&& f, double lo, double hi, double x_tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > x_tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? LineMaximum{c, fc} : LineMaximum{d, fd};
}

}  // namespace transmon::numerics
