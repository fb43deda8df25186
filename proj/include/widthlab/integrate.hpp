#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>

// Adaptive Simpson quadrature for smooth 1D integrands. Used by the
// analytic tetrahedron pipeline, where the integrand is C^infinity on the
// sector, so convergence is fast and the tolerance can be tight.

namespace widthlab {

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;  // accumulated |S2 - S1| / 15 over accepted panels
    std::size_t evaluations = 0;
    bool converged = true;
};

namespace detail {

template <class F>
struct SimpsonState {
    const F& f;
    double tol;
    std::size_t max_depth;
    std::size_t evaluations = 0;
    double error = 0.0;
    bool converged = true;
};

template <class F>
double simpson_recurse(SimpsonState<F>& st, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, std::size_t depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    st.evaluations += 2;
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= st.max_depth) {
        if (std::abs(delta) > 15.0 * tol) st.converged = false;
        st.error += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Integrate f over [a, b] to absolute tolerance tol. Throws on invalid
/// arguments; a non-converged panel (max recursion depth hit before the
/// local tolerance) is reported through the result, not by throwing, so the
/// caller can see the achieved error.
template <class F>
IntegrationResult integrate_adaptive_simpson(F&& f, double a, double b, double tol = 1e-12,
                                             std::size_t max_depth = 48) {
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw std::invalid_argument("integrate_adaptive_simpson: endpoints must be finite");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("integrate_adaptive_simpson: tol must be positive");
    }
    IntegrationResult r;
    if (a == b) return r;

    detail::SimpsonState<std::remove_reference_t<F>> st{f, tol, max_depth};
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    st.evaluations = 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    r.value = detail::simpson_recurse(st, a, b, fa, fm, fb, whole, tol, 0);
    r.error_estimate = st.error;
    r.evaluations = st.evaluations;
    r.converged = st.converged;
    return r;
}

}  // namespace widthlab
