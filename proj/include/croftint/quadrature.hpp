#ifndef CROFTINT_QUADRATURE_HPP
#define CROFTINT_QUADRATURE_HPP

#include <cmath>
#include <functional>

namespace croftint {

// Adaptive Gauss-Kronrod 7/15 on a finite interval.  The Kronrod rule has
// no endpoint nodes, so integrable endpoint singularities are admissible;
// callers soften strong singularities by substitution before calling.
class AdaptiveGK {
 public:
  struct Result {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
  };

  static Result integrate(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-11, double abs_tol = 1e-14,
                          int max_depth = 48) {
    Result r;
    r.value = recurse(f, a, b, rel_tol, abs_tol, max_depth, r);
    return r;
  }

 private:
  static void gk15(const std::function<double(double)>& f, double a, double b,
                   double& value, double& err) {
    // 15-point Kronrod nodes/weights on [-1,1] and embedded 7-point Gauss.
    static const double xk[15] = {
        -0.991455371120813, -0.949107912342759, -0.864864423359769,
        -0.741531185599394, -0.586087235467691, -0.405845151377397,
        -0.207784955007898, 0.0,                0.207784955007898,
        0.405845151377397,  0.586087235467691,  0.741531185599394,
        0.864864423359769,  0.949107912342759,  0.991455371120813};
    static const double wk[15] = {
        0.022935322010529, 0.063092092629979, 0.104790010322250,
        0.140653259715525, 0.169004726639267, 0.190350578064785,
        0.204432940075298, 0.209482141084728, 0.204432940075298,
        0.190350578064785, 0.169004726639267, 0.140653259715525,
        0.104790010322250, 0.063092092629979, 0.022935322010529};
    static const double wg[4] = {0.129484966168870, 0.279705391489277,
                                 0.381830050505119, 0.417959183673469};
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 15; ++i) fv[i] = f(c + h * xk[i]);
    double rk = 0.0;
    for (int i = 0; i < 15; ++i) rk += wk[i] * fv[i];
    double rg = wg[3] * fv[7];
    for (int i = 0; i < 3; ++i) rg += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    value = rk * h;
    err = std::abs((rk - rg) * h);
  }

  static double recurse(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, int depth, Result& out) {
    double v, e;
    gk15(f, a, b, v, e);
    if (e <= abs_tol || e <= rel_tol * std::abs(v)) return v;
    if (depth <= 0) {
      out.converged = false;
      out.error += e;
      return v;
    }
    double m = 0.5 * (a + b);
    return recurse(f, a, m, rel_tol, abs_tol, depth - 1, out) +
           recurse(f, m, b, rel_tol, abs_tol, depth - 1, out);
  }
};

}  // namespace croftint

#endif
