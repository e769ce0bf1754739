#include "qucc/optimize.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace qucc {

namespace {

/// One-dimensional slice state for the line search.
struct Slice {
    const Objective* f;
    const std::vector<double>* x;
    const Eigen::VectorXd* d;
    double gradient_step;
    long* evals;
    mutable std::vector<double> buf;

    double value(double alpha) const {
        const int n = static_cast<int>(x->size());
        buf.resize(n);
        for (int i = 0; i < n; ++i) buf[i] = (*x)[i] + alpha * (*d)[i];
        ++*evals;
        return (*f)(buf);
    }
    /// Directional derivative by central differences along d.
    double slope(double alpha) const {
        const double h = gradient_step;
        return (value(alpha + h) - value(alpha - h)) / (2.0 * h);
    }
};

/// Strong-Wolfe line search (bracket + zoom with bisection/interpolation).
/// Returns the accepted alpha, or 0 when no acceptable step exists.
double wolfe_search(const Slice& s, double f0, double g0, double alpha_max) {
    constexpr double c1 = 1e-4, c2 = 0.9;
    double alpha_prev = 0.0, f_prev = f0;
    double alpha = std::min(1.0, alpha_max);

    auto zoom = [&](double lo, double hi, double f_lo) {
        for (int it = 0; it < 30; ++it) {
            double a = 0.5 * (lo + hi);
            double fa = s.value(a);
            if (fa > f0 + c1 * a * g0 || fa >= f_lo) {
                hi = a;
            } else {
                double ga = s.slope(a);
                if (std::abs(ga) <= -c2 * g0) return a;
                if (ga * (hi - lo) >= 0) hi = lo;
                lo = a;
                f_lo = fa;
            }
            if (std::abs(hi - lo) < 1e-14) break;
        }
        return lo;
    };

    for (int it = 0; it < 20; ++it) {
        double fa = s.value(alpha);
        if (fa > f0 + c1 * alpha * g0 || (it > 0 && fa >= f_prev))
            return zoom(alpha_prev, alpha, f_prev);
        double ga = s.slope(alpha);
        if (std::abs(ga) <= -c2 * g0) return alpha;
        if (ga >= 0) return zoom(alpha, alpha_prev, fa);
        if (alpha >= alpha_max) return alpha;
        alpha_prev = alpha;
        f_prev = fa;
        alpha = std::min(2.0 * alpha, alpha_max);
    }
    return alpha;
}

}  // namespace

MinimizeResult minimize_bfgs(const Objective& f, std::vector<double> x0,
                             const MinimizeOptions& opts) {
    const int n = static_cast<int>(x0.size());
    MinimizeResult res;
    res.x = std::move(x0);

    long evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };
    auto gradient = [&](const std::vector<double>& x, Eigen::VectorXd& g) {
        std::vector<double> xp = x;
        for (int i = 0; i < n; ++i) {
            const double h = opts.gradient_step;
            xp[i] = x[i] + h;
            const double fp = eval(xp);
            xp[i] = x[i] - h;
            const double fm = eval(xp);
            xp[i] = x[i];
            g[i] = (fp - fm) / (2.0 * h);
        }
    };

    double fx = eval(res.x);
    res.trace.emplace_back(fx, res.x);
    if (n == 0) {
        res.f = fx;
        res.n_evaluations = evals;
        res.converged = true;
        return res;
    }

    Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd g(n), g_new(n);
    gradient(res.x, g);

    int small_steps = 0;  // consecutive |dE| below tolerance
    std::vector<double> x_new(res.x.size());

    for (int it = 0; it < opts.max_iterations; ++it) {
        res.n_iterations = it + 1;
        bool steepest = false;
        Eigen::VectorXd d = -(hinv * g);
        if (d.dot(g) >= 0.0) {
            hinv.setIdentity();
            d = -g;
            steepest = true;
        }
        const double dinf = d.lpNorm<Eigen::Infinity>();
        if (dinf < 1e-14) {
            res.converged = true;
            break;
        }

        Slice slice{&f, &res.x, &d, opts.gradient_step, &evals, {}};
        const double alpha = wolfe_search(slice, fx, g.dot(d), opts.max_step / dinf);
        double f_new = fx;
        if (alpha > 0.0) {
            for (int i = 0; i < n; ++i) x_new[i] = res.x[i] + alpha * d[i];
            f_new = eval(x_new);
        }
        if (alpha <= 0.0 || f_new > fx) {
            if (!steepest) {
                hinv.setIdentity();  // bad curvature model: retry along -g
                continue;
            }
            res.converged = true;  // no descent along the gradient
            break;
        }

        gradient(x_new, g_new);
        Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(x_new.data(), n) -
                            Eigen::Map<const Eigen::VectorXd>(res.x.data(), n);
        Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12) {
            const double rho = 1.0 / sy;
            Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
            hinv = (eye - rho * s * y.transpose()) * hinv * (eye - rho * y * s.transpose()) +
                   rho * s * s.transpose();
        }
        const double df = std::abs(f_new - fx);
        res.x = x_new;
        fx = f_new;
        g = g_new;
        res.trace.emplace_back(fx, res.x);
        small_steps = df < opts.energy_tol ? small_steps + 1 : 0;
        if (small_steps >= 2) {
            res.converged = true;
            break;
        }
    }

    res.f = fx;
    res.n_evaluations = evals;
    return res;
}

}  // namespace qucc
