#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace qucc {

using Objective = std::function<double(const std::vector<double>&)>;

struct MinimizeOptions {
    double energy_tol = 1e-7;     // stop when |f_k - f_{k-1}| falls below
    double gradient_step = 1e-6;  // central-difference step
    int max_iterations = 1000;
    double max_step = 0.5;        // bound on the infinity norm of one step
};

struct MinimizeResult {
    std::vector<double> x;
    double f = 0.0;
    long n_evaluations = 0;
    int n_iterations = 0;
    bool converged = false;
    /// (f, x) at every accepted iterate, starting from the initial point.
    std::vector<std::pair<double, std::vector<double>>> trace;
};

/// Bounded-step BFGS with central-difference gradients and a backtracking
/// Armijo line search. Deterministic for fixed inputs.
MinimizeResult minimize_bfgs(const Objective& f, std::vector<double> x0,
                             const MinimizeOptions& opts);

/// Pass-through objective that counts evaluations.
class CountingObjective {
  public:
    explicit CountingObjective(Objective f) : f_(std::move(f)) {}
    double operator()(const std::vector<double>& x) const {
        ++count_;
        return f_(x);
    }
    long count() const { return count_; }

  private:
    Objective f_;
    mutable long count_ = 0;
};

}  // namespace qucc
