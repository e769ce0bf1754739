#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qucc {

/// 1 kcal/mol in Hartree; emitted with every report.
inline constexpr double kChemicalAccuracyHa = 1.6e-3;

/// Energies of one scan: ordered coordinates, the exact reference at each
/// point, and one energy series per method.
struct ScanSeries {
    std::vector<double> coordinates;
    std::vector<std::string> labels;
    std::vector<double> exact;
    std::map<std::string, std::vector<double>> methods;

    const std::vector<double>& method(const std::string& name) const;
    void validate() const;
};

/// Non-parallelity error: max - min of (method - exact) over the scan.
double npe(const ScanSeries& series, const std::string& method);

/// Shift that matches the method to the exact energy at the anchor point;
/// returns (shifted series, shift value). The shift is added to the series,
/// i.e. it equals exact[anchor] - method[anchor].
std::pair<std::vector<double>, double> shift_align(const ScanSeries& series,
                                                   const std::string& method,
                                                   std::size_t anchor);

/// |(max-min)_method - (max-min)_exact| / (max-min)_exact * 100.
double barrier_error(const ScanSeries& series, const std::string& method);

/// Mean of |method - exact| with standard error sigma/sqrt(N) (0 for N=1).
std::pair<double, double> mean_error(const ScanSeries& series, const std::string& method);

/// Percentage of the base method's absolute error recovered by orbital
/// optimization: 100 * (e_base - e_oo) / (e_base - e_exact).
double oo_improvement(double e_base, double e_oo, double e_exact);

/// CSV: coordinate, exact, then raw and shifted columns per method
/// (shift anchored at the first point).
std::string scan_csv(const ScanSeries& series);

}  // namespace qucc
