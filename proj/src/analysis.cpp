#include "qucc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qucc {

const std::vector<double>& ScanSeries::method(const std::string& name) const {
    auto it = methods.find(name);
    if (it == methods.end()) throw std::invalid_argument("scan: unknown method " + name);
    if (it->second.size() != exact.size())
        throw std::invalid_argument("scan: method " + name + " is missing points");
    return it->second;
}

void ScanSeries::validate() const {
    if (coordinates.size() < 1 || coordinates.size() != exact.size())
        throw std::invalid_argument("scan: coordinate/exact size mismatch");
    for (std::size_t i = 1; i < coordinates.size(); ++i)
        if (!(coordinates[i - 1] < coordinates[i]))
            throw std::invalid_argument("scan: coordinates must be strictly increasing");
    for (const auto& [name, vals] : methods)
        if (vals.size() != exact.size())
            throw std::invalid_argument("scan: method " + name + " is missing points");
}

double npe(const ScanSeries& series, const std::string& method) {
    const auto& m = series.method(method);
    if (m.size() < 2) throw std::invalid_argument("npe: need at least two points");
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const double err = m[i] - series.exact[i];
        lo = std::min(lo, err);
        hi = std::max(hi, err);
    }
    return hi - lo;
}

std::pair<std::vector<double>, double> shift_align(const ScanSeries& series,
                                                   const std::string& method,
                                                   std::size_t anchor) {
    const auto& m = series.method(method);
    if (anchor >= m.size()) throw std::invalid_argument("shift: anchor outside series");
    const double shift = series.exact[anchor] - m[anchor];
    std::vector<double> shifted(m);
    for (auto& v : shifted) v += shift;
    return {shifted, shift};
}

double barrier_error(const ScanSeries& series, const std::string& method) {
    const auto& m = series.method(method);
    auto range = [](const std::vector<double>& v) {
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return *hi - *lo;
    };
    const double exact_barrier = range(series.exact);
    if (exact_barrier == 0.0) throw std::domain_error("barrier: exact profile is flat");
    return std::abs(range(m) - exact_barrier) / exact_barrier * 100.0;
}

std::pair<double, double> mean_error(const ScanSeries& series, const std::string& method) {
    const auto& m = series.method(method);
    if (m.empty()) throw std::invalid_argument("mean error: empty series");
    std::vector<double> errs(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) errs[i] = std::abs(m[i] - series.exact[i]);
    double mean = 0.0;
    for (double e : errs) mean += e;
    mean /= static_cast<double>(errs.size());
    if (errs.size() == 1) return {mean, 0.0};
    double var = 0.0;
    for (double e : errs) var += (e - mean) * (e - mean);
    var /= static_cast<double>(errs.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(errs.size()))};
}

double oo_improvement(double e_base, double e_oo, double e_exact) {
    const double denom = e_base - e_exact;
    if (std::abs(denom) < 1e-12) throw std::domain_error("oo improvement: degenerate base error");
    return 100.0 * (e_base - e_oo) / denom;
}

std::string scan_csv(const ScanSeries& series) {
    series.validate();
    std::string out = "coordinate,label,exact";
    for (const auto& [name, vals] : series.methods) out += "," + name + "_raw," + name + "_shifted";
    out += '\n';
    char buf[40];
    for (std::size_t i = 0; i < series.coordinates.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.6g", series.coordinates[i]);
        out += buf;
        out += ',';
        out += i < series.labels.size() ? series.labels[i] : "";
        std::snprintf(buf, sizeof(buf), ",%.12e", series.exact[i]);
        out += buf;
        for (const auto& [name, vals] : series.methods) {
            auto [shifted, sh] = shift_align(series, name, 0);
            std::snprintf(buf, sizeof(buf), ",%.12e,%.12e", vals[i], shifted[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace qucc
