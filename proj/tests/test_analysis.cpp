#include <doctest.h>

#include <stdexcept>

#include "qucc/analysis.hpp"

using namespace qucc;

namespace {

ScanSeries make_series(std::vector<double> exact, std::vector<double> method) {
    ScanSeries s;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        s.coordinates.push_back(static_cast<double>(i));
        s.labels.push_back("p" + std::to_string(i));
    }
    s.exact = std::move(exact);
    s.methods["m"] = std::move(method);
    return s;
}

}  // namespace

TEST_CASE("npe is the spread of the error profile") {
    // errors 1, 3, 2 mHa -> 2 mHa
    ScanSeries s = make_series({0.0, 0.0, 0.0}, {1e-3, 3e-3, 2e-3});
    CHECK(npe(s, "m") == doctest::Approx(2e-3));
    // constant shift -> zero
    ScanSeries c = make_series({-1.0, -2.0, -0.5}, {-0.9, -1.9, -0.4});
    CHECK(npe(c, "m") == doctest::Approx(0.0));
}

TEST_CASE("npe is invariant under constant shifts") {
    ScanSeries s = make_series({0.0, -1.0, -0.2}, {0.01, -0.97, -0.15});
    const double base = npe(s, "m");
    for (auto& v : s.methods["m"]) v += 0.123;
    CHECK(npe(s, "m") == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("shift_align matches the exact value at the anchor") {
    ScanSeries s = make_series({-1.0, -1.1, -1.05}, {-0.8, -0.95, -0.83});
    auto [shifted, shift] = shift_align(s, "m", 0);
    CHECK(shift == doctest::Approx(-0.2));
    CHECK(shifted[0] == doctest::Approx(-1.0));
    // method equal to exact -> zero shift; shifting twice is idempotent
    ScanSeries t = make_series({-1.0, -1.1}, {-1.0, -1.1});
    CHECK(shift_align(t, "m", 0).second == doctest::Approx(0.0));
    ScanSeries u = s;
    u.methods["m"] = shifted;
    CHECK(shift_align(u, "m", 0).second == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(shift_align(s, "m", 5), std::invalid_argument);
}

TEST_CASE("barrier error definition and shift invariance") {
    ScanSeries s = make_series({0.0, 1.0, 0.2}, {0.0, 1.0, 0.2});
    CHECK(barrier_error(s, "m") == doctest::Approx(0.0));
    for (auto& v : s.methods["m"]) v += 0.37;  // constant shift
    CHECK(barrier_error(s, "m") == doctest::Approx(0.0).epsilon(1e-12));
    // doubled barrier -> 100%
    ScanSeries d = make_series({0.0, 1.0}, {0.0, 2.0});
    CHECK(barrier_error(d, "m") == doctest::Approx(100.0));
    ScanSeries flat = make_series({0.5, 0.5}, {0.1, 0.9});
    CHECK_THROWS_AS(barrier_error(flat, "m"), std::domain_error);
}

TEST_CASE("mean error with standard error") {
    ScanSeries s = make_series({0.0, 0.0, 0.0}, {1e-3, 1e-3, 1e-3});
    auto [mean, se] = mean_error(s, "m");
    CHECK(mean == doctest::Approx(1e-3));
    CHECK(se == doctest::Approx(0.0));
    ScanSeries one = make_series({0.0}, {2e-3});
    auto [m1, se1] = mean_error(one, "m");
    CHECK(m1 == doctest::Approx(2e-3));
    CHECK(se1 == 0.0);
}

TEST_CASE("oo improvement percentages") {
    CHECK(oo_improvement(-1.0, -1.2, -1.2) == doctest::Approx(100.0));
    CHECK(oo_improvement(-1.0, -1.0, -1.2) == doctest::Approx(0.0));
    CHECK_THROWS_AS(oo_improvement(-1.2, -1.2, -1.2), std::domain_error);
}

TEST_CASE("scan csv is deterministic and carries shifted columns") {
    ScanSeries s = make_series({-1.0, -1.1}, {-0.8, -0.92});
    std::string a = scan_csv(s), b = scan_csv(s);
    CHECK(a == b);
    CHECK(a.rfind("coordinate,label,exact,m_raw,m_shifted\n", 0) == 0);
}

TEST_CASE("chemical accuracy constant") {
    CHECK(kChemicalAccuracyHa == doctest::Approx(1.6e-3));
}
