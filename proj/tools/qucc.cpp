#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qucc/runner.hpp"

namespace {

// "0-3,5" -> point indices
std::set<std::size_t> parse_range(const std::string& text, std::size_t n) {
    std::set<std::size_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dash = part.find('-');
        if (dash == std::string::npos) {
            out.insert(std::stoul(part));
        } else {
            std::size_t lo = std::stoul(part.substr(0, dash));
            std::size_t hi = std::stoul(part.substr(dash + 1));
            for (std::size_t i = lo; i <= hi && i < n; ++i) out.insert(i);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unitary coupled-cluster VQE scans on a statevector simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, methods_filter, points_filter;

    auto* run = app.add_subcommand("run", "Execute a scan described by a config file");
    run->add_option("config", config_path, "JSON run configuration")->required();
    run->add_option("--out", out_dir, "Override the output directory");
    run->add_option("--methods", methods_filter, "Comma-separated method subset");
    run->add_option("--points", points_filter, "Point indices, e.g. 0-3 or 0,2,4");

    auto* validate = app.add_subcommand("validate", "Check a config without running it");
    validate->add_option("config", config_path, "JSON run configuration")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        qucc::RunConfig config = qucc::load_run_config(config_path);
        if (validate->parsed()) {
            auto findings = qucc::validate_config(config);
            for (const auto& f : findings) std::cout << "finding: " << f << "\n";
            std::cout << (findings.empty() ? "config ok\n" : "config invalid\n");
            return findings.empty() ? 0 : 1;
        }
        if (!out_dir.empty()) config.output_dir = out_dir;
        if (!methods_filter.empty()) {
            std::vector<qucc::MethodSpec> keep;
            std::stringstream ss(methods_filter);
            std::string name;
            while (std::getline(ss, name, ',')) keep.push_back(qucc::parse_method(name));
            config.methods = keep;
        }
        if (!points_filter.empty()) {
            auto idx = parse_range(points_filter, config.points.size());
            std::vector<qucc::RunConfig::Point> keep;
            for (std::size_t i = 0; i < config.points.size(); ++i)
                if (idx.count(i)) keep.push_back(config.points[i]);
            config.points = keep;
        }
        return qucc::run_scan(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
