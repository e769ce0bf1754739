#include "qucc/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include <json.hpp>

#include "qucc/analysis.hpp"
#include "qucc/exact.hpp"
#include "qucc/statevector.hpp"

namespace qucc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string MethodSpec::name() const {
    return (orbital_optimized ? "oo-" : "") + ansatz_name(kind);
}

MethodSpec parse_method(const std::string& name) {
    MethodSpec m;
    std::string base = name;
    if (base.rfind("oo-", 0) == 0) {
        m.orbital_optimized = true;
        base = base.substr(3);
    }
    if (base == "uccsd") m.kind = AnsatzKind::uccsd;
    else if (base == "puccd") m.kind = AnsatzKind::puccd;
    else if (base == "uccd0") m.kind = AnsatzKind::uccd0;
    else if (base == "uccd0_full") m.kind = AnsatzKind::uccd0_full;
    else throw std::invalid_argument("unknown method: " + name);
    return m;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    json j = json::parse(in);

    RunConfig c;
    const auto& sys = j.at("system");
    const std::string kind = sys.at("kind").get<std::string>();
    if (kind == "fcidump") {
        c.source = RunConfig::Source::fcidump;
        double index = 0.0;
        for (const auto& p : sys.at("points")) {
            RunConfig::Point pt;
            pt.label = p.at("label").get<std::string>();
            pt.path = p.at("path").get<std::string>();
            pt.coordinate = p.value("coordinate", index);
            index += 1.0;
            c.points.push_back(std::move(pt));
        }
    } else if (kind == "hubbard") {
        c.source = RunConfig::Source::hubbard;
        c.hubbard_sites = sys.at("sites").get<int>();
        c.hubbard_t = sys.at("t").get<double>();
        c.hubbard_periodic = sys.value("periodic", true);
        auto filling = sys.at("filling");
        c.hubbard_n_up = filling.at(0).get<int>();
        c.hubbard_n_down = filling.at(1).get<int>();
        for (double u : sys.at("u_values")) {
            RunConfig::Point pt;
            pt.label = "U=" + std::to_string(u).substr(0, std::to_string(u).find('.') + 3);
            pt.coordinate = u;
            c.points.push_back(std::move(pt));
        }
    } else {
        throw std::invalid_argument("system.kind must be fcidump or hubbard");
    }

    c.frozen_core = j.value("frozen_core", std::vector<int>{});
    if (j.contains("encoding")) {
        const auto& e = j["encoding"];
        const std::string m = e.value("mapping", "parity");
        if (m == "parity") c.mapping = Mapping::parity;
        else if (m == "jordan_wigner") c.mapping = Mapping::jordan_wigner;
        else throw std::invalid_argument("encoding.mapping must be parity or jordan_wigner");
        c.two_qubit_reduction = e.value("two_qubit_reduction", c.mapping == Mapping::parity);
        c.tapering = e.value("tapering", false);
    }
    for (const auto& m : j.at("methods")) c.methods.push_back(parse_method(m.get<std::string>()));
    c.include_singles = j.value("include_singles", false);
    if (j.contains("optimizer")) {
        const auto& o = j["optimizer"];
        c.optimizer.energy_tol = o.value("energy_tol", c.optimizer.energy_tol);
        c.optimizer.gradient_step = o.value("gradient_step", c.optimizer.gradient_step);
        c.optimizer.max_iterations = o.value("max_iterations", c.optimizer.max_iterations);
        c.optimizer.initial_theta = o.value("initial_theta", c.optimizer.initial_theta);
        c.optimizer.initial_kappa = o.value("initial_kappa", c.optimizer.initial_kappa);
    }
    c.exact_ucc_comparison = j.value("exact_ucc_comparison", false);
    c.output_dir = j.value("output", std::string("out"));
    c.seed = j.value("seed", 0u);
    return c;
}

std::vector<std::string> validate_config(const RunConfig& c) {
    std::vector<std::string> findings;
    if (c.points.empty()) findings.push_back("no scan points configured");
    if (c.methods.empty()) findings.push_back("no methods configured");
    for (std::size_t i = 1; i < c.points.size(); ++i)
        if (!(c.points[i - 1].coordinate < c.points[i].coordinate))
            findings.push_back("scan coordinates must be strictly increasing");
    if (c.source == RunConfig::Source::fcidump) {
        for (const auto& p : c.points) {
            if (!fs::exists(p.path)) {
                findings.push_back("missing fixture: " + p.path);
                continue;
            }
            try {
                MolecularIntegrals ints = parse_fcidump_file(p.path);
                for (int core : c.frozen_core)
                    if (core >= ints.n_alpha || core >= ints.n_beta)
                        findings.push_back(p.path + ": frozen orbital " + std::to_string(core) +
                                           " is not doubly occupied");
                if (2 * (ints.n_orbitals - static_cast<int>(c.frozen_core.size())) > 62)
                    findings.push_back(p.path + ": active space too large");
            } catch (const std::exception& e) {
                findings.push_back(p.path + ": " + e.what());
            }
        }
    } else {
        if (c.hubbard_sites < 2) findings.push_back("hubbard: need at least 2 sites");
        if (c.hubbard_n_up > c.hubbard_sites || c.hubbard_n_down > c.hubbard_sites)
            findings.push_back("hubbard: filling exceeds site count");
        if (!c.frozen_core.empty()) findings.push_back("hubbard: frozen core not applicable");
    }
    if (c.two_qubit_reduction && c.mapping != Mapping::parity)
        findings.push_back("two-qubit reduction requires the parity mapping");
    for (const auto& m : c.methods)
        if (m.orbital_optimized && c.tapering)
            findings.push_back("orbital optimization cannot run with tapering enabled");
    return findings;
}

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    for (char ch : s) out += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
    return out;
}

AnsatzSpec make_spec(AnsatzKind kind, const ActiveSpace& space, bool include_singles) {
    switch (kind) {
        case AnsatzKind::uccsd: return uccsd_excitations(space);
        case AnsatzKind::puccd: return puccd_excitations(space, include_singles);
        case AnsatzKind::uccd0: return uccd0_excitations(space, false, include_singles);
        case AnsatzKind::uccd0_full: return uccd0_excitations(space, true, include_singles);
    }
    throw std::logic_error("unreachable");
}

struct CellResult {
    double energy = 0.0;
    long evaluations = 0;
    int iterations = 0;
    bool converged = false;
};

}  // namespace

int run_scan(const RunConfig& config) {
    auto findings = validate_config(config);
    if (!findings.empty()) {
        for (const auto& f : findings) std::cerr << "config error: " << f << "\n";
        return 2;
    }
    fs::create_directories(config.output_dir);

    // Assemble integrals and the exact reference per point.
    std::vector<MolecularIntegrals> ints_per_point;
    ScanSeries series;
    for (const auto& p : config.points) {
        MolecularIntegrals ints;
        if (config.source == RunConfig::Source::fcidump) {
            ints = parse_fcidump_file(p.path);
            if (!config.frozen_core.empty()) ints = apply_frozen_core(ints, config.frozen_core);
        } else {
            HubbardSpec spec;
            spec.n_sites = config.hubbard_sites;
            spec.t = config.hubbard_t;
            spec.u = p.coordinate;
            spec.periodic = config.hubbard_periodic;
            spec.n_up = config.hubbard_n_up;
            spec.n_down = config.hubbard_n_down;
            ints = build_hubbard(spec);
        }
        series.coordinates.push_back(p.coordinate);
        series.labels.push_back(p.label);
        series.exact.push_back(exact_ground(ints).energy);
        ints_per_point.push_back(std::move(ints));
    }

    json summary;
    summary["chemical_accuracy_ha"] = kChemicalAccuracyHa;
    summary["points"] = json::array();
    for (std::size_t i = 0; i < config.points.size(); ++i)
        summary["points"].push_back({{"label", series.labels[i]},
                                     {"coordinate", series.coordinates[i]},
                                     {"exact", series.exact[i]}});

    int failures = 0;
    std::map<std::string, std::vector<CellResult>> all_cells;

    for (const auto& method : config.methods) {
        const std::string mname = method.name();
        json mjson;
        std::vector<std::string> cell_failures;
        std::vector<CellResult> cells(config.points.size());
        std::vector<double> energies(config.points.size(),
                                     std::numeric_limits<double>::quiet_NaN());
        bool resources_recorded = false;

        for (std::size_t i = 0; i < config.points.size(); ++i) {
            const auto& ints = ints_per_point[i];
            try {
                ActiveSpace space{ints.n_orbitals, ints.n_alpha};
                VqeResult result;
                EncodingPlan plan = make_plan(config.mapping, config.two_qubit_reduction,
                                              ints.n_spin_orbitals(), ints.n_alpha, ints.n_beta);
                AnsatzSpec spec = make_spec(method.kind, space, config.include_singles);
                if (method.orbital_optimized) {
                    OoVqeProblem problem;
                    problem.ints = ints;
                    problem.kind = method.kind;
                    problem.include_singles = config.include_singles;
                    problem.mapping = config.mapping;
                    problem.two_qubit_reduction = config.two_qubit_reduction;
                    result = oo_vqe_minimize(problem, config.optimizer);
                    if (!resources_recorded) {
                        CompiledAnsatz ansatz = compile_ansatz(spec, plan);
                        ResourceEstimate r = estimate_resources(ansatz);
                        mjson["parameters"] = ansatz.n_parameters;
                        mjson["kappa_parameters"] = KappaMatrix::n_free_parameters(ints.n_orbitals);
                        mjson["resources"] = {{"rotations", r.parameterized_rotations},
                                              {"two_qubit_gates", r.two_qubit_gates},
                                              {"basis_change_gates", r.basis_change_gates}};
                        resources_recorded = true;
                    }
                } else {
                    PauliOperator h = encode_base(build_hamiltonian(ints), plan);
                    if (config.tapering) {
                        plan = plan_with_tapering(plan, h);
                        std::vector<int> sectors;
                        for (const auto& g : plan.taper_generators)
                            sectors.push_back(g.sector_eigenvalue);
                        h = taper(h, plan.taper_generators, sectors);
                    }
                    CompiledAnsatz ansatz = compile_ansatz(spec, plan);
                    result = config.exact_ucc_comparison
                                 ? vqe_minimize_exact(h, ansatz, config.optimizer)
                                 : vqe_minimize(h, ansatz, config.optimizer);
                    if (!resources_recorded) {
                        ResourceEstimate r = estimate_resources(ansatz);
                        mjson["parameters"] = ansatz.n_parameters;
                        mjson["kappa_parameters"] = 0;
                        mjson["resources"] = {{"rotations", r.parameterized_rotations},
                                              {"two_qubit_gates", r.two_qubit_gates},
                                              {"basis_change_gates", r.basis_change_gates}};
                        resources_recorded = true;
                    }
                    if (!config.tapering) {
                        Statevector state(ansatz.n_qubits, ansatz.reference_index);
                        apply_ansatz_trotter(state, ansatz, result.theta);
                        auto weights = configuration_weights(state, plan);
                        std::ofstream w(fs::path(config.output_dir) /
                                        ("weights_" + sanitize(mname) + "_" +
                                         sanitize(config.points[i].label) + ".csv"));
                        w << "occupation,re,im,weight\n";
                        char buf[96];
                        for (const auto& cw : weights) {
                            std::snprintf(buf, sizeof(buf), ",%.12e,%.12e,%.12e\n",
                                          cw.amplitude.real(), cw.amplitude.imag(),
                                          std::norm(cw.amplitude));
                            w << cw.occupations << buf;
                        }
                    }
                }
                std::ofstream t(fs::path(config.output_dir) /
                                ("trace_" + sanitize(mname) + "_" +
                                 sanitize(config.points[i].label) + ".csv"));
                t << trace_csv(result);
                cells[i] = {result.energy, result.n_energy_evaluations, result.n_iterations,
                            result.converged};
                energies[i] = result.energy;
            } catch (const std::exception& e) {
                ++failures;
                cell_failures.push_back(config.points[i].label + ": " + e.what());
                std::cerr << "cell failed (" << mname << ", " << config.points[i].label
                          << "): " << e.what() << "\n";
            }
        }

        const bool complete =
            std::none_of(energies.begin(), energies.end(), [](double e) { return std::isnan(e); });
        if (complete) {
            series.methods[mname] = energies;
            auto [mean, stderr_] = mean_error(series, mname);
            mjson["mean_abs_error_mha"] = mean * 1e3;
            mjson["stderr_mha"] = stderr_ * 1e3;
            if (energies.size() >= 2) {
                mjson["npe_mha"] = npe(series, mname) * 1e3;
                mjson["barrier_error_percent"] = barrier_error(series, mname);
            }
            auto [shifted, shift] = shift_align(series, mname, 0);
            mjson["energy_shift_mha"] = shift * 1e3;
        }
        mjson["energies"] = energies;
        json evals = json::array(), iters = json::array(), conv = json::array();
        for (const auto& cell : cells) {
            evals.push_back(cell.evaluations);
            iters.push_back(cell.iterations);
            conv.push_back(cell.converged);
        }
        mjson["energy_evaluations"] = evals;
        mjson["iterations"] = iters;
        mjson["converged"] = conv;
        if (!cell_failures.empty()) mjson["failures"] = cell_failures;
        summary["methods"][mname] = mjson;
        all_cells[mname] = cells;
    }

    // Orbital-optimization improvement at the anchor point, when both the
    // base method and its oo variant completed.
    for (const auto& method : config.methods) {
        if (!method.orbital_optimized) continue;
        MethodSpec base{method.kind, false};
        auto itb = series.methods.find(base.name());
        auto ito = series.methods.find(method.name());
        if (itb == series.methods.end() || ito == series.methods.end()) continue;
        summary["methods"][method.name()]["oo_improvement_percent"] =
            oo_improvement(itb->second[0], ito->second[0], series.exact[0]);
    }

    {
        std::ofstream csv(fs::path(config.output_dir) / "scan.csv");
        csv << scan_csv(series);
        std::ofstream js(fs::path(config.output_dir) / "summary.json");
        js << summary.dump(2) << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace qucc
