#pragma once

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "twistlab/farey.hpp"
#include "twistlab/group.hpp"
#include "twistlab/heegaard.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/topology.hpp"
#include "twistlab/window.hpp"

namespace twistlab {
namespace runner {

inline constexpr const char* kToolName = "twistlab";
inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentConfig {
    std::string kind;
    nlohmann::json params;  // the kind-specific block, echoed into the report
    std::uint64_t seed = 0;
    Window window{50, 0.5};
    std::string out;     // empty: stdout
    std::string format = "json";
};

struct Overrides {
    std::optional<std::int64_t> window_n;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
};

inline ExperimentConfig load_config(const std::string& kind, const std::string& config_path,
                                    const Overrides& ov) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config file " + config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config parse error: " + std::string(e.what()));
        }
        if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
        if (j.contains("kind") && j.at("kind").get<std::string>() != kind)
            throw std::invalid_argument("config kind '" + j.at("kind").get<std::string>() +
                                        "' does not match subcommand '" + kind + "'");
        if (j.contains("window")) cfg.window = window_from_json(j.at("window"));
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
        if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
        cfg.params = j.value("params", nlohmann::json::object());
    } else {
        cfg.params = nlohmann::json::object();
    }
    if (ov.window_n) cfg.window = Window(*ov.window_n, cfg.window.inner_fraction);
    if (ov.seed) cfg.seed = *ov.seed;
    if (ov.out) cfg.out = *ov.out;
    if (ov.format) cfg.format = *ov.format;
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "both")
        throw std::invalid_argument("format must be json, csv or both");
    return cfg;
}

struct RunResult {
    nlohmann::json report;
    std::string csv;
    bool all_pass = true;
};

namespace detail {

inline std::string csv_join(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + to_string(v[i]);
    return s;
}

inline std::string csv_join_i64(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

inline nlohmann::json verdicts_to_json(const std::map<std::string, bool>& v) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, ok] : v) j[k] = ok;
    return j;
}

inline nlohmann::json envelope(const ExperimentConfig& cfg) {
    return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
            {"kind", cfg.kind},
            {"seed", cfg.seed},
            {"window", to_json(cfg.window)},
            {"params", cfg.params}};
}

// --- element / subset parsing for the group zoo ------------------------------

inline std::vector<std::int64_t> i64_vector(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
    std::vector<std::int64_t> v;
    for (const auto& x : j) v.push_back(x.get<std::int64_t>());
    return v;
}

inline grp::ZdGroup::Elem element_from_json(const grp::ZdGroup& g, const nlohmann::json& j) {
    auto v = i64_vector(j);
    if (v.size() != g.dim()) throw std::invalid_argument("element arity mismatch for " + g.name());
    return v;
}

inline grp::ZnGroup::Elem element_from_json(const grp::ZnGroup& g, const nlohmann::json& j) {
    return g.canon(j.get<std::int64_t>());
}

inline grp::DihedralGroup::Elem element_from_json(const grp::DihedralGroup& g,
                                                  const nlohmann::json& j) {
    auto v = i64_vector(j);
    if (v.size() != 2) throw std::invalid_argument("dihedral elements are [rotation, flip]");
    return g.canon({v[0], static_cast<int>(v[1])});
}

inline grp::SymmetricGroup::Elem element_from_json(const grp::SymmetricGroup& g,
                                                   const nlohmann::json& j) {
    auto v = i64_vector(j);
    if (v.size() != g.degree()) throw std::invalid_argument("permutation arity mismatch");
    grp::SymmetricGroup::Elem e(v.size());
    std::vector<bool> seen(v.size(), false);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= static_cast<std::int64_t>(v.size()) || seen[static_cast<std::size_t>(v[i])])
            throw std::invalid_argument("not a permutation of 0..m-1");
        seen[static_cast<std::size_t>(v[i])] = true;
        e[i] = static_cast<std::uint8_t>(v[i]);
    }
    return e;
}

inline grp::FreeF2::Elem element_from_json(const grp::FreeF2& g, const nlohmann::json& j) {
    const std::string s = j.get<std::string>();
    grp::FreeF2::Elem w;
    for (char ch : s) {
        switch (ch) {
            case 'a': w.push_back(1); break;
            case 'A': w.push_back(-1); break;
            case 'b': w.push_back(2); break;
            case 'B': w.push_back(-2); break;
            default: throw std::invalid_argument("free group words use letters a, A, b, B");
        }
    }
    return g.canon(w);
}

inline grp::HeisenbergGroup::Elem element_from_json(const grp::HeisenbergGroup&,
                                                    const nlohmann::json& j) {
    auto v = i64_vector(j);
    if (v.size() != 3) throw std::invalid_argument("Heisenberg elements are [a, b, c]");
    return {v[0], v[1], v[2]};
}

template <grp::GroupOracle G>
grp::Subset<G> subset_from_json(const G& g, const nlohmann::json& spec) {
    const std::string type = spec.is_string() ? spec.get<std::string>()
                                              : spec.value("type", std::string("nontrivial"));
    if (type == "whole") return {"whole", [](const typename G::Elem&) { return true; }};
    if (type == "nontrivial") {
        auto idelem = g.id();
        return {"nontrivial", [idelem](const typename G::Elem& e) { return !(e == idelem); }};
    }
    if (type == "complement") {
        std::vector<typename G::Elem> excluded;
        for (const auto& ej : spec.at("exclude")) excluded.push_back(element_from_json(g, ej));
        return {"complement", [excluded](const typename G::Elem& e) {
                    for (const auto& x : excluded)
                        if (e == x) return false;
                    return true;
                }};
    }
    if constexpr (std::is_same_v<G, grp::ZdGroup>) {
        if (type == "coordinate-nonzero") {
            const std::size_t i = spec.value("index", std::size_t{0});
            if (i >= g.dim()) throw std::invalid_argument("coordinate index out of range");
            return {"coordinate-nonzero[" + std::to_string(i) + "]",
                    [i](const grp::ZdGroup::Elem& e) { return e[i] != 0; }};
        }
        if (type == "halfspace") {
            const std::size_t i = spec.value("index", std::size_t{0});
            if (i >= g.dim()) throw std::invalid_argument("coordinate index out of range");
            return {"halfspace[" + std::to_string(i) + "]",
                    [i](const grp::ZdGroup::Elem& e) { return e[i] >= 0; }};
        }
        if (type == "congruence-nonzero") {
            const std::int64_t m = spec.at("modulus").get<std::int64_t>();
            const std::size_t i = spec.value("index", std::size_t{0});
            if (m < 2) throw std::invalid_argument("modulus must be >= 2");
            if (i >= g.dim()) throw std::invalid_argument("coordinate index out of range");
            return {"congruence-nonzero[" + std::to_string(i) + " mod " + std::to_string(m) + "]",
                    [i, m](const grp::ZdGroup::Elem& e) { return e[i] % m != 0; }};
        }
    }
    throw std::invalid_argument("unknown subset type '" + type + "' for group " + g.name());
}

template <grp::GroupOracle G>
RunResult run_probe_on(const G& g, const grp::GeneratingSet<G>& s, const ExperimentConfig& cfg) {
    grp::Subset<G> u = subset_from_json(g, cfg.params.value("subset", nlohmann::json("nontrivial")));
    std::vector<typename G::Elem> sample;
    if (cfg.params.contains("elements")) {
        for (const auto& ej : cfg.params.at("elements")) sample.push_back(element_from_json(g, ej));
    } else {
        Prng rng(cfg.seed);
        const std::int64_t count = cfg.params.value("samples", std::int64_t{8});
        const std::int64_t magnitude = cfg.params.value("magnitude", std::int64_t{10});
        if (count < 1) throw std::invalid_argument("samples must be >= 1");
        for (std::int64_t i = 0; i < count; ++i) sample.push_back(g.random_element(rng, magnitude));
    }
    s.validate(g);
    topo::ProbeReport rep = topo::openness_probe(g, u, sample, s, cfg.window);

    RunResult res;
    res.report = envelope(cfg);
    res.report["results"] = to_json(rep);
    const bool pass = rep.vacuous || rep.consistent;
    res.report["verdicts"] = {{"exceptions_confined", pass}};
    res.report["all_pass"] = pass;
    res.all_pass = pass;

    std::ostringstream csv;
    csv << "element,generator,side,exceptions,confined\n";
    for (const auto& e : rep.entries)
        csv << '"' << e.element << "\"," << e.generator << ',' << topo::side_name(e.side) << ','
            << csv_join_i64(e.exceptions) << ',' << (e.confined ? 1 : 0) << '\n';
    res.csv = csv.str();
    return res;
}

inline RunResult run_topology(const ExperimentConfig& cfg) {
    const std::string name = cfg.params.value("group", std::string("Z^2"));
    if (name.rfind("Z^", 0) == 0) {
        grp::ZdGroup g(std::stoul(name.substr(2)));
        return run_probe_on(g, grp::standard_generators(g), cfg);
    }
    if (name.rfind("Z/", 0) == 0) {
        grp::ZnGroup g(std::stoll(name.substr(2)));
        return run_probe_on(g, grp::standard_generators(g), cfg);
    }
    if (name.rfind("D_", 0) == 0) {
        grp::DihedralGroup g(std::stoll(name.substr(2)));
        return run_probe_on(g, grp::reflection_generators(g), cfg);
    }
    if (name.rfind("S_", 0) == 0) {
        grp::SymmetricGroup g(std::stoul(name.substr(2)));
        return run_probe_on(g, grp::coxeter_generators(g), cfg);
    }
    if (name == "F_2") {
        grp::FreeF2 g;
        return run_probe_on(g, grp::free_generators(g), cfg);
    }
    if (name == "Heisenberg") {
        grp::HeisenbergGroup g;
        return run_probe_on(g, grp::standard_generators(g), cfg);
    }
    throw std::invalid_argument("unknown group '" + name + "'");
}

// --- heegaard ----------------------------------------------------------------

inline HomologyClass resolve_twist_class(const nlohmann::json& params, std::size_t g) {
    if (params.contains("twist_class")) {
        HomologyClass c = vector_from_json(params.at("twist_class"));
        if (c.size() != 2 * g) throw std::invalid_argument("twist_class has wrong length");
        return c;
    }
    const auto chain = chain_curve_classes(g);
    const std::size_t idx = params.value("chain_index", std::size_t{0});
    if (idx >= chain.size()) throw std::invalid_argument("chain_index out of range");
    return chain[idx];
}

inline HeegaardData heegaard_from_params(const nlohmann::json& params) {
    if (params.contains("lens")) {
        const auto& l = params.at("lens");
        return lens_space(l.at("p").get<std::int64_t>(), l.at("q").get<std::int64_t>());
    }
    const std::size_t g = params.at("genus").get<std::size_t>();
    DiskSystem a = params.contains("a_system")
                       ? DiskSystem{[&] {
                             std::vector<HomologyClass> cs;
                             for (const auto& cj : params.at("a_system")) cs.push_back(vector_from_json(cj));
                             return cs;
                         }()}
                       : standard_a_system(g);
    DiskSystem b = params.contains("b_system")
                       ? DiskSystem{[&] {
                             std::vector<HomologyClass> cs;
                             for (const auto& cj : params.at("b_system")) cs.push_back(vector_from_json(cj));
                             return cs;
                         }()}
                       : standard_b_system(g);
    if (params.contains("gluing_matrix"))
        return HeegaardData(g, std::move(a), std::move(b),
                            SymplecticMap(matrix_from_json(params.at("gluing_matrix"))));
    TwistWord w;
    if (params.contains("gluing_word")) w = twist_word_from_json(params.at("gluing_word"));
    return HeegaardData(g, std::move(a), std::move(b), w);
}

inline std::vector<std::uint64_t> primes_from_params(const nlohmann::json& params) {
    std::vector<std::uint64_t> primes{2, 3, 5};
    if (params.contains("primes")) {
        primes.clear();
        for (const auto& pj : params.at("primes")) primes.push_back(pj.get<std::uint64_t>());
    }
    for (std::uint64_t p : primes)
        if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return primes;
}

inline RunResult run_heegaard(const ExperimentConfig& cfg) {
    HeegaardData h = heegaard_from_params(cfg.params);
    const HomologyClass c = resolve_twist_class(cfg.params, h.genus);
    const TwistSide side = side_from_string(cfg.params.value("side", std::string("right")));
    const auto primes = primes_from_params(cfg.params);
    ScanReport rep = coset_scan(h, c, cfg.window, primes, side);

    RunResult res;
    res.report = envelope(cfg);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows) {
        nlohmann::json fp = nlohmann::json::object();
        for (std::size_t i = 0; i < primes.size(); ++i)
            fp["F" + std::to_string(primes[i])] = row.b1_fp[i];
        nlohmann::json torsion = nlohmann::json::array();
        for (const Int& d : row.torsion) torsion.push_back(int_to_json(d));
        rows.push_back({{"n", row.n},
                        {"det", int_to_json(row.det)},
                        {"b1", row.b1},
                        {"torsion", torsion},
                        {"b1_mod_p", fp}});
    }
    nlohmann::json poly = nlohmann::json::array();
    for (const Int& coef : rep.det_poly) poly.push_back(int_to_json(coef));
    res.report["results"] = {{"genus", rep.genus},
                             {"side", rep.side == TwistSide::right ? "right" : "left"},
                             {"twist_class", vector_to_json(c)},
                             {"rows", rows},
                             {"det_polynomial", poly},
                             {"zero_set", rep.zero_set},
                             {"det_identically_zero", rep.det_identically_zero},
                             {"zero_set_within_inner", rep.zero_set_within_inner},
                             {"growth_threshold", rep.growth_threshold},
                             {"growth_nontrivial", rep.growth_nontrivial}};
    res.report["verdicts"] = verdicts_to_json(rep.verdicts);
    res.report["all_pass"] = rep.all_pass();
    res.all_pass = rep.all_pass();

    std::ostringstream csv;
    csv << "n,det,b1,torsion";
    for (std::uint64_t p : primes) csv << ",b1_F" << p;
    csv << '\n';
    for (const auto& row : rep.rows) {
        csv << row.n << ',' << to_string(row.det) << ',' << row.b1 << ',' << csv_join(row.torsion);
        for (std::size_t i = 0; i < primes.size(); ++i) csv << ',' << row.b1_fp[i];
        csv << '\n';
    }
    res.csv = csv.str();
    return res;
}

// --- farey -------------------------------------------------------------------

inline RunResult run_farey(const ExperimentConfig& cfg) {
    using farey::Slope;
    const Slope a = farey::slope_from_string(cfg.params.value("a", std::string("1/0")));
    const Slope b = farey::slope_from_string(cfg.params.value("b", std::string("0/1")));
    const Slope c = farey::slope_from_string(cfg.params.value("c", std::string("1/1")));
    farey::FareyScanReport rep = farey::twist_coset_distance_scan(a, b, c, cfg.window);

    RunResult res;
    res.report = envelope(cfg);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"n", row.n},
                        {"slope", row.slope.str()},
                        {"distance", row.dist},
                        {"twisting_coefficient", row.twisting}});
    res.report["results"] = {{"a", a.str()},
                             {"b", b.str()},
                             {"c", c.str()},
                             {"base_distance", rep.base_distance},
                             {"bound", rep.bound},
                             {"rows", rows},
                             {"exceptional", rep.exceptional}};
    res.report["verdicts"] = {{"upper_bound_holds", rep.upper_bound_holds},
                              {"exceptional_within_inner", rep.exceptional_within_inner}};
    res.all_pass = rep.upper_bound_holds && rep.exceptional_within_inner;
    res.report["all_pass"] = res.all_pass;

    std::ostringstream csv;
    csv << "n,slope,distance,twisting_coefficient\n";
    for (const auto& row : rep.rows)
        csv << row.n << ',' << row.slope.str() << ',' << row.dist << ',' << row.twisting << '\n';
    res.csv = csv.str();
    return res;
}

// --- fixed-class -------------------------------------------------------------

inline RunResult run_fixed_class(const ExperimentConfig& cfg) {
    const std::size_t g = cfg.params.at("genus").get<std::size_t>();
    TwistWord word;
    if (cfg.params.contains("word")) word = twist_word_from_json(cfg.params.at("word"));
    const HomologyClass c = resolve_twist_class(cfg.params, g);
    SymplecticMap f = word_to_matrix(g, word);
    FixedClassScanReport rep = fixed_class_coset_scan(f, c, cfg.window);

    RunResult res;
    res.report = envelope(cfg);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"n", row.n}, {"fixed_rank", row.fixed_rank}});
    res.report["results"] = {{"genus", g},
                             {"twist_class", vector_to_json(c)},
                             {"rows", rows},
                             {"exceptional", rep.exceptional}};
    res.report["verdicts"] = {{"exceptional_within_inner", rep.exceptional_within_inner}};
    res.all_pass = rep.exceptional_within_inner;
    res.report["all_pass"] = res.all_pass;

    std::ostringstream csv;
    csv << "n,fixed_rank\n";
    for (const auto& row : rep.rows) csv << row.n << ',' << row.fixed_rank << '\n';
    res.csv = csv.str();
    return res;
}

// --- snf ----------------------------------------------------------------------

inline RunResult run_snf(const ExperimentConfig& cfg) {
    if (!cfg.params.contains("matrix")) throw std::invalid_argument("snf needs params.matrix");
    IntMatrix a = matrix_from_json(cfg.params.at("matrix"));
    SmithForm s = smith_normal_form(a);

    const IntMatrix uav = s.u * a * s.v;
    bool diag_ok = uav == s.diagonal(a.rows(), a.cols());
    bool chain_ok = true;
    for (std::size_t i = 0; i + 1 < s.d.size(); ++i)
        if (s.d[i] == 0 || s.d[i + 1] % s.d[i] != 0) chain_ok = false;
    bool nonneg_ok = true;
    for (const Int& d : s.d)
        if (d < 0) nonneg_ok = false;
    const Int du = determinant(s.u), dv = determinant(s.v);
    bool unimodular_ok = (du == 1 || du == -1) && (dv == 1 || dv == -1);

    RunResult res;
    res.report = envelope(cfg);
    nlohmann::json d = nlohmann::json::array();
    for (const Int& x : s.d) d.push_back(int_to_json(x));
    res.report["results"] = {{"matrix", to_json(a)},
                             {"d", d},
                             {"rank", s.rank},
                             {"u", to_json(s.u)},
                             {"v", to_json(s.v)}};
    res.report["verdicts"] = {{"uav_equals_diagonal", diag_ok},
                              {"divisibility_chain", chain_ok},
                              {"diagonal_nonnegative", nonneg_ok},
                              {"transforms_unimodular", unimodular_ok}};
    res.all_pass = diag_ok && chain_ok && nonneg_ok && unimodular_ok;
    res.report["all_pass"] = res.all_pass;

    std::ostringstream csv;
    csv << "i,d\n";
    for (std::size_t i = 0; i < s.d.size(); ++i) csv << i << ',' << to_string(s.d[i]) << '\n';
    res.csv = csv.str();
    return res;
}

// --- list ----------------------------------------------------------------------

inline RunResult run_list(const ExperimentConfig& cfg) {
    RunResult res;
    res.report = envelope(cfg);

    nlohmann::json groups = nlohmann::json::array();
    for (const char* name : {"Z^1", "Z^2", "Z^3", "Z/5", "Z/12", "D_4", "D_6", "S_3", "S_4",
                             "F_2", "Heisenberg"})
        groups.push_back(name);

    nlohmann::json systems = nlohmann::json::array();
    for (std::size_t g = 1; g <= 4; ++g) {
        nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
        for (const auto& c : standard_a_system(g).classes) a.push_back(vector_to_json(c));
        for (const auto& c : standard_b_system(g).classes) b.push_back(vector_to_json(c));
        systems.push_back({{"genus", g}, {"a_system", a}, {"b_system", b}});
    }

    nlohmann::json chains = nlohmann::json::array();
    for (std::size_t g = 1; g <= 4; ++g) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : chain_curve_classes(g)) cs.push_back(vector_to_json(c));
        chains.push_back({{"genus", g}, {"classes", cs}});
    }

    res.report["results"] = {{"groups", groups},
                             {"disk_systems", systems},
                             {"chain_curves", chains},
                             {"subset_types",
                              {"whole", "nontrivial", "complement", "coordinate-nonzero",
                               "halfspace", "congruence-nonzero"}}};
    res.report["verdicts"] = nlohmann::json::object();
    res.report["all_pass"] = true;

    std::ostringstream csv;
    csv << "category,name\n";
    for (const auto& gname : groups) csv << "group," << gname.get<std::string>() << '\n';
    for (std::size_t g = 1; g <= 4; ++g) csv << "disk_system,genus" << g << '\n';
    for (std::size_t g = 1; g <= 4; ++g) csv << "chain_curves,genus" << g << '\n';
    res.csv = csv.str();
    return res;
}

}  // namespace detail

inline RunResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.kind == "topology-probe") return detail::run_topology(cfg);
    if (cfg.kind == "heegaard-scan") return detail::run_heegaard(cfg);
    if (cfg.kind == "farey-scan") return detail::run_farey(cfg);
    if (cfg.kind == "fixed-class-scan") return detail::run_fixed_class(cfg);
    if (cfg.kind == "snf") return detail::run_snf(cfg);
    if (cfg.kind == "list") return detail::run_list(cfg);
    throw std::invalid_argument("unknown experiment kind '" + cfg.kind + "'");
}

// Serialize with sorted keys and a trailing newline; identical config + seed
// must reproduce identical bytes.
inline std::string report_bytes(const nlohmann::json& report) { return report.dump(2) + "\n"; }

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << bytes;
}

// json -> one file (or stdout); csv -> one file (or stdout); both -> two
// files with forced suffixes (or both streams to stdout).
inline void emit(const RunResult& res, const ExperimentConfig& cfg, std::ostream& stdout_stream) {
    const std::string json_bytes = report_bytes(res.report);
    if (cfg.format == "json") {
        if (cfg.out.empty())
            stdout_stream << json_bytes;
        else
            write_file(cfg.out, json_bytes);
    } else if (cfg.format == "csv") {
        if (cfg.out.empty())
            stdout_stream << res.csv;
        else
            write_file(cfg.out, res.csv);
    } else {
        if (cfg.out.empty()) {
            stdout_stream << json_bytes << res.csv;
        } else {
            write_file(cfg.out + ".json", json_bytes);
            write_file(cfg.out + ".csv", res.csv);
        }
    }
}

}  // namespace runner
}  // namespace twistlab
