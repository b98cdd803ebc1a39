// tripotent: classify matrices, run characterization checks, sweep the
// verification suite, and search for counterexamples.
//
// Exit codes: 0 success (check: verdict consistent), 2 input parse or usage
// error, 3 non-square input where a square matrix is required, 4 verdict
// inconsistent (check) or failed suite cells, 5 side-condition rejection.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tripotent/classes.hpp"
#include "tripotent/decompose.hpp"
#include "tripotent/errors.hpp"
#include "tripotent/generate.hpp"
#include "tripotent/matrix_json.hpp"
#include "tripotent/suite.hpp"
#include "tripotent/theorems.hpp"

namespace {

using namespace tripotent;

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw InvalidInputError(what + " is not an unsigned integer: " + text);
    }
    if (pos != text.size()) {
        throw InvalidInputError(what + " is not an unsigned integer: " + text);
    }
    return static_cast<std::uint64_t>(value);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TRIPOTENT_SEED")) {
        return parse_u64(env, "TRIPOTENT_SEED");
    }
    return 1;
}

std::string format_complex(const Complex& z) {
    std::ostringstream out;
    out << std::setprecision(6) << z.real();
    if (z.imag() != 0.0) {
        out << (z.imag() < 0.0 ? "-" : "+") << std::setprecision(6)
            << std::abs(z.imag()) << "i";
    }
    return out.str();
}

void print_matrix_table(std::ostream& out, const ComplexMatrix& a) {
    std::vector<std::string> cells(a.rows() * a.cols());
    std::size_t width = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::string& cell = cells[i * a.cols() + j];
            cell = format_complex(a(i, j));
            width = std::max(width, cell.size());
        }
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out << (j == 0 ? "" : "  ")
                << std::setw(static_cast<int>(width))
                << cells[i * a.cols() + j];
        }
        out << "\n";
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

int cmd_classify(const std::string& path, const ToleranceConfig& cfg,
                 bool json_out) {
    const ComplexMatrix a = load_matrix(path);
    if (!a.is_square()) {
        throw DimensionError("classify: matrix must be square");
    }
    struct Row {
        std::string label;
        bool member;
        double residual;
    };
    std::vector<Row> rows;
    for (ClassLabel label : all_class_labels) {
        const double residual = class_residual(a, label, cfg);
        rows.push_back({to_string(label), residual <= cfg.eq_tol, residual});
    }
    const bool three_op = rows.back().member;
    std::optional<Signature> sig;
    if (three_op) sig = signature(a, cfg);

    if (json_out) {
        nlohmann::ordered_json j;
        j["n"] = a.rows();
        j["labels"] = nlohmann::ordered_json::object();
        for (const Row& row : rows) {
            j["labels"][row.label] = {{"member", row.member},
                                      {"residual", row.residual}};
        }
        j["three_op"] = three_op;
        if (sig) {
            j["signature"] = {{"p", sig->p}, {"q", sig->q}, {"z", sig->z}};
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "class  member  residual\n";
    for (const Row& row : rows) {
        std::cout << std::left << std::setw(5) << row.label << "  "
                  << std::setw(6) << bool_word(row.member) << "  "
                  << row.residual << "\n";
    }
    if (sig) {
        std::cout << "signature: p=" << sig->p << " q=" << sig->q
                  << " z=" << sig->z << "\n";
    }
    return 0;
}

int cmd_pinv(const std::string& path, const ToleranceConfig& cfg,
             bool json_out) {
    const ComplexMatrix a = load_matrix(path);
    const ComplexMatrix pinv = mp_inverse(a, cfg);
    if (json_out) {
        std::cout << matrix_to_json(pinv) << "\n";
        return 0;
    }
    print_matrix_table(std::cout, pinv);
    const ComplexMatrix ap = a * pinv;
    const ComplexMatrix pa = pinv * a;
    std::cout << "penrose_1: " << relative_distance(a * pa, a) << "\n";
    std::cout << "penrose_2: " << relative_distance(pinv * ap, pinv) << "\n";
    std::cout << "penrose_3: " << relative_distance(conj_transpose(ap), ap)
              << "\n";
    std::cout << "penrose_4: " << relative_distance(conj_transpose(pa), pa)
              << "\n";
    if (a.is_square()) {
        const ComplexMatrix via_hs = mp_via_hs(hs_decompose(a, cfg));
        std::cout << "route_agreement: " << relative_distance(pinv, via_hs)
                  << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& path, const ToleranceConfig& cfg,
                  bool json_out) {
    const ComplexMatrix a = load_matrix(path);
    const HSDecomposition d = hs_decompose(a, cfg);
    const double reconstruction = relative_distance(hs_reconstruct(d), a);
    double kk_ll = 0.0;
    if (d.r > 0) {
        const ComplexMatrix gram = d.k * conj_transpose(d.k) +
                                   d.l * conj_transpose(d.l);
        kk_ll = relative_distance(gram, ComplexMatrix::identity(d.r));
    }
    if (json_out) {
        nlohmann::ordered_json j;
        j["n"] = d.n();
        j["r"] = d.r;
        j["sigma"] = d.sigma;
        j["u"] = nlohmann::ordered_json::parse(matrix_to_json(d.u));
        j["k"] = nlohmann::ordered_json::parse(matrix_to_json(d.k));
        j["l"] = nlohmann::ordered_json::parse(matrix_to_json(d.l));
        j["residuals"] = {{"reconstruction", reconstruction},
                          {"kk_ll_identity", kk_ll}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "n: " << d.n() << "\n";
    std::cout << "r: " << d.r << "\n";
    std::cout << "sigma:";
    for (double s : d.sigma) std::cout << " " << s;
    std::cout << "\n";
    std::cout << "reconstruction: " << reconstruction << "\n";
    std::cout << "kk_ll_identity: " << kk_ll << "\n";
    std::cout << "(use --format json for the u, k, l factors)\n";
    return 0;
}

void print_report_table(const TheoremReport& rep) {
    std::cout << "theorem_id: " << rep.theorem_id << "\n";
    std::cout << "condition_holds: " << bool_word(rep.condition_holds) << "\n";
    std::cout << "is_three_op: " << bool_word(rep.is_three_op) << "\n";
    std::cout << "verdict_consistent: " << bool_word(rep.verdict_consistent)
              << "\n";
    if (rep.exclusion_flag) {
        std::cout << "exclusion_flag: " << bool_word(*rep.exclusion_flag)
                  << "\n";
    }
    for (const auto& [name, value] : rep.residuals) {
        std::cout << "residual " << name << ": " << value << "\n";
    }
}

int cmd_check(const std::string& path, const CheckRequest& req,
              const ToleranceConfig& cfg, bool json_out) {
    const ComplexMatrix a = load_matrix(path);
    const TheoremReport rep = run_checker(a, req, cfg);
    if (json_out) {
        std::cout << to_json_string(rep) << "\n";
    } else {
        print_report_table(rep);
    }
    return rep.verdict_consistent ? 0 : 4;
}

int cmd_generate(const GenSpec& spec, bool json_out) {
    const ComplexMatrix a = generate(spec);
    if (json_out) {
        std::cout << matrix_to_json(a) << "\n";
    } else {
        print_matrix_table(std::cout, a);
    }
    return 0;
}

void apply_config_file(SuiteConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInputError("suite: cannot open config file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("suite: config is not JSON: ") +
                                e.what());
    }
    if (!j.is_object()) {
        throw InvalidInputError("suite: config must be a JSON object");
    }
    try {
        if (j.contains("sizes")) {
            cfg.sizes = j["sizes"].get<std::vector<std::size_t>>();
        }
        if (j.contains("trials_per_cell")) {
            cfg.trials_per_cell = j["trials_per_cell"].get<std::size_t>();
        }
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("theorems")) {
            cfg.theorems = j["theorems"].get<std::vector<std::string>>();
        }
        if (j.contains("grid_min")) cfg.grid_min = j["grid_min"].get<int>();
        if (j.contains("grid_max")) cfg.grid_max = j["grid_max"].get<int>();
        if (j.contains("eq_tol")) {
            cfg.tolerances.eq_tol = j["eq_tol"].get<double>();
        }
        if (j.contains("rank_rel_tol")) {
            cfg.tolerances.rank_rel_tol = j["rank_rel_tol"].get<double>();
        }
        if (j.contains("eig_class_tol")) {
            cfg.tolerances.eig_class_tol = j["eig_class_tol"].get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("suite: bad config field: ") +
                                e.what());
    }
}

int cmd_suite(const SuiteConfig& cfg, bool json_out,
              const std::string& out_path) {
    const SuiteReport report = run_suite(cfg);
    const std::string json_text = to_json_string(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            throw InvalidInputError("suite: cannot write " + out_path);
        }
        out << json_text << "\n";
    }
    std::size_t failed = 0;
    std::size_t infeasible = 0;
    std::size_t expected = 0;
    for (const SuiteCell& cell : report.cells) {
        if (cell.status == "failed") ++failed;
        if (cell.status == "infeasible") ++infeasible;
        if (cell.status == "expected-exception") ++expected;
    }
    if (json_out) {
        std::cout << json_text << "\n";
    } else {
        std::cout << "cells: " << report.cells.size() << " (failed " << failed
                  << ", infeasible " << infeasible << ", expected-exception "
                  << expected << ")\n";
        std::cout << "trials: " << report.total_trials << "\n";
        std::cout << "inconsistent: " << report.total_inconsistent << "\n";
        std::cout << "seconds: " << report.seconds << "\n";
        for (const SuiteCell& cell : report.cells) {
            if (cell.status != "failed") continue;
            std::cout << "failed: " << cell.theorem << " family "
                      << cell.family << " n=" << cell.size << " inconsistent "
                      << cell.inconsistent << "/" << cell.trials
                      << " max_residual " << cell.max_residual << "\n";
        }
    }
    return failed == 0 ? 0 : 4;
}

CheckRequest parse_identity(const std::string& identity) {
    CheckRequest req;
    const std::size_t sep = identity.find_first_of(":/");
    if (sep == std::string::npos) {
        req.theorem = identity;
    } else {
        req.theorem = identity.substr(0, sep);
        req.variant = identity.substr(sep + 1);
    }
    return req;
}

int cmd_search(const SearchConfig& cfg, bool json_out) {
    const SearchResult result = search_counterexample(cfg);
    if (json_out) {
        std::cout << to_json_string(result) << "\n";
        return 0;
    }
    std::cout << "found: " << bool_word(result.found) << "\n";
    std::cout << "samples: " << result.samples << "\n";
    if (result.report) print_report_table(*result.report);
    if (result.witness) {
        std::cout << "witness:\n";
        print_matrix_table(std::cout, *result.witness);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal tripotent matrix toolkit"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    double tol = -1.0;
    app.add_option("--tol", tol, "override eq_tol");

    std::string classify_file;
    CLI::App* classify = app.add_subcommand("classify", "class membership report");
    classify->add_option("file", classify_file, "matrix JSON file")->required();

    std::string pinv_file;
    CLI::App* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse");
    pinv->add_option("file", pinv_file, "matrix JSON file")->required();

    std::string decompose_file;
    CLI::App* decompose = app.add_subcommand("decompose", "canonical form");
    decompose->add_option("file", decompose_file, "matrix JSON file")->required();

    std::string check_file;
    std::string check_theorem;
    std::string check_variant;
    int check_s = 0;
    int check_t = 0;
    CLI::App* check = app.add_subcommand("check", "run one theorem checker");
    check->add_option("file", check_file, "matrix JSON file")->required();
    check->add_option("--theorem", check_theorem, "theorem id")->required();
    check->add_option("--variant", check_variant, "variant name");
    CLI::Option* check_s_opt = check->add_option("--s", check_s, "exponent s");
    CLI::Option* check_t_opt = check->add_option("--t", check_t, "exponent t");

    std::size_t gen_n = 1;
    std::string gen_label;
    std::string gen_signature;
    std::size_t gen_rank = 0;
    std::uint64_t gen_seed = 0;
    CLI::App* gen = app.add_subcommand("generate", "seeded random matrix");
    gen->add_option("--n", gen_n, "dimension")->required();
    gen->add_option("--label", gen_label, "class or named construction")
        ->required();
    gen->add_option("--signature", gen_signature, "p,q,z (3OP only)");
    CLI::Option* gen_rank_opt = gen->add_option("--rank", gen_rank, "rank");
    CLI::Option* gen_seed_opt = gen->add_option("--seed", gen_seed, "RNG seed");

    std::string suite_config_path;
    std::string suite_sizes;
    std::string suite_theorems;
    std::size_t suite_trials = 0;
    std::uint64_t suite_seed = 0;
    int suite_grid_min = 0;
    int suite_grid_max = 0;
    std::string suite_out;
    CLI::App* suite = app.add_subcommand("suite", "full verification sweep");
    suite->add_option("--config", suite_config_path, "JSON config file");
    suite->add_option("--sizes", suite_sizes, "comma-separated dimensions");
    suite->add_option("--theorems", suite_theorems, "comma-separated ids");
    CLI::Option* suite_trials_opt =
        suite->add_option("--trials", suite_trials, "trials per cell");
    CLI::Option* suite_seed_opt =
        suite->add_option("--seed", suite_seed, "RNG seed");
    CLI::Option* suite_gmin_opt =
        suite->add_option("--grid-min", suite_grid_min, "exponent grid min");
    CLI::Option* suite_gmax_opt =
        suite->add_option("--grid-max", suite_grid_max, "exponent grid max");
    suite->add_option("--out", suite_out, "also write the JSON report here");

    std::string search_identity;
    std::string search_ensemble;
    std::size_t search_budget = 1000;
    std::uint64_t search_seed = 0;
    std::size_t search_min_n = 2;
    std::size_t search_max_n = 5;
    int search_s = 0;
    int search_t = 0;
    CLI::App* search = app.add_subcommand("search", "counterexample search");
    search->add_option("--identity", search_identity,
                       "theorem id, optionally id:variant")
        ->required();
    search->add_option("--ensemble", search_ensemble, "generator family")
        ->required();
    search->add_option("--budget", search_budget, "sample budget");
    CLI::Option* search_seed_opt =
        search->add_option("--seed", search_seed, "RNG seed");
    search->add_option("--min-n", search_min_n, "smallest dimension");
    search->add_option("--max-n", search_max_n, "largest dimension");
    CLI::Option* search_s_opt = search->add_option("--s", search_s, "exponent s");
    CLI::Option* search_t_opt = search->add_option("--t", search_t, "exponent t");

    for (CLI::App* sub : app.get_subcommands(
             [](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool json_out = format == "json";
    ToleranceConfig tolerances;
    if (tol >= 0.0) tolerances.eq_tol = tol;

    try {
        if (*classify) return cmd_classify(classify_file, tolerances, json_out);
        if (*pinv) return cmd_pinv(pinv_file, tolerances, json_out);
        if (*decompose) return cmd_decompose(decompose_file, tolerances, json_out);
        if (*check) {
            CheckRequest req;
            req.theorem = check_theorem;
            req.variant = check_variant;
            if (*check_s_opt) req.s = check_s;
            if (*check_t_opt) req.t = check_t;
            return cmd_check(check_file, req, tolerances, json_out);
        }
        if (*gen) {
            GenSpec spec;
            spec.n = gen_n;
            spec.label = gen_label;
            spec.seed = *gen_seed_opt ? gen_seed : default_seed();
            if (!gen_signature.empty()) {
                const std::vector<std::string> parts = split(gen_signature, ',');
                if (parts.size() != 3) {
                    throw InvalidInputError(
                        "generate: --signature wants p,q,z");
                }
                Signature sig;
                sig.p = parse_u64(parts[0], "signature p");
                sig.q = parse_u64(parts[1], "signature q");
                sig.z = parse_u64(parts[2], "signature z");
                spec.signature = sig;
            }
            if (*gen_rank_opt) spec.rank = gen_rank;
            return cmd_generate(spec, json_out);
        }
        if (*suite) {
            SuiteConfig cfg;
            cfg.seed = default_seed();
            if (!suite_config_path.empty()) {
                apply_config_file(cfg, suite_config_path);
            }
            if (!suite_sizes.empty()) {
                cfg.sizes.clear();
                for (const std::string& part : split(suite_sizes, ',')) {
                    cfg.sizes.push_back(parse_u64(part, "suite size"));
                }
            }
            if (!suite_theorems.empty()) {
                cfg.theorems = split(suite_theorems, ',');
            }
            if (*suite_trials_opt) cfg.trials_per_cell = suite_trials;
            if (*suite_seed_opt) cfg.seed = suite_seed;
            if (*suite_gmin_opt) cfg.grid_min = suite_grid_min;
            if (*suite_gmax_opt) cfg.grid_max = suite_grid_max;
            if (tol >= 0.0) cfg.tolerances.eq_tol = tol;
            return cmd_suite(cfg, json_out, suite_out);
        }
        if (*search) {
            SearchConfig cfg;
            cfg.request = parse_identity(search_identity);
            if (*search_s_opt) cfg.request.s = search_s;
            if (*search_t_opt) cfg.request.t = search_t;
            cfg.ensemble = search_ensemble;
            cfg.budget = search_budget;
            cfg.seed = *search_seed_opt ? search_seed : default_seed();
            cfg.min_n = search_min_n;
            cfg.max_n = search_max_n;
            if (tol >= 0.0) cfg.tolerances.eq_tol = tol;
            return cmd_search(cfg, json_out);
        }
    } catch (const SideConditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
