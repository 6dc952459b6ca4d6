#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <permspectra/json_io.hpp>
#include <permspectra/verification.hpp>

using namespace permspectra;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree ceiling for enumeration-heavy commands.  PERMSPECTRA_MAX_N can
// raise it, but only together with the explicit acknowledgment flag.
int degree_limit(bool acknowledged, int fallback) {
    const char* env = std::getenv("PERMSPECTRA_MAX_N");
    if (!env) return fallback;
    int v = std::atoi(env);
    if (v <= 0) throw UsageError("PERMSPECTRA_MAX_N must be a positive integer");
    if (v > fallback && !acknowledged)
        throw UsageError(
            "PERMSPECTRA_MAX_N raises the degree guardrail; pass --allow-large to confirm");
    return v;
}

void check_degree(int n, int limit) {
    if (n < 1) throw UsageError("n must be positive");
    if (n > limit)
        throw GuardrailError("degree " + std::to_string(n) + " exceeds the guardrail " +
                             std::to_string(limit) +
                             " (set PERMSPECTRA_MAX_N and pass --allow-large to override)");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << content;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    return Json::parse(in);
}

void emit(const Json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

WeightedCayleySpec resolve_spec(int n, int t, bool uniform, bool solve,
                                const std::string& weights_file) {
    int sources = int(uniform) + int(solve) + int(!weights_file.empty());
    if (sources > 1) throw UsageError("choose one of --uniform, --solve, --weights");
    if (!weights_file.empty()) {
        auto spec = spec_from_json(read_json(weights_file));
        if (spec.n != n || spec.t != t)
            throw UsageError("weights file n/t disagree with command line");
        return spec;
    }
    if (solve) {
        auto r = solve_weights(n, t);
        if (auto* w = std::get_if<WeightedCayleySpec>(&r)) return *w;
        throw UsageError("no admissible weights exist; offending partition " +
                         std::get<WeightSolveFailure>(r).offending.to_string());
    }
    if (t != 1) throw UsageError("uniform weighting is defined for t=1; use --solve");
    return WeightedCayleySpec::uniform_derangements(n);
}

int cmd_chars(int n, const std::string& out) {
    const auto& tab = character_table(n);
    // Orthogonality self-check before emitting anything.
    for (std::size_t a = 0; a < tab.classes.size(); ++a)
        for (std::size_t b = a; b < tab.classes.size(); ++b) {
            Int acc = 0;
            for (std::size_t k = 0; k < tab.classes.size(); ++k)
                acc += tab.class_sizes[k] * tab.chi[a][k] * tab.chi[b][k];
            if (acc != (a == b ? factorial(n) : Int(0))) {
                std::cerr << "orthogonality self-check failed\n";
                return 1;
            }
        }
    emit(to_json(tab), out.empty() ? "" : out + ".json");
    if (!out.empty()) write_file(out + ".csv", character_table_csv(tab));
    return 0;
}

int cmd_spectrum(int n, int t, GroupMode mode, const WeightedCayleySpec& spec,
                 const std::string& out, bool bound_only) {
    auto sp = mode == GroupMode::Alt ? an_restriction(spec) : cayley_spectrum(spec);
    auto hb = hoffman_bound(sp, sp.group_order());
    Json doc;
    doc["weights"] = to_json(spec);
    if (!bound_only) doc["spectrum"] = to_json(sp);
    doc["bound_report"] = to_json(hb);
    doc["cross_bound"] = rat_to_string(cross_bound(sp, sp.group_order()));
    doc["lambda_min_is_omega"] = sp.lambda_min() == omega(n, t);
    emit(doc, out.empty() ? "" : out + ".json");
    if (!out.empty() && !bound_only) write_file(out + ".csv", spectrum_csv(sp));
    return 0;
}

CosetSpec parse_pairs(const std::string& s) {
    CosetSpec spec;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("bad --pairs entry: " + item);
        spec.pairs.emplace_back(std::stoi(item.substr(0, colon)),
                                std::stoi(item.substr(colon + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return spec;
}

int cmd_family_build(int n, int t, const std::string& kind, const std::string& pairs,
                     const std::string& tau_str, const std::string& out) {
    Json doc;
    if (kind == "coset") {
        if (pairs.empty()) throw UsageError("--kind coset requires --pairs");
        doc = to_json(t_coset(n, parse_pairs(pairs)));
    } else if (kind == "two-part") {
        doc = to_json(build_D(n, t));
    } else if (kind == "alternating") {
        doc = to_json(build_B_alternating(n, t));
    } else if (kind == "cross-min") {
        if (tau_str.empty()) throw UsageError("--kind cross-min requires --tau");
        auto tau = Permutation::from_cycles(n, tau_str);
        auto [a, b] = build_cross_pair_min(n, t, tau);
        doc = Json{{"a", to_json(a)}, {"b", to_json(b)}};
    } else if (kind == "cross-prod") {
        auto [a, b] = build_cross_pair_prod(n, t);
        doc = Json{{"a", to_json(a)}, {"b", to_json(b)}};
    } else {
        throw UsageError("unknown --kind: " + kind);
    }
    emit(doc, out);
    return 0;
}

int cmd_family_verify(int n, int t, const std::string& in, const std::string& out) {
    Json j = read_json(in);
    Json doc;
    bool pass;
    if (j.is_object() && j.contains("a")) {
        Family a = family_from_json(j["a"], n);
        Family b = family_from_json(j["b"], n);
        pass = is_cross_t_intersecting(a, b, t);
        doc = Json{{"cross_intersecting", pass},
                   {"sizes", Json::array({a.size(), b.size()})},
                   {"product", (Int(a.size()) * Int(b.size())).str()}};
    } else {
        Family f = family_from_json(j, n);
        pass = is_t_intersecting(f, t);
        auto coset = contained_in_t_coset(f, t);
        doc = Json{{"intersecting", pass},
                   {"size", f.size()},
                   {"coset", coset ? to_json(*coset) : Json(nullptr)}};
    }
    emit(doc, out);
    return pass ? 0 : 1;
}

int cmd_family_report(int n, int t, const std::string& in, const WeightedCayleySpec& spec,
                      const std::string& out, int limit) {
    Family f = family_from_json(read_json(in), n);
    auto rep = stability_report(f, t, spec, limit);
    emit(to_json(rep), out);
    return rep.hypotheses_ok && rep.holds ? 0 : 1;
}

int cmd_search_clique(int n, int t, GroupMode mode, bool nontrivial, const std::string& log,
                      const std::string& out, int limit) {
    SearchResult r = nontrivial ? max_nontrivial_t_intersecting(n, t, limit)
                                : max_t_intersecting(n, t, mode, limit);
    Json doc = to_json(r);
    doc["n"] = n;
    doc["t"] = t;
    doc["group"] = mode == GroupMode::Alt ? "alt" : "sym";
    doc["nontrivial"] = nontrivial;
    if (nontrivial && n >= t + 2)
        doc["two_part_family_size"] = Int(build_D(n, t).size()).str();
    emit(doc, out);
    if (!log.empty()) {
        std::ofstream os(log, std::ios::app);
        if (!os) throw UsageError("cannot open log file: " + log);
        os << doc.dump() << "\n";
    }
    return 0;
}

int cmd_project(int n, int t, const std::string& in, const std::string& out, int limit) {
    Family f = family_from_json(read_json(in), n);
    auto u = f.indicator(limit);
    Json comps = Json::object();
    Rat captured(0);
    for (const auto& alpha : fat_partitions(n, t)) {
        Rat ns = norm_sq(isotypic_projection(u, alpha, limit));
        comps[alpha.to_string()] = rat_to_string(ns);
        captured += ns;
    }
    Json doc{{"size", f.size()},
             {"norm_sq", rat_to_string(norm_sq(u))},
             {"component_norms", std::move(comps)},
             {"residual", rat_to_string(norm_sq(u) - captured)}};
    emit(doc, out);
    return 0;
}

int cmd_verify_all(std::uint64_t seed, int only, const std::string& out) {
    auto results = only ? std::vector<CriterionResult>{run_criterion(only, seed)}
                        : run_all_criteria(seed);
    Json doc = Json::array();
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << "criterion " << r.id << " [" << r.name << "]: "
                  << (r.passed ? "PASS" : "FAIL");
        if (!r.passed) std::cout << " -- " << r.detail;
        std::cout << "\n";
        doc.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                           {"detail", r.detail}});
        all_ok = all_ok && r.passed;
    }
    if (!out.empty()) write_file(out, doc.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral toolkit for intersecting families of permutations"};
    app.require_subcommand(1);

    bool allow_large = false;
    app.add_flag("--allow-large", allow_large,
                 "acknowledge a PERMSPECTRA_MAX_N guardrail override");

    int n = 4, t = 1;
    std::string out, weights_file, group_str = "sym";
    bool uniform = false, solve = false;

    auto* chars = app.add_subcommand("chars", "emit the exact character table");
    chars->add_option("--n", n)->required();
    chars->add_option("--out", out, "output path prefix (.json/.csv)");

    auto add_spec_opts = [&](CLI::App* cmd) {
        cmd->add_option("--n", n)->required();
        cmd->add_option("--t", t);
        cmd->add_flag("--uniform", uniform, "uniform weight on fixed-point-free classes");
        cmd->add_flag("--solve", solve, "solve for weights with the extremal spectrum");
        cmd->add_option("--weights", weights_file, "weights JSON file");
        cmd->add_option("--group", group_str)->check(CLI::IsMember({"sym", "alt"}));
        cmd->add_option("--out", out);
    };
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table and bound report");
    add_spec_opts(spectrum);
    auto* hoffman = app.add_subcommand("hoffman", "independent-set bound only");
    add_spec_opts(hoffman);

    auto* family = app.add_subcommand("family", "family constructions and reports");
    family->require_subcommand(1);
    std::string kind, pairs, tau_str, in_file;
    auto* fbuild = family->add_subcommand("build", "construct a named family");
    fbuild->add_option("--n", n)->required();
    fbuild->add_option("--t", t);
    fbuild->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"coset", "two-part", "alternating", "cross-min", "cross-prod"}));
    fbuild->add_option("--pairs", pairs, "coset pairs, e.g. 1:2,2:1");
    fbuild->add_option("--tau", tau_str, "cycle notation, e.g. \"(1 2)\"");
    fbuild->add_option("--out", out);
    auto* fverify = family->add_subcommand("verify", "check intersection properties");
    fverify->add_option("--n", n)->required();
    fverify->add_option("--t", t);
    fverify->add_option("--in", in_file)->required();
    fverify->add_option("--out", out);
    auto* freport = family->add_subcommand("report", "projection distance report");
    freport->add_option("--n", n)->required();
    freport->add_option("--t", t);
    freport->add_option("--in", in_file)->required();
    freport->add_flag("--uniform", uniform);
    freport->add_flag("--solve", solve);
    freport->add_option("--weights", weights_file);
    freport->add_option("--out", out);

    auto* search = app.add_subcommand("search", "exact clique search");
    search->require_subcommand(1);
    bool nontrivial = false;
    std::string log_file;
    auto* clique = search->add_subcommand("clique", "maximum pairwise-agreeing family");
    clique->add_option("--n", n)->required();
    clique->add_option("--t", t);
    clique->add_option("--group", group_str)->check(CLI::IsMember({"sym", "alt"}));
    clique->add_flag("--nontrivial", nontrivial, "forbid a common agreement-pair witness");
    clique->add_option("--log", log_file, "append result as a JSON line");
    clique->add_option("--out", out);

    auto* project = app.add_subcommand("project", "isotypic component norms of a family");
    project->add_option("--n", n)->required();
    project->add_option("--t", t);
    project->add_option("--in", in_file)->required();
    project->add_option("--out", out);

    auto* verify_all = app.add_subcommand("verify-all", "run the full verification suite");
    std::uint64_t seed = 20260823ULL;
    int only = 0;
    verify_all->add_option("--seed", seed);
    verify_all->add_option("--criterion", only, "run a single criterion (1..10)")
        ->check(CLI::Range(1, 10));
    verify_all->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        GroupMode mode = group_str == "alt" ? GroupMode::Alt : GroupMode::Sym;
        if (chars->parsed()) {
            check_degree(n, degree_limit(allow_large, kDefaultMaxDegree));
            return cmd_chars(n, out);
        }
        if (spectrum->parsed() || hoffman->parsed()) {
            check_degree(n, degree_limit(allow_large, kDefaultMaxDegree));
            if (!uniform && !solve && weights_file.empty()) uniform = true;
            auto spec = resolve_spec(n, t, uniform, solve, weights_file);
            return cmd_spectrum(n, t, mode, spec, out, hoffman->parsed());
        }
        if (family->parsed()) {
            int limit = degree_limit(allow_large, kDefaultMaxDegree);
            check_degree(n, limit);
            if (fbuild->parsed()) return cmd_family_build(n, t, kind, pairs, tau_str, out);
            if (fverify->parsed()) return cmd_family_verify(n, t, in_file, out);
            if (!uniform && !solve && weights_file.empty()) uniform = true;
            auto spec = resolve_spec(n, t, uniform, solve, weights_file);
            return cmd_family_report(n, t, in_file, spec, out, limit);
        }
        if (search->parsed()) {
            int limit = degree_limit(allow_large, 6);
            check_degree(n, limit);
            return cmd_search_clique(n, t, mode, nontrivial, log_file, out, limit);
        }
        if (project->parsed()) {
            int limit = degree_limit(allow_large, kDefaultMaxDegree);
            check_degree(n, limit);
            return cmd_project(n, t, in_file, out, limit);
        }
        if (verify_all->parsed()) return cmd_verify_all(seed, only, out);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardrailError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
