#include "permspectra/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace permspectra {

Json to_json(const Permutation& p) { return Json(p.images()); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Rat& r) { return Json(rat_to_string(r)); }

Json to_json(const ClassFunction& f) {
    Json out = Json::object();
    auto classes = partitions_of(f.n);
    for (std::size_t i = 0; i < classes.size(); ++i)
        out[classes[i].to_string()] = rat_to_string(f.values[i]);
    return out;
}

Json to_json(const CharacterTable& t) {
    Json out;
    out["n"] = t.n;
    Json classes = Json::array();
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
        classes.push_back(Json{{"cycle_type", to_json(t.classes[i])},
                               {"size", t.class_sizes[i].str()}});
    }
    out["classes"] = std::move(classes);
    Json chi = Json::object(), xi = Json::object(), dims = Json::object();
    for (std::size_t a = 0; a < t.classes.size(); ++a) {
        Json chi_row = Json::array(), xi_row = Json::array();
        for (std::size_t c = 0; c < t.classes.size(); ++c) {
            chi_row.push_back(t.chi[a][c].str());
            xi_row.push_back(t.xi[a][c].str());
        }
        const std::string key = t.classes[a].to_string();
        chi[key] = std::move(chi_row);
        xi[key] = std::move(xi_row);
        dims[key] = t.dims[a].str();
    }
    out["dimensions"] = std::move(dims);
    out["chi"] = std::move(chi);
    out["xi"] = std::move(xi);
    return out;
}

Json to_json(const WeightedCayleySpec& s) {
    Json w = Json::object();
    for (const auto& [part, weight] : s.weights) w[part.to_string()] = rat_to_string(weight);
    return Json{{"n", s.n}, {"t", s.t}, {"weights", std::move(w)}};
}

Json to_json(const SpectrumTable& s) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        rows.push_back(Json{{"partition", s.parts[i].to_string()},
                            {"eigenvalue", rat_to_string(s.eigenvalues[i])},
                            {"multiplicity", s.multiplicities[i].str()}});
    }
    return Json{{"n", s.n},
                {"group", s.mode == GroupMode::Sym ? "sym" : "alt"},
                {"order", s.group_order().str()},
                {"entries", std::move(rows)}};
}

Json to_json(const HoffmanReport& r) {
    Json achieving = Json::array();
    for (const auto& p : r.achieving_partitions) achieving.push_back(p.to_string());
    return Json{{"bound", rat_to_string(r.bound)},
                {"lambda_max", rat_to_string(r.lambda_max)},
                {"lambda_min", rat_to_string(r.lambda_min)},
                {"lambda_M", rat_to_string(r.lambda_M)},
                {"nu", rat_to_string(r.nu)},
                {"achieving_partitions", std::move(achieving)}};
}

Json to_json(const Family& f) {
    Json out = Json::array();
    for (const auto& p : f.members()) out.push_back(to_json(p));
    return out;
}

Json to_json(const CosetSpec& c) {
    Json out = Json::array();
    for (auto [i, j] : c.pairs) out.push_back(Json{{"i", i}, {"j", j}});
    return out;
}

Json to_json(const StabilityReport& r) {
    return Json{{"residual", rat_to_string(r.residual)},
                {"extreme_residual", rat_to_string(r.extreme_residual)},
                {"bound", rat_to_string(r.bound)},
                {"density", rat_to_string(r.alpha_frac)},
                {"subspaces_match", r.subspaces_match},
                {"hypotheses_ok", r.hypotheses_ok},
                {"holds", r.holds},
                {"note", r.note}};
}

Json to_json(const W1Report& r) {
    return Json{{"n", r.n},
                {"min_on_alternating", rat_to_string(r.min_on_alternating)},
                {"value_at_(1 2)", rat_to_string(r.value_at_12)},
                {"nonnegative_on_alternating", r.nonnegative_on_alternating}};
}

Json to_json(const SearchResult& r) {
    return Json{{"optimum", r.optimum.str()},
                {"status", r.status == SearchStatus::ProvedOptimal ? "proved-optimal"
                                                                   : "empty-feasible-set"},
                {"witness", to_json(r.witness)},
                {"nodes", r.nodes},
                {"millis", r.millis}};
}

Json to_json(const NeighborhoodReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back(Json{{"h", e.h},
                               {"size", e.size.str()},
                               {"bound_lo", rat_to_string(e.bound.lo)},
                               {"bound_hi", rat_to_string(e.bound.hi)},
                               {"applicable", e.applicable},
                               {"holds", e.holds}});
    }
    return Json{{"n", r.n},
                {"x_size", r.x_size.str()},
                {"h0_lo", rat_to_string(r.h0.lo)},
                {"h0_hi", rat_to_string(r.h0.hi)},
                {"entries", std::move(entries)},
                {"all_hold", r.all_hold}};
}

Json to_json(const TightnessReport& r) {
    Json out{{"bound", rat_to_string(r.bound)},
             {"family_size", r.family_size.str()},
             {"meets_bound", r.meets_bound},
             {"residual", rat_to_string(r.residual)},
             {"residual_zero", r.residual_zero},
             {"is_t_coset", r.is_t_coset}};
    out["coset"] = r.coset ? to_json(*r.coset) : Json(nullptr);
    return out;
}

Permutation permutation_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("permutation JSON must be an array");
    return Permutation(j.get<std::vector<int>>());
}

Partition partition_from_json(const Json& j) {
    if (j.is_string()) return Partition::from_string(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

Family family_from_json(const Json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("family JSON must be an array");
    std::vector<Permutation> members;
    for (const auto& e : j) members.push_back(permutation_from_json(e));
    return Family(n, std::move(members));
}

WeightedCayleySpec spec_from_json(const Json& j) {
    WeightedCayleySpec s;
    s.n = j.at("n").get<int>();
    s.t = j.at("t").get<int>();
    for (const auto& [key, val] : j.at("weights").items())
        s.weights[Partition::from_string(key)] = rat_from_string(val.get<std::string>());
    s.validate();
    return s;
}

std::string character_table_csv(const CharacterTable& t) {
    std::ostringstream os;
    os << "partition,dimension";
    for (const auto& c : t.classes) os << ",\"" << c.to_string() << "\"";
    os << "\n";
    for (std::size_t a = 0; a < t.classes.size(); ++a) {
        os << "\"" << t.classes[a].to_string() << "\"," << t.dims[a].str();
        for (std::size_t c = 0; c < t.classes.size(); ++c) os << "," << t.chi[a][c].str();
        os << "\n";
    }
    return os.str();
}

std::string spectrum_csv(const SpectrumTable& s) {
    std::ostringstream os;
    os << "partition,eigenvalue,multiplicity\n";
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
        os << "\"" << s.parts[i].to_string() << "\"," << rat_to_string(s.eigenvalues[i]) << ","
           << s.multiplicities[i].str() << "\n";
    }
    return os.str();
}

}  // namespace permspectra
