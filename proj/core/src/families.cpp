#include "permspectra/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace permspectra {

Family::Family(int n, std::vector<Permutation> members)
    : n_(n), members_(std::move(members)) {
    for (const auto& p : members_)
        if (p.degree() != n) throw std::invalid_argument("Family: degree mismatch");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const Permutation& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

void Family::insert(const Permutation& p) {
    if (p.degree() != n_) throw std::invalid_argument("Family::insert: degree mismatch");
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it == members_.end() || !(*it == p)) members_.insert(it, p);
}

GroupFunction Family::indicator(int max_degree) const {
    GroupFunction u = GroupFunction::zero(n_, max_degree);
    for (const auto& p : members_) u.at(p) = 1;
    return u;
}

bool is_t_intersecting(const Family& f, int t) {
    if (t < 1) throw std::invalid_argument("is_t_intersecting: t must be >= 1");
    const auto& m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (agreements(m[i], m[j]) < t) return false;
    return true;
}

bool is_cross_t_intersecting(const Family& f, const Family& g, int t) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("is_cross_t_intersecting: degree mismatch");
    for (const auto& a : f.members())
        for (const auto& b : g.members())
            if (agreements(a, b) < t) return false;
    return true;
}

namespace {

// All permutations fixing prescribed images; other positions run over the
// remaining values in all orders.
std::vector<Permutation> with_constraints(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> img(n, 0);
    std::vector<char> used(n + 1, 0);
    for (auto [i, j] : pairs) {
        if (i < 1 || i > n || j < 1 || j > n || img[i - 1] != 0 || used[j])
            throw std::invalid_argument("invalid coset constraints");
        img[i - 1] = j;
        used[j] = 1;
    }
    std::vector<int> free_pos, free_val;
    for (int i = 1; i <= n; ++i)
        if (img[i - 1] == 0) free_pos.push_back(i);
    for (int v = 1; v <= n; ++v)
        if (!used[v]) free_val.push_back(v);
    std::vector<Permutation> out;
    do {
        std::vector<int> cur = img;
        for (std::size_t k = 0; k < free_pos.size(); ++k) cur[free_pos[k] - 1] = free_val[k];
        out.emplace_back(std::move(cur));
    } while (std::next_permutation(free_val.begin(), free_val.end()));
    return out;
}

std::vector<std::pair<int, int>> fix_first(int t) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= t; ++i) pairs.emplace_back(i, i);
    return pairs;
}

}  // namespace

Family t_coset(int n, const CosetSpec& spec) {
    std::set<int> is, js;
    for (auto [i, j] : spec.pairs) {
        is.insert(i);
        js.insert(j);
    }
    if (is.size() != spec.pairs.size() || js.size() != spec.pairs.size())
        throw std::invalid_argument("t_coset: repeated i or j in spec");
    if (static_cast<int>(spec.pairs.size()) > n)
        throw std::invalid_argument("t_coset: more pairs than points");
    return Family(n, with_constraints(n, spec.pairs));
}

std::optional<CosetSpec> contained_in_t_coset(const Family& f, int t) {
    if (f.size() == 0) throw std::invalid_argument("contained_in_t_coset: empty family");
    const auto& first = f.members().front();
    std::vector<std::pair<int, int>> common;
    for (int i = 1; i <= f.degree(); ++i) common.emplace_back(i, first(i));
    for (const auto& p : f.members()) {
        std::vector<std::pair<int, int>> keep;
        for (auto [i, j] : common)
            if (p(i) == j) keep.emplace_back(i, j);
        common = std::move(keep);
        if (static_cast<int>(common.size()) < t) return std::nullopt;
    }
    CosetSpec spec;
    spec.pairs.assign(common.begin(), common.begin() + t);  // smallest i's first
    return spec;
}

Family build_D(int n, int t) {
    if (n < t + 2) throw std::invalid_argument("build_D: need n >= t+2");
    std::vector<Permutation> out;
    for (auto& p : with_constraints(n, fix_first(t))) {
        for (int j = t + 2; j <= n; ++j)
            if (p(j) == j) {
                out.push_back(p);
                break;
            }
    }
    for (int i = 1; i <= t; ++i) out.push_back(Permutation::transposition(n, i, t + 1));
    return Family(n, std::move(out));
}

Family build_B_alternating(int n, int t) {
    if (n < t + 4) throw std::invalid_argument("build_B_alternating: need n >= t+4");
    auto swap_last = Permutation::transposition(n, n - 1, n);
    std::vector<Permutation> out;
    for (auto& p : with_constraints(n, fix_first(t))) {
        if (!p.is_even()) continue;
        for (int j = t + 2; j <= n; ++j)
            if (p(j) == swap_last(j)) {
                out.push_back(p);
                break;
            }
    }
    for (int i = 1; i <= t; ++i)
        out.push_back(compose(Permutation::transposition(n, i, t + 1), swap_last));
    return Family(n, std::move(out));
}

std::pair<Family, Family> build_cross_pair_min(int n, int t, const Permutation& tau) {
    if (tau.degree() != n) throw std::invalid_argument("build_cross_pair_min: degree mismatch");
    if (tau(1) == 1)
        throw std::invalid_argument("build_cross_pair_min: tau must move 1");
    if (t >= 2) {
        for (int i = 2; i <= t; ++i)
            if (tau(i) != i)
                throw std::invalid_argument("build_cross_pair_min: tau must fix 2..t");
        int fixed_late = 0;
        for (int j = t + 2; j <= n; ++j)
            if (tau(j) == j) ++fixed_late;
        if (fixed_late < 2)
            throw std::invalid_argument(
                "build_cross_pair_min: tau must fix at least two points > t+1");
    } else {
        if (agreements(tau, Permutation::transposition(n, 1, 2)) < 1)
            throw std::invalid_argument("build_cross_pair_min: tau must intersect (1 2)");
    }

    std::vector<Permutation> a, b;
    for (auto& p : with_constraints(n, fix_first(t))) {
        bool agrees_tau = false, agrees_id = false;
        for (int j = t + 2; j <= n; ++j) {
            if (p(j) == tau(j)) agrees_tau = true;
            if (p(j) == j) agrees_id = true;
        }
        if (agrees_tau) a.push_back(p);
        if (agrees_id) b.push_back(p);
    }
    for (int i = 1; i <= t; ++i) {
        a.push_back(Permutation::transposition(n, i, t + 1));
        if (i == 1) {
            b.push_back(tau);
        } else {
            auto swap1i = Permutation::transposition(n, 1, i);
            b.push_back(compose(compose(swap1i, tau), swap1i));
        }
    }
    return {Family(n, std::move(a)), Family(n, std::move(b))};
}

std::pair<Family, Family> build_cross_pair_prod(int n, int t) {
    if (n < t + 2) throw std::invalid_argument("build_cross_pair_prod: need n >= t+2");
    std::vector<Permutation> a, b;
    for (auto& p : with_constraints(n, fix_first(t))) {
        b.push_back(p);
        for (int j = t + 2; j <= n; ++j)
            if (p(j) == j) {
                a.push_back(p);
                break;
            }
    }
    for (int i = 1; i <= t; ++i) b.push_back(Permutation::transposition(n, i, t + 1));
    return {Family(n, std::move(a)), Family(n, std::move(b))};
}

Family double_translate(const Family& f, const Permutation& pi, const Permutation& tau) {
    if (pi.degree() != f.degree() || tau.degree() != f.degree())
        throw std::invalid_argument("double_translate: degree mismatch");
    std::vector<Permutation> out;
    out.reserve(f.size());
    for (const auto& s : f.members()) out.push_back(compose(compose(pi, s), tau));
    return Family(f.degree(), std::move(out));
}

std::optional<std::pair<Permutation, Permutation>> pair_isomorphic(
    const std::pair<Family, Family>& p1, const std::pair<Family, Family>& p2) {
    const Family& c = p1.first;
    const Family& d = p1.second;
    const Family& a = p2.first;
    const Family& b = p2.second;
    int n = c.degree();
    if (d.degree() != n || a.degree() != n || b.degree() != n)
        throw std::invalid_argument("pair_isomorphic: degree mismatch");
    if (c.size() != a.size() || d.size() != b.size()) return std::nullopt;
    if (c.size() == 0) return std::make_pair(Permutation::identity(n), Permutation::identity(n));

    auto translates_to = [&](const Family& src, const Family& dst, const Permutation& pi,
                             const Permutation& rho) {
        for (const auto& s : src.members())
            if (!dst.contains(compose(compose(pi, s), rho))) return false;
        return true;  // equal sizes, injective map => set equality
    };

    // Anchor: pi * sigma0 * rho must land in a.
    const Permutation& sigma0 = c.members().front();
    auto sigma0_inv = sigma0.inverse();
    for (const auto& rho : enumerate_group(n, false, 6)) {
        auto rho_inv = rho.inverse();
        for (const auto& target : a.members()) {
            Permutation pi = compose(compose(target, rho_inv), sigma0_inv);
            if (translates_to(c, a, pi, rho) && translates_to(d, b, pi, rho))
                return std::make_pair(pi, rho);
        }
    }
    return std::nullopt;
}

Rat matrix_function_eval(const MatrixFunction& m, const Permutation& sigma) {
    if (sigma.degree() != m.n)
        throw std::invalid_argument("matrix_function_eval: degree mismatch");
    Rat acc(0);
    for (int i = 1; i <= m.n; ++i) acc += m.entries[i - 1][sigma(i) - 1];
    return acc;
}

MatrixFunction w1_counterexample_matrix(int n) {
    if (n < 4) throw std::invalid_argument("w1_counterexample_matrix: need n >= 4");
    MatrixFunction m;
    m.n = n;
    m.entries.assign(n, std::vector<Rat>(n, Rat(1)));
    m.entries[0][1] = Rat(-1, 2);
    m.entries[1][0] = Rat(-1, 2);
    for (int i = 2; i < n; ++i) m.entries[i][i] = 0;
    return m;
}

W1Report verify_W1_counterexample(int n, int max_degree) {
    auto m = w1_counterexample_matrix(n);
    W1Report r;
    r.n = n;
    bool first = true;
    for (const auto& sigma : enumerate_group(n, true, max_degree)) {
        Rat v = matrix_function_eval(m, sigma);
        if (first || v < r.min_on_alternating) r.min_on_alternating = v;
        first = false;
    }
    r.value_at_12 = matrix_function_eval(m, Permutation::transposition(n, 1, 2));
    r.nonnegative_on_alternating = r.min_on_alternating >= 0;
    return r;
}

StabilityReport stability_report(const Family& f, int t, const WeightedCayleySpec& spec,
                                 int max_degree) {
    StabilityReport rep;
    rep.hypotheses_ok = true;
    rep.note = "";
    if (!is_t_intersecting(f, t)) {
        rep.hypotheses_ok = false;
        rep.note = "family is not t-intersecting";
    }
    auto spectrum = cayley_spectrum(spec);
    Rat lmax = spectrum.lambda_max();
    Rat lmin = spectrum.lambda_min();
    for (std::size_t i = 1; i < spectrum.eigenvalues.size(); ++i)
        if (spectrum.eigenvalues[i] >= lmax) {
            rep.hypotheses_ok = false;
            rep.note = "lambda_{(n)} is not the strict maximum";
        }
    if (lmin >= 0) {
        rep.hypotheses_ok = false;
        rep.note = "minimum eigenvalue non-negative";
    }

    int n = f.degree();
    GroupFunction u = f.indicator(max_degree);
    rep.alpha_frac = Rat(Int(f.size()), factorial(n));
    rep.residual = residual_norm_sq(u, t, max_degree);

    // Distance to the span of the lambda_max and lambda_min eigenspaces,
    // the subspace the spectral bound actually controls.  It coincides with
    // V_t exactly when lambda_min is attained on all non-top fat partitions
    // and nowhere else.
    Rat captured(0);
    rep.subspaces_match = true;
    for (std::size_t i = 0; i < spectrum.parts.size(); ++i) {
        bool extreme = spectrum.eigenvalues[i] == lmax || spectrum.eigenvalues[i] == lmin;
        bool fat = spectrum.parts[i].first_part() >= n - t;
        if (extreme != fat) rep.subspaces_match = false;
        if (extreme) {
            GroupFunction p = isotypic_projection(u, spectrum.parts[i], max_degree);
            captured += norm_sq(p);
        }
    }
    rep.extreme_residual = norm_sq(u) - captured;

    if (rep.hypotheses_ok) {
        try {
            rep.bound = stability_distance_bound(spectrum, rep.alpha_frac);
            rep.holds = rep.extreme_residual <= rep.bound;
        } catch (const std::exception& e) {
            rep.hypotheses_ok = false;
            rep.note = e.what();
            rep.holds = false;
        }
    } else {
        rep.bound = 0;
        rep.holds = false;
    }
    return rep;
}

}  // namespace permspectra
