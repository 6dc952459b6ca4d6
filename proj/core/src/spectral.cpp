#include "permspectra/spectral.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "permspectra/ratlinalg.hpp"

namespace permspectra {

namespace {

bool class_is_even(const Partition& cycle_type) {
    return (cycle_type.n() - cycle_type.num_parts()) % 2 == 0;
}

}  // namespace

void WeightedCayleySpec::validate() const {
    if (n < 1) throw std::invalid_argument("WeightedCayleySpec: n must be >= 1");
    if (t < 1) throw std::invalid_argument("WeightedCayleySpec: t must be >= 1");
    for (const auto& [cls, w] : weights) {
        if (w == 0) continue;
        if (cls.n() != n)
            throw std::invalid_argument("WeightedCayleySpec: class " + cls.to_string() +
                                        " is not a partition of n");
        if (cls.ones() >= t)
            throw std::invalid_argument("WeightedCayleySpec: class " + cls.to_string() +
                                        " has >= t fixed points");
    }
}

WeightedCayleySpec WeightedCayleySpec::uniform_derangements(int n) {
    WeightedCayleySpec spec;
    spec.n = n;
    spec.t = 1;
    Rat w(1, derangement_counts(n).d);
    for (const auto& cls : conjugacy_classes(n))
        if (cls.cycle_type.ones() == 0) spec.weights[cls.cycle_type] = w;
    return spec;
}

Int SpectrumTable::group_order() const {
    Int order = factorial(n);
    return mode == GroupMode::Alt ? order / 2 : order;
}

Rat SpectrumTable::lambda_max() const { return eigenvalues.at(0); }  // (n) is first

Rat SpectrumTable::lambda_min() const {
    return *std::min_element(eigenvalues.begin(), eigenvalues.end());
}

Rat SpectrumTable::lambda_second() const {
    Rat best;
    bool have = false;
    for (std::size_t i = 1; i < eigenvalues.size(); ++i)
        if (!have || eigenvalues[i] > best) {
            best = eigenvalues[i];
            have = true;
        }
    if (!have) throw std::logic_error("lambda_second: single-eigenvalue spectrum");
    return best;
}

Rat SpectrumTable::lambda_M() const {
    Rat lmin = lambda_min();
    Rat best(0);
    for (std::size_t i = 1; i < eigenvalues.size(); ++i) {
        const Rat& v = eigenvalues[i];
        if (v < 0 && v != lmin && v < best) best = v;
    }
    return best;
}

const Rat& SpectrumTable::at(const Partition& alpha) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] == alpha) return eigenvalues[i];
    throw std::invalid_argument("SpectrumTable: unknown partition " + alpha.to_string());
}

std::map<Rat, Int> SpectrumTable::distinct_eigenvalues() const {
    std::map<Rat, Int> agg;
    for (std::size_t i = 0; i < parts.size(); ++i) agg[eigenvalues[i]] += multiplicities[i];
    if (mode == GroupMode::Alt) {
        for (auto& [v, m] : agg) {
            if (m % 2 != 0)
                throw std::logic_error("alt-mode multiplicity not even for eigenvalue " +
                                       rat_to_string(v));
            m /= 2;
        }
    }
    return agg;
}

Rat omega(int n, int t) {
    if (t < 1 || t >= n) throw std::invalid_argument("omega: need 1 <= t < n");
    Int falling = 1;
    for (int i = 0; i < t; ++i) falling *= (n - i);
    return Rat(-1, falling - 1);
}

SpectrumTable cayley_spectrum(const WeightedCayleySpec& spec) {
    spec.validate();
    const auto& tab = character_table(spec.n);
    SpectrumTable s;
    s.n = spec.n;
    s.parts = tab.classes;
    int k = static_cast<int>(tab.classes.size());
    s.eigenvalues.resize(k);
    s.multiplicities.resize(k);
    for (int a = 0; a < k; ++a) {
        Rat acc(0);
        for (const auto& [cls, w] : spec.weights) {
            if (w == 0) continue;
            int c = tab.index_of(cls);
            acc += w * Rat(tab.class_sizes[c] * tab.chi[a][c]);
        }
        s.eigenvalues[a] = acc / Rat(tab.dims[a]);
        s.multiplicities[a] = tab.dims[a] * tab.dims[a];
    }
    return s;
}

HoffmanReport hoffman_bound(const SpectrumTable& spectrum, const Int& group_order) {
    Rat lmax = spectrum.lambda_max();
    Rat lmin = spectrum.lambda_min();
    for (const auto& v : spectrum.eigenvalues)
        if (v > lmax)
            throw std::invalid_argument("hoffman_bound: lambda_{(n)} is not the maximum");
    if (lmin >= 0)
        throw std::invalid_argument("hoffman_bound: non-negative minimum eigenvalue");
    HoffmanReport r;
    r.lambda_max = lmax;
    r.lambda_min = lmin;
    r.lambda_M = spectrum.lambda_M();
    r.nu = std::max(abs(spectrum.lambda_second()), abs(lmin));
    r.bound = (-lmin) * Rat(group_order) / (lmax + (-lmin));
    for (std::size_t i = 0; i < spectrum.parts.size(); ++i)
        if (spectrum.eigenvalues[i] == lmin)
            r.achieving_partitions.push_back(spectrum.parts[i]);
    return r;
}

Rat cross_bound(const SpectrumTable& spectrum, const Int& group_order) {
    Rat lmax = spectrum.lambda_max();
    Rat lmin = spectrum.lambda_min();
    if (lmin >= 0)
        throw std::invalid_argument("cross_bound: non-negative minimum eigenvalue");
    Rat nu = std::max(abs(spectrum.lambda_second()), abs(lmin));
    Rat side = nu * Rat(group_order) / (lmax + nu);
    return side * side;
}

Rat stability_distance_bound(const SpectrumTable& spectrum, const Rat& alpha_frac) {
    if (alpha_frac < 0 || alpha_frac > 1)
        throw std::invalid_argument("stability_distance_bound: alpha out of [0,1]");
    Rat l1 = spectrum.lambda_max();
    Rat lN = spectrum.lambda_min();
    Rat lM = spectrum.lambda_M();
    Rat absN = abs(lN), absM = abs(lM);
    if (absN == absM)
        throw std::invalid_argument("stability_distance_bound: |lambda_M| = |lambda_N|");
    return ((Rat(1) - alpha_frac) * absN - l1 * alpha_frac) / (absN - absM) * alpha_frac;
}

namespace {

// lambda_alpha as a linear functional of the weight vector over `support`.
Rat eigen_of(const CharacterTable& tab, int a, const std::vector<int>& support_idx,
             const RatVector& w) {
    Rat acc(0);
    for (std::size_t j = 0; j < support_idx.size(); ++j) {
        int c = support_idx[j];
        acc += w[j] * Rat(tab.class_sizes[c] * tab.chi[a][c]);
    }
    return acc / Rat(tab.dims[a]);
}

WeightedCayleySpec make_spec(int n, int t, const CharacterTable& tab,
                             const std::vector<int>& support_idx, const RatVector& w) {
    WeightedCayleySpec spec;
    spec.n = n;
    spec.t = t;
    for (std::size_t j = 0; j < support_idx.size(); ++j)
        if (w[j] != 0) spec.weights[tab.classes[support_idx[j]]] = w[j];
    return spec;
}

}  // namespace

WeightSolveResult solve_weights(int n, int t) {
    if (t < 1 || t >= n) throw std::invalid_argument("solve_weights: need 1 <= t < n");
    const auto& tab = character_table(n);
    Rat target = omega(n, t);

    std::vector<int> support_idx;
    for (std::size_t c = 0; c < tab.classes.size(); ++c)
        if (tab.classes[c].ones() < t) support_idx.push_back(static_cast<int>(c));

    auto fats = fat_partitions(n, t);
    std::vector<int> fat_idx, nonfat_idx;
    for (std::size_t a = 0; a < tab.classes.size(); ++a) {
        bool fat = tab.classes[a].first_part() >= n - t;
        (fat ? fat_idx : nonfat_idx).push_back(static_cast<int>(a));
    }
    (void)fats;

    // Equality system over the fat partitions.
    RatMatrix m;
    RatVector b;
    for (int a : fat_idx) {
        RatVector row;
        for (int c : support_idx)
            row.push_back(Rat(tab.class_sizes[c] * tab.chi[a][c]) / Rat(tab.dims[a]));
        m.push_back(std::move(row));
        b.push_back(tab.classes[a].first_part() == n ? Rat(1) : target);
    }

    // Strict mode wants every non-fat eigenvalue inside (omega, 1); the
    // relaxed fallback allows ties with omega (the minimum is still omega
    // and the top eigenvalue is still uniquely at (n)).
    auto admissible = [&](const RatVector& w, bool strict, int* offending) {
        for (int a : nonfat_idx) {
            Rat v = eigen_of(tab, a, support_idx, w);
            bool ok = strict ? (v > target && v < 1) : (v >= target && v < 1);
            if (!ok) {
                if (offending) *offending = a;
                return false;
            }
        }
        return true;
    };
    auto interior = [&](const RatVector& w, int* offending) {
        return admissible(w, true, offending);
    };

    auto w0opt = min_norm_solution(m, b);
    if (!w0opt) {
        // Equality system itself infeasible; report the first fat partition.
        return WeightSolveFailure{tab.classes[fat_idx.empty() ? 0 : fat_idx[0]]};
    }
    int offending = -1;
    if (interior(*w0opt, &offending)) return make_spec(n, t, tab, support_idx, *w0opt);

    // Search vertices of the polytope {w : equalities, omega <= lambda <= 1,
    // |w_j| <= box} in the nullspace parametrization, then average.
    auto basis = nullspace(m);
    std::size_t k = basis.size();
    if (k == 0) return WeightSolveFailure{tab.classes[offending]};

    // Inequality rows (g . c <= h) in the k-dim parameter space.
    std::vector<RatVector> g;
    RatVector h;
    auto add_ineq = [&](const RatVector& grad, const Rat& rhs) {
        g.push_back(grad);
        h.push_back(rhs);
    };
    for (int a : nonfat_idx) {
        Rat base = eigen_of(tab, a, support_idx, *w0opt);
        RatVector grad(k);
        for (std::size_t j = 0; j < k; ++j)
            grad[j] = eigen_of(tab, a, support_idx, basis[j]);
        // lambda <= 1
        add_ineq(grad, Rat(1) - base);
        // lambda >= omega  ->  -lambda <= -omega
        RatVector neg = grad;
        for (auto& x : neg) x = -x;
        add_ineq(neg, base - target);
    }
    const Rat box(100);
    for (std::size_t j = 0; j < support_idx.size(); ++j) {
        Rat base = (*w0opt)[j];
        RatVector grad(k), neg(k);
        for (std::size_t i = 0; i < k; ++i) {
            grad[i] = basis[i][j];
            neg[i] = -basis[i][j];
        }
        add_ineq(grad, box - base);
        add_ineq(neg, box + base);
    }

    auto feasible = [&](const RatVector& c) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            Rat lhs(0);
            for (std::size_t j = 0; j < k; ++j) lhs += g[i][j] * c[j];
            if (lhs > h[i]) return false;
        }
        return true;
    };

    // Enumerate k-subsets of active constraints (bounded).
    std::vector<RatVector> vertices;
    std::vector<std::size_t> choice(k);
    long combos = 0;
    const long combo_cap = 200000;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (combos > combo_cap || vertices.size() > 500) return;
        if (pos == k) {
            ++combos;
            RatMatrix sys;
            RatVector rhs;
            for (std::size_t idx : choice) {
                sys.push_back(g[idx]);
                rhs.push_back(h[idx]);
            }
            RatMatrix copy = sys;
            auto sol = solve_linear(sys, rhs);
            if (sol && rank(copy) == static_cast<int>(k) && feasible(*sol)) {
                if (std::find(vertices.begin(), vertices.end(), *sol) == vertices.end())
                    vertices.push_back(*sol);
            }
            return;
        }
        for (std::size_t i = start; i < g.size(); ++i) {
            choice[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);

    auto try_candidate = [&](const RatVector& c) -> std::optional<RatVector> {
        RatVector w = *w0opt;
        for (std::size_t j = 0; j < w.size(); ++j)
            for (std::size_t i = 0; i < k; ++i) w[j] += c[i] * basis[i][j];
        if (interior(w, &offending)) return w;
        return std::nullopt;
    };

    RatVector center(k, Rat(0));
    if (!vertices.empty()) {
        // Average of all vertices: strictly interior unless some constraint
        // is active on the whole polytope.
        for (const auto& v : vertices)
            for (std::size_t i = 0; i < k; ++i) center[i] += v[i];
        for (auto& x : center) x /= Rat(static_cast<long>(vertices.size()));
        if (auto w = try_candidate(center)) return make_spec(n, t, tab, support_idx, *w);
        for (const auto& v : vertices)
            if (auto w = try_candidate(v)) return make_spec(n, t, tab, support_idx, *w);
    }

    // No strictly interior point exists (or none was found); accept a
    // solution where some non-fat eigenvalue ties with omega.
    auto try_relaxed = [&](const RatVector& c) -> std::optional<RatVector> {
        RatVector w = *w0opt;
        for (std::size_t j = 0; j < w.size(); ++j)
            for (std::size_t i = 0; i < k; ++i) w[j] += c[i] * basis[i][j];
        if (admissible(w, false, &offending)) return w;
        return std::nullopt;
    };
    if (admissible(*w0opt, false, &offending)) return make_spec(n, t, tab, support_idx, *w0opt);
    if (!vertices.empty()) {
        if (auto w = try_relaxed(center)) return make_spec(n, t, tab, support_idx, *w);
        for (const auto& v : vertices)
            if (auto w = try_relaxed(v)) return make_spec(n, t, tab, support_idx, *w);
    }
    return WeightSolveFailure{tab.classes[offending]};
}

SpectrumTable an_restriction(const WeightedCayleySpec& spec) {
    spec.validate();
    for (const auto& [cls, w] : spec.weights)
        if (w != 0 && !class_is_even(cls))
            throw std::invalid_argument("an_restriction: odd class in support: " +
                                        cls.to_string());
    SpectrumTable s = cayley_spectrum(spec);
    s.mode = GroupMode::Alt;
    return s;
}

bool verify_phi_isomorphism(const WeightedCayleySpec& spec, int max_degree) {
    spec.validate();
    int n = spec.n;
    auto weight_of = [&](const Permutation& p) -> Rat {
        auto it = spec.weights.find(p.cycle_type());
        return it == spec.weights.end() ? Rat(0) : it->second;
    };
    auto evens = enumerate_group(n, true, max_degree);
    auto swap12 = Permutation::transposition(n, 1, 2);
    for (const auto& sigma : evens) {
        for (const auto& pi : evens) {
            Rat w1 = weight_of(compose(sigma, pi.inverse()));
            auto ps = compose(swap12, sigma);
            auto pp = compose(swap12, pi);
            Rat w2 = weight_of(compose(ps, pp.inverse()));
            if (w1 != w2) return false;
        }
    }
    return true;
}

}  // namespace permspectra
