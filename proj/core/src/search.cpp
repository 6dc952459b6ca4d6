#include "permspectra/search.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <set>
#include <stdexcept>

namespace permspectra {

namespace {

struct CliqueContext {
    int t;
    std::vector<Permutation> elems;       // neighbors of the identity
    std::vector<std::vector<char>> adj;   // among elems
    std::uint64_t nodes = 0;
};

CliqueContext build_context(int n, int t, GroupMode group, int max_degree) {
    if (t < 1) throw std::invalid_argument("clique search: t must be >= 1");
    if (n > max_degree)
        throw GuardrailError("clique search: degree " + std::to_string(n) +
                             " exceeds guardrail " + std::to_string(max_degree));
    CliqueContext c;
    c.t = t;
    for (auto& p : enumerate_group(n, group == GroupMode::Alt, max_degree))
        if (!p.is_identity() && p.fixed_points() >= t) c.elems.push_back(std::move(p));
    std::size_t m = c.elems.size();
    c.adj.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (agreements(c.elems[i], c.elems[j]) >= t) c.adj[i][j] = c.adj[j][i] = 1;
    return c;
}

// Greedy coloring of P; emits vertices in nondecreasing color order with the
// color number (an upper bound on the clique size within the prefix).
void color_sort(const std::vector<std::vector<char>>& adj, const std::vector<int>& p,
                std::vector<int>& order, std::vector<int>& bounds) {
    std::vector<std::vector<int>> classes;
    for (int v : p) {
        std::size_t k = 0;
        for (; k < classes.size(); ++k) {
            bool fits = true;
            for (int u : classes[k])
                if (adj[v][u]) {
                    fits = false;
                    break;
                }
            if (fits) break;
        }
        if (k == classes.size()) classes.emplace_back();
        classes[k].push_back(v);
    }
    order.clear();
    bounds.clear();
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (int v : classes[k]) {
            order.push_back(v);
            bounds.push_back(static_cast<int>(k) + 1);
        }
}

// Collect every maximum clique {id} + R; `best` counts the identity.
void expand_all(CliqueContext& c, std::vector<int>& r, const std::vector<int>& p,
                std::size_t& best, std::vector<std::vector<int>>& winners) {
    ++c.nodes;
    if (p.empty()) {
        std::size_t sz = r.size() + 1;
        if (sz > best) {
            best = sz;
            winners.clear();
        }
        if (sz == best) winners.push_back(r);
        return;
    }
    std::vector<int> order, bounds;
    color_sort(c.adj, p, order, bounds);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (r.size() + 1 + bounds[i] < best) return;
        int v = order[i];
        std::vector<int> next;
        for (int j = 0; j < i; ++j)
            if (c.adj[v][order[j]]) next.push_back(order[j]);
        r.push_back(v);
        expand_all(c, r, next, best, winners);
        r.pop_back();
    }
}

// Maximum clique whose members (with id) share < t agreement pairs.
// `common` is the shared pair set of {id} + R; it only shrinks on descent.
void expand_nontrivial(CliqueContext& c, std::vector<int>& r,
                       const std::vector<std::pair<int, int>>& common,
                       const std::vector<int>& p, std::size_t& best,
                       std::vector<int>& best_r) {
    ++c.nodes;
    if (static_cast<int>(common.size()) < c.t && r.size() + 1 > best) {
        best = r.size() + 1;
        best_r = r;
    }
    if (p.empty()) return;
    if (static_cast<int>(common.size()) >= c.t) {
        // If no candidate breaks a shared pair, the whole branch stays trivial.
        bool breaker = false;
        for (int v : p) {
            for (auto [i, j] : common)
                if (c.elems[v](i) != j) {
                    breaker = true;
                    break;
                }
            if (breaker) break;
        }
        if (!breaker) return;
    }
    std::vector<int> order, bounds;
    color_sort(c.adj, p, order, bounds);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (r.size() + 1 + bounds[i] <= best) return;
        int v = order[i];
        std::vector<int> next;
        for (int j = 0; j < i; ++j)
            if (c.adj[v][order[j]]) next.push_back(order[j]);
        std::vector<std::pair<int, int>> kept;
        for (auto [a, b] : common)
            if (c.elems[v](a) == b) kept.emplace_back(a, b);
        r.push_back(v);
        expand_nontrivial(c, r, kept, next, best, best_r);
        r.pop_back();
    }
}

std::vector<int> all_indices(std::size_t m) {
    std::vector<int> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<int>(i);
    return p;
}

Family to_family(int n, const CliqueContext& c, const std::vector<int>& r) {
    std::vector<Permutation> mem;
    mem.push_back(Permutation::identity(n));
    for (int v : r) mem.push_back(c.elems[v]);
    return Family(n, std::move(mem));
}

struct AnchoredOptima {
    std::size_t best;
    std::vector<std::vector<int>> winners;
    CliqueContext ctx;
    std::int64_t millis;
};

AnchoredOptima anchored_maximum_cliques(int n, int t, GroupMode group, int max_degree) {
    auto start = std::chrono::steady_clock::now();
    AnchoredOptima out;
    out.ctx = build_context(n, t, group, max_degree);
    out.best = 1;  // {id}
    std::vector<int> r;
    expand_all(out.ctx, r, all_indices(out.ctx.elems.size()), out.best, out.winners);
    if (out.winners.empty()) out.winners.push_back({});  // no candidates: {id} alone
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return out;
}

}  // namespace

SearchResult max_t_intersecting(int n, int t, GroupMode group, int max_degree) {
    auto opt = anchored_maximum_cliques(n, t, group, max_degree);
    Family best_f = to_family(n, opt.ctx, opt.winners.front());
    for (std::size_t i = 1; i < opt.winners.size(); ++i) {
        Family f = to_family(n, opt.ctx, opt.winners[i]);
        if (f < best_f) best_f = std::move(f);
    }
    // Any family containing the identity (the lex-least permutation) precedes
    // every family that does not, so the anchored optima contain the lex-least
    // maximum clique.
    return {Int(opt.best), std::move(best_f), SearchStatus::ProvedOptimal, opt.ctx.nodes,
            opt.millis};
}

std::vector<Family> all_max_t_intersecting(int n, int t, GroupMode group, int max_degree) {
    auto opt = anchored_maximum_cliques(n, t, group, max_degree);
    std::set<Family> all;
    auto translators = enumerate_group(n, group == GroupMode::Alt, max_degree);
    for (const auto& w : opt.winners) {
        Family base = to_family(n, opt.ctx, w);
        for (const auto& g : translators) {
            std::vector<Permutation> mem;
            mem.reserve(base.size());
            for (const auto& s : base.members()) mem.push_back(compose(g, s));
            all.insert(Family(n, std::move(mem)));
        }
    }
    return {all.begin(), all.end()};
}

SearchResult max_nontrivial_t_intersecting(int n, int t, int max_degree) {
    auto start = std::chrono::steady_clock::now();
    CliqueContext c = build_context(n, t, GroupMode::Sym, max_degree);
    std::vector<std::pair<int, int>> common;
    for (int i = 1; i <= n; ++i) common.emplace_back(i, i);
    std::size_t best = 0;
    std::vector<int> r, best_r;
    bool root_feasible = static_cast<int>(common.size()) < t;  // only if t > n
    if (root_feasible) best = 1;
    expand_nontrivial(c, r, common, all_indices(c.elems.size()), best, best_r);
    auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (best == 0)
        return {Int(0), Family::empty(n), SearchStatus::EmptyFeasibleSet, c.nodes, millis};
    return {Int(best), to_family(n, c, best_r), SearchStatus::ProvedOptimal, c.nodes, millis};
}

namespace {

// Distances from X in the transposition Cayley graph, indexed by lex rank.
std::vector<int> transposition_distances(const Family& x, int max_degree) {
    int n = x.degree();
    if (x.size() == 0) throw std::invalid_argument("neighborhood: empty family");
    const auto& elems = group_elements(n, max_degree);
    std::vector<int> dist(elems.size(), -1);
    std::queue<std::uint64_t> q;
    for (const auto& s : x.members()) {
        auto r = lex_rank(s);
        if (dist[r] < 0) {
            dist[r] = 0;
            q.push(r);
        }
    }
    while (!q.empty()) {
        auto r = q.front();
        q.pop();
        const auto& img = elems[r].images();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                std::vector<int> nb = img;
                std::swap(nb[a], nb[b]);
                auto nr = lex_rank(Permutation(std::move(nb)));
                if (dist[nr] < 0) {
                    dist[nr] = dist[r] + 1;
                    q.push(nr);
                }
            }
    }
    return dist;
}

}  // namespace

Int transposition_neighborhood(const Family& x, int h, int max_degree) {
    if (h < 0) throw std::invalid_argument("neighborhood: h must be >= 0");
    auto dist = transposition_distances(x, max_degree);
    Int count = 0;
    for (int d : dist)
        if (d >= 0 && d <= h) ++count;
    return count;
}

NeighborhoodReport neighborhood_report(const Family& x, int h_max, int max_degree) {
    int n = x.degree();
    auto dist = transposition_distances(x, max_degree);
    Int nf = factorial(n);

    NeighborhoodReport rep;
    rep.n = n;
    rep.x_size = Int(x.size());
    Rat gamma_inv(nf, Int(x.size()));
    RatInterval logi = log_enclosure(gamma_inv);
    RatInterval h0sq = logi * Rat(n - 1, 2);
    rep.h0 = {sqrt_enclosure(h0sq.lo).lo, sqrt_enclosure(h0sq.hi).hi};
    rep.all_hold = true;

    for (int h = 0; h <= h_max; ++h) {
        NeighborhoodEntry e;
        e.h = h;
        Int count = 0;
        for (int d : dist)
            if (d >= 0 && d <= h) ++count;
        e.size = count;
        e.applicable = Rat(h) >= rep.h0.hi;
        if (e.applicable) {
            RatInterval dh{Rat(h) - rep.h0.hi, Rat(h) - rep.h0.lo};
            RatInterval sq{dh.lo * dh.lo, dh.hi * dh.hi};
            RatInterval ex = exp_neg_enclosure(sq * Rat(2, n - 1));
            e.bound = {(Rat(1) - ex.hi) * Rat(nf), (Rat(1) - ex.lo) * Rat(nf)};
            e.holds = Rat(e.size) >= e.bound.hi;
            if (!e.holds) rep.all_hold = false;
        } else {
            e.bound = RatInterval::point(0);
            e.holds = true;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

TightnessReport verify_hoffman_tightness(const Family& f, int t,
                                         const WeightedCayleySpec& spec, int max_degree) {
    int n = f.degree();
    if (spec.n != n) throw std::invalid_argument("tightness: degree mismatch");
    auto spectrum = cayley_spectrum(spec);
    auto hr = hoffman_bound(spectrum, factorial(n));

    TightnessReport rep;
    rep.bound = hr.bound;
    rep.family_size = Int(f.size());
    rep.meets_bound = Rat(rep.family_size) == hr.bound;
    rep.residual = 0;
    rep.residual_zero = false;
    rep.is_t_coset = false;
    if (rep.meets_bound) {
        rep.residual = residual_norm_sq(f.indicator(max_degree), t, max_degree);
        rep.residual_zero = rep.residual == 0;
        rep.coset = contained_in_t_coset(f, t);
        Int coset_size = factorial(n - t);
        rep.is_t_coset = rep.coset.has_value() && Int(f.size()) == coset_size;
    }
    return rep;
}

}  // namespace permspectra
