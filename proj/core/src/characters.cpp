#include "permspectra/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace permspectra {

namespace {

// Multiset of cycle lengths grouped as (length, multiplicity).
std::vector<std::pair<int, int>> length_groups(const Partition& lambda) {
    std::vector<std::pair<int, int>> groups;
    for (int p : lambda.parts()) {
        if (!groups.empty() && groups.back().first == p)
            groups.back().second++;
        else
            groups.emplace_back(p, 1);
    }
    return groups;
}

// Count ways to pick cycles (by multiplicity per length group, with binomial
// weights) filling exactly `capacity`, then recurse to the next row.
Int assign_rows(const std::vector<int>& rows, std::size_t row,
                const std::vector<std::pair<int, int>>& groups,
                std::vector<int>& rem);

Int fill_row(const std::vector<int>& rows, std::size_t row, int capacity,
             const std::vector<std::pair<int, int>>& groups,
             std::vector<int>& rem, std::size_t g) {
    if (capacity == 0) return assign_rows(rows, row + 1, groups, rem);
    if (g == groups.size()) return 0;
    Int total = 0;
    int len = groups[g].first;
    int maxk = std::min(rem[g], capacity / len);
    for (int k = 0; k <= maxk; ++k) {
        rem[g] -= k;
        Int ways = fill_row(rows, row, capacity - k * len, groups, rem, g + 1);
        rem[g] += k;
        if (ways != 0) total += binomial(rem[g], k) * ways;
    }
    return total;
}

Int assign_rows(const std::vector<int>& rows, std::size_t row,
                const std::vector<std::pair<int, int>>& groups,
                std::vector<int>& rem) {
    if (row == rows.size()) return 1;  // all cycles consumed: sums match by construction
    return fill_row(rows, row, rows[row], groups, rem, 0);
}

void build_table(CharacterTable& t, int n) {
    t.n = n;
    t.classes = partitions_of(n);
    int k = static_cast<int>(t.classes.size());
    t.class_sizes.resize(k);
    t.dims.resize(k);
    for (int i = 0; i < k; ++i) {
        t.class_sizes[i] = conjugacy_class_size(t.classes[i]);
        t.dims[i] = dimension(t.classes[i]);
    }
    t.xi.assign(k, std::vector<Int>(k));
    for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
            t.xi[b][c] = permutation_character(t.classes[b], t.classes[c]);

    // Determinantal formula: the only permutations contributing are those
    // fixing every index beyond the number of parts of alpha.
    t.chi.assign(k, std::vector<Int>(k));
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < k; ++i) index[t.classes[i].parts()] = i;
    for (int a = 0; a < k; ++a) {
        const Partition& alpha = t.classes[a];
        int l = std::max(alpha.num_parts(), 1);
        std::vector<int> perm(l);
        for (int i = 0; i < l; ++i) perm[i] = i + 1;
        do {
            std::vector<long long> terms(static_cast<std::size_t>(std::max(n, l)));
            bool neg = false;
            for (int i = 0; i < l; ++i) {
                terms[i] = alpha.part(i) - (i + 1) + perm[i];
                if (terms[i] < 0) neg = true;
            }
            for (int i = l; i < n; ++i) terms[i] = 0;
            if (neg) continue;
            std::vector<int> parts;
            for (long long x : terms)
                if (x > 0) parts.push_back(static_cast<int>(x));
            std::sort(parts.rbegin(), parts.rend());
            auto it = index.find(parts);
            if (it == index.end()) continue;  // cannot happen: sum is n
            int sgn = Permutation(std::vector<int>(perm.begin(), perm.end())).sign();
            for (int c = 0; c < k; ++c) t.chi[a][c] += sgn * t.xi[it->second][c];
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

}  // namespace

const Rat& ClassFunction::at(const Partition& cycle_type) const {
    const auto& table = character_table(n);
    return values[table.index_of(cycle_type)];
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), p);
    if (it == classes.end() || !(*it == p))
        throw std::invalid_argument("partition not of degree " + std::to_string(n) +
                                    ": " + p.to_string());
    return static_cast<int>(it - classes.begin());
}

const CharacterTable& character_table(int n) {
    static std::mutex mu;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        CharacterTable t;
        build_table(t, n);
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

Int permutation_character(const Partition& beta, const Partition& lambda) {
    if (beta.n() != lambda.n())
        throw std::invalid_argument("permutation_character: size mismatch");
    if (beta.n() == 0) return 1;
    auto groups = length_groups(lambda);
    std::vector<int> rem;
    for (auto& g : groups) rem.push_back(g.second);
    return assign_rows(beta.parts(), 0, groups, rem);
}

ClassFunction irreducible_character(const Partition& alpha) {
    const auto& t = character_table(alpha.n());
    int a = t.index_of(alpha);
    ClassFunction f{alpha.n(), {}};
    f.values.reserve(t.classes.size());
    for (const auto& v : t.chi[a]) f.values.emplace_back(v);
    return f;
}

std::vector<std::pair<Partition, Int>> young_rule(const Partition& beta) {
    const auto& t = character_table(beta.n());
    int b = t.index_of(beta);
    int k = static_cast<int>(t.classes.size());
    std::vector<std::pair<Partition, Int>> out;
    std::vector<Int> recon(k, 0);
    for (int a = 0; a < k; ++a) {
        Int K = kostka(t.classes[a], beta);
        if (K > 0) out.emplace_back(t.classes[a], K);
        for (int c = 0; c < k; ++c) recon[c] += K * t.chi[a][c];
    }
    for (int c = 0; c < k; ++c)
        if (recon[c] != t.xi[b][c])
            throw std::logic_error("young_rule: reconstruction mismatch for beta=" +
                                   beta.to_string());
    return out;
}

GroupFunction GroupFunction::zero(int n, int max_degree) {
    GroupFunction u;
    u.n = n;
    u.values.assign(group_elements(n, max_degree).size(), Rat(0));
    return u;
}

GroupFunction GroupFunction::constant(int n, const Rat& c, int max_degree) {
    GroupFunction u = zero(n, max_degree);
    for (auto& v : u.values) v = c;
    return u;
}

const std::vector<Permutation>& group_elements(int n, int max_degree) {
    static std::mutex mu;
    static std::map<int, std::vector<Permutation>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_group(n, false, max_degree)).first;
    return it->second;
}

const std::vector<std::uint16_t>& class_index_table(int n, int max_degree) {
    static std::mutex mu;
    static std::map<int, std::vector<std::uint16_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        const auto& elems = group_elements(n, max_degree);
        const auto& t = character_table(n);
        std::vector<std::uint16_t> idx(elems.size());
        for (std::size_t r = 0; r < elems.size(); ++r)
            idx[r] = static_cast<std::uint16_t>(t.index_of(elems[r].cycle_type()));
        it = cache.emplace(n, std::move(idx)).first;
    }
    return it->second;
}

GroupFunction isotypic_projection(const GroupFunction& u, const Partition& alpha,
                                  int max_degree) {
    int n = u.n;
    if (alpha.n() != n)
        throw std::invalid_argument("isotypic_projection: degree mismatch");
    const auto& elems = group_elements(n, max_degree);
    const auto& cls = class_index_table(n, max_degree);
    const auto& t = character_table(n);
    int a = t.index_of(alpha);
    Rat scale(t.dims[a], factorial(n));

    // Gather the support of u once.
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < u.values.size(); ++r)
        if (u.values[r] != 0) support.push_back(r);

    GroupFunction out = GroupFunction::zero(n, max_degree);
    for (std::size_t s = 0; s < elems.size(); ++s) {
        Permutation sinv = elems[s].inverse();
        Rat acc(0);
        for (std::size_t r : support) {
            auto prod = compose(elems[r], sinv);
            acc += u.values[r] * Rat(t.chi[a][cls[lex_rank(prod)]]);
        }
        out.values[s] = scale * acc;
    }
    return out;
}

GroupFunction project_V_t(const GroupFunction& u, int t, int max_degree) {
    GroupFunction out = GroupFunction::zero(u.n, max_degree);
    for (const auto& alpha : fat_partitions(u.n, t)) {
        GroupFunction p = isotypic_projection(u, alpha, max_degree);
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += p.values[i];
    }
    return out;
}

Rat inner_product(const GroupFunction& u, const GroupFunction& v) {
    if (u.n != v.n) throw std::invalid_argument("inner_product: degree mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < u.values.size(); ++i) acc += u.values[i] * v.values[i];
    return acc / Rat(factorial(u.n));
}

Rat norm_sq(const GroupFunction& u) { return inner_product(u, u); }

Rat residual_norm_sq(const GroupFunction& u, int t, int max_degree) {
    GroupFunction p = project_V_t(u, t, max_degree);
    GroupFunction r = u;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= p.values[i];
    return norm_sq(r);
}

}  // namespace permspectra
