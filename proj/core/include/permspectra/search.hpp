#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permspectra/families.hpp"
#include "permspectra/intervals.hpp"
#include "permspectra/permcore.hpp"
#include "permspectra/spectral.hpp"

namespace permspectra {

enum class SearchStatus { ProvedOptimal, EmptyFeasibleSet };

struct SearchResult {
    Int optimum;
    Family witness;  // lexicographically least optimal clique (empty if none)
    SearchStatus status;
    std::uint64_t nodes;
    std::int64_t millis;
};

/// Exact maximum size of a pairwise t-agreeing set in S_n or A_n, by
/// branch-and-bound clique search anchored at the identity (every maximum
/// clique is a left translate of one through the identity).
SearchResult max_t_intersecting(int n, int t, GroupMode group = GroupMode::Sym,
                                int max_degree = 6);

/// Every maximum clique, recovered as the left translates of the
/// identity-anchored optima.
std::vector<Family> all_max_t_intersecting(int n, int t, GroupMode group = GroupMode::Sym,
                                           int max_degree = 6);

/// Maximum clique among families sharing fewer than t common agreement
/// pairs (i.e. not contained in any t-coset).  Adding elements can only
/// shrink the shared pair set, so feasibility is monotone under extension.
SearchResult max_nontrivial_t_intersecting(int n, int t, int max_degree = 6);

/// Exact ball size |N_h(X)| in the Cayley graph generated by all
/// transpositions, by multi-source BFS.
Int transposition_neighborhood(const Family& x, int h, int max_degree = 6);

struct NeighborhoodEntry {
    int h;
    Int size;            // |N_h(X)|
    RatInterval bound;   // (1 - e^{-2(h-h0)^2/(n-1)}) n!
    bool applicable;     // h >= h0, certified against the upper endpoint
    bool holds;          // size >= bound.hi (rigorous domination)
};

struct NeighborhoodReport {
    int n;
    Int x_size;
    RatInterval h0;  // sqrt((n-1)/2 * log(n!/|X|))
    std::vector<NeighborhoodEntry> entries;
    bool all_hold;  // every applicable entry holds
};

/// Compare exact neighborhood growth against the martingale-type
/// isoperimetric lower bound, evaluated in interval arithmetic.
NeighborhoodReport neighborhood_report(const Family& x, int h_max, int max_degree = 6);

struct TightnessReport {
    Rat bound;
    Int family_size;
    bool meets_bound;
    Rat residual;        // squared distance to V_t (when meets_bound)
    bool residual_zero;
    bool is_t_coset;
    std::optional<CosetSpec> coset;
};

/// Check whether a family attains the spectral bound, and if so certify
/// the equality analysis: zero residual and t-coset structure.
TightnessReport verify_hoffman_tightness(const Family& f, int t,
                                         const WeightedCayleySpec& spec,
                                         int max_degree = kDefaultMaxDegree);

}  // namespace permspectra
