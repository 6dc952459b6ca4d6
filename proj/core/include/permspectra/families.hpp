#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permspectra/characters.hpp"
#include "permspectra/permcore.hpp"
#include "permspectra/spectral.hpp"

namespace permspectra {

/// Finite set of permutations of [n], kept sorted and duplicate-free.
class Family {
public:
    Family(int n, std::vector<Permutation> members);
    static Family empty(int n) { return Family(n, {}); }

    int degree() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Permutation>& members() const { return members_; }
    bool contains(const Permutation& p) const;
    void insert(const Permutation& p);

    GroupFunction indicator(int max_degree = kDefaultMaxDegree) const;

    bool operator==(const Family& o) const { return n_ == o.n_ && members_ == o.members_; }
    bool operator<(const Family& o) const { return members_ < o.members_; }

private:
    int n_;
    std::vector<Permutation> members_;
};

/// Defining pairs (i_k -> j_k) of a t-coset; i's and j's pairwise distinct.
struct CosetSpec {
    std::vector<std::pair<int, int>> pairs;
};

bool is_t_intersecting(const Family& f, int t);
bool is_cross_t_intersecting(const Family& f, const Family& g, int t);

/// {sigma : sigma(i_k) = j_k for all k}; size (n-t)!.
Family t_coset(int n, const CosetSpec& spec);

/// Witness of t common agreement pairs (canonical: smallest i's) shared by
/// every member, or nullopt.
std::optional<CosetSpec> contained_in_t_coset(const Family& f, int t);

/// The extremal family: permutations fixing [t] with another fixed point
/// beyond t+1, plus the t transpositions (i t+1).
Family build_D(int n, int t);

/// The alternating-group analogue built around the transposition (n-1 n).
Family build_B_alternating(int n, int t);

/// Extremal t-cross-intersecting pair minimizing the smaller family;
/// tau must satisfy: tau(1) != 1; for t >= 2 tau fixes 2..t and at least
/// two points > t+1; for t = 1 tau agrees with (1 2) somewhere.
std::pair<Family, Family> build_cross_pair_min(int n, int t, const Permutation& tau);

/// Extremal pair maximizing the product of sizes.
std::pair<Family, Family> build_cross_pair_prod(int n, int t);

/// {pi sigma tau : sigma in F}.
Family double_translate(const Family& f, const Permutation& pi, const Permutation& tau);

/// Search for (pi, rho) with A = pi C rho and B = pi D rho.
std::optional<std::pair<Permutation, Permutation>> pair_isomorphic(
    const std::pair<Family, Family>& p1, const std::pair<Family, Family>& p2);

/// n x n grid of rationals representing sigma -> sum_i entries[i][sigma(i)].
struct MatrixFunction {
    int n = 0;
    std::vector<std::vector<Rat>> entries;
};

Rat matrix_function_eval(const MatrixFunction& m, const Permutation& sigma);

/// The block-pattern matrix whose represented function is non-negative on
/// A_n yet forces a negative coefficient: (1,-1/2 / -1/2,1) top-left block,
/// zero diagonal from row 3, ones elsewhere.
MatrixFunction w1_counterexample_matrix(int n);

struct W1Report {
    int n;
    Rat min_on_alternating;
    Rat value_at_12;  // f((1 2))
    bool nonnegative_on_alternating;
};

W1Report verify_W1_counterexample(int n, int max_degree = kDefaultMaxDegree);

struct StabilityReport {
    Rat residual;          // ||u - P_{V_t}(u)||^2
    Rat extreme_residual;  // squared distance to (lambda_max + lambda_min eigenspaces)
    Rat bound;             // exact spectral distance bound on extreme_residual
    Rat alpha_frac;        // |F| / n!
    bool subspaces_match;  // lambda_min eigenspace = the non-top fat components,
                           // in which case residual == extreme_residual
    bool hypotheses_ok;    // F t-intersecting, lambda data sane
    bool holds;            // extreme_residual <= bound (meaningful when hypotheses_ok)
    std::string note;
};

StabilityReport stability_report(const Family& f, int t, const WeightedCayleySpec& spec,
                                 int max_degree = kDefaultMaxDegree);

}  // namespace permspectra
