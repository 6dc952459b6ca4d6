#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permspectra/partitions.hpp"
#include "permspectra/permcore.hpp"
#include "permspectra/rational.hpp"

namespace permspectra {

/// Exact rational value per conjugacy class of S_n, aligned with the
/// canonical order of partitions_of(n).
struct ClassFunction {
    int n = 0;
    std::vector<Rat> values;

    const Rat& at(const Partition& cycle_type) const;
};

/// Full exact character data for S_n: permutation characters xi_beta and
/// irreducible characters chi_alpha (via the determinantal formula), with
/// class sizes and dimensions.  Row/column index = canonical partition index.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;        // canonical order
    std::vector<Int> class_sizes;
    std::vector<Int> dims;                 // f^alpha
    std::vector<std::vector<Int>> xi;      // xi[beta][class]
    std::vector<std::vector<Int>> chi;     // chi[alpha][class]

    int index_of(const Partition& p) const;
};

/// Cached, thread-safe.
const CharacterTable& character_table(int n);

/// xi_beta on the class of cycle type lambda: the number of beta-tabloids
/// fixed by any permutation of that cycle type, via a cycle-to-row
/// assignment count.
Int permutation_character(const Partition& beta, const Partition& lambda);

/// chi_alpha as a ClassFunction, from the determinantal formula
/// chi_alpha = sum_pi eps(pi) xi_{alpha - id + pi}.
ClassFunction irreducible_character(const Partition& alpha);

/// Decomposition of the permutation module M^beta: pairs (alpha, K_{alpha,beta})
/// with K > 0, verified pointwise against xi_beta before returning.
std::vector<std::pair<Partition, Int>> young_rule(const Partition& beta);

/// Exact rational function on all of S_n, dense, indexed by lexicographic
/// rank of the permutation.
struct GroupFunction {
    int n = 0;
    std::vector<Rat> values;  // size n!

    static GroupFunction zero(int n, int max_degree = kDefaultMaxDegree);
    static GroupFunction constant(int n, const Rat& c, int max_degree = kDefaultMaxDegree);

    Rat& at(const Permutation& sigma) { return values[lex_rank(sigma)]; }
    const Rat& at(const Permutation& sigma) const { return values[lex_rank(sigma)]; }
};

/// Cached list of all of S_n in lex order (guardrailed).
const std::vector<Permutation>& group_elements(int n, int max_degree = kDefaultMaxDegree);

/// Cached map lex rank -> canonical class index.
const std::vector<std::uint16_t>& class_index_table(int n, int max_degree = kDefaultMaxDegree);

/// Projection onto the isotypic component V_alpha:
/// P(u)_sigma = (f^alpha / n!) sum_pi u(pi) chi_alpha(pi sigma^{-1}).
GroupFunction isotypic_projection(const GroupFunction& u, const Partition& alpha,
                                  int max_degree = kDefaultMaxDegree);

/// Projection onto V_t = direct sum of V_alpha over fat alpha.
GroupFunction project_V_t(const GroupFunction& u, int t,
                          int max_degree = kDefaultMaxDegree);

/// Normalized inner product <u,v> = (1/n!) sum u(g) v(g).
Rat inner_product(const GroupFunction& u, const GroupFunction& v);
Rat norm_sq(const GroupFunction& u);

/// ||u - P_{V_t}(u)||^2 under the normalized inner product.
Rat residual_norm_sq(const GroupFunction& u, int t,
                     int max_degree = kDefaultMaxDegree);

}  // namespace permspectra
