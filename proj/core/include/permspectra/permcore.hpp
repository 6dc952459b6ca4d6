#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permspectra/partitions.hpp"
#include "permspectra/rational.hpp"

namespace permspectra {

/// Permutation of [n] in one-line form, 1-indexed.
/// Composition convention: (sigma*pi)(x) = sigma(pi(x)).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);  // validates bijection

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    /// Parse cycle notation, e.g. "(1 2)(3 4)"; "()" or "" is the identity.
    static Permutation from_cycles(int n, const std::string& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }  // 1-based
    int preimage(int j) const;
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    int sign() const;  // (-1)^(n - #cycles)
    bool is_even() const { return sign() == 1; }
    bool is_identity() const;

    Partition cycle_type() const;
    int fixed_points() const;

    std::string to_cycle_string() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    /// Lexicographic order on one-line form.
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

/// (sigma*pi)(x) = sigma(pi(x)); degrees must match.
Permutation compose(const Permutation& sigma, const Permutation& pi);

/// |{i : sigma(i) = pi(i)}|; degrees must match.
int agreements(const Permutation& sigma, const Permutation& pi);

/// The i-fix: rho * (rho^{-1}(i)  i).  Fixes i, maps rho^{-1}(i) to rho(i),
/// agrees with rho everywhere else.
Permutation i_fix(const Permutation& rho, int i);

/// Lexicographic rank of the one-line form among all of S_n (0-based).
std::uint64_t lex_rank(const Permutation& sigma);
Permutation from_lex_rank(int n, std::uint64_t r);

struct DerangementCounts {
    int n;
    Int d;  // all derangements
    Int e;  // even derangements
    Int o;  // odd derangements
};

/// d via the standard recurrence, e and o via e - o = (-1)^(n-1)(n-1).
DerangementCounts derangement_counts(int n);

struct ConjugacyClass {
    Partition cycle_type;
    Int size;
};

/// One class per partition of n, canonical order; sizes via the
/// centralizer formula n! / prod(k^{m_k} m_k!).
std::vector<ConjugacyClass> conjugacy_classes(int n);
Int conjugacy_class_size(const Partition& cycle_type);

/// All of S_n (or A_n) in lexicographic one-line order.
/// Throws GuardrailError when n exceeds max_degree.
std::vector<Permutation> enumerate_group(int n, bool even_only = false,
                                         int max_degree = kDefaultMaxDegree);

}  // namespace permspectra
