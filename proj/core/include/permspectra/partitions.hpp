#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "permspectra/rational.hpp"

namespace permspectra {

/// Non-increasing sequence of positive integers summing to n.
/// Indexes both the conjugacy classes and the irreducible representations
/// of S_n.  The canonical order (operator<) is reverse-lexicographic:
/// (n) first, (1^n) last.
class Partition {
public:
    Partition() = default;  // empty partition of 0
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < num_parts() ? parts_[i] : 0; }  // 0-based
    int first_part() const { return parts_.empty() ? 0 : parts_[0]; }

    Partition conjugate() const;

    /// Multiplicity of part size k.
    int multiplicity(int k) const;

    /// Number of parts equal to 1 (fixed points of the cycle type).
    int ones() const { return multiplicity(1); }

    std::string to_string() const;  // "[3,2,2]"
    static Partition from_string(const std::string& s);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    /// Canonical (reverse-lexicographic) order: a < b iff a comes first.
    bool operator<(const Partition& o) const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n in canonical order; size p(n).
std::vector<Partition> partitions_of(int n);

/// p(n), the number of partitions of n.
Int partition_count(int n);

/// Ragged grid of hook lengths matching the Young diagram of the shape.
struct HookGrid {
    std::vector<std::vector<int>> rows;
};

HookGrid hook_lengths(const Partition& alpha);

/// f^alpha = n! / prod(hook lengths), the number of standard alpha-tableaux.
Int dimension(const Partition& alpha);

/// Kostka number: count of semistandard alpha-tableaux of content beta,
/// by explicit backtracking over fillings.
Int kostka(const Partition& alpha, const Partition& beta);

/// Partitions of n whose first part is at least n-t, canonical order.
std::vector<Partition> fat_partitions(int n, int t);

/// Sequence of n integers (possibly negative) summing to n.
class Composition {
public:
    Composition(std::vector<long long> terms, int n);
    const std::vector<long long>& terms() const { return terms_; }
    int n() const { return n_; }

private:
    std::vector<long long> terms_;
    int n_;
};

/// Sorted non-zero terms as a partition; nullopt iff any term is negative
/// (the convention that makes the corresponding permutation character zero).
std::optional<Partition> normalize_composition(const Composition& lambda);

}  // namespace permspectra
