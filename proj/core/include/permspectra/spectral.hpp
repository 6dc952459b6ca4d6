#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "permspectra/characters.hpp"
#include "permspectra/partitions.hpp"
#include "permspectra/rational.hpp"

namespace permspectra {

enum class GroupMode { Sym, Alt };

/// Class-weight assignment defining a weighted Cayley graph on S_n whose
/// generating classes all have fewer than t fixed points (and exclude the
/// identity class).
struct WeightedCayleySpec {
    int n = 0;
    int t = 1;
    std::map<Partition, Rat> weights;  // cycle type -> weight per element

    void validate() const;  // throws on invariant violation

    static WeightedCayleySpec uniform_derangements(int n);  // t = 1, weight 1/d_n
};

/// Per-partition eigenvalue table of a class-weighted Cayley graph.
struct SpectrumTable {
    int n = 0;
    GroupMode mode = GroupMode::Sym;
    std::vector<Partition> parts;     // canonical order
    std::vector<Rat> eigenvalues;     // lambda_alpha
    std::vector<Int> multiplicities;  // (f^alpha)^2 in Sym mode

    Int group_order() const;  // n! or n!/2
    Rat lambda_max() const;   // = lambda_{(n)}, the weighted degree
    Rat lambda_min() const;
    /// Largest eigenvalue among alpha != (n).
    Rat lambda_second() const;
    /// Negative eigenvalue of second largest modulus (0 if none).
    Rat lambda_M() const;
    const Rat& at(const Partition& alpha) const;

    /// Distinct eigenvalues with aggregated multiplicities (halved in Alt
    /// mode; the halves are exact by the parity pairing of the spectrum).
    std::map<Rat, Int> distinct_eigenvalues() const;
};

struct HoffmanReport {
    Rat bound;
    Rat lambda_max;
    Rat lambda_min;
    Rat lambda_M;
    Rat nu;
    std::vector<Partition> achieving_partitions;  // where lambda_min is attained
};

/// omega_{n,t} = -1 / (n(n-1)...(n-t+1) - 1).
Rat omega(int n, int t);

/// Eigenvalues lambda_alpha = (1/f^alpha) sum_C w_C |C| chi_alpha(C).
SpectrumTable cayley_spectrum(const WeightedCayleySpec& spec);

/// |X| <= |lambda_min| N / (lambda_max + |lambda_min|); throws if
/// lambda_min >= 0 (bound vacuous).
HoffmanReport hoffman_bound(const SpectrumTable& spectrum, const Int& group_order);

/// Cross version: |X||Y| <= (nu N / (lambda_max + nu))^2 with
/// nu = max(|lambda_2|, |lambda_min|).
Rat cross_bound(const SpectrumTable& spectrum, const Int& group_order);

/// Exact bound on the squared distance from a density-alpha independent
/// set's indicator to the top eigenspace span:
/// D^2 <= ((1-a)|l_N| - l_1 a) / (|l_N| - |l_M|) * a.
Rat stability_distance_bound(const SpectrumTable& spectrum, const Rat& alpha_frac);

struct WeightSolveFailure {
    Partition offending;  // non-fat partition whose eigenvalue cannot be interior
};

using WeightSolveResult = std::variant<WeightedCayleySpec, WeightSolveFailure>;

/// Solve for class weights with lambda_{(n)} = 1, lambda_alpha = omega_{n,t}
/// on the other fat alpha, and all remaining eigenvalues strictly inside
/// (omega, 1).  Minimum-norm solve first, then a bounded search over
/// vertices of the constraint polytope (averaged for strict interiority).
WeightSolveResult solve_weights(int n, int t);

/// Spectrum of the weighted subgraph induced on A_n.  All support classes
/// must be even; eigenvalues coincide with the S_n spectrum and aggregated
/// multiplicities halve.
SpectrumTable an_restriction(const WeightedCayleySpec& spec);

/// Exhaustively verify that sigma -> (1 2) sigma maps the A_n subgraph onto
/// the odd-coset subgraph with equal edge weights (guardrailed).
bool verify_phi_isomorphism(const WeightedCayleySpec& spec,
                            int max_degree = kDefaultMaxDegree);

}  // namespace permspectra
