#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include <permspectra/search.hpp>

using namespace permspectra;

namespace {

// Oracle: exhaustive depth-first maximum-clique search with no pruning
// beyond candidate filtering.
Int naive_max_clique(int n, int t, GroupMode group) {
    auto elems = enumerate_group(n, group == GroupMode::Alt);
    std::size_t best = 0;
    std::function<void(std::size_t, std::vector<std::size_t>&)> rec =
        [&](std::size_t depth, std::vector<std::size_t>& cand) {
            best = std::max(best, depth);
            for (std::size_t k = 0; k < cand.size(); ++k) {
                std::vector<std::size_t> next;
                for (std::size_t l = k + 1; l < cand.size(); ++l)
                    if (agreements(elems[cand[k]], elems[cand[l]]) >= t)
                        next.push_back(cand[l]);
                rec(depth + 1, next);
            }
        };
    std::vector<std::size_t> all(elems.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    rec(0, all);
    return Int(best);
}

}  // namespace

TEST_CASE("maximum pairwise-agreeing sets against the naive search") {
    for (int n = 3; n <= 4; ++n)
        for (int t = 1; t <= n; ++t) {
            auto r = max_t_intersecting(n, t);
            CHECK(r.status == SearchStatus::ProvedOptimal);
            CHECK(r.optimum == naive_max_clique(n, t, GroupMode::Sym));
            CHECK(Int(r.witness.size()) == r.optimum);
            CHECK(is_t_intersecting(r.witness, t));
        }
    // even-subgroup variant
    for (int t = 1; t <= 2; ++t) {
        auto r = max_t_intersecting(4, t, GroupMode::Alt);
        CHECK(r.optimum == naive_max_clique(4, t, GroupMode::Alt));
        for (const auto& p : r.witness.members()) CHECK(p.is_even());
    }
}

TEST_CASE("known optima and witnesses") {
    for (int n = 3; n <= 5; ++n) {
        auto r = max_t_intersecting(n, 1);
        CHECK(r.optimum == factorial(n - 1));
        // the reported witness is a 1-coset
        CHECK(contained_in_t_coset(r.witness, 1).has_value());
    }
    // t = n: only singletons, witness of size one
    auto rn = max_t_intersecting(4, 4);
    CHECK(rn.optimum == 1);
}

TEST_CASE("every maximum family is a coset at small degrees") {
    for (int n = 3; n <= 4; ++n) {
        auto all = all_max_t_intersecting(n, 1);
        CHECK(all.size() == n * n);  // n^2 cosets {sigma : sigma(i) = j}
        for (const auto& f : all) {
            CHECK(Int(f.size()) == factorial(n - 1));
            CHECK(is_t_intersecting(f, 1));
            CHECK(contained_in_t_coset(f, 1).has_value());
        }
    }
}

TEST_CASE("maximum families avoiding coset containment") {
    auto r = max_nontrivial_t_intersecting(4, 1);
    CHECK(r.status == SearchStatus::ProvedOptimal);
    CHECK(r.optimum == 4);
    CHECK(is_t_intersecting(r.witness, 1));
    CHECK(!contained_in_t_coset(r.witness, 1).has_value());
    CHECK(Int(build_D(4, 1).size()) <= r.optimum);

    auto r5 = max_nontrivial_t_intersecting(5, 1);
    CHECK(r5.optimum == Int(build_D(5, 1).size()));

    // with t = n every pair of distinct elements fails, and singletons are
    // trivially inside an n-coset
    auto none = max_nontrivial_t_intersecting(3, 3);
    CHECK(none.status == SearchStatus::EmptyFeasibleSet);
}

TEST_CASE("transposition-ball sizes") {
    Family id4(4, {Permutation::identity(4)});
    CHECK(transposition_neighborhood(id4, 0) == 1);
    CHECK(transposition_neighborhood(id4, 1) == 7);  // identity + 6 transpositions
    CHECK(transposition_neighborhood(id4, 3) == 24);

    // distance from the identity is n minus the number of cycles
    for (int n = 3; n <= 5; ++n) {
        Family idn(n, {Permutation::identity(n)});
        std::vector<Int> ball(n);
        for (int h = 0; h < n; ++h) ball[h] = transposition_neighborhood(idn, h);
        // ball sizes equal the count of permutations within each distance
        for (int h = 0; h < n; ++h) {
            Int count = 0;
            for (const auto& p : enumerate_group(n))
                if (n - static_cast<int>(p.cycle_type().num_parts()) <= h) ++count;
            CHECK(ball[h] == count);
        }
    }

    // multi-source: ball around a 2-element set
    Family two(4, {Permutation::identity(4), Permutation::from_cycles(4, "(1 2 3 4)")});
    CHECK(transposition_neighborhood(two, 0) == 2);
    CHECK(transposition_neighborhood(two, 3) == 24);
}

TEST_CASE("neighborhood growth against the concentration bound") {
    Family id5(5, {Permutation::identity(5)});
    auto rep = neighborhood_report(id5, 5);
    CHECK(rep.x_size == 1);
    CHECK(rep.h0.lo <= rep.h0.hi);
    CHECK(rep.all_hold);
    bool any_applicable = false;
    for (const auto& e : rep.entries) {
        if (e.applicable) {
            any_applicable = true;
            CHECK(e.holds);
        }
        CHECK(e.size >= 1);
    }
    CHECK(any_applicable);

    // half the group: h0 is small, most radii applicable
    Family evens(4, enumerate_group(4, true));
    auto rep2 = neighborhood_report(evens, 4);
    CHECK(rep2.x_size == 12);
    CHECK(rep2.all_hold);
}

TEST_CASE("spectral-bound equality certification") {
    auto spec = WeightedCayleySpec::uniform_derangements(4);
    auto coset = t_coset(4, CosetSpec{{{3, 1}}});
    auto rep = verify_hoffman_tightness(coset, 1, spec);
    CHECK(rep.bound == 6);
    CHECK(rep.family_size == 6);
    CHECK(rep.meets_bound);
    CHECK(rep.residual == 0);
    CHECK(rep.residual_zero);
    CHECK(rep.is_t_coset);
    REQUIRE(rep.coset.has_value());
    CHECK(t_coset(4, *rep.coset) == coset);

    auto d = build_D(4, 1);
    auto rep2 = verify_hoffman_tightness(d, 1, spec);
    CHECK(!rep2.meets_bound);
    CHECK(!rep2.is_t_coset);
}

TEST_CASE("search guardrails") {
    CHECK_THROWS_AS((void)max_t_intersecting(7, 1), GuardrailError);
    CHECK_THROWS_AS((void)transposition_neighborhood(
                        Family(7, {Permutation::identity(7)}), 1),
                    GuardrailError);
}
