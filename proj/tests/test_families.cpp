#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <permspectra/families.hpp>

using namespace permspectra;

TEST_CASE("family container behavior") {
    Family f(4, {Permutation::identity(4), Permutation::transposition(4, 1, 2),
                 Permutation::identity(4)});
    CHECK(f.size() == 2);  // duplicates collapse
    CHECK(f.contains(Permutation::identity(4)));
    CHECK(!f.contains(Permutation::transposition(4, 3, 4)));
    f.insert(Permutation::transposition(4, 3, 4));
    CHECK(f.size() == 3);
    // sorted order
    for (std::size_t i = 1; i < f.members().size(); ++i)
        CHECK(f.members()[i - 1] < f.members()[i]);

    auto u = f.indicator();
    Rat total(0);
    for (const auto& v : u.values) total += v;
    CHECK(total == 3);
}

TEST_CASE("pairwise agreement predicate") {
    Family f(4, {Permutation::identity(4), Permutation::transposition(4, 1, 2)});
    CHECK(is_t_intersecting(f, 1));
    CHECK(is_t_intersecting(f, 2));
    CHECK(!is_t_intersecting(f, 3));

    Family g(5, {Permutation::identity(5), Permutation::from_cycles(5, "(1 2 3 4 5)")});
    CHECK(!is_cross_t_intersecting(Family(5, {Permutation::identity(5)}),
                                   Family(5, {Permutation::from_cycles(5, "(1 2 3 4 5)")}), 1));
    CHECK(!is_t_intersecting(g, 1));
    CHECK(is_t_intersecting(Family::empty(5), 3));
}

TEST_CASE("cosets of prescribed images") {
    CosetSpec one{{{1, 1}}};
    auto c1 = t_coset(5, one);
    CHECK(c1.size() == 24);
    for (const auto& p : c1.members()) CHECK(p(1) == 1);

    CosetSpec swap2{{{1, 2}, {2, 1}}};
    auto c2 = t_coset(4, swap2);
    CHECK(c2.size() == 2);
    for (const auto& a : c2.members())
        for (const auto& b : c2.members()) CHECK(agreements(a, b) >= 2);

    auto found = contained_in_t_coset(c2, 2);
    REQUIRE(found.has_value());
    auto back = t_coset(4, *found);
    CHECK(back.size() >= c2.size());
    for (const auto& p : c2.members()) CHECK(back.contains(p));

    CHECK_THROWS(t_coset(4, CosetSpec{{{1, 2}, {1, 3}}}));
    CHECK_THROWS(t_coset(4, CosetSpec{{{1, 2}, {3, 2}}}));
}

TEST_CASE("coset containment detection") {
    // the full coset recovers a witness
    CosetSpec spec{{{2, 3}}};
    auto c = t_coset(5, spec);
    auto w = contained_in_t_coset(c, 1);
    REQUIRE(w.has_value());
    CHECK(w->pairs == spec.pairs);

    // the two-part extremal family shares no single agreement pair
    CHECK(!contained_in_t_coset(build_D(5, 1), 1).has_value());

    // a singleton yields the smallest-index pairs
    Family single(4, {Permutation::transposition(4, 1, 2)});
    auto ws = contained_in_t_coset(single, 2);
    REQUIRE(ws.has_value());
    REQUIRE(ws->pairs.size() == 2);
    CHECK(ws->pairs[0] == std::pair<int, int>{1, 2});
    CHECK(ws->pairs[1] == std::pair<int, int>{2, 1});
}

TEST_CASE("two-part extremal family") {
    for (int n = 4; n <= 6; ++n)
        for (int t = 1; t <= 2; ++t) {
            if (t >= 2 && n < t + 3) continue;  // pairwise t-agreement needs n >= t+3
            auto d = build_D(n, t);
            CHECK(is_t_intersecting(d, t));
            CHECK(!contained_in_t_coset(d, t).has_value());
            for (const auto& p : d.members()) CHECK(agreements(p, Permutation::identity(n)) >= t);
        }
    CHECK(build_D(5, 1).size() == 14);
    CHECK(build_D(4, 2).size() == 3);  // size formula applies from n = t+2
    // closed-form size: derangement-complement count on the fixing part plus t swaps
    for (int n = 4; n <= 7; ++n) {
        auto d = build_D(n, 1);
        Int part1 = 0;
        auto coset = t_coset(n, CosetSpec{{{1, 1}}});
        for (const auto& p : coset.members()) {
            bool extra_fix = false;
            for (int j = 3; j <= n; ++j) extra_fix = extra_fix || p(j) == j;
            if (extra_fix) ++part1;
        }
        CHECK(Int(d.size()) == part1 + 1);
    }
}

TEST_CASE("even-subgroup extremal family") {
    for (int n = 5; n <= 7; ++n) {
        auto b = build_B_alternating(n, 1);
        CHECK(is_t_intersecting(b, 1));
        for (const auto& p : b.members()) CHECK(p.is_even());
        CHECK(!contained_in_t_coset(b, 1).has_value());
    }
    CHECK_THROWS(build_B_alternating(4, 1));  // needs n >= t + 4
}

TEST_CASE("cross pairs") {
    for (int n = 4; n <= 6; ++n) {
        auto [a, b] = build_cross_pair_min(n, 1, Permutation::transposition(n, 1, 2));
        CHECK(is_cross_t_intersecting(a, b, 1));
        CHECK(a.size() <= b.size());

        auto [c, d] = build_cross_pair_prod(n, 1);
        CHECK(is_cross_t_intersecting(c, d, 1));
    }
    // tau = (1 2): the first family coincides with the two-part family
    auto [a5, b5] = build_cross_pair_min(5, 1, Permutation::transposition(5, 1, 2));
    CHECK(a5 == build_D(5, 1));
    CHECK(b5.size() == a5.size());

    // side conditions on tau are enforced
    CHECK_THROWS(build_cross_pair_min(5, 1, Permutation::identity(5)));
    CHECK_THROWS(build_cross_pair_min(5, 2, Permutation::transposition(5, 2, 3)));
    CHECK_NOTHROW(build_cross_pair_min(6, 2, Permutation::transposition(6, 1, 3)));
}

TEST_CASE("double translation preserves structure") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint64_t> pick(0, 119);
    auto f = build_D(5, 1);
    for (int rep = 0; rep < 5; ++rep) {
        auto pi = from_lex_rank(5, pick(rng));
        auto tau = from_lex_rank(5, pick(rng));
        auto g = double_translate(f, pi, tau);
        CHECK(g.size() == f.size());
        CHECK(is_t_intersecting(g, 1) == is_t_intersecting(f, 1));
        CHECK(contained_in_t_coset(g, 1).has_value() ==
              contained_in_t_coset(f, 1).has_value());
    }
    auto c = t_coset(5, CosetSpec{{{1, 1}}});
    auto tc = double_translate(c, from_lex_rank(5, pick(rng)), from_lex_rank(5, pick(rng)));
    CHECK(contained_in_t_coset(tc, 1).has_value());
}

TEST_CASE("pair isomorphism search") {
    auto p1 = build_cross_pair_min(4, 1, Permutation::transposition(4, 1, 2));
    auto s = Permutation::transposition(4, 1, 3);
    std::pair<Family, Family> p2{double_translate(p1.first, s, Permutation::identity(4)),
                                 double_translate(p1.second, s, Permutation::identity(4))};
    auto w = pair_isomorphic(p1, p2);
    REQUIRE(w.has_value());
    CHECK(double_translate(p1.first, w->first, w->second) == p2.first);
    CHECK(double_translate(p1.second, w->first, w->second) == p2.second);

    std::pair<Family, Family> mismatched{p1.first, Family::empty(4)};
    CHECK(!pair_isomorphic(p1, mismatched).has_value());
}

TEST_CASE("matrix-pattern functions") {
    MatrixFunction m;
    m.n = 3;
    m.entries = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
    CHECK(matrix_function_eval(m, Permutation::identity(3)) == 2);
    CHECK(matrix_function_eval(m, Permutation::from_cycles(3, "(1 2 3)")) == 0);

    auto w1 = w1_counterexample_matrix(4);
    CHECK(w1.entries[0][1] == Rat(-1, 2));
    CHECK(w1.entries[2][2] == 0);
    CHECK(matrix_function_eval(w1, Permutation::transposition(4, 1, 2)) == -1);

    for (int n = 4; n <= 5; ++n) {
        auto rep = verify_W1_counterexample(n);
        CHECK(rep.nonnegative_on_alternating);
        CHECK(rep.min_on_alternating >= 0);
        CHECK(rep.value_at_12 == -1);
    }
    CHECK_THROWS(verify_W1_counterexample(3));
}

TEST_CASE("stability reports") {
    auto r = solve_weights(4, 1);
    auto spec = std::get<WeightedCayleySpec>(r);

    // a 1-coset projects onto the low-degree space exactly
    auto coset = t_coset(4, CosetSpec{{{2, 2}}});
    auto rep = stability_report(coset, 1, spec);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.subspaces_match);
    CHECK(rep.residual == 0);
    CHECK(rep.extreme_residual == 0);
    CHECK(rep.holds);
    CHECK(rep.alpha_frac == Rat(1, 4));

    // the two-part family has positive residual but still satisfies the bound
    auto d = stability_report(build_D(4, 1), 1, spec);
    CHECK(d.hypotheses_ok);
    CHECK(d.residual > 0);
    CHECK(d.holds);
    CHECK(d.residual == d.extreme_residual);

    // a non-intersecting family fails the hypotheses
    Family bad(4, {Permutation::identity(4), Permutation::from_cycles(4, "(1 2 3 4)")});
    auto rb = stability_report(bad, 1, spec);
    CHECK(!rb.hypotheses_ok);

    // uniform weights at this degree tie the minimum on a non-fat component
    auto ru = stability_report(coset, 1, WeightedCayleySpec::uniform_derangements(4));
    CHECK(!ru.subspaces_match);
    CHECK(ru.residual == 0);
}
