#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include <permspectra/characters.hpp>

using namespace permspectra;

namespace {

// Oracle: xi_beta(sigma) as the literal count of row-set systems of shape
// beta preserved by sigma.
Int fixed_tabloids(const Partition& beta, const Permutation& sigma) {
    int n = beta.n();
    std::vector<int> row_of(n + 1, -1);
    const auto& shape = beta.parts();

    // Assign elements 1..n to rows respecting row capacities; to count each
    // tabloid once, rows are filled in element order within capacity.
    std::vector<int> remaining(shape.begin(), shape.end());
    Int count = 0;
    std::vector<int> assignment(n + 1, -1);
    auto preserved = [&]() {
        for (int x = 1; x <= n; ++x)
            if (assignment[sigma(x)] != assignment[x]) return false;
        return true;
    };
    std::function<void(int)> rec = [&](int x) {
        if (x > n) {
            if (preserved()) ++count;
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (remaining[r] == 0) continue;
            // skip equal predecessors? rows are ordered, so no symmetry to kill
            --remaining[r];
            assignment[x] = static_cast<int>(r);
            rec(x + 1);
            ++remaining[r];
            assignment[x] = -1;
        }
    };
    rec(1);
    return count;
}

Permutation class_representative(int n, const Partition& cycle_type) {
    std::string cycles;
    int next = 1;
    for (int len : cycle_type.parts()) {
        if (len == 1) {
            ++next;
            continue;
        }
        cycles += "(";
        for (int k = 0; k < len; ++k) cycles += (k ? " " : "") + std::to_string(next + k);
        cycles += ")";
        next += len;
    }
    return Permutation::from_cycles(n, cycles);
}

}  // namespace

TEST_CASE("permutation characters against tabloid enumeration") {
    for (int n = 1; n <= 6; ++n) {
        const auto& tab = character_table(n);
        for (std::size_t b = 0; b < tab.classes.size(); ++b)
            for (std::size_t c = 0; c < tab.classes.size(); ++c) {
                auto rep = class_representative(n, tab.classes[c]);
                CHECK(tab.xi[b][c] == fixed_tabloids(tab.classes[b], rep));
            }
    }
}

TEST_CASE("the degree-4 table matches the classical one") {
    const auto& tab = character_table(4);
    // canonical class order: [4], [3,1], [2,2], [2,1,1], [1,1,1,1]
    std::vector<std::vector<Int>> expected = {
        {1, 1, 1, 1, 1},      // trivial
        {-1, 0, -1, 1, 3},    // fix count minus one
        {0, -1, 2, 0, 2},     // two-dimensional
        {1, 0, -1, -1, 3},    // product with sign
        {-1, 1, 1, -1, 1},    // sign
    };
    CHECK(tab.chi == expected);
    std::vector<Int> sizes = {6, 8, 3, 6, 1};
    CHECK(tab.class_sizes == sizes);
}

TEST_CASE("orthogonality of rows and columns") {
    for (int n = 1; n <= 6; ++n) {
        const auto& tab = character_table(n);
        std::size_t nc = tab.classes.size();
        for (std::size_t a = 0; a < nc; ++a)
            for (std::size_t b = a; b < nc; ++b) {
                Int acc = 0;
                for (std::size_t k = 0; k < nc; ++k)
                    acc += tab.class_sizes[k] * tab.chi[a][k] * tab.chi[b][k];
                CHECK(acc == (a == b ? factorial(n) : Int(0)));
            }
        // column orthogonality: sum over irreducibles is the centralizer order
        for (std::size_t k = 0; k < nc; ++k)
            for (std::size_t l = k; l < nc; ++l) {
                Int acc = 0;
                for (std::size_t a = 0; a < nc; ++a) acc += tab.chi[a][k] * tab.chi[a][l];
                Int want = k == l ? factorial(n) / tab.class_sizes[k] : Int(0);
                CHECK(acc == want);
            }
    }
}

TEST_CASE("dimensions line up with the hook formula and the identity column") {
    for (int n = 1; n <= 6; ++n) {
        const auto& tab = character_table(n);
        std::size_t id_col = tab.classes.size() - 1;  // class [1^n] is last
        for (std::size_t a = 0; a < tab.classes.size(); ++a) {
            CHECK(tab.dims[a] == dimension(tab.classes[a]));
            CHECK(tab.chi[a][id_col] == tab.dims[a]);
        }
    }
}

TEST_CASE("near-top character differs from its permutation character by one") {
    for (int n = 2; n <= 7; ++n) {
        auto beta = n == 2 ? Partition({1, 1}) : Partition({n - 1, 1});
        const auto& tab = character_table(n);
        int idx = tab.index_of(beta);
        for (std::size_t k = 0; k < tab.classes.size(); ++k)
            CHECK(tab.chi[idx][k] == tab.xi[idx][k] - 1);
    }
}

TEST_CASE("module decomposition multiplicities") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& beta : partitions_of(n)) {
            auto decomp = young_rule(beta);  // throws if inconsistent
            // multiplicity of the same shape is one; all listed are positive
            bool found_self = false;
            for (const auto& [alpha, mult] : decomp) {
                CHECK(mult > 0);
                CHECK(mult == kostka(alpha, beta));
                if (alpha == beta) {
                    CHECK(mult == 1);
                    found_self = true;
                }
            }
            CHECK(found_self);
        }
    }
}

TEST_CASE("projections are orthogonal idempotents that sum to the identity") {
    int n = 4;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-5, 5);
    GroupFunction u = GroupFunction::zero(n);
    for (auto& x : u.values) x = Rat(val(rng), 1 + (val(rng) & 3));

    auto parts = partitions_of(n);
    std::vector<GroupFunction> projs;
    for (const auto& alpha : parts) projs.push_back(isotypic_projection(u, alpha));

    GroupFunction total = GroupFunction::zero(n);
    for (const auto& p : projs)
        for (std::size_t i = 0; i < total.values.size(); ++i) total.values[i] += p.values[i];
    CHECK(total.values == u.values);

    for (std::size_t a = 0; a < parts.size(); ++a) {
        auto twice = isotypic_projection(projs[a], parts[a]);
        CHECK(twice.values == projs[a].values);
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            CHECK(inner_product(projs[a], projs[b]) == 0);
    }
}

TEST_CASE("norms and residuals") {
    int n = 4;
    auto one = GroupFunction::constant(n, Rat(1));
    CHECK(norm_sq(one) == 1);
    CHECK(residual_norm_sq(one, 1) == 0);
    CHECK(residual_norm_sq(one, 3) == 0);

    // character functions are fixed by their own projection
    const auto& tab = character_table(n);
    const auto& cls = class_index_table(n);
    for (std::size_t a = 0; a < tab.classes.size(); ++a) {
        GroupFunction f = GroupFunction::zero(n);
        for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = Rat(tab.chi[a][cls[i]]);
        auto p = isotypic_projection(f, tab.classes[a]);
        CHECK(p.values == f.values);
    }
}
