#include <numeric>
#include <random>

#include "builders.hpp"
#include "doctest.h"
#include "equidiff/eigendim.hpp"

using namespace equidiff;
using namespace equidiff::testing;

TEST_CASE("singular chi-set on the hyperelliptic covers") {
    for (long long g = 0; g <= 3; ++g) {
        for (long long n_nodes = 1; n_nodes <= 3; ++n_nodes) {
            CoverSpec spec = hyperelliptic_spec(g, n_nodes);
            CoverContext ctx(spec);
            Character minus = spec.group.character({1});
            CHECK(singular_chi_set(ctx, minus).size() == static_cast<size_t>(n_nodes));
            CHECK(singular_chi_set(ctx, spec.group.character({0})).empty());
        }
    }
}

TEST_CASE("singular chi-set scans the whole swap coset") {
    AbelianGroup z4({4});
    CoverSpec spec{z4, 1, 1, {z4.element({1})}, {}, {}, {}};
    spec.nodes.push_back(NodeOrbit{"N1", std::nullopt, {z4.element({2})}, z4.element({1})});
    // Not a branch-consistent spec (H0 over a smooth point), but the
    // selection rule itself only needs the coset swap + H0.
    CoverContext ctx(spec);
    CHECK(singular_chi_set(ctx, z4.character({1})).empty());  // values 1/4, 3/4
    CHECK(singular_chi_set(ctx, z4.character({2})) == std::vector<std::string>{"N1"});
}

TEST_CASE("intersection chi-set examples") {
    CoverSpec lines = two_lines_spec(4);
    CoverContext ctx(lines);
    CHECK(intersection_chi_set(ctx, lines.group.character({1})).size() == 4);
    CHECK(intersection_chi_set(ctx, lines.group.character({0})).empty());

    AbelianGroup v4({2, 2});
    CoverSpec spec{v4, 0, 2, {v4.element({1, 0})}, {}, {}, {}};
    spec.intersections.push_back(IntersectionOrbit{"I1", std::nullopt, {}, v4.element({0, 1})});
    CoverContext vctx(spec);
    CHECK(intersection_chi_set(vctx, v4.character({1, 0})).empty());  // chi((0,1)) = 0
    CHECK(intersection_chi_set(vctx, v4.character({0, 1})) == std::vector<std::string>{"I1"});
}

TEST_CASE("m_chi on the worked hyperelliptic covers") {
    for (long long g = 0; g <= 3; ++g) {
        for (long long n_nodes = 1; n_nodes <= 3; ++n_nodes) {
            CoverSpec spec = hyperelliptic_spec(g, n_nodes);
            CoverContext ctx(spec);
            Character minus = spec.group.character({1});
            ChiSetResult s = chi_sets(ctx, minus);
            CHECK(s.s == n_nodes);
            // N + (2g+2) - (g+1) = p_a + 1
            CHECK(m_chi_closed(ctx, minus, s) == arithmetic_genus(spec) + 1);

            Character trivial = spec.group.character({0});
            ChiSetResult st = chi_sets(ctx, trivial);
            CHECK(st.s == 0);
            CHECK(m_chi_closed(ctx, trivial, st) == 0);
        }
    }
}

TEST_CASE("m_chi on the two-lines covers") {
    for (long long m = 3; m <= 6; ++m) {
        CoverSpec spec = two_lines_spec(m);
        CoverContext ctx(spec);
        Character minus = spec.group.character({1});
        ChiSetResult s = chi_sets(ctx, minus);
        CHECK(m_chi_closed(ctx, minus, s) == m);
        CHECK(m_chi_divisor(ctx, minus, s) == m);
    }
}

TEST_CASE("both m routes agree on the goldens and on random covers") {
    std::vector<CoverSpec> specs{hyperelliptic_spec(2, 1), two_lines_spec(5), cyclic4_node_spec()};
    std::mt19937 rng(29);
    for (int i = 0; i < 30; ++i) specs.push_back(random_cover_spec(rng));
    for (const CoverSpec& spec : specs) {
        CoverContext ctx(spec);
        for (const Character& chi : characters_all(spec.group)) {
            ChiSetResult s = chi_sets(ctx, chi);
            CHECK(m_chi_closed(ctx, chi, s) == m_chi_divisor(ctx, chi, s));
        }
    }
}

TEST_CASE("inadmissible branch data is caught by the integrality check") {
    AbelianGroup z2({2});
    CoverSpec spec{z2, 0, 1, {z2.element({1})}, {}, {}, {}};
    for (int i = 0; i < 3; ++i)
        spec.branches.push_back(make_branch_point(z2, "Q" + std::to_string(i), z2.element({1}), 1));
    CoverContext ctx(spec);
    Character minus = z2.character({1});
    ChiSetResult s = chi_sets(ctx, minus);
    CHECK_THROWS_AS(m_chi_closed(ctx, minus, s), std::domain_error);
    CHECK_THROWS_AS(m_chi_divisor(ctx, minus, s), std::domain_error);
}

TEST_CASE("delta_chi examples") {
    CoverSpec lines = two_lines_spec(3);
    CHECK(delta_chi(lines, lines.group.character({0})) == 1);
    CHECK(delta_chi(lines, lines.group.character({1})) == 0);  // selected intersections

    CoverSpec hyper = hyperelliptic_spec(1, 1);
    CHECK(delta_chi(hyper, hyper.group.character({0})) == 1);
    CHECK(delta_chi(hyper, hyper.group.character({1})) == 0);  // chi_1 nontrivial on G1 = G
}

TEST_CASE("dim_irreducible on the hyperelliptic family") {
    for (long long g = 0; g <= 5; ++g) {
        for (long long n_nodes = 1; n_nodes <= 5; ++n_nodes) {
            CoverSpec spec = hyperelliptic_spec(g, n_nodes);
            CoverContext ctx(spec);
            CHECK(dim_irreducible(ctx, spec.group.character({1})) == g + n_nodes);
            CHECK(dim_irreducible(ctx, spec.group.character({0})) == 0);
        }
    }
    CHECK_THROWS_AS(dim_irreducible(two_lines_spec(3), AbelianGroup({2}).character({0})),
                    std::invalid_argument);
}

TEST_CASE("dim_connected on the two-lines family") {
    for (long long m = 3; m <= 10; ++m) {
        CoverSpec spec = two_lines_spec(m);
        CoverContext ctx(spec);
        CHECK(dim_connected(ctx, spec.group.character({1})) == m - 1);
        CHECK(dim_connected(ctx, spec.group.character({0})) == 0);
    }
}

TEST_CASE("cyclic4 cover dimension table") {
    CoverSpec spec = cyclic4_node_spec();
    CoverContext ctx(spec);
    std::vector<long long> dims;
    for (const Character& chi : characters_all(spec.group)) dims.push_back(dim_connected(ctx, chi));
    CHECK(dims == std::vector<long long>{0, 1, 1, 0});
    CHECK(std::accumulate(dims.begin(), dims.end(), 0LL) == arithmetic_genus(spec));
}

TEST_CASE("trivial character always computes the quotient genus") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        CoverSpec spec = random_cover_spec(rng);
        Character trivial = characters_all(spec.group).front();
        CHECK(dim_connected(spec, trivial) == spec.quotient_genus);
    }
}

TEST_CASE("connected formula restricts to the irreducible one when d = 1") {
    std::mt19937 rng(37);
    int done = 0;
    while (done < 25) {
        CoverSpec spec = random_cover_spec(rng);
        if (spec.component_count != 1) continue;
        ++done;
        CoverContext ctx(spec);
        for (const Character& chi : characters_all(spec.group))
            CHECK(dim_connected(ctx, chi) == dim_irreducible(ctx, chi));
    }
}

TEST_CASE("removing a node orbit does not disturb the other selections") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 20) {
        CoverSpec spec = random_cover_spec(rng);
        if (spec.nodes.size() < 2) continue;
        ++done;
        CoverContext full(spec);
        for (const Character& chi : characters_all(spec.group)) {
            auto selected = singular_chi_set(full, chi);
            CoverSpec pruned = spec;
            std::string removed = pruned.nodes.back().label;
            pruned.nodes.pop_back();
            auto pruned_selected = singular_chi_set(CoverContext(pruned), chi);
            std::erase(selected, removed);
            CHECK(selected == pruned_selected);
        }
    }
}
