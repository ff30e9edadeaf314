#include <algorithm>
#include <random>

#include "builders.hpp"
#include "doctest.h"
#include "equidiff/coverspec.hpp"

using namespace equidiff;
using namespace equidiff::testing;

namespace {

bool has_code(const std::vector<Violation>& vs, const std::string& code) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("the golden covers validate cleanly") {
    CHECK(validate(hyperelliptic_spec(2, 1)).empty());
    CHECK(validate(two_lines_spec(5)).empty());
    CHECK(validate(cyclic4_node_spec()).empty());
}

TEST_CASE("swap inside the branch stabilizer is rejected") {
    AbelianGroup z2({2});
    CoverSpec spec{z2, 1, 1, {z2.element({1})}, {}, {}, {}};
    spec.nodes.push_back(NodeOrbit{"N1", std::nullopt, {}, z2.element({0})});
    auto vs = validate(spec);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].code == "swap-fixes-branches");
    CHECK(vs[0].label == "N1");
}

TEST_CASE("odd hyperelliptic branch data fails admissibility alone") {
    AbelianGroup z2({2});
    CoverSpec spec{z2, 0, 1, {z2.element({1})}, {}, {}, {}};
    for (int i = 0; i < 3; ++i)
        spec.branches.push_back(make_branch_point(z2, "Q" + std::to_string(i), z2.element({1}), 1));
    auto vs = validate(spec);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].code == "admissibility");
}

TEST_CASE("structural violations carry their documented codes") {
    AbelianGroup z4({4});

    SUBCASE("theta not coprime") {
        CoverSpec spec{z4, 0, 1, {z4.element({1})}, {}, {}, {}};
        spec.branches.push_back(BranchPoint{"Q1", z4.element({1}), 4, 2});
        CHECK(has_code(validate(spec), "theta-not-faithful"));
    }
    SUBCASE("theta out of range") {
        CoverSpec spec{z4, 0, 1, {z4.element({1})}, {}, {}, {}};
        spec.branches.push_back(BranchPoint{"Q1", z4.element({1}), 4, 7});
        CHECK(has_code(validate(spec), "theta-range"));
    }
    SUBCASE("identity generator") {
        CoverSpec spec{z4, 0, 1, {z4.element({1})}, {}, {}, {}};
        spec.branches.push_back(BranchPoint{"Q1", z4.element({0}), 1, 0});
        CHECK(has_code(validate(spec), "branch-unramified"));
    }
    SUBCASE("stored index disagrees with the generator order") {
        CoverSpec spec{z4, 0, 1, {z4.element({1})}, {}, {}, {}};
        spec.branches.push_back(BranchPoint{"Q1", z4.element({1}), 2, 1});
        CHECK(has_code(validate(spec), "branch-order"));
    }
    SUBCASE("component count does not match the stabilizer index") {
        CoverSpec spec{z4, 0, 2, {z4.element({1})}, {}, {}, {}};
        CHECK(has_code(validate(spec), "component-index"));
    }
    SUBCASE("intersections on an irreducible curve") {
        CoverSpec spec{z4, 0, 1, {z4.element({1})}, {}, {}, {}};
        spec.intersections.push_back(IntersectionOrbit{"I1", std::nullopt, {}, z4.element({2})});
        CHECK(has_code(validate(spec), "intersection-on-irreducible"));
    }
    SUBCASE("duplicate labels") {
        CoverSpec spec{z4, 0, 1, {z4.element({1})}, {}, {}, {}};
        spec.branches.push_back(make_branch_point(z4, "Q1", z4.element({2}), 1));
        spec.nodes.push_back(NodeOrbit{"Q1", std::nullopt, {}, z4.element({2})});
        CHECK(has_code(validate(spec), "duplicate-label"));
    }
    SUBCASE("swap square outside the stabilizer") {
        AbelianGroup z8({8});
        CoverSpec spec{z8, 1, 1, {z8.element({1})}, {}, {}, {}};
        spec.nodes.push_back(NodeOrbit{"N1", std::nullopt, {}, z8.element({2})});
        CHECK(has_code(validate(spec), "swap-square-outside-stabilizer"));
    }
    SUBCASE("node stabilizer must match the branch stabilizer") {
        CoverSpec spec = cyclic4_node_spec();
        spec.nodes[0].h0_gens = {};  // claims trivial H0 over an e = 2 branch point
        CHECK(has_code(validate(spec), "stabilizer-mismatch"));
    }
    SUBCASE("orbit over a missing branch label") {
        CoverSpec spec = cyclic4_node_spec();
        spec.nodes[0].quotient_branch = "nowhere";
        CHECK(has_code(validate(spec), "unknown-quotient"));
    }
}

TEST_CASE("two orbits over one quotient point are rejected") {
    CoverSpec spec = cyclic4_node_spec();
    AbelianGroup z4 = spec.group;
    spec.nodes.push_back(NodeOrbit{"N2", "B3", {z4.element({2})}, z4.element({1})});
    CHECK(has_code(validate(spec), "fiber-occupancy"));
}

TEST_CASE("genus-0 data whose monodromies undershoot the stabilizer is rejected") {
    // Branch data trivial on a direct factor: the normalization would split.
    AbelianGroup g({6, 4});
    CoverSpec spec{g, 0, 1, {g.element({1, 0}), g.element({0, 1})}, {}, {}, {}};
    spec.branches.push_back(make_branch_point(g, "Q1", g.element({1, 2}), 1));
    spec.branches.push_back(make_branch_point(g, "Q2", g.element({5, 0}), 1));
    spec.branches.push_back(make_branch_point(g, "Q3", g.element({0, 2}), 1));
    auto vs = validate(spec);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].code == "normalization-disconnected");

    spec.quotient_genus = 1;  // handles may complete the monodromy
    CHECK(validate(spec).empty());
}

TEST_CASE("a d=2 spec without swaps is disconnected") {
    AbelianGroup z2({2});
    CoverSpec spec{z2, 1, 2, {}, {}, {}, {}};
    auto vs = validate(spec);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].code == "disconnected");
}

TEST_CASE("intersection swap inside the component stabilizer is rejected") {
    CoverSpec spec = two_lines_spec(3);
    spec.stab_gens = {spec.group.element({1})};  // G1 = G, but d stays 2
    auto vs = validate(spec);
    CHECK(has_code(vs, "component-index"));
    CHECK(has_code(vs, "intersection-swap-in-component"));
}

TEST_CASE("validation is insensitive to list order") {
    std::mt19937 rng(17);
    CoverSpec spec = hyperelliptic_spec(2, 3);
    spec.branches.pop_back();  // inadmissible: odd branch count
    auto base = validate(spec);
    for (int trial = 0; trial < 10; ++trial) {
        CoverSpec shuffled = spec;
        std::shuffle(shuffled.branches.begin(), shuffled.branches.end(), rng);
        std::shuffle(shuffled.nodes.begin(), shuffled.nodes.end(), rng);
        CHECK(validate(shuffled) == base);
    }
}

TEST_CASE("genus_normalization examples") {
    for (long long g = 0; g <= 4; ++g) CHECK(genus_normalization(hyperelliptic_spec(g, 1)) == g);

    AbelianGroup z1({1});
    CoverSpec identity_cover{z1, 0, 1, {z1.element({0})}, {}, {}, {}};
    CHECK(genus_normalization(identity_cover) == 0);

    AbelianGroup z3({3});
    CoverSpec cyclic{z3, 0, 1, {z3.element({1})}, {}, {}, {}};
    for (int i = 0; i < 5; ++i)
        cyclic.branches.push_back(make_branch_point(z3, "Q" + std::to_string(i), z3.element({1}), 1));
    CHECK(genus_normalization(cyclic) == 3);  // 2g - 2 = 3(-2) + 5*2

    CoverSpec infeasible{z3, 0, 1, {z3.element({1})}, {}, {}, {}};
    CHECK_THROWS_AS(genus_normalization(infeasible), std::domain_error);  // genus would be -2
}

TEST_CASE("node counting follows orbit sizes") {
    for (long long n_nodes = 0; n_nodes <= 4; ++n_nodes)
        CHECK(node_count_total(hyperelliptic_spec(1, n_nodes)) == n_nodes);
    CHECK(node_count_total(hyperelliptic_spec(3, 0)) == 0);
    for (long long m = 3; m <= 6; ++m) CHECK(node_count_total(two_lines_spec(m)) == m);
    CHECK(node_count_total(cyclic4_node_spec()) == 1);
}

TEST_CASE("arithmetic genus examples") {
    CHECK(arithmetic_genus(hyperelliptic_spec(2, 3)) == 5);  // g + N
    CHECK(arithmetic_genus(hyperelliptic_spec(4, 0)) == 4);  // smooth case
    for (long long m = 3; m <= 8; ++m) CHECK(arithmetic_genus(two_lines_spec(m)) == m - 1);
    CHECK(arithmetic_genus(cyclic4_node_spec()) == 2);
}

TEST_CASE("generated random specs validate cleanly") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        CoverSpec spec = random_cover_spec(rng);
        auto vs = validate(spec);
        CAPTURE(trial);
        if (!vs.empty()) CAPTURE(vs[0].code + ":" + vs[0].label + ":" + vs[0].message);
        CHECK(vs.empty());
    }
}
