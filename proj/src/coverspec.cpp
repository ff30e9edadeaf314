#include "equidiff/coverspec.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace equidiff {

namespace {

bool subgroup_equals(const Subgroup& a, const Subgroup& b) {
    return a.elements() == b.elements();
}

// H0 union (swap + H0) must be a subgroup of order 2|H0|: swap outside H0,
// twice swap inside.
template <typename Orbit>
void check_swap(const AbelianGroup& g, const Orbit& orbit, const Subgroup& stab,
                std::vector<Violation>& out) {
    if (stab.contains(orbit.swap))
        out.push_back({"swap-fixes-branches", orbit.label,
                       "swap element lies in the branch stabilizer, so it cannot exchange the branches"});
    if (!stab.contains(g.add(orbit.swap, orbit.swap)))
        out.push_back({"swap-square-outside-stabilizer", orbit.label,
                       "twice the swap element must lie in the branch stabilizer"});
}

template <typename Orbit>
void check_quotient_consistency(const AbelianGroup& g, const Orbit& orbit, const Subgroup& stab,
                                const std::vector<BranchPoint>& branches,
                                std::vector<Violation>& out) {
    if (!orbit.quotient_branch) {
        if (stab.order() != 1)
            out.push_back({"stabilizer-mismatch", orbit.label,
                           "orbit over an unramified point must have trivial branch stabilizer"});
        return;
    }
    auto it = std::find_if(branches.begin(), branches.end(),
                           [&](const BranchPoint& b) { return b.label == *orbit.quotient_branch; });
    if (it == branches.end()) {
        out.push_back({"unknown-quotient", orbit.label,
                       "orbit references branch point '" + *orbit.quotient_branch + "' which does not exist"});
        return;
    }
    Subgroup expected = subgroup_generate(g, {it->stab_gen});
    if (!subgroup_equals(stab, expected))
        out.push_back({"stabilizer-mismatch", orbit.label,
                       "orbit branch stabilizer differs from the stabilizer of branch point '" +
                           it->label + "'"});
}

}  // namespace

std::vector<Violation> validate(const CoverSpec& spec) {
    std::vector<Violation> out;
    const AbelianGroup& g = spec.group;
    long long n = g.order();

    auto flag = [&](std::string code, std::string label, std::string message) {
        out.push_back({std::move(code), std::move(label), std::move(message)});
    };

    if (spec.component_count < 1 || n % spec.component_count != 0) {
        flag("component-index", "", "component count must be a positive divisor of the group order");
        std::sort(out.begin(), out.end());
        return out;
    }

    for (const auto& x : spec.stab_gens)
        if (!g.contains(x)) {
            flag("component-index", "", "component stabilizer generator outside the group");
            std::sort(out.begin(), out.end());
            return out;
        }

    Subgroup g1 = subgroup_generate(g, spec.stab_gens);
    long long n1 = n / spec.component_count;
    if (g1.order() != n1)
        flag("component-index", "",
             "component stabilizer has index " + std::to_string(n / g1.order()) +
                 " but component count is " + std::to_string(spec.component_count));

    // Label namespace: every branch point and orbit label is distinct.
    std::set<std::string> labels;
    auto claim_label = [&](const std::string& label) {
        if (!labels.insert(label).second)
            flag("duplicate-label", label, "label used more than once");
    };
    for (const auto& b : spec.branches) claim_label(b.label);
    for (const auto& o : spec.nodes) claim_label(o.label);
    for (const auto& o : spec.intersections) claim_label(o.label);

    bool branches_ok = true;
    for (const auto& b : spec.branches) {
        if (!g.contains(b.stab_gen)) {
            flag("branch-outside-component", b.label, "stabilizer generator outside the group");
            branches_ok = false;
            continue;
        }
        long long e = element_order(g, b.stab_gen);
        if (e < 2) {
            flag("branch-unramified", b.label, "stabilizer generator is the identity");
            branches_ok = false;
        }
        if (b.e != e) {
            flag("branch-order", b.label, "stored ramification index differs from the generator order");
            branches_ok = false;
        }
        if (b.theta_exp < 0 || b.theta_exp >= e) {
            flag("theta-range", b.label, "theta exponent out of range [0, e)");
            branches_ok = false;
        } else if (std::gcd(b.theta_exp, e) != 1) {
            flag("theta-not-faithful", b.label, "theta exponent not coprime to the ramification index");
            branches_ok = false;
        }
        if (!g1.contains(b.stab_gen)) {
            flag("branch-outside-component", b.label,
                 "stabilizer generator lies outside the component stabilizer");
            branches_ok = false;
        }
    }

    // One orbit per quotient point: node fibers are filled entirely by the
    // orbit's preimages, so a second orbit over the same point cannot exist.
    std::set<std::string> occupied;
    auto claim_quotient = [&](const std::string& qlabel, const std::string& orbit_label) {
        if (!occupied.insert(qlabel).second)
            flag("fiber-occupancy", orbit_label,
                 "quotient point '" + qlabel + "' already carries another orbit");
    };

    for (const auto& o : spec.nodes) {
        bool members_ok = g.contains(o.swap);
        for (const auto& x : o.h0_gens) members_ok = members_ok && g.contains(x);
        if (!members_ok) {
            flag("node-outside-component", o.label, "node data uses elements outside the group");
            continue;
        }
        Subgroup h0 = subgroup_generate(g, o.h0_gens);
        if (!g1.contains(o.swap) ||
            !std::all_of(o.h0_gens.begin(), o.h0_gens.end(),
                         [&](const GroupElement& x) { return g1.contains(x); }))
            flag("node-outside-component", o.label,
                 "internal node data must lie in the component stabilizer");
        check_swap(g, o, h0, out);
        check_quotient_consistency(g, o, h0, spec.branches, out);
        claim_quotient(CoverSpec::quotient_label(o), o.label);
    }

    for (const auto& o : spec.intersections) {
        bool members_ok = g.contains(o.swap);
        for (const auto& x : o.h1_gens) members_ok = members_ok && g.contains(x);
        if (!members_ok) {
            flag("node-outside-component", o.label, "intersection data uses elements outside the group");
            continue;
        }
        Subgroup h1 = subgroup_generate(g, o.h1_gens);
        if (g1.contains(o.swap))
            flag("intersection-swap-in-component", o.label,
                 "intersection swap must move the component, i.e. lie outside the component stabilizer");
        if (!std::all_of(o.h1_gens.begin(), o.h1_gens.end(),
                         [&](const GroupElement& x) { return g1.contains(x); }))
            flag("node-outside-component", o.label,
                 "intersection branch stabilizer must lie in the component stabilizer");
        check_swap(g, o, h1, out);
        check_quotient_consistency(g, o, h1, spec.branches, out);
        claim_quotient(CoverSpec::quotient_label(o), o.label);
    }

    if (spec.component_count == 1) {
        if (!spec.intersections.empty())
            flag("intersection-on-irreducible", spec.intersections.front().label,
                 "a one-component curve has no intersection orbits");
    } else {
        std::vector<GroupElement> gens = spec.stab_gens;
        for (const auto& o : spec.intersections)
            if (g.contains(o.swap)) gens.push_back(o.swap);
        if (std::all_of(gens.begin(), gens.end(),
                        [&](const GroupElement& x) { return g.contains(x); }) &&
            !subgroup_generate(g, gens).is_whole_group())
            flag("disconnected", "",
                 "component stabilizer and intersection swaps generate a proper subgroup; the curve is not connected");
    }

    // Dependent checks, run only on structurally sound branch data.
    if (branches_ok && g1.order() == n1) {
        // Over a genus-0 quotient the branch monodromies h_Q = t_Q^{-1} g_Q
        // alone must generate G1, or the normalization of the component would
        // be disconnected; positive genus supplies free handle monodromies.
        if (spec.quotient_genus == 0) {
            std::vector<GroupElement> monodromies;
            for (const auto& b : spec.branches)
                monodromies.push_back(g.scale(mod_inverse(b.theta_exp, b.e), b.stab_gen));
            if (subgroup_generate(g, monodromies).order() != n1)
                flag("normalization-disconnected", "",
                     "branch monodromies generate a proper subgroup of the component stabilizer "
                     "over a genus-0 quotient");
        }
        AdmissibilityResult adm = admissibility_check(g1, spec.branches);
        if (!adm.ok) {
            Character chi = adm.violating_chi;
            std::string tuple;
            for (size_t i = 0; i < chi.coords.size(); ++i)
                tuple += (i ? "," : "") + std::to_string(chi.coords[i]);
            flag("admissibility", "",
                 "branch pairings do not sum to 0 mod n1 for character (" + tuple + ")");
        } else {
            long long rh = n1 * (2 * spec.quotient_genus - 2);
            for (const auto& b : spec.branches) rh += (n1 / b.e) * (b.e - 1);
            if (rh % 2 != 0 || rh / 2 + 1 < 0)
                flag("riemann-hurwitz", "",
                     "branch data is not Riemann-Hurwitz feasible over the given quotient genus");
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long genus_normalization(const CoverSpec& spec) {
    long long n1 = spec.group.order() / spec.component_count;
    long long rh = n1 * (2 * spec.quotient_genus - 2);
    for (const auto& b : spec.branches) rh += (n1 / b.e) * (b.e - 1);
    if (rh % 2 != 0)
        throw std::domain_error("genus_normalization: Riemann-Hurwitz parity failure");
    long long genus = rh / 2 + 1;
    if (genus < 0)
        throw std::domain_error("genus_normalization: negative genus");
    return genus;
}

long long node_count_total(const CoverSpec& spec) {
    const AbelianGroup& g = spec.group;
    long long n = g.order();
    long long total = 0;
    for (const auto& o : spec.nodes) {
        long long h0 = subgroup_generate(g, o.h0_gens).order();
        if (n % (2 * h0) != 0)
            throw std::domain_error("node_count_total: orbit size not integral");
        total += n / (2 * h0);  // d * n1 / (2|H0|)
    }
    for (const auto& o : spec.intersections) {
        long long h1 = subgroup_generate(g, o.h1_gens).order();
        if (n % (2 * h1) != 0)
            throw std::domain_error("node_count_total: orbit size not integral");
        total += n / (2 * h1);
    }
    return total;
}

long long arithmetic_genus(const CoverSpec& spec) {
    return spec.component_count * genus_normalization(spec) + node_count_total(spec) -
           spec.component_count + 1;
}

}  // namespace equidiff
