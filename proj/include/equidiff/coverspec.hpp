// The combinatorial description of a G-cover of a connected nodal curve X
// with smooth quotient Y = X/G.
//
// All ramification and node data live on a distinguished irreducible
// component X1 and its normalization's cover of Y by the component
// stabilizer G1 (the other components are carried around by G). Internal
// node orbits record the common stabilizer H0 of both node branches and an
// element swapping them; intersection orbits (nodes joining distinct
// components) record the branch stabilizer H1 inside G1 and a swapping
// element outside G1.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equidiff/abgroup.hpp"
#include "equidiff/ramification.hpp"

namespace equidiff {

// A G1-orbit of nodes internal to one component. quotient_branch names the
// branch point under the orbit, or is empty when the orbit sits over an
// unramified quotient point (which is then labelled by the orbit itself).
struct NodeOrbit {
    std::string label;
    std::optional<std::string> quotient_branch;
    std::vector<GroupElement> h0_gens;  // generate H0, the stabilizer of each node branch
    GroupElement swap;                  // in G1 - H0, exchanges the two branches; 2*swap in H0

    friend bool operator==(const NodeOrbit&, const NodeOrbit&) = default;
};

// A G-orbit of nodes where two distinct components meet.
struct IntersectionOrbit {
    std::string label;
    std::optional<std::string> quotient_branch;
    std::vector<GroupElement> h1_gens;  // generate H1 = G_P intersect G1
    GroupElement swap;                  // in G - G1, exchanges the two component branches

    friend bool operator==(const IntersectionOrbit&, const IntersectionOrbit&) = default;
};

struct CoverSpec {
    AbelianGroup group;        // G
    long long quotient_genus = 0;   // g_Y, Y smooth
    long long component_count = 1;  // d
    std::vector<GroupElement> stab_gens;  // generate G1, [G : G1] = d
    std::vector<BranchPoint> branches;    // branch points of the component cover
    std::vector<NodeOrbit> nodes;
    std::vector<IntersectionOrbit> intersections;

    // Label of the quotient point under an orbit.
    static const std::string& quotient_label(const NodeOrbit& o) {
        return o.quotient_branch ? *o.quotient_branch : o.label;
    }
    static const std::string& quotient_label(const IntersectionOrbit& o) {
        return o.quotient_branch ? *o.quotient_branch : o.label;
    }

    friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

struct Violation {
    std::string code;   // machine-readable, kebab-case
    std::string label;  // offending branch/orbit label, or "" for global
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

// Checks every structural invariant plus admissibility and Riemann-Hurwitz
// feasibility. Empty result iff valid. Violations are data, not failures;
// the list is sorted, so it is insensitive to permutations of the input
// lists. Dependent checks are suppressed when their prerequisites failed
// (e.g. no Riemann-Hurwitz report for inadmissible branch data).
std::vector<Violation> validate(const CoverSpec& spec);

// Genus of the normalization of one component, from Riemann-Hurwitz:
// 2g - 2 = n1(2g_Y - 2) + sum_Q (n1/e_Q)(e_Q - 1).
// Throws std::domain_error on parity or negativity failure.
long long genus_normalization(const CoverSpec& spec);

// Total number of nodes: d*n1/(2|H0|) per node orbit, n/(2|H1|) per
// intersection orbit (orbit-stabilizer counting; each node has two branches).
long long node_count_total(const CoverSpec& spec);

// p_a = d*g(normalization) + #nodes - d + 1 for a connected nodal curve.
long long arithmetic_genus(const CoverSpec& spec);

}  // namespace equidiff
