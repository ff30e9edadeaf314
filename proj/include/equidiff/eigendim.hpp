// The chi-set computations and the two Chevalley-Weil dimension formulas.
//
// For a 1-dimensional character chi of G, the multiplicity of chi in the
// holomorphic differentials of the cover X is
//
//     dim = g_Y - 1 + m_{chi1}(S) + delta_chi,
//
// where chi1 is the restriction of chi to the component stabilizer G1, S is
// the union of the singular chi-set (internal node orbits where a
// chi-eigendifferential may keep a simple pole) and the chi-selected
// intersection orbits, m is the degree of a floored divisor on the quotient,
// and delta_chi is 1 exactly when chi1 is trivial and no intersection orbit
// is selected.
//
// m is computed along two deliberately different routes: a closed form over
// the branch pairings, and a literal rational-divisor construction that is
// floored and summed. Their agreement is a theorem and is re-verified by the
// CLI self-check and the test suite on every run.

#pragma once

#include <string>
#include <vector>

#include "equidiff/coverspec.hpp"

namespace equidiff {

// Selected orbits for one character. s is the number of quotient points under
// the union (= selected orbit count, one orbit per quotient point).
struct ChiSetResult {
    std::vector<std::string> selected_nodes;
    std::vector<std::string> selected_intersections;
    long long s = 0;
};

// A cover description together with the caches shared across per-character
// evaluations: the component stabilizer and the enumerated branch stabilizers
// of every orbit. The description is held by value (a handful of short
// vectors), so a context never dangles. Queries on a context are pure; one
// context can serve concurrent character evaluations.
class CoverContext {
public:
    explicit CoverContext(CoverSpec spec);

    const CoverSpec& spec() const { return spec_; }
    const Subgroup& g1() const { return g1_; }
    long long n1() const { return g1_.order(); }
    const std::vector<GroupElement>& node_stabilizer(size_t i) const { return node_h_[i]; }
    const std::vector<GroupElement>& intersection_stabilizer(size_t i) const { return inter_h_[i]; }

private:
    CoverSpec spec_;
    Subgroup g1_;
    std::vector<std::vector<GroupElement>> node_h_;
    std::vector<std::vector<GroupElement>> inter_h_;
};

// Labels of node orbits in the singular chi-set: an orbit is selected iff
// some element of swap + H0 takes chi-value -1 (= 1/2 in Q/Z).
std::vector<std::string> singular_chi_set(const CoverContext& ctx, const Character& chi);
std::vector<std::string> singular_chi_set(const CoverSpec& spec, const Character& chi);

// Same criterion on intersection orbits, scanning swap + H1 (swap outside G1).
std::vector<std::string> intersection_chi_set(const CoverContext& ctx, const Character& chi);
std::vector<std::string> intersection_chi_set(const CoverSpec& spec, const Character& chi);

ChiSetResult chi_sets(const CoverContext& ctx, const Character& chi);

// m via the closed form:
//   m = s + #{branch Q not under S with a_Q != 0} - sum_Q a_Q / e_Q.
long long m_chi_closed(const CoverContext& ctx, const Character& chi, const ChiSetResult& s);
long long m_chi_closed(const CoverSpec& spec, const Character& chi, const ChiSetResult& s);

// m via the divisor route: assemble the rational divisor with coefficient
//   [under S]/e_Q + b_Q/n1 + (e_Q - 1)/e_Q
// at each quotient label, floor it, take the degree, subtract sum_Q b_Q/n1.
long long m_chi_divisor(const CoverContext& ctx, const Character& chi, const ChiSetResult& s);
long long m_chi_divisor(const CoverSpec& spec, const Character& chi, const ChiSetResult& s);

// 1 iff the chi-selected intersection set is empty and chi restricts
// trivially to G1; else 0.
int delta_chi(const CoverContext& ctx, const Character& chi);
int delta_chi(const CoverSpec& spec, const Character& chi);

// Multiplicity formula for a one-component curve (throws if d > 1):
//   dim = g_Y - 1 + m_chi(singular chi-set) + <chi, 1_G>.
long long dim_irreducible(const CoverContext& ctx, const Character& chi);
long long dim_irreducible(const CoverSpec& spec, const Character& chi);

// Multiplicity formula for any connected cover; equals dim_irreducible when
// d = 1.
long long dim_connected(const CoverContext& ctx, const Character& chi);
long long dim_connected(const CoverSpec& spec, const Character& chi);

}  // namespace equidiff
