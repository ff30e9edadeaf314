#include "equidiff/eigendim.hpp"

#include <set>
#include <stdexcept>

#include "equidiff/divisor.hpp"

namespace equidiff {

CoverContext::CoverContext(CoverSpec spec)
    : spec_(std::move(spec)), g1_(subgroup_generate(spec_.group, spec_.stab_gens)) {
    node_h_.reserve(spec_.nodes.size());
    for (const auto& o : spec_.nodes)
        node_h_.push_back(subgroup_generate(spec_.group, o.h0_gens).elements());
    inter_h_.reserve(spec_.intersections.size());
    for (const auto& o : spec_.intersections)
        inter_h_.push_back(subgroup_generate(spec_.group, o.h1_gens).elements());
}

namespace {

// The existential selection criterion, scanned over the enumerated coset
// swap + H, exactly as stated: some tau moving the branch with chi(tau) = -1.
bool orbit_selected(const AbelianGroup& g, const Character& chi, const GroupElement& swap,
                    const std::vector<GroupElement>& stabilizer) {
    for (const auto& h : stabilizer)
        if (char_eval(g, chi, g.add(swap, h)).is_half()) return true;
    return false;
}

}  // namespace

std::vector<std::string> singular_chi_set(const CoverContext& ctx, const Character& chi) {
    const CoverSpec& spec = ctx.spec();
    std::vector<std::string> out;
    for (size_t i = 0; i < spec.nodes.size(); ++i)
        if (orbit_selected(spec.group, chi, spec.nodes[i].swap, ctx.node_stabilizer(i)))
            out.push_back(spec.nodes[i].label);
    return out;
}

std::vector<std::string> intersection_chi_set(const CoverContext& ctx, const Character& chi) {
    const CoverSpec& spec = ctx.spec();
    std::vector<std::string> out;
    for (size_t i = 0; i < spec.intersections.size(); ++i)
        if (orbit_selected(spec.group, chi, spec.intersections[i].swap,
                           ctx.intersection_stabilizer(i)))
            out.push_back(spec.intersections[i].label);
    return out;
}

ChiSetResult chi_sets(const CoverContext& ctx, const Character& chi) {
    ChiSetResult r;
    r.selected_nodes = singular_chi_set(ctx, chi);
    r.selected_intersections = intersection_chi_set(ctx, chi);
    r.s = static_cast<long long>(r.selected_nodes.size() + r.selected_intersections.size());
    return r;
}

namespace {

// Quotient labels under the selected orbits.
std::set<std::string> selected_quotients(const CoverSpec& spec, const ChiSetResult& s) {
    std::set<std::string> under;
    std::set<std::string> node_labels(s.selected_nodes.begin(), s.selected_nodes.end());
    std::set<std::string> inter_labels(s.selected_intersections.begin(),
                                       s.selected_intersections.end());
    for (const auto& o : spec.nodes)
        if (node_labels.count(o.label)) under.insert(CoverSpec::quotient_label(o));
    for (const auto& o : spec.intersections)
        if (inter_labels.count(o.label)) under.insert(CoverSpec::quotient_label(o));
    return under;
}

}  // namespace

long long m_chi_closed(const CoverContext& ctx, const Character& chi, const ChiSetResult& s) {
    const CoverSpec& spec = ctx.spec();
    std::set<std::string> under = selected_quotients(spec, s);

    long long indicator_sum = 0;
    Rational pairing_sum(0);
    for (const auto& b : spec.branches) {
        long long a = pairing_a(spec.group, chi, b);
        pairing_sum += Rational(a, b.e);
        if (a != 0 && under.count(b.label) == 0) ++indicator_sum;
    }
    Rational m = Rational(s.s + indicator_sum) - pairing_sum;
    if (!m.is_integer())
        throw std::domain_error("m_chi_closed: non-integer value, branch data is not admissible");
    return m.num();
}

long long m_chi_divisor(const CoverContext& ctx, const Character& chi, const ChiSetResult& s) {
    const CoverSpec& spec = ctx.spec();
    long long n1 = ctx.n1();
    std::set<std::string> under = selected_quotients(spec, s);

    RationalDivisor d;
    Rational b_over_n_sum(0);
    for (const auto& b : spec.branches) {
        Rational b_q(pairing_rgq(spec.group, chi, b, n1), 1);
        b_over_n_sum += b_q * Rational(1, n1);
        Rational coeff = b_q * Rational(1, n1) + Rational(b.e - 1, b.e);
        if (under.count(b.label)) coeff += Rational(1, b.e);
        d.add_term(b.label, coeff);
    }
    // Orbits over unramified quotient points: e_Q = 1, b_Q = 0, so the
    // coefficient is exactly the selection indicator.
    for (const auto& o : spec.nodes)
        if (!o.quotient_branch && under.count(o.label)) d.add_term(o.label, Rational(1));
    for (const auto& o : spec.intersections)
        if (!o.quotient_branch && under.count(o.label)) d.add_term(o.label, Rational(1));

    Rational m = deg(floor_div(d)) - b_over_n_sum;
    if (!m.is_integer())
        throw std::domain_error("m_chi_divisor: non-integer value, branch data is not admissible");
    return m.num();
}

int delta_chi(const CoverContext& ctx, const Character& chi) {
    if (!intersection_chi_set(ctx, chi).empty()) return 0;
    return char_restrict_is_trivial(ctx.spec().group, chi, ctx.g1()) ? 1 : 0;
}

long long dim_irreducible(const CoverContext& ctx, const Character& chi) {
    const CoverSpec& spec = ctx.spec();
    if (spec.component_count != 1)
        throw std::invalid_argument("dim_irreducible: cover has several components");
    ChiSetResult s = chi_sets(ctx, chi);
    long long trivial_pairing = chi.is_trivial() ? 1 : 0;
    return spec.quotient_genus - 1 + m_chi_closed(ctx, chi, s) + trivial_pairing;
}

long long dim_connected(const CoverContext& ctx, const Character& chi) {
    const CoverSpec& spec = ctx.spec();
    ChiSetResult s = chi_sets(ctx, chi);
    return spec.quotient_genus - 1 + m_chi_closed(ctx, chi, s) + delta_chi(ctx, chi);
}

std::vector<std::string> singular_chi_set(const CoverSpec& spec, const Character& chi) {
    return singular_chi_set(CoverContext(spec), chi);
}
std::vector<std::string> intersection_chi_set(const CoverSpec& spec, const Character& chi) {
    return intersection_chi_set(CoverContext(spec), chi);
}
long long m_chi_closed(const CoverSpec& spec, const Character& chi, const ChiSetResult& s) {
    return m_chi_closed(CoverContext(spec), chi, s);
}
long long m_chi_divisor(const CoverSpec& spec, const Character& chi, const ChiSetResult& s) {
    return m_chi_divisor(CoverContext(spec), chi, s);
}
int delta_chi(const CoverSpec& spec, const Character& chi) {
    return delta_chi(CoverContext(spec), chi);
}
long long dim_irreducible(const CoverSpec& spec, const Character& chi) {
    return dim_irreducible(CoverContext(spec), chi);
}
long long dim_connected(const CoverSpec& spec, const Character& chi) {
    return dim_connected(CoverContext(spec), chi);
}

}  // namespace equidiff
