#include "equidiff/abgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace equidiff {

AbelianGroup::AbelianGroup(std::vector<long long> invariants, long long order_bound)
    : invariants_(std::move(invariants)) {
    __int128 n = 1;
    for (long long m : invariants_) {
        if (m < 1) throw std::invalid_argument("AbelianGroup: invariant factors must be >= 1");
        n *= m;
        if (n > order_bound)
            throw std::length_error("AbelianGroup: order exceeds the configured bound");
    }
    order_ = static_cast<long long>(n);
}

GroupElement AbelianGroup::element(std::vector<long long> coords) const {
    if (coords.size() != rank())
        throw std::invalid_argument("AbelianGroup: coordinate arity mismatch");
    for (size_t i = 0; i < coords.size(); ++i) {
        long long m = invariants_[i];
        coords[i] %= m;
        if (coords[i] < 0) coords[i] += m;
    }
    return GroupElement{std::move(coords)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (a.coords.size() != rank() || b.coords.size() != rank())
        throw std::invalid_argument("AbelianGroup: coordinate arity mismatch");
    std::vector<long long> c(rank());
    for (size_t i = 0; i < rank(); ++i) c[i] = (a.coords[i] + b.coords[i]) % invariants_[i];
    return GroupElement{std::move(c)};
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    std::vector<long long> c(rank());
    for (size_t i = 0; i < rank(); ++i) c[i] = (invariants_[i] - a.coords[i]) % invariants_[i];
    return GroupElement{std::move(c)};
}

GroupElement AbelianGroup::scale(long long k, const GroupElement& a) const {
    std::vector<long long> c(rank());
    for (size_t i = 0; i < rank(); ++i) {
        long long m = invariants_[i];
        long long r = (a.coords[i] % m) * (k % m) % m;
        if (r < 0) r += m;
        c[i] = r;
    }
    return GroupElement{std::move(c)};
}

Character AbelianGroup::character(std::vector<long long> coords) const {
    return Character{element(std::move(coords)).coords};
}

bool AbelianGroup::contains(const GroupElement& a) const {
    if (a.coords.size() != rank()) return false;
    for (size_t i = 0; i < rank(); ++i)
        if (a.coords[i] < 0 || a.coords[i] >= invariants_[i]) return false;
    return true;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(order_));
    std::vector<long long> c(rank(), 0);
    for (;;) {
        out.push_back(GroupElement{c});
        size_t i = rank();
        while (i > 0) {
            --i;
            if (++c[i] < invariants_[i]) break;
            c[i] = 0;
            if (i == 0) return out;
        }
        if (rank() == 0) return out;
    }
}

bool Subgroup::contains(const GroupElement& a) const {
    return std::binary_search(elements_.begin(), elements_.end(), a);
}

long long element_order(const AbelianGroup& g, const GroupElement& a) {
    if (a.coords.size() != g.rank())
        throw std::invalid_argument("element_order: coordinate arity mismatch");
    long long e = 1;
    for (size_t i = 0; i < g.rank(); ++i) {
        long long m = g.invariants()[i];
        long long component = m / std::gcd(a.coords[i], m);  // gcd(0, m) = m
        e = std::lcm(e, component);
    }
    return e;
}

Subgroup subgroup_generate(const AbelianGroup& g, const std::vector<GroupElement>& gens) {
    for (const auto& x : gens)
        if (!g.contains(x)) throw std::invalid_argument("subgroup_generate: generator not in group");

    std::vector<GroupElement> seen{g.identity()};
    std::deque<GroupElement> frontier{g.identity()};
    auto lookup_insert = [&seen](const GroupElement& x) {
        auto it = std::lower_bound(seen.begin(), seen.end(), x);
        if (it != seen.end() && *it == x) return false;
        seen.insert(it, x);
        return true;
    };
    while (!frontier.empty()) {
        GroupElement cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& gen : gens) {
            GroupElement next = g.add(cur, gen);
            if (lookup_insert(next)) frontier.push_back(next);
        }
    }
    return Subgroup(g, std::move(seen));
}

std::vector<Character> characters_all(const AbelianGroup& g) {
    std::vector<Character> out;
    out.reserve(static_cast<size_t>(g.order()));
    for (auto& e : g.elements()) out.push_back(Character{std::move(e.coords)});
    return out;
}

UnitExponent char_eval(const AbelianGroup& g, const Character& chi, const GroupElement& a) {
    if (chi.coords.size() != g.rank() || a.coords.size() != g.rank())
        throw std::invalid_argument("char_eval: arity mismatch");
    Rational sum(0);
    for (size_t i = 0; i < g.rank(); ++i)
        sum += Rational(chi.coords[i] * a.coords[i], g.invariants()[i]);
    return UnitExponent(sum);
}

bool char_restrict_is_trivial(const AbelianGroup& g, const Character& chi, const Subgroup& h) {
    for (const auto& x : h.elements())
        if (!char_eval(g, chi, x).is_zero()) return false;
    return true;
}

}  // namespace equidiff
