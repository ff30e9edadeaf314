// Finite abelian groups G = Z/m1 x ... x Z/mk, their elements, subgroups,
// and 1-dimensional characters.
//
// Character values live in Q/Z: the class q stands for the root of unity
// e^{2*pi*i*q}. Working in Q/Z keeps everything exact and avoids embedding
// into any field; the value -1 is the class 1/2.

#pragma once

#include <string>
#include <vector>

#include "equidiff/rational.hpp"

namespace equidiff {

// An element of Q/Z in lowest terms: 0 <= num < den, gcd(num, den) = 1.
class UnitExponent {
public:
    UnitExponent() : value_(0) {}
    explicit UnitExponent(const Rational& r) : value_(mod_one(r)) {}
    UnitExponent(long long num, long long den) : value_(mod_one(Rational(num, den))) {}

    static UnitExponent zero() { return UnitExponent(); }
    static UnitExponent half() { return UnitExponent(1, 2); }

    const Rational& value() const { return value_; }
    long long num() const { return value_.num(); }
    long long den() const { return value_.den(); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_half() const { return value_ == Rational(1, 2); }

    UnitExponent operator+(const UnitExponent& o) const { return UnitExponent(value_ + o.value_); }
    UnitExponent operator-() const { return UnitExponent(-value_); }
    bool operator==(const UnitExponent& o) const = default;

    std::string str() const { return value_.str(); }

private:
    static Rational mod_one(Rational r) {
        return r - Rational(r.floor());
    }
    Rational value_;
};

struct GroupElement {
    std::vector<long long> coords;  // coords[i] in [0, m_i)

    bool is_identity() const {
        for (long long c : coords)
            if (c != 0) return false;
        return true;
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// A 1-dimensional character of G, stored as a tuple of residues c_i in [0, m_i)
// dual to the element coordinates: chi(g) = sum c_i * g_i / m_i in Q/Z.
struct Character {
    std::vector<long long> coords;

    bool is_trivial() const {
        for (long long c : coords)
            if (c != 0) return false;
        return true;
    }
    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;
};

class AbelianGroup {
public:
    static constexpr long long kDefaultOrderBound = 10000;

    // invariants: m_1, ..., m_k, each >= 1. Throws std::invalid_argument on a
    // bad invariant and std::length_error when the order exceeds the bound
    // (subgroup enumeration must stay feasible).
    explicit AbelianGroup(std::vector<long long> invariants,
                          long long order_bound = kDefaultOrderBound);

    const std::vector<long long>& invariants() const { return invariants_; }
    size_t rank() const { return invariants_.size(); }
    long long order() const { return order_; }

    GroupElement identity() const { return GroupElement{std::vector<long long>(rank(), 0)}; }
    // Reduces arbitrary integer coordinates componentwise mod m_i.
    GroupElement element(std::vector<long long> coords) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(long long k, const GroupElement& a) const;

    Character character(std::vector<long long> coords) const;

    bool contains(const GroupElement& a) const;

    // All n elements, lexicographic in the coordinate tuple.
    std::vector<GroupElement> elements() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::vector<long long> invariants_;
    long long order_;
};

// A subgroup stored by full enumeration: canonically sorted, duplicate-free,
// closed under the group law. Desk-scale groups make membership and coset
// reasoning trivial to test.
class Subgroup {
public:
    Subgroup(AbelianGroup parent, std::vector<GroupElement> sorted_elements)
        : parent_(std::move(parent)), elements_(std::move(sorted_elements)) {}

    const AbelianGroup& parent() const { return parent_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    bool contains(const GroupElement& a) const;
    bool is_whole_group() const { return order() == parent_.order(); }

private:
    AbelianGroup parent_;
    std::vector<GroupElement> elements_;  // sorted
};

// Least e >= 1 with e*g = 0; divides the group order.
long long element_order(const AbelianGroup& g, const GroupElement& a);

// Smallest subgroup containing gens (trivial subgroup for empty gens).
Subgroup subgroup_generate(const AbelianGroup& g, const std::vector<GroupElement>& gens);

// Exactly n pairwise-distinct characters in lexicographic order; the first
// entry is the trivial character.
std::vector<Character> characters_all(const AbelianGroup& g);

// chi(a) = sum c_i * a_i / m_i mod 1. Throws on arity mismatch.
UnitExponent char_eval(const AbelianGroup& g, const Character& chi, const GroupElement& a);

// True iff chi(h) = 0 in Q/Z for every h in the subgroup.
bool char_restrict_is_trivial(const AbelianGroup& g, const Character& chi, const Subgroup& h);

}  // namespace equidiff
