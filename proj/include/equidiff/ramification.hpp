// Branch-point data of a cover and the pairing of characters with
// ramification modules.
//
// A branch point Q of the cover carries a generator g of the cyclic
// stabilizer G_P of a chosen point P over Q, its order e = e_Q, and the
// exponent t of the local character theta_P on g (theta_P(g) = t/e in Q/Z,
// gcd(t, e) = 1 since the stabilizer acts faithfully on the cotangent line).
//
// The pairing <chi, R_{G,Q}> with the ramification module
// R_{G,Q} = sum_{P over Q} Ind_{G_P}^G (sum_d d * theta_P^d) reduces, for the
// unique a in [0, e) with chi|_{G_P} = theta_P^a, to (n/e) * a. We compute a
// by discrete log (extended gcd); a scanning Frobenius-reciprocity oracle
// backs it in tests.

#pragma once

#include <string>
#include <vector>

#include "equidiff/abgroup.hpp"

namespace equidiff {

struct BranchPoint {
    std::string label;      // quotient point Q
    GroupElement stab_gen;  // generator of the cyclic stabilizer over Q
    long long e = 0;        // ramification index = order of stab_gen, >= 2
    long long theta_exp = 0;  // t in [0, e), gcd(t, e) = 1

    friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

// Builds a branch point, computing e and checking the faithfulness invariants.
BranchPoint make_branch_point(const AbelianGroup& g, std::string label, GroupElement stab_gen,
                              long long theta_exp);

// The unique a in [0, e) with chi|_{G_P} = theta_P^a, i.e. a = t^{-1} s mod e
// where chi(stab_gen) = s/e. Throws if the denominator of chi(stab_gen) does
// not divide e (impossible for consistent data).
long long pairing_a(const AbelianGroup& g, const Character& chi, const BranchPoint& b);

// <chi, R_{G,Q}> = (n1/e) * pairing_a for a cover group of order n1.
// Throws if e does not divide n1.
long long pairing_rgq(const AbelianGroup& g, const Character& chi, const BranchPoint& b,
                      long long n1);

// Independent oracle: evaluates <chi|_{G_P}, sum_d d*theta^d> by scanning all
// d and all elements of <stab_gen>, then multiplies by the fiber size
// n1/e. Equals pairing_rgq on all valid inputs. Test scale only (|G1| <= 64).
long long pairing_bruteforce(const AbelianGroup& g, const Subgroup& g1, const Character& chi,
                             const BranchPoint& b);

struct AdmissibilityResult {
    bool ok = true;
    Character violating_chi;  // set when !ok
    explicit operator bool() const { return ok; }
};

// Necessary condition for the branch data to come from a cover: for every
// character chi, sum_Q <chi, R_{G1,Q}> = 0 (mod n1). Characters of G1 are
// swept by restricting all characters of the ambient group (restriction to a
// subgroup of a finite abelian group is surjective on duals).
AdmissibilityResult admissibility_check(const Subgroup& g1, const std::vector<BranchPoint>& branches);

// x^{-1} mod m for gcd(x, m) = 1, result in [0, m).
long long mod_inverse(long long x, long long m);

}  // namespace equidiff
