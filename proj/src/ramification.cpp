#include "equidiff/ramification.hpp"

#include <numeric>
#include <stdexcept>

namespace equidiff {

long long mod_inverse(long long x, long long m) {
    if (m == 1) return 0;
    long long r0 = m, r1 = ((x % m) + m) % m;
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return ((s0 % m) + m) % m;
}

BranchPoint make_branch_point(const AbelianGroup& g, std::string label, GroupElement stab_gen,
                              long long theta_exp) {
    long long e = element_order(g, stab_gen);
    if (e < 2) throw std::invalid_argument("branch point: stabilizer generator is the identity");
    if (theta_exp < 0 || theta_exp >= e || std::gcd(theta_exp, e) != 1)
        throw std::invalid_argument("branch point: theta exponent not a unit mod e");
    return BranchPoint{std::move(label), std::move(stab_gen), e, theta_exp};
}

long long pairing_a(const AbelianGroup& g, const Character& chi, const BranchPoint& b) {
    UnitExponent v = char_eval(g, chi, b.stab_gen);
    if (b.e % v.den() != 0)
        throw std::invalid_argument("pairing_a: chi(stab_gen) has denominator not dividing e");
    long long s = v.num() * (b.e / v.den());  // chi(stab_gen) = s/e
    long long t_inv = mod_inverse(b.theta_exp, b.e);
    return (t_inv % b.e) * (s % b.e) % b.e;
}

long long pairing_rgq(const AbelianGroup& g, const Character& chi, const BranchPoint& b,
                      long long n1) {
    if (n1 % b.e != 0)
        throw std::invalid_argument("pairing_rgq: ramification index does not divide cover order");
    return (n1 / b.e) * pairing_a(g, chi, b);
}

long long pairing_bruteforce(const AbelianGroup& g, const Subgroup& g1, const Character& chi,
                             const BranchPoint& b) {
    if (g1.order() > 64)
        throw std::length_error("pairing_bruteforce: beyond test scale");
    long long e = element_order(g, b.stab_gen);
    if (g1.order() % e != 0)
        throw std::invalid_argument("pairing_bruteforce: stabilizer order does not divide cover order");
    long long fiber = g1.order() / e;

    // <chi|_{G_P}, sum_d d*theta^d> = sum_d d * [chi = theta^d on G_P], the
    // indicator evaluated by comparing both characters on every k*stab_gen.
    long long acc = 0;
    for (long long d = 0; d < e; ++d) {
        bool match = true;
        GroupElement h = g.identity();
        for (long long k = 0; k < e && match; ++k) {
            UnitExponent expected(k * d % e * b.theta_exp % e, e);
            if (!(char_eval(g, chi, h) == expected)) match = false;
            h = g.add(h, b.stab_gen);
        }
        if (match) acc += d;
    }
    return fiber * acc;
}

AdmissibilityResult admissibility_check(const Subgroup& g1, const std::vector<BranchPoint>& branches) {
    const AbelianGroup& g = g1.parent();
    long long n1 = g1.order();
    for (const Character& chi : characters_all(g)) {
        long long total = 0;
        for (const BranchPoint& b : branches) total += pairing_rgq(g, chi, b, n1);
        if (total % n1 != 0) return AdmissibilityResult{false, chi};
    }
    return AdmissibilityResult{};
}

}  // namespace equidiff
