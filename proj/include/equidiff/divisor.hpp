// Rational divisors on the quotient curve: finitely supported maps from
// point labels to exact rationals. The geometry never enters here; the
// dimension formulas only need supports, coefficients, and floors.

#pragma once

#include <map>
#include <string>

#include "equidiff/rational.hpp"

namespace equidiff {

class RationalDivisor {
public:
    RationalDivisor() = default;

    // Adds r to the coefficient at label; zero coefficients are dropped so
    // the support stays canonical.
    void add_term(const std::string& label, const Rational& r) {
        auto it = coeffs_.find(label);
        if (it == coeffs_.end()) {
            if (!r.is_zero()) coeffs_.emplace(label, r);
            return;
        }
        it->second += r;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    Rational coeff(const std::string& label) const {
        auto it = coeffs_.find(label);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
    size_t support_size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    friend bool operator==(const RationalDivisor&, const RationalDivisor&) = default;

private:
    std::map<std::string, Rational> coeffs_;  // no zero entries
};

inline Rational deg(const RationalDivisor& d) {
    Rational sum(0);
    for (const auto& [label, c] : d.coeffs()) sum += c;
    return sum;
}

inline RationalDivisor add(const RationalDivisor& a, const RationalDivisor& b) {
    RationalDivisor out = a;
    for (const auto& [label, c] : b.coeffs()) out.add_term(label, c);
    return out;
}

inline RationalDivisor scale(const Rational& r, const RationalDivisor& d) {
    RationalDivisor out;
    for (const auto& [label, c] : d.coeffs()) out.add_term(label, r * c);
    return out;
}

inline RationalDivisor floor_div(const RationalDivisor& d) {
    RationalDivisor out;
    for (const auto& [label, c] : d.coeffs()) out.add_term(label, Rational(c.floor()));
    return out;
}

}  // namespace equidiff
