#include "equidiff/oracle.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "equidiff/eigendim.hpp"

namespace equidiff {

void check_superelliptic(const SuperellipticData& data) {
    if (data.e < 2) throw std::invalid_argument("superelliptic: e must be >= 2");
    if (data.branch_exponents.empty())
        throw std::invalid_argument("superelliptic: at least one branch exponent is required");
    std::set<std::string> labels;
    long long joint = data.e;
    for (const auto& b : data.branch_exponents) {
        if (b.exponent < 1 || b.exponent >= data.e)
            throw std::invalid_argument("superelliptic: exponent out of range [1, e)");
        if (!labels.insert(b.label).second)
            throw std::invalid_argument("superelliptic: duplicate branch label");
        joint = std::gcd(joint, b.exponent);
    }
    if (joint != 1)
        throw std::invalid_argument("superelliptic: exponents share a factor with e; the curve is disconnected");
}

namespace {

long long exponent_sum(const SuperellipticData& data) {
    long long d = 0;
    for (const auto& b : data.branch_exponents) d += b.exponent;
    return d;
}

}  // namespace

std::vector<long long> oracle_dims(const SuperellipticData& data) {
    check_superelliptic(data);
    long long e = data.e;
    long long total = exponent_sum(data);
    long long e_inf = e / std::gcd(total, e);

    std::vector<long long> dims(static_cast<size_t>(e), 0);
    for (long long j = 0; j < e; ++j) {
        // ord_{lambda_i}(f) >= j d_i/e - 1 + 1/e_i, so f may have a pole of
        // order up to floor(1 - 1/e_i - j d_i/e) at lambda_i.
        Rational bound(0);
        for (const auto& b : data.branch_exponents) {
            long long e_i = e / std::gcd(b.exponent, e);
            Rational c = Rational(1) - Rational(1, e_i) - Rational(j * b.exponent, e);
            bound += Rational(c.floor());
        }
        // deg f <= floor(j D/e - 1 - 1/e_inf) from holomorphy over infinity.
        Rational c_inf = Rational(j * total, e) - Rational(1) - Rational(1, e_inf);
        bound += Rational(c_inf.floor());
        long long dim = bound.num() + 1;  // h^0(P^1, O(E)) = deg E + 1 when deg E >= 0
        dims[static_cast<size_t>(j)] = dim > 0 ? dim : 0;
    }
    return dims;
}

long long superelliptic_genus(const SuperellipticData& data) {
    check_superelliptic(data);
    long long e = data.e;
    long long rh = -2 * e;
    for (const auto& b : data.branch_exponents) {
        long long e_i = e / std::gcd(b.exponent, e);
        rh += (e / e_i) * (e_i - 1);
    }
    long long total = exponent_sum(data);
    if (total % e != 0) {
        long long e_inf = e / std::gcd(total, e);
        rh += (e / e_inf) * (e_inf - 1);
    }
    if (rh % 2 != 0) throw std::logic_error("superelliptic_genus: parity failure");
    return rh / 2 + 1;
}

CoverSpec superelliptic_cover(const SuperellipticData& data) {
    check_superelliptic(data);
    long long e = data.e;
    AbelianGroup g({e});

    // At lambda_i the stabilizer is generated by gcd(d_i, e), and the local
    // character on it has exponent +-(d_i/gcd)^{-1} mod e_i; the sign is the
    // action direction on y.
    auto theta = [&](long long base, long long modulus) {
        long long alpha = mod_inverse(base % modulus, modulus);
        if (data.action_direction == ActionDirection::zeta) return alpha;
        return (modulus - alpha) % modulus;
    };

    CoverSpec spec{g, 0, 1, {g.element({1})}, {}, {}, {}};
    for (const auto& b : data.branch_exponents) {
        long long gc = std::gcd(b.exponent, e);
        long long e_i = e / gc;
        spec.branches.push_back(
            make_branch_point(g, b.label, g.element({gc}), theta(b.exponent / gc, e_i)));
    }
    long long total = exponent_sum(data);
    if (total % e != 0) {
        long long gc = std::gcd(total, e);
        long long e_inf = e / gc;
        // v(y) = -D/gc over infinity; the pole order flips the base sign.
        long long base = ((-(total / gc)) % e_inf + e_inf) % e_inf;
        spec.branches.push_back(make_branch_point(g, "inf", g.element({gc}), theta(base, e_inf)));
    }
    return spec;
}

ActionDirection calibrate(const SuperellipticData& data) {
    std::vector<long long> reference = oracle_dims(data);
    bool match[2];
    const ActionDirection dirs[2] = {ActionDirection::zeta_inverse, ActionDirection::zeta};
    for (int k = 0; k < 2; ++k) {
        SuperellipticData candidate = data;
        candidate.action_direction = dirs[k];
        CoverContext ctx(superelliptic_cover(candidate));
        match[k] = true;
        for (long long j = 0; j < data.e && match[k]; ++j) {
            Character chi = ctx.spec().group.character({j});
            if (dim_irreducible(ctx, chi) != reference[static_cast<size_t>(j)]) match[k] = false;
        }
    }
    if (match[0]) return ActionDirection::zeta_inverse;
    if (match[1]) return ActionDirection::zeta;
    throw std::logic_error("calibrate: neither action direction matches the lattice count");
}

}  // namespace equidiff
