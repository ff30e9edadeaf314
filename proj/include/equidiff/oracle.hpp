// Independent verification oracle: eigenspace dimensions for smooth cyclic
// covers of the projective line,
//
//     y^e = prod_i (x - lambda_i)^{d_i},     1 <= d_i < e,
//
// counted directly from monomial differentials f(x) dx / y^j. Holomorphy at
// each branch point and at infinity bounds the divisor of f on the line, and
// the dimension of the j-eigenspace is max(0, deg E + 1) for the resulting
// bound E. No part of the main dimension formula is used here, which makes
// the agreement test meaningful.
//
// The only convention shared with the main formula is the direction of the
// cyclic action on y (zeta vs zeta^{-1}); calibrate() determines it by
// comparing both candidate cover encodings against the lattice count.

#pragma once

#include <string>
#include <vector>

#include "equidiff/coverspec.hpp"

namespace equidiff {

enum class ActionDirection {
    zeta,          // the generator of Z/e scales y by zeta_e
    zeta_inverse,  // the generator scales y by zeta_e^{-1}
};

struct SuperellipticBranch {
    std::string label;
    long long exponent = 1;  // d_i in [1, e)
};

struct SuperellipticData {
    long long e = 2;
    std::vector<SuperellipticBranch> branch_exponents;
    ActionDirection action_direction = ActionDirection::zeta_inverse;
};

// Throws std::invalid_argument on malformed data (e < 2, exponent out of
// range, duplicate labels, or jointly non-coprime exponents, which would make
// the curve disconnected).
void check_superelliptic(const SuperellipticData& data);

// dims[j] = dimension of the holomorphic differentials of the form
// f(x) dx / y^j, for j in [0, e).
std::vector<long long> oracle_dims(const SuperellipticData& data);

// Genus by Riemann-Hurwitz over the line, computed straight from the
// exponents (used as an internal consistency bound: sum_j oracle_dims = g).
long long superelliptic_genus(const SuperellipticData& data);

// The same cover as combinatorial branch data for the main formula: cyclic
// group Z/e over genus 0, one branch point per ramified lambda_i plus the
// implicit one at infinity when sum d_i != 0 mod e. theta exponents follow
// data.action_direction.
CoverSpec superelliptic_cover(const SuperellipticData& data);

// Direction under which dim_irreducible(superelliptic_cover(data), chi_j)
// equals oracle_dims(data)[j] for every j. Sign-symmetric data (both match)
// returns zeta_inverse; neither matching throws std::logic_error, since the
// two routes must agree under one of the conventions.
ActionDirection calibrate(const SuperellipticData& data);

}  // namespace equidiff
