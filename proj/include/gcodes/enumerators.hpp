#pragma once

#include "gcodes/codes.hpp"
#include "gcodes/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace gcodes {

/// Number of nonzero collapsed coordinates. Throws NotThetaFixed.
int g_weight(const ThetaImage& ambient, const Word& u);

/// Homogeneous polynomial sum_w coeffs[w] x^{t-w} y^w.
struct HwePoly {
    int t = 0;
    std::vector<Rational> coeffs;  // length t + 1

    static HwePoly zero(int t) { return {t, std::vector<Rational>(static_cast<std::size_t>(t) + 1)}; }
    Rational at_one() const;  // value at x = y = 1
    std::string to_string() const;
    friend bool operator==(const HwePoly&, const HwePoly&) = default;
};

/// Exponent of x_a for each a in V (V order); the monomial prod_i x_{u_{alpha_i}}.
using Multidegree = std::vector<int>;
using CwePoly = std::map<Multidegree, long long>;

HwePoly hwe_g(const ThetaImage& ambient, const WordSet& theta_c);
CwePoly cwe_g(const ThetaImage& ambient, const WordSet& theta_c);
/// x_0 -> x, x_a -> y for a != 0.
HwePoly project_cwe(const CwePoly& p, int t);
/// 0/1 vector over the ambient order.
CycVector fwe_g(const ThetaImage& ambient, const WordSet& theta_c, const CycField& field);

/// (1/dual_size) p(x + (q-1) y, x - y), expanded exactly.
HwePoly macwilliams_hwe_transform(const HwePoly& p, const Rational& dual_size, long long q);

struct HweMacResult {
    bool ok;
    HwePoly lhs;      // hwe_G(theta C)
    HwePoly rhs;      // transform of the dual-side enumerator
    WordSet dual_side;
};

/// Lemma form: dual side is the G-dual of theta C. Throws DegenerateForm.
HweMacResult verify_gmac(const GCode& c, const DualSpec& m);
/// Theorem form: dual side is theta(C^perp), with C^perp recomputed by brute force.
HweMacResult verify_hwemac(const GCode& c, const DualSpec& m, long long cap = kDefaultAmbientCap);

/// Smallest conductor used for character sums of beta: lcm(8, denominator).
int fwe_conductor(const BilinearForm& beta);

/// (1/|theta C|) sum_v sum_u exp(2 pi i beta^n_G(v, u)) e_v over the ambient order.
CycVector macwilliams_fwe_transform(const ThetaImage& ambient, const WordSet& theta_c, const BilinearForm& beta,
                                    const CycField& field);

struct FweMacResult {
    bool ok;
    std::size_t failing_form = 0;  // index into M when !ok
    CycVector expected;            // fwe_G of the G-dual
    std::vector<CycVector> transforms;  // one per form
};

/// Throws DegenerateForm.
FweMacResult verify_fwemac(const GCode& c, const DualSpec& m);

/// Throws DegenerateForm naming the first degenerate form.
void require_nondegenerate(const DualSpec& m);

}  // namespace gcodes
