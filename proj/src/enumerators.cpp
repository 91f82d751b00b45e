#include "gcodes/enumerators.hpp"

#include "gcodes/errors.hpp"

#include <numeric>

namespace gcodes {

namespace {

// Coefficients of (a x + b y)^e as a dense vector indexed by the y-power.
std::vector<Integer> binomial_power(long long a, long long b, int e) {
    std::vector<Integer> p{Integer(1)};
    for (int k = 0; k < e; ++k) {
        std::vector<Integer> next(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i] * Integer(static_cast<long>(a));
            next[i + 1] += p[i] * Integer(static_cast<long>(b));
        }
        p = std::move(next);
    }
    return p;
}

}  // namespace

int g_weight(const ThetaImage& ambient, const Word& u) {
    int w = 0;
    for (auto x : ambient.collapse(u)) w += x != 0;
    return w;
}

Rational HwePoly::at_one() const {
    Rational s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

std::string HwePoly::to_string() const {
    std::string out;
    for (int w = 0; w <= t; ++w) {
        const Rational& c = coeffs[static_cast<std::size_t>(w)];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        std::string mono;
        if (t - w > 0) mono += "x" + (t - w > 1 ? "^" + std::to_string(t - w) : std::string());
        if (w > 0) mono += (mono.empty() ? "" : "*") + std::string("y") + (w > 1 ? "^" + std::to_string(w) : "");
        if (mono.empty()) out += gcodes::to_string(a);
        else if (a == 1) out += mono;
        else out += gcodes::to_string(a) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

HwePoly hwe_g(const ThetaImage& ambient, const WordSet& theta_c) {
    HwePoly p = HwePoly::zero(ambient.t());
    for (const auto& u : theta_c) p.coeffs[static_cast<std::size_t>(g_weight(ambient, u))] += 1;
    return p;
}

CwePoly cwe_g(const ThetaImage& ambient, const WordSet& theta_c) {
    CwePoly p;
    const auto q = static_cast<std::size_t>(ambient.module().size());
    for (const auto& u : theta_c) {
        Multidegree d(q, 0);
        for (auto x : ambient.collapse(u)) ++d[static_cast<std::size_t>(x)];
        ++p[d];
    }
    return p;
}

HwePoly project_cwe(const CwePoly& p, int t) {
    HwePoly out = HwePoly::zero(t);
    for (const auto& [deg, c] : p) {
        const int w = std::accumulate(deg.begin() + 1, deg.end(), 0);
        out.coeffs[static_cast<std::size_t>(w)] += Rational(static_cast<long>(c));
    }
    return out;
}

CycVector fwe_g(const ThetaImage& ambient, const WordSet& theta_c, const CycField& field) {
    CycVector v(ambient.size(), Cyclotomic::zero(field));
    for (const auto& u : theta_c) v[ambient.index_of(u)] = Cyclotomic::one(field);
    return v;
}

HwePoly macwilliams_hwe_transform(const HwePoly& p, const Rational& dual_size, long long q) {
    HwePoly out = HwePoly::zero(p.t);
    for (int w = 0; w <= p.t; ++w) {
        const Rational& c = p.coeffs[static_cast<std::size_t>(w)];
        if (c == 0) continue;
        // (x + (q-1) y)^{t-w} (x - y)^w
        auto a = binomial_power(1, q - 1, p.t - w);
        auto b = binomial_power(1, -1, w);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out.coeffs[i + j] += c * Rational(a[i] * b[j]);
    }
    for (auto& c : out.coeffs) c /= dual_size;
    return out;
}

void require_nondegenerate(const DualSpec& m) {
    for (std::size_t i = 0; i < m.forms.size(); ++i)
        if (auto bad = nondegenerate_check(m.forms[i]))
            throw DegenerateForm("form " + std::to_string(i) + " is degenerate, witness v = " +
                                 m.forms[i].module().to_string(bad->witness));
}

HweMacResult verify_gmac(const GCode& c, const DualSpec& m) {
    require_nondegenerate(m);
    ThetaImage ambient(c.group(), c.module());
    const WordSet tc = theta_code(c);
    HweMacResult r;
    r.dual_side = g_dual(ambient, tc, m);
    r.lhs = hwe_g(ambient, tc);
    r.rhs = macwilliams_hwe_transform(hwe_g(ambient, r.dual_side), Rational(static_cast<long>(r.dual_side.size())),
                                      c.module().size());
    r.ok = r.lhs == r.rhs;
    return r;
}

HweMacResult verify_hwemac(const GCode& c, const DualSpec& m, long long cap) {
    require_nondegenerate(m);
    ThetaImage ambient(c.group(), c.module());
    HweMacResult r;
    r.dual_side = theta_code(dual(c, m, cap));
    r.lhs = hwe_g(ambient, theta_code(c));
    r.rhs = macwilliams_hwe_transform(hwe_g(ambient, r.dual_side), Rational(static_cast<long>(r.dual_side.size())),
                                      c.module().size());
    r.ok = r.lhs == r.rhs;
    return r;
}

int fwe_conductor(const BilinearForm& beta) { return static_cast<int>(std::lcm(8LL, beta.denominator())); }

CycVector macwilliams_fwe_transform(const ThetaImage& ambient, const WordSet& theta_c, const BilinearForm& beta,
                                    const CycField& field) {
    const long long k = field.conductor();
    const long long d = beta.denominator();
    if (k % d != 0)
        throw ConductorMismatch("form denominator " + std::to_string(d) + " does not divide conductor " +
                                std::to_string(k));
    std::vector<Word> collapsed;
    for (const auto& u : theta_c) collapsed.push_back(ambient.collapse(u));
    const Rational scale(static_cast<long>(theta_c.size()));

    CycVector out;
    out.reserve(ambient.size());
    std::vector<long long> counts(static_cast<std::size_t>(k));
    for (const auto& v : ambient.elements()) {
        std::fill(counts.begin(), counts.end(), 0);
        const Word vg = ambient.collapse(v);
        for (const auto& ug : collapsed) ++counts[static_cast<std::size_t>(beta.raw_n(vg, ug) * (k / d))];
        out.push_back(Cyclotomic::from_exponent_counts(field, counts, scale));
    }
    return out;
}

FweMacResult verify_fwemac(const GCode& c, const DualSpec& m) {
    require_nondegenerate(m);
    ThetaImage ambient(c.group(), c.module());
    const WordSet tc = theta_code(c);
    int k = 8;
    for (const auto& beta : m.forms) k = std::lcm(k, fwe_conductor(beta));
    const CycField& field = CycField::get(k);

    FweMacResult r{true, 0, fwe_g(ambient, g_dual(ambient, tc, m), field), {}};
    for (std::size_t i = 0; i < m.forms.size(); ++i) {
        r.transforms.push_back(macwilliams_fwe_transform(ambient, tc, m.forms[i], field));
        if (r.ok && r.transforms.back() != r.expected) {
            r.ok = false;
            r.failing_form = i;
        }
    }
    return r;
}

}  // namespace gcodes
