#include "gcodes/forms.hpp"

#include "gcodes/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gcodes {

namespace {

long long common_denominator(const std::vector<const QmodZ*>& values) {
    long long d = 1;
    for (const auto* q : values) d = std::lcm(d, q->denominator().get_si());
    return d;
}

long long numerator_over(const QmodZ& q, long long den) {
    Integer scaled = q.numerator() * (Integer(static_cast<long>(den)) / q.denominator());
    return scaled.get_si();
}

}  // namespace

// ---- BilinearForm ----

BilinearForm::BilinearForm(const Module& v, Gram gram) : module_(v), gram_(std::move(gram)) {
    const auto k = static_cast<std::size_t>(v.rank());
    if (gram_.size() != k)
        throw InvalidForm("gram matrix has " + std::to_string(gram_.size()) + " rows, module rank is " +
                          std::to_string(k));
    std::vector<const QmodZ*> entries;
    for (const auto& row : gram_) {
        if (row.size() != k) throw InvalidForm("gram matrix is not square");
        for (const auto& c : row) {
            if (!c.scaled(v.ring().modulus()).is_zero())
                throw InvalidForm("entry " + c.to_string() + " is not killed by the modulus " +
                                  std::to_string(v.ring().modulus()));
            entries.push_back(&c);
        }
    }
    den_ = common_denominator(entries);
    std::vector<std::vector<long long>> g(k, std::vector<long long>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g[i][j] = numerator_over(gram_[i][j], den_);

    const auto n = static_cast<std::size_t>(v.size());
    table_.resize(n * n);
    for (ModIndex x = 0; x < v.size(); ++x) {
        auto cx = v.coords(x);
        for (ModIndex y = 0; y < v.size(); ++y) {
            auto cy = v.coords(y);
            long long acc = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) acc += cx[i] * g[i][j] * cy[j];
            acc %= den_;
            table_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = acc;
        }
    }
}

BilinearForm BilinearForm::diagonal(const Module& v, const QmodZ& c) {
    const auto k = static_cast<std::size_t>(v.rank());
    Gram g(k, std::vector<QmodZ>(k));
    for (std::size_t i = 0; i < k; ++i) g[i][i] = c;
    return BilinearForm(v, std::move(g));
}

long long BilinearForm::raw_n(const Word& u, const Word& v) const {
    if (u.size() != v.size()) throw DimensionMismatch("bilinear evaluation on words of different length");
    long long acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += raw(u[i], v[i]);
    return acc % den_;
}

BilinearForm BilinearForm::transposed() const {
    Gram t = gram_;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) t[i][j] = gram_[j][i];
    return BilinearForm(module_, std::move(t));
}

BilinearForm BilinearForm::acted(RingElem r, RingElem s) const {
    Gram g = gram_;
    for (auto& row : g)
        for (auto& c : row) c = c.scaled(static_cast<long long>(r.residue) * s.residue);
    return BilinearForm(module_, std::move(g));
}

QmodZ bilinear_eval_g(const BilinearForm& beta, const ThetaImage& theta, const Word& u, const Word& v) {
    return beta.eval_n(theta.collapse(u), theta.collapse(v));
}

std::optional<Degeneracy> nondegenerate_check(const BilinearForm& beta) {
    const int q = beta.module().size();
    for (Side side : {Side::Left, Side::Right})
        for (ModIndex v = 1; v < q; ++v) {
            bool all_zero = true;
            for (ModIndex u = 0; u < q && all_zero; ++u)
                all_zero = (side == Side::Left ? beta.raw(v, u) : beta.raw(u, v)) == 0;
            if (all_zero) return Degeneracy{v, side};
        }
    return std::nullopt;
}

// ---- QuadraticMap ----

QuadraticMap::QuadraticMap(const Module& v, std::vector<QmodZ> table) : module_(v), table_(std::move(table)) {
    if (table_.size() != static_cast<std::size_t>(v.size()))
        throw InvalidForm("quadratic table has " + std::to_string(table_.size()) + " entries, |V| = " +
                          std::to_string(v.size()));
    std::vector<const QmodZ*> entries;
    for (const auto& c : table_) entries.push_back(&c);
    den_ = common_denominator(entries);
    for (const auto& c : table_) raw_.push_back(numerator_over(c, den_));
}

QuadraticMap QuadraticMap::square(const Module& v, const QmodZ& c) {
    const int m = v.ring().modulus();
    if (!c.scaled(static_cast<long long>(m) * m).is_zero() || !c.scaled(2LL * m).is_zero())
        throw InvalidForm("x -> " + c.to_string() + " x^2 is not well defined modulo " + std::to_string(m));
    std::vector<QmodZ> t;
    for (ModIndex x = 0; x < v.size(); ++x) {
        long long s = 0;
        for (int ci : v.coords(x)) s += static_cast<long long>(ci) * ci;
        t.push_back(c.scaled(s));
    }
    return QuadraticMap(v, std::move(t));
}

QuadraticMap QuadraticMap::diagonal_of(const BilinearForm& beta) {
    std::vector<QmodZ> t;
    for (ModIndex x = 0; x < beta.module().size(); ++x) t.push_back(beta.eval(x, x));
    return QuadraticMap(beta.module(), std::move(t));
}

long long QuadraticMap::raw_n(const Word& u) const {
    long long acc = 0;
    for (auto x : u) acc += raw(x);
    return acc % den_;
}

bool QuadraticMap::is_zero() const {
    return std::all_of(table_.begin(), table_.end(), [](const QmodZ& q) { return q.is_zero(); });
}

std::optional<CocycleViolation> quadratic_check(const QuadraticMap& phi) {
    const Module& v = phi.module();
    const long long d = phi.denominator();
    for (ModIndex a = 0; a < v.size(); ++a)
        for (ModIndex b = 0; b < v.size(); ++b)
            for (ModIndex c = 0; c < v.size(); ++c) {
                const ModIndex ab = v.add(a, b), bc = v.add(b, c), ca = v.add(c, a);
                long long lhs = phi.raw(v.add(ab, c)) + phi.raw(a) + phi.raw(b) + phi.raw(c);
                long long rhs = phi.raw(ab) + phi.raw(bc) + phi.raw(ca) + phi.raw(0);
                if ((lhs - rhs) % d != 0) return CocycleViolation{a, b, c};
            }
    return std::nullopt;
}

QmodZ quadratic_eval_g(const QuadraticMap& phi, const ThetaImage& theta, const Word& u) {
    return QmodZ(phi.raw_n(theta.collapse(u)), phi.denominator());
}

QuadraticMap qmap_action(const QuadraticMap& phi, RingElem r) {
    const Module& v = phi.module();
    std::vector<QmodZ> t;
    for (ModIndex x = 0; x < v.size(); ++x) t.push_back(phi(v.scale(r, x)));
    return QuadraticMap(v, std::move(t));
}

std::optional<CocycleViolation> polarization_check(const QuadraticMap& phi) {
    const Module& v = phi.module();
    const long long d = phi.denominator();
    auto polar = [&](ModIndex a, ModIndex b) { return phi.raw(v.add(a, b)) - phi.raw(a) - phi.raw(b); };
    for (ModIndex a = 0; a < v.size(); ++a)
        for (ModIndex a2 = 0; a2 < v.size(); ++a2)
            for (ModIndex b = 0; b < v.size(); ++b)
                if ((polar(v.add(a, a2), b) - polar(a, b) - polar(a2, b)) % d != 0)
                    return CocycleViolation{a, a2, b};
    return std::nullopt;
}

std::optional<TwistViolation> twist_checks(const BilinearForm& beta, RingElem r, RingElem s,
                                           const FormAction& action) {
    const FormAction act = action ? action : [](const BilinearForm& b, RingElem x, RingElem y) {
        return b.acted(x, y);
    };
    const Module& v = beta.module();
    const Ring& ring = v.ring();
    const BilinearForm moved = act(beta, r, s);

    for (ModIndex x = 0; x < v.size(); ++x)
        for (ModIndex y = 0; y < v.size(); ++y)
            if (moved.raw(x, y) * beta.denominator() != beta.raw(v.scale(r, x), v.scale(s, y)) * moved.denominator())
                return TwistViolation{"action differs from beta(r x, s y)", r, s, x, y};

    for (auto r2 : ring.elements())
        for (auto s2 : ring.elements())
            if (!(act(moved, r2, s2) == act(beta, ring.mul(r, r2), ring.mul(s, s2))))
                return TwistViolation{"not a right (R (x) R)-action", r2, s2};

    if (!(act(beta, r, s).transposed() == act(beta.transposed(), s, r)))
        return TwistViolation{"tau(beta . (r (x) s)) != tau(beta) . (s (x) r)", r, s};
    return std::nullopt;
}

std::vector<BilinearForm> form_orbit(const BilinearForm& beta) {
    std::vector<BilinearForm> out{beta};
    const Ring& ring = beta.module().ring();
    for (auto r : ring.elements())
        for (auto s : ring.elements()) {
            BilinearForm f = beta.acted(r, s);
            if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
        }
    return out;
}

// ---- FormRingRep ----

FormRingRep::FormRingRep(BilinearForm beta0, std::vector<QuadraticMap> configured, Involution j)
    : beta0_(std::move(beta0)), configured_(std::move(configured)), j_(std::move(j)) {
    const Module& v = beta0_.module();
    validate_involution(v.ring(), j_);
    if (auto bad = nondegenerate_check(beta0_))
        throw DegenerateForm("designated form is degenerate, witness v = " + v.to_string(bad->witness));
    for (const auto& phi : configured_) {
        if (phi.module().spec().modulus != v.spec().modulus || phi.module().rank() != v.rank())
            throw InvalidForm("quadratic map over a different module");
        if (!phi(0).is_zero()) throw InvalidForm("quadratic map with phi(0) = " + phi(0).to_string() + " != 0");
        if (auto bad = quadratic_check(phi))
            throw InvalidForm("quadratic map violates the cocycle law at (" + v.to_string(bad->u) + ", " +
                              v.to_string(bad->v) + ", " + v.to_string(bad->w) + ")");
    }

    auto push = [&](QuadraticMap phi) {
        if (phi.is_zero()) return;
        if (std::find(phis_.begin(), phis_.end(), phi) == phis_.end()) phis_.push_back(std::move(phi));
    };
    for (const auto& phi : configured_) push(phi);
    push(QuadraticMap::diagonal_of(beta0_));
    for (std::size_t i = 0; i < phis_.size(); ++i)
        for (auto r : v.ring().elements()) push(qmap_action(phis_[i], r));
}

bool FormRingRep::closed_under_action() const {
    for (const auto& phi : phis_)
        for (auto r : module().ring().elements()) {
            auto moved = qmap_action(phi, r);
            if (!moved.is_zero() && std::find(phis_.begin(), phis_.end(), moved) == phis_.end()) return false;
        }
    return true;
}

}  // namespace gcodes
