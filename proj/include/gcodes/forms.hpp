#pragma once

#include "gcodes/perm.hpp"
#include "gcodes/qmodz.hpp"
#include "gcodes/ring.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gcodes {

using Gram = std::vector<std::vector<QmodZ>>;

/// Q/Z-valued Z-bilinear form on V = (Z/m)^k given by a Gram matrix:
/// beta(x, y) = sum_{i,j} x_i gram[i][j] y_j mod 1.
///
/// Values are cached as numerators over a common denominator so the
/// exhaustive scans in the codes module never touch GMP.
class BilinearForm {
public:
    /// Throws InvalidForm unless m * gram[i][j] = 0 in Q/Z for every entry.
    BilinearForm(const Module& v, Gram gram);

    /// The standard form beta(x, y) = c * sum_i x_i y_i.
    static BilinearForm diagonal(const Module& v, const QmodZ& c);

    const Module& module() const { return module_; }
    const Gram& gram() const { return gram_; }
    /// Common denominator D: every value is raw/D.
    long long denominator() const { return den_; }

    long long raw(ModIndex x, ModIndex y) const {
        return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(module_.size()) +
                      static_cast<std::size_t>(y)];
    }
    QmodZ eval(ModIndex x, ModIndex y) const { return QmodZ(raw(x, y), den_); }

    /// beta^n(u, v) numerator over denominator(), in [0, D).
    long long raw_n(const Word& u, const Word& v) const;
    QmodZ eval_n(const Word& u, const Word& v) const { return QmodZ(raw_n(u, v), den_); }

    /// tau(beta)(x, y) = beta(y, x).
    BilinearForm transposed() const;
    /// (beta . (r (x) s))(x, y) = beta(r x, s y).
    BilinearForm acted(RingElem r, RingElem s) const;

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

private:
    Module module_;
    Gram gram_;
    long long den_ = 1;
    std::vector<long long> table_;
};

/// beta^n_G(u, v) = beta^t(u_G, v_G). Throws NotThetaFixed.
QmodZ bilinear_eval_g(const BilinearForm& beta, const ThetaImage& theta, const Word& u, const Word& v);

enum class Side { Left, Right };

struct Degeneracy {
    ModIndex witness;  // nonzero v with beta(v, .) = 0 (Left) or beta(., v) = 0 (Right)
    Side side;
};

/// Exhaustive radical scan; nullopt means nondegenerate on both sides.
std::optional<Degeneracy> nondegenerate_check(const BilinearForm& beta);

/// Q/Z-valued map on V, stored as a full table in the order of V.
class QuadraticMap {
public:
    QuadraticMap(const Module& v, std::vector<QmodZ> table);

    /// x -> c * sum_i x_i^2, for the scalar c (well defined when m^2 c and 2 m c vanish mod 1).
    static QuadraticMap square(const Module& v, const QmodZ& c);
    /// x -> beta(x, x).
    static QuadraticMap diagonal_of(const BilinearForm& beta);

    const Module& module() const { return module_; }
    const std::vector<QmodZ>& table() const { return table_; }
    long long denominator() const { return den_; }
    long long raw(ModIndex x) const { return raw_[static_cast<std::size_t>(x)]; }
    QmodZ operator()(ModIndex x) const { return table_[static_cast<std::size_t>(x)]; }

    /// phi^n(u) numerator over denominator().
    long long raw_n(const Word& u) const;
    bool is_zero() const;

    friend bool operator==(const QuadraticMap& a, const QuadraticMap& b) { return a.table_ == b.table_; }

private:
    Module module_;
    std::vector<QmodZ> table_;
    long long den_ = 1;
    std::vector<long long> raw_;
};

struct CocycleViolation {
    ModIndex u, v, w;
};

/// Exhaustive check of the three-variable law over V^3; nullopt means ok.
std::optional<CocycleViolation> quadratic_check(const QuadraticMap& phi);

/// phi^n_G(u) = sum_i phi(u_{alpha_i}). Throws NotThetaFixed.
QmodZ quadratic_eval_g(const QuadraticMap& phi, const ThetaImage& theta, const Word& u);

/// phi[r](v) = phi(r v).
QuadraticMap qmap_action(const QuadraticMap& phi, RingElem r);

/// Checks that (u, v) -> phi(u + v) - phi(u) - phi(v) is biadditive. nullopt means ok.
std::optional<CocycleViolation> polarization_check(const QuadraticMap& phi);

/// Right (R (x) R)-action on forms; the default is BilinearForm::acted.
using FormAction = std::function<BilinearForm(const BilinearForm&, RingElem, RingElem)>;

struct TwistViolation {
    std::string clause;
    RingElem r2, s2;  // second action pair involved, when relevant
    ModIndex x = 0, y = 0;
};

/// For the pair (r, s): the action composes as a right action, agrees with
/// beta(r x, s y), and satisfies tau(beta . (r (x) s)) = tau(beta) . (s (x) r).
std::optional<TwistViolation> twist_checks(const BilinearForm& beta, RingElem r, RingElem s,
                                           const FormAction& action = {});

/// The distinct forms beta . (r (x) s), r, s in R (first entry is beta itself).
std::vector<BilinearForm> form_orbit(const BilinearForm& beta);

/// Concrete form-ring data: one designated nondegenerate form, a list of
/// quadratic maps Phi (closed under phi -> phi[r] and containing the
/// diagonal x -> beta0(x, x)), and the involution J. psi is realized
/// implicitly through beta0.
class FormRingRep {
public:
    /// Throws DegenerateForm, InvalidForm, InvalidInvolution.
    FormRingRep(BilinearForm beta0, std::vector<QuadraticMap> configured, Involution j);

    const BilinearForm& beta0() const { return beta0_; }
    const Module& module() const { return beta0_.module(); }
    const std::vector<QuadraticMap>& configured() const { return configured_; }
    /// Nonzero generators of Phi: configured maps, the diagonal of beta0, and
    /// their images under every phi -> phi[r]; deduplicated, in that order.
    const std::vector<QuadraticMap>& phis() const { return phis_; }
    const Involution& involution() const { return j_; }
    static constexpr bool psi_implicit = true;

    /// Exhaustive: phi[r] is zero or listed in phis() for every listed phi and r.
    bool closed_under_action() const;

private:
    BilinearForm beta0_;
    std::vector<QuadraticMap> configured_;
    std::vector<QuadraticMap> phis_;
    Involution j_;
};

}  // namespace gcodes
