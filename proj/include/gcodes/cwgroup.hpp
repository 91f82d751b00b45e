#pragma once

#include "gcodes/codes.hpp"
#include "gcodes/enumerators.hpp"
#include "gcodes/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gcodes {

struct SymmetricIdempotent {
    RingElem iota, mu, nu;
    std::vector<std::pair<RingElem, RingElem>> all_pairs;  // every (mu, nu) with mu nu = iota, ascending
};

struct IdempotentSearch {
    std::vector<SymmetricIdempotent> found;  // ascending iota
    std::vector<RingElem> rejected;          // idempotents with no isomorphism or no factorization
};

/// Brute force over R: an R-isomorphism iota R -> J(iota) R and a factorization
/// iota = mu nu with mu in iota R J(iota), nu in J(iota) R iota.
IdempotentSearch find_symmetric_idempotents(const Ring& r, const Involution& j);

/// A G-representation: theta(V^n) with the collapsed form and quadratic maps of a FormRingRep.
class GRepresentation {
public:
    /// Throws NotAUnit when |G| is not a unit, CapExceeded when |theta(V^n)| > ambient_cap.
    GRepresentation(const PermGroup& g, FormRingRep rep, long long ambient_cap = kDefaultAmbientCap);

    const PermGroup& group() const { return group_; }
    const ThetaImage& ambient() const { return ambient_; }
    const FormRingRep& rep() const { return rep_; }
    const IdempotentSearch& idempotents() const { return idempotents_; }
    /// h generators in use: every certified idempotent (iota = 1 is always certified).
    const std::vector<SymmetricIdempotent>& h_list() const { return idempotents_.found; }
    int conductor() const { return field_->conductor(); }
    const CycField& field() const { return *field_; }
    /// iota theta(V^n), ambient order.
    WordSet scalar_image(RingElem iota) const;
    /// {beta0}: the form the G-representation is built on.
    DualSpec dual_spec() const { return {{rep_.beta0()}}; }

private:
    PermGroup group_;
    ThetaImage ambient_;
    FormRingRep rep_;
    IdempotentSearch idempotents_;
    const CycField* field_;
};

/// e_u -> e_{ru}. Throws NotAUnit.
CycMatrix gen_m_r(const GRepresentation& rho, RingElem r);
/// diag(exp(2 pi i phi^n_G(u))).
CycMatrix gen_d_phi(const GRepresentation& rho, const QuadraticMap& phi);
/// Partial Fourier transform h_{iota, mu, nu}. Throws ConductorMismatch.
CycMatrix gen_h(const GRepresentation& rho, const SymmetricIdempotent& s);

struct NamedMatrix {
    std::string name;
    CycMatrix matrix;
};

/// Builds the generators one at a time, in the order of cw_generators (parabolic only unless with_h).
void for_each_generator(const GRepresentation& rho, bool with_h, const std::function<void(NamedMatrix&&)>& fn);
std::vector<std::string> cw_generator_names(const GRepresentation& rho);

/// m_r for every unit r, then d_phi for every phi in Phi.
std::vector<NamedMatrix> parabolic_generators(const GRepresentation& rho);
/// The parabolic generators followed by h for every entry of h_list().
std::vector<NamedMatrix> cw_generators(const GRepresentation& rho);

constexpr long long kDefaultMatrixGroupCap = 5000;

struct MatrixGroup {
    std::vector<CycMatrix> elements;  // BFS order from the identity
    std::size_t order() const { return elements.size(); }
};

/// Breadth-first closure under right multiplication by the generators.
/// Throws CapExceeded, DimensionMismatch.
MatrixGroup group_closure_matrices(const std::vector<CycMatrix>& gens, long long cap = kDefaultMatrixGroupCap);

/// Canonical (reduced echelon) basis of the common fixed space of the generators.
/// Monomial generators are handled by orbit propagation, the rest by exact nullspaces.
std::vector<CycVector> fixed_space(const CycField& field, std::size_t dim, const std::vector<CycMatrix>& gens);

struct ParainvReport {
    bool ok;  // spans equal
    std::vector<WordSet> isotropic_codes;
    SpanComparison comparison;
    std::vector<CycVector> fixed_basis;
    std::vector<CycVector> span_basis;
};

/// Throws CapExceeded.
ParainvReport verify_parainv(const GRepresentation& rho, long long submodule_cap = kDefaultSubmoduleCap);

struct CwinvResult {
    bool ok;
    std::vector<std::string> failing_generators;
    CycVector fwe;
};

/// Throws NotSelfDualIsotropic.
CwinvResult verify_cwinv(const GRepresentation& rho, const GCode& c);

enum class ConjectureVerdict { Equal, StrictInclusion, InclusionViolated };
std::string to_string(ConjectureVerdict v);

struct ConjectureReport {
    ConjectureVerdict verdict;
    std::vector<WordSet> self_dual_isotropic_codes;
    SpanComparison comparison;
    std::vector<CycVector> fixed_basis;
};

/// Throws CapExceeded.
ConjectureReport conjecture_explore(const GRepresentation& rho, long long submodule_cap = kDefaultSubmoduleCap);

}  // namespace gcodes
