#pragma once

#include "gcodes/forms.hpp"
#include "gcodes/perm.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gcodes {

using WordSet = std::vector<Word>;  // sorted, no duplicates

constexpr long long kDefaultCodeCap = 1 << 16;
constexpr long long kDefaultAmbientCap = 4096;
constexpr long long kDefaultSubmoduleCap = 256;

/// Sorts and deduplicates in place.
void normalize(WordSet& words);
bool contains(const WordSet& words, const Word& u);
bool is_subset(const WordSet& a, const WordSet& b);

/// An R[G]-submodule of V^n, stored as its full sorted word list.
class GCode {
public:
    /// Takes words as given (sorted on construction); no closure is performed.
    GCode(const Module& v, PermGroup g, int length, WordSet words, std::vector<Word> generators = {});

    const Module& module() const { return module_; }
    const PermGroup& group() const { return group_; }
    int length() const { return n_; }
    const WordSet& words() const { return words_; }
    const std::vector<Word>& generators() const { return generators_; }
    std::size_t size() const { return words_.size(); }
    bool contains(const Word& u) const { return gcodes::contains(words_, u); }

    /// Exhaustive: contains 0, closed under +, R-scalars and G.
    bool is_g_code() const;

private:
    Module module_;
    PermGroup group_;
    int n_;
    WordSet words_;
    std::vector<Word> generators_;
};

/// The set M of forms a dual is taken against.
struct DualSpec {
    std::vector<BilinearForm> forms;
};

/// {beta0 . (r (x) s)} for each listed form, deduplicated.
DualSpec orbit_dual_spec(const std::vector<BilinearForm>& forms);

/// Least R[G]-submodule containing gens. Throws DimensionMismatch, CapExceeded.
GCode code_closure(const Module& v, const PermGroup& g, const std::vector<Word>& gens,
                   long long cap = kDefaultCodeCap);

/// Brute force {v in V^n : beta^n(v, u) = 0 for all beta in M, u in words}.
/// Throws CapExceeded when |V|^n > cap.
WordSet dual_words(const Module& v, int length, const WordSet& words, const DualSpec& m,
                   long long cap = kDefaultAmbientCap);
GCode dual(const GCode& c, const DualSpec& m, long long cap = kDefaultAmbientCap);

/// theta(C). Throws NotAUnit.
WordSet theta_code(const GCode& c);

/// {v in theta(V^n) : beta^n_G(v, u) = 0 for all beta in M, u in theta_c}. Throws NotThetaFixed.
WordSet g_dual(const ThetaImage& ambient, const WordSet& theta_c, const DualSpec& m);

struct LemmaDualResult {
    bool ok;
    WordSet g_dual;         // (theta C)^{perp_G}
    WordSet theta_dual_mg;  // theta(C^perp) M_G
};

LemmaDualResult lemma_dual_check(const GCode& c, const DualSpec& m, long long cap = kDefaultAmbientCap);

struct HaydenResult {
    bool ok;
    std::string failed_clause;  // empty when ok
    WordSet theta_c_perp;       // (theta C)^perp in V^n
    WordSet ker_theta;
    WordSet theta_dual;         // theta(C^perp)
    WordSet sum;                // ker theta + theta(C^perp)
};

/// (theta C)^perp = ker theta (+) theta(C^perp): set equality, trivial
/// intersection, and |ker| * |theta(C^perp)| = |sum|.
HaydenResult hayden_check(const GCode& c, const DualSpec& m, long long cap = kDefaultAmbientCap);

struct CodePredicates {
    bool self_orthogonal = false;
    bool self_dual = false;
    bool g_self_orthogonal = false;
    bool g_self_dual = false;
    bool isotropic = false;
    bool g_isotropic = false;
};

CodePredicates predicates(const GCode& c, const DualSpec& m, const std::vector<QuadraticMap>& phis,
                          long long cap = kDefaultAmbientCap);

/// G-isotropy of a subset D of theta(V^n): D inside its G-dual and every
/// phi^n_G vanishing on D.
bool g_isotropic_set(const ThetaImage& ambient, const WordSet& d, const DualSpec& m,
                     const std::vector<QuadraticMap>& phis);

/// Predicate on submodules that must hold for every submodule of an accepted one.
using SubmoduleFilter = std::function<bool(const WordSet&)>;

/// All R-submodules of theta(V^n) (optionally only those accepted by `keep`),
/// ordered by (size, word list). Throws CapExceeded when |theta(V^n)| > cap.
std::vector<WordSet> enumerate_submodules(const ThetaImage& ambient, long long cap = kDefaultSubmoduleCap,
                                          const SubmoduleFilter& keep = {});

/// iota C. Throws NotIdempotent.
GCode idempotent_image(const GCode& c, RingElem iota);

struct IotaSelfDualResult {
    bool applicable;  // C is G-self-dual
    bool ok;          // iota C is G-self-dual (meaningful when applicable)
    WordSet theta_iota_c;
    WordSet g_dual;
};

IotaSelfDualResult iota_selfdual_check(const GCode& c, RingElem iota, const DualSpec& m);

struct RuLemmaResult {
    bool literal_ok;    // v in Rw  =>  v in R^* w
    bool corrected_ok;  // Rv = Rw  =>  v in R^* w
    std::vector<std::pair<Word, Word>> literal_counterexamples;    // (v, w), ambient order
    std::vector<std::pair<Word, Word>> corrected_counterexamples;
};

RuLemmaResult ru_lemma_check(const ThetaImage& ambient);

}  // namespace gcodes
