#include "gcodes/codes.hpp"

#include "gcodes/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace gcodes {

namespace {

Word add_words(const Module& v, const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = v.add(a[i], b[i]);
    return out;
}

Word scale_word(const Module& v, RingElem r, const Word& a) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = v.scale(r, a[i]);
    return out;
}

bool is_zero_word(const Word& u) {
    return std::all_of(u.begin(), u.end(), [](ModIndex x) { return x == 0; });
}

bool annihilates(const DualSpec& m, const Word& v, const WordSet& words) {
    for (const auto& beta : m.forms)
        for (const auto& u : words)
            if (beta.raw_n(v, u) != 0) return false;
    return true;
}

bool annihilates_g(const DualSpec& m, const Word& vg, const std::vector<Word>& collapsed) {
    for (const auto& beta : m.forms)
        for (const auto& ug : collapsed)
            if (beta.raw_n(vg, ug) != 0) return false;
    return true;
}

WordSet theta_image_of(const PermGroup& g, const Module& v, const WordSet& words) {
    WordSet out;
    out.reserve(words.size());
    for (const auto& u : words) out.push_back(theta_apply(g, v, u));
    normalize(out);
    return out;
}

}  // namespace

void normalize(WordSet& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool contains(const WordSet& words, const Word& u) { return std::binary_search(words.begin(), words.end(), u); }

bool is_subset(const WordSet& a, const WordSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// ---- GCode ----

GCode::GCode(const Module& v, PermGroup g, int length, WordSet words, std::vector<Word> generators)
    : module_(v), group_(std::move(g)), n_(length), words_(std::move(words)), generators_(std::move(generators)) {
    for (const auto& u : words_)
        if (static_cast<int>(u.size()) != n_) throw DimensionMismatch("codeword of the wrong length");
    normalize(words_);
}

bool GCode::is_g_code() const {
    if (!contains(Word(static_cast<std::size_t>(n_), 0))) return false;
    for (const auto& a : words_) {
        for (const auto& b : words_)
            if (!contains(add_words(module_, a, b))) return false;
        for (auto r : module_.ring().elements())
            if (!contains(scale_word(module_, r, a))) return false;
        for (const auto& g : group_.elements())
            if (!contains(g.act(a))) return false;
    }
    return true;
}

DualSpec orbit_dual_spec(const std::vector<BilinearForm>& forms) {
    DualSpec out;
    for (const auto& beta : forms)
        for (auto& f : form_orbit(beta))
            if (std::find(out.forms.begin(), out.forms.end(), f) == out.forms.end()) out.forms.push_back(std::move(f));
    return out;
}

GCode code_closure(const Module& v, const PermGroup& g, const std::vector<Word>& gens, long long cap) {
    const int n = g.degree();
    for (const auto& x : gens)
        if (static_cast<int>(x.size()) != n)
            throw DimensionMismatch("generator of length " + std::to_string(x.size()) + ", expected " +
                                    std::to_string(n));

    // Over Z/m the R-span of a set is its additive span, so it is enough to
    // close {g.x} under addition.
    std::vector<Word> spanning;
    for (const auto& x : gens)
        for (const auto& p : g.elements()) spanning.push_back(p.act(x));
    normalize(spanning);

    std::vector<Word> words{Word(static_cast<std::size_t>(n), 0)};
    std::unordered_set<long long> keys{0};
    for (const auto& s : spanning) {
        if (keys.count(word_key(v, s))) continue;
        const std::vector<Word> base = words;
        Word step = s;
        while (!keys.count(word_key(v, step))) {
            for (const auto& d : base) {
                Word w = add_words(v, d, step);
                if (keys.insert(word_key(v, w)).second) {
                    words.push_back(std::move(w));
                    if (static_cast<long long>(words.size()) > cap) throw CapExceeded("code closure size", cap);
                }
            }
            step = add_words(v, step, s);
        }
    }
    return GCode(v, g, n, std::move(words), gens);
}

WordSet dual_words(const Module& v, int length, const WordSet& words, const DualSpec& m, long long cap) {
    WordSet out;
    for (auto& cand : all_words(v, length, cap))
        if (annihilates(m, cand, words)) out.push_back(std::move(cand));
    return out;
}

GCode dual(const GCode& c, const DualSpec& m, long long cap) {
    return GCode(c.module(), c.group(), c.length(), dual_words(c.module(), c.length(), c.words(), m, cap));
}

WordSet theta_code(const GCode& c) { return theta_image_of(c.group(), c.module(), c.words()); }

WordSet g_dual(const ThetaImage& ambient, const WordSet& theta_c, const DualSpec& m) {
    std::vector<Word> collapsed;
    for (const auto& u : theta_c) collapsed.push_back(ambient.collapse(u));
    WordSet out;
    for (const auto& v : ambient.elements())
        if (annihilates_g(m, ambient.collapse(v), collapsed)) out.push_back(v);
    return out;
}

LemmaDualResult lemma_dual_check(const GCode& c, const DualSpec& m, long long cap) {
    ThetaImage ambient(c.group(), c.module());
    LemmaDualResult r;
    r.g_dual = g_dual(ambient, theta_code(c), m);
    const auto diag = orbit_length_diagonal(c.group());
    for (const auto& u : theta_code(dual(c, m, cap))) r.theta_dual_mg.push_back(apply_orbit_lengths(c.module(), diag, u));
    normalize(r.theta_dual_mg);
    r.ok = r.g_dual == r.theta_dual_mg;
    return r;
}

HaydenResult hayden_check(const GCode& c, const DualSpec& m, long long cap) {
    const Module& v = c.module();
    const PermGroup& g = c.group();
    HaydenResult r;
    r.theta_c_perp = dual_words(v, c.length(), theta_code(c), m, cap);
    for (auto& u : all_words(v, c.length(), cap))
        if (is_zero_word(theta_apply(g, v, u))) r.ker_theta.push_back(std::move(u));
    r.theta_dual = theta_code(dual(c, m, cap));
    for (const auto& a : r.ker_theta)
        for (const auto& b : r.theta_dual) r.sum.push_back(add_words(v, a, b));
    normalize(r.sum);

    r.ok = false;
    for (const auto& p : g.elements())
        if (!g.contains(p.inverse())) {
            r.failed_clause = "theta^T != theta";
            return r;
        }
    if (r.sum != r.theta_c_perp) {
        r.failed_clause = "(theta C)^perp != ker theta + theta(C^perp)";
        return r;
    }
    WordSet meet;
    std::set_intersection(r.ker_theta.begin(), r.ker_theta.end(), r.theta_dual.begin(), r.theta_dual.end(),
                          std::back_inserter(meet));
    if (meet.size() != 1) {
        r.failed_clause = "ker theta and theta(C^perp) intersect nontrivially";
        return r;
    }
    if (r.ker_theta.size() * r.theta_dual.size() != r.sum.size()) {
        r.failed_clause = "|ker theta| * |theta(C^perp)| != |sum|";
        return r;
    }
    r.ok = true;
    return r;
}

bool g_isotropic_set(const ThetaImage& ambient, const WordSet& d, const DualSpec& m,
                     const std::vector<QuadraticMap>& phis) {
    std::vector<Word> collapsed;
    for (const auto& u : d) collapsed.push_back(ambient.collapse(u));
    for (const auto& ug : collapsed) {
        for (const auto& phi : phis)
            if (phi.raw_n(ug) != 0) return false;
        if (!annihilates_g(m, ug, collapsed)) return false;
    }
    return true;
}

CodePredicates predicates(const GCode& c, const DualSpec& m, const std::vector<QuadraticMap>& phis, long long cap) {
    CodePredicates p;
    const WordSet perp = dual_words(c.module(), c.length(), c.words(), m, cap);
    p.self_orthogonal = is_subset(c.words(), perp);
    p.self_dual = c.words() == perp;

    ThetaImage ambient(c.group(), c.module());
    const WordSet tc = theta_code(c);
    const WordSet gd = g_dual(ambient, tc, m);
    p.g_self_orthogonal = is_subset(tc, gd);
    p.g_self_dual = tc == gd;

    auto vanish = [&](const WordSet& words, bool collapse) {
        for (const auto& phi : phis)
            for (const auto& u : words)
                if (phi.raw_n(collapse ? ambient.collapse(u) : u) != 0) return false;
        return true;
    };
    p.isotropic = p.self_orthogonal && vanish(c.words(), false);
    p.g_isotropic = p.g_self_orthogonal && vanish(tc, true);
    return p;
}

std::vector<WordSet> enumerate_submodules(const ThetaImage& ambient, long long cap, const SubmoduleFilter& keep) {
    const auto n = ambient.size();
    if (static_cast<long long>(n) > cap) throw CapExceeded("submodule enumeration over |theta(V^n)| = " +
                                                               std::to_string(n), cap);
    const Module& v = ambient.module();
    std::vector<std::size_t> add(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            add[a * n + b] = ambient.index_of(add_words(v, ambient.elements()[a], ambient.elements()[b]));

    auto to_words = [&](const std::vector<std::size_t>& idx) {
        WordSet w;
        for (auto i : idx) w.push_back(ambient.elements()[i]);
        return w;
    };

    using Sub = std::vector<std::size_t>;
    std::set<Sub> seen{{0}};
    std::vector<Sub> accepted{{0}};
    if (keep && !keep(to_words({0}))) return {};

    for (std::size_t head = 0; head < accepted.size(); ++head) {
        const Sub d = accepted[head];
        std::vector<char> in(n, 0);
        for (auto i : d) in[i] = 1;
        for (std::size_t x = 0; x < n; ++x) {
            if (in[x]) continue;
            std::vector<char> span = in;
            std::size_t step = x;
            while (!span[step]) {
                for (auto i : d) span[add[i * n + step]] = 1;
                step = add[step * n + x];
            }
            Sub e;
            for (std::size_t i = 0; i < n; ++i)
                if (span[i]) e.push_back(i);
            if (!seen.insert(e).second) continue;
            if (keep && !keep(to_words(e))) continue;
            accepted.push_back(std::move(e));
        }
    }

    std::vector<WordSet> out;
    out.reserve(accepted.size());
    for (const auto& s : accepted) out.push_back(to_words(s));
    std::sort(out.begin(), out.end(), [](const WordSet& a, const WordSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

GCode idempotent_image(const GCode& c, RingElem iota) {
    const Ring& r = c.module().ring();
    if (r.mul(iota, iota) != iota) throw NotIdempotent(std::to_string(iota.residue) + " is not idempotent mod " +
                                                       std::to_string(r.modulus()));
    WordSet words;
    for (const auto& u : c.words()) words.push_back(scale_word(c.module(), iota, u));
    std::vector<Word> gens;
    for (const auto& x : c.generators()) gens.push_back(scale_word(c.module(), iota, x));
    return GCode(c.module(), c.group(), c.length(), std::move(words), std::move(gens));
}

IotaSelfDualResult iota_selfdual_check(const GCode& c, RingElem iota, const DualSpec& m) {
    ThetaImage ambient(c.group(), c.module());
    const WordSet tc = theta_code(c);
    IotaSelfDualResult r;
    r.applicable = tc == g_dual(ambient, tc, m);
    r.theta_iota_c = theta_code(idempotent_image(c, iota));
    r.g_dual = g_dual(ambient, r.theta_iota_c, m);
    r.ok = r.theta_iota_c == r.g_dual;
    return r;
}

RuLemmaResult ru_lemma_check(const ThetaImage& ambient) {
    const Module& v = ambient.module();
    const Ring& ring = v.ring();
    const auto units = list_units(ring);
    auto orbit = [&](const Word& w, const std::vector<RingElem>& scalars) {
        WordSet out;
        for (auto r : scalars) out.push_back(scale_word(v, r, w));
        normalize(out);
        return out;
    };

    RuLemmaResult res{true, true, {}, {}};
    const auto& elems = ambient.elements();
    std::vector<WordSet> rw, uw;
    for (const auto& w : elems) {
        rw.push_back(orbit(w, ring.elements()));
        uw.push_back(orbit(w, units));
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const bool in_unit_orbit = contains(uw[j], elems[i]);
            if (contains(rw[j], elems[i]) && !in_unit_orbit) {
                res.literal_ok = false;
                res.literal_counterexamples.emplace_back(elems[i], elems[j]);
            }
            if (rw[i] == rw[j] && !in_unit_orbit) {
                res.corrected_ok = false;
                res.corrected_counterexamples.emplace_back(elems[i], elems[j]);
            }
        }
    return res;
}

}  // namespace gcodes
