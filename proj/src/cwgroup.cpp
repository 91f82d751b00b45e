#include "gcodes/cwgroup.hpp"

#include "gcodes/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace gcodes {

namespace {

std::vector<RingElem> principal_ideal(const Ring& r, RingElem a) {
    std::set<RingElem> out;
    for (auto x : r.elements()) out.insert(r.mul(a, x));
    return {out.begin(), out.end()};
}

// iota R -> target R, iota r -> y r, for some y making it a well-defined bijection.
bool isomorphic_cyclic(const Ring& r, RingElem iota, RingElem target) {
    const auto src = principal_ideal(r, iota);
    const auto dst = principal_ideal(r, target);
    if (src.size() != dst.size()) return false;
    for (auto y : dst) {
        std::vector<int> image(static_cast<std::size_t>(r.modulus()), -1);
        bool ok = true;
        for (auto x : r.elements()) {
            auto a = r.mul(iota, x), b = r.mul(y, x);
            int& slot = image[static_cast<std::size_t>(a.residue)];
            if (slot >= 0 && slot != b.residue) {
                ok = false;
                break;
            }
            slot = b.residue;
        }
        if (!ok) continue;
        std::set<int> hit;
        for (auto a : src) hit.insert(image[static_cast<std::size_t>(a.residue)]);
        if (hit.size() == dst.size()) return true;
    }
    return false;
}

Word scale_word(const Module& v, RingElem r, const Word& a) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = v.scale(r, a[i]);
    return out;
}

Word add_words(const Module& v, const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = v.add(a[i], b[i]);
    return out;
}

int representation_conductor(const ThetaImage& ambient, const FormRingRep& rep, const IdempotentSearch& idem) {
    long long k = std::lcm(8LL, rep.beta0().denominator());
    for (const auto& phi : rep.phis()) k = std::lcm(k, phi.denominator());
    for (const auto& s : idem.found) {
        std::set<Word> image;
        for (const auto& u : ambient.elements()) image.insert(scale_word(ambient.module(), s.iota, u));
        k = std::lcm(k, static_cast<long long>(sqrt_conductor(static_cast<long long>(image.size()))));
    }
    return static_cast<int>(k);
}

std::string residue(RingElem r) { return std::to_string(r.residue); }

std::vector<CycVector> canonical_basis(const CycField& field, std::size_t dim, const std::vector<CycVector>& vs) {
    EchelonBasis e(field, dim);
    for (const auto& v : vs) e.insert(v);
    return e.rows();
}

CycVector combine(const CycField& field, std::size_t dim, const std::vector<CycVector>& basis, const CycVector& x) {
    CycVector out(dim, Cyclotomic::zero(field));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < dim; ++i)
            if (!basis[j][i].is_zero()) out[i] += basis[j][i] * x[j];
    }
    return out;
}

}  // namespace

// ---- symmetric idempotents ----

IdempotentSearch find_symmetric_idempotents(const Ring& r, const Involution& j) {
    IdempotentSearch out;
    for (auto iota : list_idempotents(r)) {
        const RingElem ij = j(iota);
        if (!isomorphic_cyclic(r, iota, ij)) {
            out.rejected.push_back(iota);
            continue;
        }
        std::set<RingElem> mus, nus;
        for (auto x : r.elements()) {
            mus.insert(r.mul(r.mul(iota, x), ij));
            nus.insert(r.mul(r.mul(ij, x), iota));
        }
        SymmetricIdempotent s{iota, {}, {}, {}};
        for (auto mu : mus)
            for (auto nu : nus)
                if (r.mul(mu, nu) == iota) s.all_pairs.emplace_back(mu, nu);
        if (s.all_pairs.empty()) {
            out.rejected.push_back(iota);
            continue;
        }
        s.mu = s.all_pairs.front().first;
        s.nu = s.all_pairs.front().second;
        out.found.push_back(std::move(s));
    }
    return out;
}

// ---- GRepresentation ----

GRepresentation::GRepresentation(const PermGroup& g, FormRingRep rep, long long ambient_cap)
    : group_(g), ambient_(g, rep.module(), ambient_cap), rep_(std::move(rep)),
      idempotents_(find_symmetric_idempotents(rep_.module().ring(), rep_.involution())) {
    field_ = &CycField::get(representation_conductor(ambient_, rep_, idempotents_));
}

WordSet GRepresentation::scalar_image(RingElem iota) const {
    WordSet out;
    for (const auto& u : ambient_.elements()) out.push_back(scale_word(ambient_.module(), iota, u));
    normalize(out);
    return out;
}

// ---- generators ----

CycMatrix gen_m_r(const GRepresentation& rho, RingElem r) {
    const Ring& ring = rho.ambient().module().ring();
    check_unit(ring, r.residue);
    const auto& elems = rho.ambient().elements();
    CycMatrix m(rho.field(), elems.size(), elems.size());
    for (std::size_t u = 0; u < elems.size(); ++u)
        m(rho.ambient().index_of(scale_word(rho.ambient().module(), r, elems[u])), u) = Cyclotomic::one(rho.field());
    return m;
}

CycMatrix gen_d_phi(const GRepresentation& rho, const QuadraticMap& phi) {
    const auto& elems = rho.ambient().elements();
    CycMatrix m(rho.field(), elems.size(), elems.size());
    for (std::size_t u = 0; u < elems.size(); ++u)
        m(u, u) = root_of_unity(quadratic_eval_g(phi, rho.ambient(), elems[u]), rho.conductor());
    return m;
}

CycMatrix gen_h(const GRepresentation& rho, const SymmetricIdempotent& s) {
    const ThetaImage& amb = rho.ambient();
    const Module& v = amb.module();
    const Ring& ring = v.ring();
    const BilinearForm& beta = rho.rep().beta0();
    const CycField& f = rho.field();
    const long long k = f.conductor(), d = beta.denominator();

    const WordSet image = rho.scalar_image(s.iota);
    const Cyclotomic scale = sqrt_of_nat(static_cast<long long>(image.size()), static_cast<int>(k)).inverse();
    std::vector<Cyclotomic> phase;
    for (long long e = 0; e < k; ++e) phase.push_back(Cyclotomic::zeta_power(f, e) * scale);

    std::vector<Word> image_collapsed;
    for (const auto& w : image) image_collapsed.push_back(amb.collapse(w));
    const RingElem one_minus = ring.sub({1 % ring.modulus()}, s.iota);

    const auto& elems = amb.elements();
    CycMatrix m(f, elems.size(), elems.size());
    for (std::size_t u = 0; u < elems.size(); ++u) {
        const Word nu_u = amb.collapse(scale_word(v, s.nu, elems[u]));
        const Word base = scale_word(v, one_minus, elems[u]);
        for (std::size_t i = 0; i < image.size(); ++i) {
            const long long e = beta.raw_n(image_collapsed[i], nu_u) * (k / d);
            m(amb.index_of(add_words(v, base, image[i])), u) += phase[static_cast<std::size_t>(e)];
        }
    }
    return m;
}

namespace {

std::string h_name(const SymmetricIdempotent& s) {
    return "h[iota=" + residue(s.iota) + ",mu=" + residue(s.mu) + ",nu=" + residue(s.nu) + "]";
}

}  // namespace

void for_each_generator(const GRepresentation& rho, bool with_h, const std::function<void(NamedMatrix&&)>& fn) {
    for (auto r : list_units(rho.ambient().module().ring())) fn({"m_r[r=" + residue(r) + "]", gen_m_r(rho, r)});
    for (std::size_t i = 0; i < rho.rep().phis().size(); ++i)
        fn({"d_phi[" + std::to_string(i) + "]", gen_d_phi(rho, rho.rep().phis()[i])});
    if (with_h)
        for (const auto& s : rho.h_list()) fn({h_name(s), gen_h(rho, s)});
}

std::vector<std::string> cw_generator_names(const GRepresentation& rho) {
    std::vector<std::string> out;
    for (auto r : list_units(rho.ambient().module().ring())) out.push_back("m_r[r=" + residue(r) + "]");
    for (std::size_t i = 0; i < rho.rep().phis().size(); ++i) out.push_back("d_phi[" + std::to_string(i) + "]");
    for (const auto& s : rho.h_list()) out.push_back(h_name(s));
    return out;
}

std::vector<NamedMatrix> parabolic_generators(const GRepresentation& rho) {
    std::vector<NamedMatrix> out;
    for_each_generator(rho, false, [&](NamedMatrix&& g) { out.push_back(std::move(g)); });
    return out;
}

std::vector<NamedMatrix> cw_generators(const GRepresentation& rho) {
    std::vector<NamedMatrix> out;
    for_each_generator(rho, true, [&](NamedMatrix&& g) { out.push_back(std::move(g)); });
    return out;
}

// ---- closure and fixed spaces ----

MatrixGroup group_closure_matrices(const std::vector<CycMatrix>& gens, long long cap) {
    if (gens.empty()) throw DimensionMismatch("matrix group closure needs at least one generator");
    const auto& f = gens.front().field();
    const std::size_t n = gens.front().rows();
    for (const auto& g : gens)
        if (!g.is_square() || g.rows() != n) throw DimensionMismatch("generators of different sizes");

    MatrixGroup out;
    std::unordered_set<std::string> seen;
    out.elements.push_back(CycMatrix::identity(f, n));
    seen.insert(out.elements.front().key());
    for (std::size_t head = 0; head < out.elements.size(); ++head)
        for (const auto& g : gens) {
            CycMatrix next = out.elements[head] * g;
            if (seen.insert(next.key()).second) {
                out.elements.push_back(std::move(next));
                if (static_cast<long long>(out.elements.size()) > cap) throw CapExceeded("matrix group order", cap);
            }
        }
    return out;
}

std::vector<CycVector> fixed_space(const CycField& field, std::size_t dim, const std::vector<CycMatrix>& gens) {
    std::vector<const CycMatrix*> monomial, dense;
    for (const auto& g : gens) {
        if (g.rows() != dim || g.cols() != dim) throw DimensionMismatch("generator size differs from dimension");
        (g.is_monomial() ? monomial : dense).push_back(&g);
    }

    // Monomial part: a_{sigma(u)} = c a_u along every edge; one basis vector
    // per orbit on which the propagated values are consistent.
    std::vector<std::vector<std::pair<std::size_t, Cyclotomic>>> edges(dim);
    for (const auto* g : monomial)
        for (std::size_t u = 0; u < dim; ++u)
            for (std::size_t r = 0; r < dim; ++r)
                if (!(*g)(r, u).is_zero()) {
                    edges[u].emplace_back(r, (*g)(r, u));
                    break;
                }

    std::vector<CycVector> basis;
    std::vector<char> visited(dim, 0);
    for (std::size_t root = 0; root < dim; ++root) {
        if (visited[root]) continue;
        CycVector a(dim, Cyclotomic::zero(field));
        std::vector<std::size_t> orbit{root};
        visited[root] = 1;
        a[root] = Cyclotomic::one(field);
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& [to, c] : edges[orbit[i]])
                if (!visited[to]) {
                    visited[to] = 1;
                    a[to] = c * a[orbit[i]];
                    orbit.push_back(to);
                }
        bool consistent = true;
        for (auto u : orbit)
            for (const auto& [to, c] : edges[u])
                if (!(a[to] == c * a[u])) consistent = false;
        if (consistent) basis.push_back(std::move(a));
    }

    // Dense part: restrict to the current basis, one generator at a time.
    for (const auto* g : dense) {
        if (basis.empty()) break;
        std::vector<CycVector> columns;
        for (const auto& b : basis) {
            CycVector w = g->apply(b);
            for (std::size_t i = 0; i < dim; ++i) w[i] -= b[i];
            columns.push_back(std::move(w));
        }
        CycMatrix w(field, dim, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) w(i, j) = columns[j][i];
        std::vector<CycVector> next;
        for (const auto& x : nullspace(w)) next.push_back(combine(field, dim, basis, x));
        basis = std::move(next);
    }
    return canonical_basis(field, dim, basis);
}

// ---- theorem checks ----

ParainvReport verify_parainv(const GRepresentation& rho, long long submodule_cap) {
    const ThetaImage& amb = rho.ambient();
    const DualSpec m = rho.dual_spec();
    const auto& phis = rho.rep().phis();
    ParainvReport r;
    r.isotropic_codes = enumerate_submodules(amb, submodule_cap,
                                             [&](const WordSet& d) { return g_isotropic_set(amb, d, m, phis); });
    std::vector<CycVector> fwes;
    for (const auto& d : r.isotropic_codes) fwes.push_back(fwe_g(amb, d, rho.field()));
    r.span_basis = canonical_basis(rho.field(), amb.size(), fwes);

    std::vector<CycMatrix> gens;
    for (auto& g : parabolic_generators(rho)) gens.push_back(std::move(g.matrix));
    r.fixed_basis = fixed_space(rho.field(), amb.size(), gens);
    r.comparison = span_compare(r.span_basis, r.fixed_basis);
    r.ok = r.comparison.relation == SpanRelation::Equal;
    return r;
}

CwinvResult verify_cwinv(const GRepresentation& rho, const GCode& c) {
    const auto p = predicates(c, rho.dual_spec(), rho.rep().phis());
    if (!p.g_self_dual || !p.g_isotropic)
        throw NotSelfDualIsotropic(std::string("code is not ") + (p.g_self_dual ? "" : "G-self-dual") +
                                   (!p.g_self_dual && !p.g_isotropic ? " and not " : "") +
                                   (p.g_isotropic ? "" : "G-isotropic"));
    CwinvResult r{true, {}, fwe_g(rho.ambient(), theta_code(c), rho.field())};
    // one generator at a time: dense h matrices get large
    for_each_generator(rho, true, [&](NamedMatrix&& g) {
        if (g.matrix.apply(r.fwe) != r.fwe) {
            r.ok = false;
            r.failing_generators.push_back(g.name);
        }
    });
    return r;
}

std::string to_string(ConjectureVerdict v) {
    switch (v) {
        case ConjectureVerdict::Equal: return "equal";
        case ConjectureVerdict::StrictInclusion: return "strict-inclusion";
        case ConjectureVerdict::InclusionViolated: return "inclusion-violated";
    }
    return "unknown";
}

ConjectureReport conjecture_explore(const GRepresentation& rho, long long submodule_cap) {
    const ThetaImage& amb = rho.ambient();
    const DualSpec m = rho.dual_spec();
    const auto& phis = rho.rep().phis();
    ConjectureReport r;
    for (auto& d : enumerate_submodules(amb, submodule_cap,
                                        [&](const WordSet& w) { return g_isotropic_set(amb, w, m, phis); }))
        if (g_dual(amb, d, m) == d) r.self_dual_isotropic_codes.push_back(std::move(d));

    std::vector<CycVector> fwes;
    for (const auto& d : r.self_dual_isotropic_codes) fwes.push_back(fwe_g(amb, d, rho.field()));
    std::vector<CycMatrix> gens;
    for (auto& g : cw_generators(rho)) gens.push_back(std::move(g.matrix));
    r.fixed_basis = fixed_space(rho.field(), amb.size(), gens);
    r.comparison = span_compare(fwes, r.fixed_basis);
    switch (r.comparison.relation) {
        case SpanRelation::Equal: r.verdict = ConjectureVerdict::Equal; break;
        case SpanRelation::FirstInSecond: r.verdict = ConjectureVerdict::StrictInclusion; break;
        default: r.verdict = ConjectureVerdict::InclusionViolated; break;
    }
    return r;
}

}  // namespace gcodes
