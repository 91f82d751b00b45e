#include "gcodes/perm.hpp"

#include "gcodes/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace gcodes {

Perm Perm::from_images(const std::vector<int>& one_based) {
    Perm p;
    p.img_.reserve(one_based.size());
    std::vector<bool> seen(one_based.size(), false);
    for (int x : one_based) {
        if (x < 1 || x > static_cast<int>(one_based.size()) || seen[static_cast<std::size_t>(x - 1)])
            throw InvalidPermutation("images are not a bijection of [1.." + std::to_string(one_based.size()) + "]");
        seen[static_cast<std::size_t>(x - 1)] = true;
        p.img_.push_back(x - 1);
    }
    return p;
}

Perm Perm::identity(int n) {
    Perm p;
    p.img_.resize(static_cast<std::size_t>(n));
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

std::vector<int> Perm::one_based() const {
    std::vector<int> out;
    for (int x : img_) out.push_back(x + 1);
    return out;
}

Perm Perm::operator*(const Perm& rhs) const {
    if (rhs.degree() != degree()) throw InvalidPermutation("composing permutations of different degree");
    Perm p;
    p.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) p.img_[i] = img_[static_cast<std::size_t>(rhs.img_[i])];
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return p;
}

Word Perm::act(const Word& v) const {
    Word out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[static_cast<std::size_t>(img_[j])] = v[j];
    return out;
}

// ---- PermGroup ----

PermGroup::PermGroup(int degree, std::vector<Perm> elements, std::vector<Perm> generators)
    : n_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
}

bool PermGroup::contains(const Perm& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

PermGroup group_closure(int degree, const std::vector<Perm>& generators, long long cap) {
    if (degree < 1) throw InvalidPermutation("group degree must be >= 1");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw InvalidPermutation("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                                     std::to_string(degree));
    std::set<Perm> seen{Perm::identity(degree)};
    std::deque<Perm> queue{Perm::identity(degree)};
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Perm next = g * cur;
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > cap) throw CapExceeded("permutation group closure", cap);
                queue.push_back(next);
            }
        }
    }
    return PermGroup(degree, std::vector<Perm>(seen.begin(), seen.end()), generators);
}

std::vector<PermGroup> all_subgroups(int degree) {
    auto full = group_closure(degree, [&] {
        std::vector<Perm> gens;
        for (int i = 0; i + 1 < degree; ++i) {
            auto img = Perm::identity(degree).one_based();
            std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i + 1)]);
            gens.push_back(Perm::from_images(img));
        }
        return gens;
    }());
    // Start from cyclic subgroups and join with single elements until no new subgroup appears.
    std::set<std::vector<Perm>> found;
    std::vector<PermGroup> frontier;
    auto add = [&](PermGroup g) {
        if (found.insert(g.elements()).second) frontier.push_back(std::move(g));
    };
    for (const auto& x : full.elements()) add(group_closure(degree, {x}));
    std::vector<PermGroup> all;
    while (!frontier.empty()) {
        auto batch = std::move(frontier);
        frontier.clear();
        for (auto& h : batch) {
            for (const auto& x : full.elements()) {
                if (h.contains(x)) continue;
                auto gens = h.generators();
                gens.push_back(x);
                add(group_closure(degree, gens));
            }
            all.push_back(std::move(h));
        }
    }
    std::sort(all.begin(), all.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return all;
}

OrbitData orbit_decomposition(const PermGroup& g) {
    const int n = g.degree();
    OrbitData d;
    d.orbit_of.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (d.orbit_of[static_cast<std::size_t>(i)] >= 0) continue;
        std::set<int> orbit;
        for (const auto& x : g.elements()) orbit.insert(x(i));
        const int idx = d.t();
        for (int j : orbit) d.orbit_of[static_cast<std::size_t>(j)] = idx;
        d.orbits.emplace_back(orbit.begin(), orbit.end());
        d.reps.push_back(*orbit.begin());
        d.sizes.push_back(static_cast<int>(orbit.size()));
    }
    return d;
}

std::vector<int> orbit_length_diagonal(const PermGroup& g) {
    auto d = orbit_decomposition(g);
    std::vector<int> diag;
    for (int j = 0; j < g.degree(); ++j) diag.push_back(d.sizes[static_cast<std::size_t>(d.orbit_of[static_cast<std::size_t>(j)])]);
    return diag;
}

Word apply_orbit_lengths(const Module& v, const std::vector<int>& diagonal, const Word& u) {
    if (diagonal.size() != u.size()) throw DimensionMismatch("orbit-length matrix and word lengths differ");
    Word out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) out[j] = v.scale(v.ring().reduce(diagonal[j]), u[j]);
    return out;
}

std::vector<std::vector<int>> permutation_matrix(const Perm& g) {
    const auto n = static_cast<std::size_t>(g.degree());
    std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) p[static_cast<std::size_t>(g(static_cast<int>(j)))][j] = 1;
    return p;
}

Word theta_apply(const PermGroup& g, const Module& v, const Word& u) {
    const RingElem inv = check_unit(v.ring(), static_cast<long long>(g.order()));
    Word sum(u.size(), 0);
    for (const auto& x : g.elements()) {
        Word gu = x.act(u);
        for (std::size_t i = 0; i < u.size(); ++i) sum[i] = v.add(sum[i], gu[i]);
    }
    for (auto& s : sum) s = v.scale(inv, s);
    return sum;
}

long long word_key(const Module& v, const Word& u) {
    long long k = 0;
    for (auto x : u) k = k * v.size() + x;
    return k;
}

Word word_from_key(const Module& v, int length, long long key) {
    Word u(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        u[static_cast<std::size_t>(i)] = static_cast<ModIndex>(key % v.size());
        key /= v.size();
    }
    return u;
}

std::vector<Word> all_words(const Module& v, int length, long long cap) {
    long long total = 1;
    for (int i = 0; i < length; ++i) {
        total *= v.size();
        if (total > cap) throw CapExceeded("|V|^" + std::to_string(length) + " words", cap);
    }
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long long k = 0; k < total; ++k) out.push_back(word_from_key(v, length, k));
    return out;
}

// ---- ThetaImage ----

ThetaImage::ThetaImage(const PermGroup& g, const Module& v, long long cap)
    : module_(v), orbits_(orbit_decomposition(g)), n_(g.degree()) {
    check_unit(v.ring(), static_cast<long long>(g.order()));
    for (const auto& c : all_words(v, orbits_.t(), cap)) {
        index_.emplace(word_key(module_, expand(c)), elements_.size());
        elements_.push_back(expand(c));
    }
}

bool ThetaImage::is_fixed(const Word& u) const {
    if (static_cast<int>(u.size()) != n_) return false;
    for (std::size_t j = 0; j < u.size(); ++j)
        if (u[j] != u[static_cast<std::size_t>(orbits_.reps[static_cast<std::size_t>(orbits_.orbit_of[j])])])
            return false;
    return true;
}

std::size_t ThetaImage::index_of(const Word& u) const {
    if (static_cast<int>(u.size()) == n_) {
        auto it = index_.find(word_key(module_, u));
        if (it != index_.end()) return it->second;
    }
    throw NotThetaFixed("word is not constant on the G-orbits");
}

Word ThetaImage::collapse(const Word& u) const {
    if (!is_fixed(u)) throw NotThetaFixed("word is not constant on the G-orbits");
    Word c;
    for (int r : orbits_.reps) c.push_back(u[static_cast<std::size_t>(r)]);
    return c;
}

Word ThetaImage::expand(const Word& c) const {
    if (static_cast<int>(c.size()) != orbits_.t()) throw DimensionMismatch("collapsed word has wrong length");
    Word u(static_cast<std::size_t>(n_));
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = c[static_cast<std::size_t>(orbits_.orbit_of[j])];
    return u;
}

}  // namespace gcodes
