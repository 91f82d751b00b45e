#pragma once

#include "gcodes/ring.hpp"

#include <compare>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace gcodes {

/// A codeword in V^n: one module element per coordinate.
using Word = std::vector<ModIndex>;

/// Permutation of {1..n}. Stored 0-based: image(i) = g(i+1) - 1.
class Perm {
public:
    Perm() = default;
    /// From 1-based images, as written in scenario files. Throws InvalidPermutation.
    static Perm from_images(const std::vector<int>& one_based);
    static Perm identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> one_based() const;

    /// (this * rhs)(i) = this(rhs(i)).
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;

    /// g . v = (v_{g^-1(1)}, ..., v_{g^-1(n)}).
    Word act(const Word& v) const;

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> img_;
};

class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> elements, std::vector<Perm> generators);

    int degree() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    /// Sorted lexicographically by images; identity first.
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    bool contains(const Perm& g) const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.n_ == b.n_ && a.elements_ == b.elements_;
    }

private:
    int n_;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
};

constexpr long long kDefaultGroupCap = 10000;

/// Breadth-first closure of the generators. Throws CapExceeded, InvalidPermutation.
PermGroup group_closure(int degree, const std::vector<Perm>& generators, long long cap = kDefaultGroupCap);

/// Every subgroup of S_n, each listed once, ordered by (order, element list).
std::vector<PermGroup> all_subgroups(int degree);

struct OrbitData {
    std::vector<std::vector<int>> orbits;  // 0-based positions, each sorted; sorted by representative
    std::vector<int> reps;                 // minimal member of each orbit
    std::vector<int> sizes;
    std::vector<int> orbit_of;             // position -> orbit index
    int t() const { return static_cast<int>(reps.size()); }
};

OrbitData orbit_decomposition(const PermGroup& g);

/// The diagonal of the orbit-length matrix: entry j is the size of the orbit of j.
std::vector<int> orbit_length_diagonal(const PermGroup& g);

/// u M_G: coordinate j multiplied by the orbit length of j.
Word apply_orbit_lengths(const Module& v, const std::vector<int>& diagonal, const Word& u);

/// 0/1 permutation matrix P with P[g(j)][j] = 1, so P v realizes g . v.
std::vector<std::vector<int>> permutation_matrix(const Perm& g);

/// |G|^-1 sum_g g.u. Throws NotAUnit when |G| is not invertible mod m.
Word theta_apply(const PermGroup& g, const Module& v, const Word& u);

/// Linear index of a word in the lexicographic order of V^n.
long long word_key(const Module& v, const Word& u);
Word word_from_key(const Module& v, int length, long long key);

/// All of V^n in lexicographic order. Throws CapExceeded when |V|^n > cap.
std::vector<Word> all_words(const Module& v, int length, long long cap);

/// theta(V^n) with the isomorphism u -> u_G onto V^t.
class ThetaImage {
public:
    ThetaImage(const PermGroup& g, const Module& v, long long cap = 1 << 20);

    const Module& module() const { return module_; }
    const OrbitData& orbits() const { return orbits_; }
    int length() const { return n_; }
    int t() const { return orbits_.t(); }
    std::size_t size() const { return elements_.size(); }
    /// Ordered by the lexicographic order of the collapsed word (equal to the
    /// lexicographic order of the words themselves).
    const std::vector<Word>& elements() const { return elements_; }

    bool is_fixed(const Word& u) const;
    /// Position of u in elements(). Throws NotThetaFixed.
    std::size_t index_of(const Word& u) const;

    /// u -> (u_{alpha_1}, ..., u_{alpha_t}). Throws NotThetaFixed.
    Word collapse(const Word& u) const;
    /// c -> sum_i c_i * indicator(orbit i).
    Word expand(const Word& c) const;

private:
    Module module_;
    OrbitData orbits_;
    int n_;
    std::vector<Word> elements_;
    std::unordered_map<long long, std::size_t> index_;
};

}  // namespace gcodes
