#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gcodes {

struct RingElem {
    int residue = 0;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// The ring Z/m.
class Ring {
public:
    explicit Ring(int modulus);

    int modulus() const { return m_; }
    RingElem reduce(long long z) const;
    RingElem add(RingElem a, RingElem b) const { return {(a.residue + b.residue) % m_}; }
    RingElem sub(RingElem a, RingElem b) const { return {(a.residue - b.residue + m_) % m_}; }
    RingElem neg(RingElem a) const { return {(m_ - a.residue) % m_}; }
    RingElem mul(RingElem a, RingElem b) const { return {a.residue * b.residue % m_}; }
    std::vector<RingElem> elements() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    int m_;
};

struct RingSpec {
    int modulus = 2;
    int module_rank = 1;
};

/// Element of V = R^k, identified by its index in the lexicographic order of
/// coordinate tuples (coordinate 0 most significant).
using ModIndex = int;

/// The free module V = (Z/m)^k with precomputed addition and scalar tables.
class Module {
public:
    explicit Module(RingSpec spec);

    const Ring& ring() const { return ring_; }
    const RingSpec& spec() const { return spec_; }
    int rank() const { return spec_.module_rank; }
    int size() const { return size_; }

    ModIndex add(ModIndex a, ModIndex b) const { return add_[static_cast<std::size_t>(a * size_ + b)]; }
    ModIndex neg(ModIndex a) const { return neg_[static_cast<std::size_t>(a)]; }
    ModIndex sub(ModIndex a, ModIndex b) const { return add(a, neg(b)); }
    ModIndex scale(RingElem r, ModIndex a) const { return scale_[static_cast<std::size_t>(r.residue * size_ + a)]; }

    std::vector<int> coords(ModIndex a) const;
    ModIndex index(const std::vector<int>& coords) const;

    std::string to_string(ModIndex a) const;

private:
    RingSpec spec_;
    Ring ring_;
    int size_;
    std::vector<ModIndex> add_;
    std::vector<ModIndex> neg_;
    std::vector<ModIndex> scale_;
};

struct Involution {
    std::vector<RingElem> table;

    static Involution identity(const Ring& r);
    RingElem operator()(RingElem a) const { return table[static_cast<std::size_t>(a.residue)]; }
};

/// {r : gcd(r, m) = 1}, ascending.
std::vector<RingElem> list_units(const Ring& r);

/// {r : r^2 = r}, ascending.
std::vector<RingElem> list_idempotents(const Ring& r);

/// Inverse of z mod m. Throws NotAUnit when gcd(z, m) != 1.
RingElem check_unit(const Ring& r, long long z);

/// Exhaustively checks J(J(r)) = r, additivity, anti-multiplicativity and
/// J(1) = 1. Throws InvalidInvolution naming a witness.
void validate_involution(const Ring& r, const Involution& j);

}  // namespace gcodes
