#include "gcodes/ring.hpp"

#include "gcodes/errors.hpp"

#include <numeric>

namespace gcodes {

Ring::Ring(int modulus) : m_(modulus) {
    if (modulus < 2) throw AssumptionViolated("ring modulus must be >= 2, got " + std::to_string(modulus));
}

RingElem Ring::reduce(long long z) const {
    long long r = z % m_;
    if (r < 0) r += m_;
    return {static_cast<int>(r)};
}

std::vector<RingElem> Ring::elements() const {
    std::vector<RingElem> out;
    for (int i = 0; i < m_; ++i) out.push_back({i});
    return out;
}

Module::Module(RingSpec spec) : spec_(spec), ring_(spec.modulus), size_(1) {
    if (spec.module_rank < 1)
        throw AssumptionViolated("module rank must be >= 1, got " + std::to_string(spec.module_rank));
    for (int i = 0; i < spec.module_rank; ++i) {
        if (size_ > (1 << 20) / spec.modulus) throw AssumptionViolated("module V too large to enumerate");
        size_ *= spec.modulus;
    }
    const auto n = static_cast<std::size_t>(size_);
    add_.resize(n * n);
    neg_.resize(n);
    scale_.resize(static_cast<std::size_t>(spec.modulus) * n);
    const int m = spec.modulus;
    for (int a = 0; a < size_; ++a) {
        auto ca = coords(a);
        for (int b = 0; b < size_; ++b) {
            auto cb = coords(b);
            std::vector<int> s(ca.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = (ca[i] + cb[i]) % m;
            add_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = index(s);
        }
        std::vector<int> ng(ca.size());
        for (std::size_t i = 0; i < ng.size(); ++i) ng[i] = (m - ca[i]) % m;
        neg_[static_cast<std::size_t>(a)] = index(ng);
        for (int r = 0; r < m; ++r) {
            std::vector<int> sc(ca.size());
            for (std::size_t i = 0; i < sc.size(); ++i) sc[i] = r * ca[i] % m;
            scale_[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(a)] = index(sc);
        }
    }
}

std::vector<int> Module::coords(ModIndex a) const {
    std::vector<int> c(static_cast<std::size_t>(spec_.module_rank));
    for (int i = spec_.module_rank - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = a % spec_.modulus;
        a /= spec_.modulus;
    }
    return c;
}

ModIndex Module::index(const std::vector<int>& coords) const {
    if (coords.size() != static_cast<std::size_t>(spec_.module_rank))
        throw DimensionMismatch("module element with " + std::to_string(coords.size()) + " coordinates, rank is " +
                                std::to_string(spec_.module_rank));
    ModIndex idx = 0;
    for (int c : coords) {
        if (c < 0 || c >= spec_.modulus)
            throw DimensionMismatch("coordinate " + std::to_string(c) + " outside [0, " +
                                    std::to_string(spec_.modulus) + ")");
        idx = idx * spec_.modulus + c;
    }
    return idx;
}

std::string Module::to_string(ModIndex a) const {
    auto c = coords(a);
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

Involution Involution::identity(const Ring& r) { return {r.elements()}; }

std::vector<RingElem> list_units(const Ring& r) {
    std::vector<RingElem> out;
    for (int i = 0; i < r.modulus(); ++i)
        if (std::gcd(i, r.modulus()) == 1) out.push_back({i});
    return out;
}

std::vector<RingElem> list_idempotents(const Ring& r) {
    std::vector<RingElem> out;
    for (auto a : r.elements())
        if (r.mul(a, a) == a) out.push_back(a);
    return out;
}

RingElem check_unit(const Ring& r, long long z) {
    const RingElem zr = r.reduce(z);
    for (auto a : r.elements())
        if (r.mul(a, zr).residue == 1 % r.modulus()) return a;
    throw NotAUnit(std::to_string(z) + " is not a unit modulo " + std::to_string(r.modulus()));
}

void validate_involution(const Ring& r, const Involution& j) {
    const auto m = static_cast<std::size_t>(r.modulus());
    if (j.table.size() != m)
        throw InvalidInvolution("table has " + std::to_string(j.table.size()) + " entries, ring has " +
                                std::to_string(m));
    for (auto v : j.table)
        if (v.residue < 0 || v.residue >= r.modulus())
            throw InvalidInvolution("image " + std::to_string(v.residue) + " is not a residue");
    if (j(RingElem{1}).residue != 1)
        throw InvalidInvolution("J(1) = " + std::to_string(j(RingElem{1}).residue) + " != 1");
    auto pair = [](RingElem a, RingElem b) {
        return "(" + std::to_string(a.residue) + ", " + std::to_string(b.residue) + ")";
    };
    for (auto a : r.elements()) {
        if (j(j(a)) != a) throw InvalidInvolution("J(J(r)) != r at r = " + std::to_string(a.residue));
        for (auto b : r.elements()) {
            if (j(r.add(a, b)) != r.add(j(a), j(b))) throw InvalidInvolution("J not additive at " + pair(a, b));
            if (j(r.mul(a, b)) != r.mul(j(b), j(a)))
                throw InvalidInvolution("J(rs) != J(s)J(r) at " + pair(a, b));
        }
    }
}

}  // namespace gcodes
