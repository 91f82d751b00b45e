#include "gcodes/cyclotomic.hpp"

#include "gcodes/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace gcodes {

namespace {

using Poly = std::vector<long>;  // lowest degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; the remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {};
    Poly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        long c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw Error("cyclotomic polynomial division left a remainder");
    return q;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
const Poly& cyclotomic_poly(int n, std::map<int, Poly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(p, cyclotomic_poly(d, memo));
    return memo.emplace(n, std::move(p)).first->second;
}

std::map<long long, int> factorize(long long s) {
    std::map<long long, int> out;
    for (long long p = 2; p * p <= s; ++p)
        while (s % p == 0) {
            ++out[p];
            s /= p;
        }
    if (s > 1) ++out[s];
    return out;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---- CycField ----

const CycField& CycField::get(int conductor) {
    if (conductor < 1) throw ConductorMismatch("conductor must be positive, got " + std::to_string(conductor));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycField>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(conductor);
    if (it == cache.end()) it = cache.emplace(conductor, std::unique_ptr<CycField>(new CycField(conductor))).first;
    return *it->second;
}

CycField::CycField(int conductor) : conductor_(conductor), degree_(euler_phi(conductor)) {
    std::map<int, Poly> memo;
    poly_ = cyclotomic_poly(conductor, memo);

    powers_.assign(static_cast<std::size_t>(conductor), Poly(static_cast<std::size_t>(degree_), 0));
    Poly cur(static_cast<std::size_t>(degree_), 0);
    cur[0] = 1;
    for (int e = 0; e < conductor; ++e) {
        powers_[static_cast<std::size_t>(e)] = cur;
        // multiply by x, then subtract lead * Phi_K (monic) to drop degree phi(K)
        long lead = cur[static_cast<std::size_t>(degree_ - 1)];
        for (int i = degree_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (lead != 0)
            for (int i = 0; i < degree_; ++i) cur[static_cast<std::size_t>(i)] -= lead * poly_[static_cast<std::size_t>(i)];
    }
}

const std::vector<long>& CycField::power(long long e) const {
    long long r = e % conductor_;
    if (r < 0) r += conductor_;
    return powers_[static_cast<std::size_t>(r)];
}

// ---- Cyclotomic ----

Cyclotomic::Cyclotomic(const CycField& field, const Rational& r) : field_(&field) {
    if (r != 0) {
        coeffs_.assign(static_cast<std::size_t>(field.degree()), Rational(0));
        coeffs_[0] = r;
    }
}

Cyclotomic::Cyclotomic(const CycField& field, std::vector<Rational> coeffs) : field_(&field) {
    if (coeffs.size() != static_cast<std::size_t>(field.degree()))
        throw DimensionMismatch("cyclotomic coefficient vector has length " + std::to_string(coeffs.size()) +
                                ", expected " + std::to_string(field.degree()));
    coeffs_ = std::move(coeffs);
    normalize();
}

Cyclotomic Cyclotomic::zeta_power(const CycField& f, long long e) {
    const auto& row = f.power(e);
    std::vector<Rational> c(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) c[i] = row[i];
    return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::from_exponent_counts(const CycField& f, std::span<const long long> counts,
                                            const Rational& scale) {
    const auto deg = static_cast<std::size_t>(f.degree());
    std::vector<Integer> acc(deg, Integer(0));
    for (std::size_t e = 0; e < counts.size(); ++e) {
        if (counts[e] == 0) continue;
        const auto& row = f.power(static_cast<long long>(e));
        for (std::size_t i = 0; i < deg; ++i)
            if (row[i] != 0) acc[i] += Integer(static_cast<long>(counts[e])) * row[i];
    }
    std::vector<Rational> c(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        c[i] = Rational(acc[i]) / scale;
        c[i].canonicalize();
    }
    return Cyclotomic(f, std::move(c));
}

void Cyclotomic::normalize() {
    for (const auto& c : coeffs_)
        if (c != 0) return;
    coeffs_.clear();
}

void Cyclotomic::check_same_field(const Cyclotomic& other) const {
    if (field_ != other.field_)
        throw ConductorMismatch("conductors " + std::to_string(conductor()) + " and " +
                                std::to_string(other.conductor()));
}

std::vector<Rational> Cyclotomic::coefficients() const {
    if (coeffs_.empty()) return std::vector<Rational>(static_cast<std::size_t>(field_->degree()), Rational(0));
    return coeffs_;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const { return !coeffs_.empty() && coeffs_[0] == 1 && is_rational(); }

Rational Cyclotomic::rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
        coeffs_ = rhs.coeffs_;
        return *this;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    check_same_field(rhs);
    if (rhs.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
        *this = -rhs;
        return *this;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    Cyclotomic out = *this;
    out += rhs;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    Cyclotomic out = *this;
    out -= rhs;
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Rational& rhs) const {
    if (rhs == 0 || coeffs_.empty()) return Cyclotomic(*field_);
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= rhs;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    check_same_field(rhs);
    if (coeffs_.empty() || rhs.coeffs_.empty()) return Cyclotomic(*field_);
    if (rhs.is_rational()) return *this * rhs.coeffs_[0];
    if (is_rational()) return rhs * coeffs_[0];

    const auto deg = coeffs_.size();
    const auto k = static_cast<std::size_t>(field_->conductor());
    // exponents i + j < 2 phi(K) <= 2K; fold through zeta^K = 1, then reduce
    std::vector<Rational> acc(k, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            acc[(i + j) % k] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rational> out(deg, Rational(0));
    for (std::size_t e = 0; e < k; ++e) {
        if (acc[e] == 0) continue;
        if (e < deg) {
            out[e] += acc[e];
            continue;
        }
        const auto& row = field_->power(static_cast<long long>(e));
        for (std::size_t i = 0; i < deg; ++i)
            if (row[i] != 0) out[i] += acc[e] * row[i];
    }
    return Cyclotomic(*field_, std::move(out));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    *this = *this * rhs;
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (coeffs_.empty()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
    if (is_rational()) return Cyclotomic(*field_, Rational(1 / coeffs_[0]));

    // Solve (x * y) = 1 for y: column j of the system is x * zeta^j.
    const auto deg = coeffs_.size();
    std::vector<std::vector<Rational>> a(deg, std::vector<Rational>(deg + 1, Rational(0)));
    for (std::size_t j = 0; j < deg; ++j) {
        Cyclotomic col = *this * zeta_power(*field_, static_cast<long long>(j));
        auto cc = col.coefficients();
        for (std::size_t i = 0; i < deg; ++i) a[i][j] = cc[i];
    }
    a[0][deg] = 1;
    for (std::size_t col = 0; col < deg; ++col) {
        std::size_t piv = col;
        while (piv < deg && a[piv][col] == 0) ++piv;
        if (piv == deg) throw DivisionByZero("singular multiplication map");
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (std::size_t j = col; j <= deg; ++j) a[col][j] *= inv;
        for (std::size_t r = 0; r < deg; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = col; j <= deg; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> y(deg);
    for (std::size_t i = 0; i < deg; ++i) y[i] = a[i][deg];
    return Cyclotomic(*field_, std::move(y));
}

Cyclotomic Cyclotomic::conj() const {
    if (coeffs_.empty()) return *this;
    const auto deg = coeffs_.size();
    std::vector<Rational> out(deg, Rational(0));
    for (std::size_t e = 0; e < deg; ++e) {
        if (coeffs_[e] == 0) continue;
        const auto& row = field_->power(-static_cast<long long>(e));
        for (std::size_t i = 0; i < deg; ++i)
            if (row[i] != 0) out[i] += coeffs_[e] * row[i];
    }
    return Cyclotomic(*field_, std::move(out));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double k = field_->conductor();
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / k;
        z += coeffs_[e].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::vector<std::string> Cyclotomic::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coefficients()) out.push_back(gcodes::to_string(c));
    return out;
}

std::string Cyclotomic::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + gcodes::to_string(coeffs_[e]) + ")";
        if (e > 0) s += "*z" + std::to_string(conductor()) + "^" + std::to_string(e);
    }
    return s;
}

// ---- free functions ----

Cyclotomic root_of_unity(const QmodZ& a, int conductor) {
    const auto& f = CycField::get(conductor);
    Integer den = a.denominator();
    if (Integer(conductor) % den != 0)
        throw ConductorMismatch("denominator " + den.get_str() + " does not divide conductor " +
                                std::to_string(conductor));
    Integer e = a.numerator() * (Integer(conductor) / den);
    return Cyclotomic::zeta_power(f, e.get_si());
}

int sqrt_conductor(long long s) {
    long long k = 8;
    for (auto [p, mult] : factorize(s))
        if (mult % 2 == 1 && p != 2) k = std::lcm(k, 4 * p);
    return static_cast<int>(k);
}

Cyclotomic sqrt_of_nat(long long s, int conductor) {
    if (s < 1) throw ConductorMismatch("square root requested for non-positive " + std::to_string(s));
    const auto& f = CycField::get(conductor);
    Cyclotomic result(f, Rational(1));
    for (auto [p, mult] : factorize(s)) {
        Integer whole;
        mpz_ui_pow_ui(whole.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(mult / 2));
        result = result * Rational(whole);
        if (mult % 2 == 0) continue;
        if (p == 2) {
            if (conductor % 8 != 0) throw ConductorMismatch("sqrt(2) needs 8 | K, K = " + std::to_string(conductor));
            const long long z8 = conductor / 8;
            result *= Cyclotomic::zeta_power(f, z8) + Cyclotomic::zeta_power(f, -z8);
            continue;
        }
        const bool three_mod_four = p % 4 == 3;
        if (conductor % p != 0 || (three_mod_four && conductor % 4 != 0))
            throw ConductorMismatch("sqrt(" + std::to_string(p) + ") needs " + (three_mod_four ? "4" : "") +
                                    std::to_string(p) + " | K, K = " + std::to_string(conductor));
        // Gauss sum g = sum_j zeta_p^{j^2}: g = sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4
        std::vector<long long> counts(static_cast<std::size_t>(conductor), 0);
        const long long zp = conductor / p;
        for (long long j = 0; j < p; ++j) ++counts[static_cast<std::size_t>((j * j % p) * zp)];
        Cyclotomic g = Cyclotomic::from_exponent_counts(f, counts);
        if (three_mod_four) g *= Cyclotomic::zeta_power(f, -(conductor / 4));
        result *= g;
    }
    return result;
}

}  // namespace gcodes
