#include "gcodes/rational.hpp"

#include "gcodes/errors.hpp"
#include "gcodes/qmodz.hpp"

#include <cctype>
#include <numeric>

namespace gcodes {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed fraction \"" + std::string(text) + "\"");
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Integer n(std::string(num), 10);
    if (negative) n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer positive_mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r < 0) r += abs(m);
    return r;
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

// ---- QmodZ ----

Rational QmodZ::reduce(const Rational& r) {
    Rational out(positive_mod(r.get_num(), r.get_den()), r.get_den());
    out.canonicalize();
    return out;
}

QmodZ::QmodZ(const Rational& value) : value_(reduce(value)) {}

QmodZ::QmodZ(long long num, long long den) {
    if (den == 0) throw DivisionByZero("QmodZ with zero denominator");
    Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    r.canonicalize();
    value_ = reduce(r);
}

QmodZ QmodZ::parse(std::string_view text) { return QmodZ(parse_rational(text)); }

QmodZ QmodZ::operator+(const QmodZ& rhs) const { return QmodZ(Rational(value_ + rhs.value_)); }
QmodZ QmodZ::operator-(const QmodZ& rhs) const { return QmodZ(Rational(value_ - rhs.value_)); }
QmodZ QmodZ::operator-() const { return QmodZ(Rational(-value_)); }

QmodZ& QmodZ::operator+=(const QmodZ& rhs) {
    *this = *this + rhs;
    return *this;
}

QmodZ& QmodZ::operator-=(const QmodZ& rhs) {
    *this = *this - rhs;
    return *this;
}

QmodZ QmodZ::scaled(const Integer& z) const { return QmodZ(Rational(value_ * z)); }

}  // namespace gcodes
