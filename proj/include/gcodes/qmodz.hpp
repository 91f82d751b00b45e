#pragma once

#include "gcodes/rational.hpp"

#include <compare>
#include <string>

namespace gcodes {

/// An element of Q/Z, stored as its unique representative in [0, 1).
class QmodZ {
public:
    QmodZ() = default;
    explicit QmodZ(const Rational& value);
    QmodZ(long long num, long long den);

    static QmodZ parse(std::string_view text);

    const Rational& value() const { return value_; }
    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_zero() const { return value_ == 0; }

    QmodZ operator+(const QmodZ& rhs) const;
    QmodZ operator-(const QmodZ& rhs) const;
    QmodZ operator-() const;
    QmodZ& operator+=(const QmodZ& rhs);
    QmodZ& operator-=(const QmodZ& rhs);

    /// (z * a) mod 1.
    QmodZ scaled(const Integer& z) const;
    QmodZ scaled(long long z) const { return scaled(Integer(static_cast<long>(z))); }

    friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const QmodZ& a, const QmodZ& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const { return gcodes::to_string(value_); }

private:
    static Rational reduce(const Rational& r);
    Rational value_{0};
};

}  // namespace gcodes
