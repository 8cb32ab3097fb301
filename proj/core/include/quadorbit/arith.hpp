#pragma once

// Exact integers and normalized rationals. Int is GMP's mpz_class; Rat keeps
// num/den in lowest terms with den > 0, so equality is structural.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace quadorbit {

using Int = mpz_class;

class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rat(const Int& v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    /// num/den reduced to lowest terms with a positive denominator.
    /// Throws std::domain_error when den == 0.
    static Rat normalize(const Int& num, const Int& den);

    /// Parses "p/q" or "p" (optional leading sign, no whitespace inside,
    /// no decimals). Throws std::invalid_argument on anything else.
    static Rat parse(std::string_view text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpz_class& num_ref() const { return v_.get_num(); }
    const mpz_class& den_ref() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);
Rat pow(const Rat& r, unsigned e);

/// max(|num|, den).
Int height(const Rat& x);

/// Floor square root of a nonnegative integer, Newton iteration with an exact
/// correction step. Throws std::domain_error for negative input.
Int isqrt(const Int& n);

/// Exact square root of n if n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

/// Nonnegative r with r*r == x, if one exists. Negative x gives nullopt.
std::optional<Rat> is_square(const Rat& x);

Int gcd(const Int& a, const Int& b);

}  // namespace quadorbit

template <>
struct std::hash<quadorbit::Rat> {
    std::size_t operator()(const quadorbit::Rat& r) const noexcept;
};
