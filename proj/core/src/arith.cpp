#include "quadorbit/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace quadorbit {

Rat Rat::normalize(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    Rat r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Int parse_signed(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed integer");
    Int v(std::string(s), 10);
    return neg ? Int(-v) : v;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    try {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rat(parse_signed(text));
        auto den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw bad();
        Int den(std::string(den_text), 10);
        if (den == 0) throw bad();
        return normalize(parse_signed(text.substr(0, slash)), den);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& r, unsigned e) {
    Rat out(1), base = r;
    while (e) {
        if (e & 1u) out *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return out;
}

Int height(const Rat& x) {
    Int n = ::abs(x.num_ref());
    const Int& d = x.den_ref();
    return n > d ? n : d;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    if (n < 2) return n;
    // Start above the root so the Newton sequence decreases monotonically.
    Int x = Int(1) << static_cast<mp_bitcnt_t>((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rat> is_square(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    auto a = exact_sqrt(x.num_ref());
    if (!a) return std::nullopt;
    auto b = exact_sqrt(x.den_ref());
    if (!b) return std::nullopt;
    return Rat::normalize(*a, *b);
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace quadorbit

std::size_t std::hash<quadorbit::Rat>::operator()(const quadorbit::Rat& r) const noexcept {
    auto h1 = mpz_fdiv_ui(r.num_ref().get_mpz_t(), 1000000007UL);
    auto h2 = mpz_fdiv_ui(r.den_ref().get_mpz_t(), 998244353UL);
    return static_cast<std::size_t>(h1) * 1315423911UL ^ static_cast<std::size_t>(h2);
}
