#pragma once

// Subresultant pseudo-remainder sequences over a UFD coefficient ring R.
// Instantiated for R = Int (polynomials in Z[x]) and R = ZPoly (Z[z][y]).
//
// Ring requirements, provided through RingTraits<R>:
//   zero(), one(), is_zero(r), exact_div(a, b), gcd(a, b), pow(r, n)

#include "quadorbit/zpoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace quadorbit::detail {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Int> {
    static Int zero() { return 0; }
    static Int one() { return 1; }
    static bool is_zero(const Int& a) { return sgn(a) == 0; }
    static Int exact_div(const Int& a, const Int& b) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Int gcd(const Int& a, const Int& b) { return quadorbit::gcd(a, b); }
    static Int pow(const Int& a, unsigned long n) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), n);
        return r;
    }
};

template <>
struct RingTraits<ZPoly> {
    static ZPoly zero() { return {}; }
    static ZPoly one() { return ZPoly(1); }
    static bool is_zero(const ZPoly& a) { return a.is_zero(); }
    static ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
        if (b.is_constant()) return quadorbit::exact_div(a, b[0]);
        return quadorbit::exact_div(a, b);
    }
    static ZPoly gcd(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return quadorbit::gcd(a, b);
    }
    static ZPoly pow(const ZPoly& a, unsigned long n) { return quadorbit::pow(a, static_cast<unsigned>(n)); }
};

template <class R>
using PolyOver = std::vector<R>;

template <class R>
void trim(PolyOver<R>& p) {
    while (!p.empty() && RingTraits<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
int deg(const PolyOver<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in place on a copy of a.
template <class R>
PolyOver<R> prem(PolyOver<R> r, const PolyOver<R>& b) {
    using T = RingTraits<R>;
    int db = deg(b);
    if (db < 0) throw std::domain_error("prem by zero polynomial");
    int e = deg(r) - db + 1;
    if (e <= 0) return r;
    const R& lb = b.back();
    while (deg(r) >= db) {
        R lr = r.back();
        int shift = deg(r) - db;
        for (auto& coef : r) coef *= lb;
        for (int i = 0; i < db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
        r.pop_back();
        trim(r);
        --e;
    }
    if (e > 0) {
        R f = T::pow(lb, static_cast<unsigned long>(e));
        for (auto& coef : r) coef *= f;
    }
    return r;
}

template <class R>
R content_of(const PolyOver<R>& p) {
    using T = RingTraits<R>;
    R g = T::zero();
    for (const auto& c : p) {
        g = T::gcd(g, c);
        if (g == T::one()) break;
    }
    return g;
}

template <class R>
PolyOver<R> divide_coeffs(PolyOver<R> p, const R& k) {
    for (auto& c : p) c = RingTraits<R>::exact_div(c, k);
    return p;
}

/// Resultant by the subresultant algorithm (Cohen, Alg. 3.3.7), equal to the
/// determinant of the Sylvester matrix with the rows of a first. No content is
/// removed; callers strip scalar content beforehand when it helps.
template <class R>
R subresultant_resultant(PolyOver<R> a, PolyOver<R> b) {
    using T = RingTraits<R>;
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return T::zero();
    int sign = 1;
    if (deg(a) < deg(b)) {
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -1;
        std::swap(a, b);
    }
    if (deg(b) == 0) {
        R r = T::pow(b[0], static_cast<unsigned long>(deg(a)));
        return sign < 0 ? R(T::zero() - r) : r;
    }
    R g = T::one();
    R h = T::one();
    for (;;) {
        int delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
        PolyOver<R> r = prem(a, b);
        a = std::move(b);
        if (r.empty()) return T::zero();
        R div = g * T::pow(h, static_cast<unsigned long>(delta));
        b = divide_coeffs(std::move(r), div);
        g = a.back();
        // h <- h^(1 - delta) g^delta
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = T::exact_div(T::pow(g, static_cast<unsigned long>(delta)),
                             T::pow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (deg(b) == 0) {
            int da = deg(a);
            R out;
            if (da == 0) {
                out = T::one();
            } else if (da == 1) {
                out = b[0];
            } else {
                out = T::exact_div(T::pow(b[0], static_cast<unsigned long>(da)),
                                   T::pow(h, static_cast<unsigned long>(da - 1)));
            }
            return sign < 0 ? R(T::zero() - out) : out;
        }
    }
}

/// Greatest common divisor by the subresultant PRS (Cohen, Alg. 3.3.1).
/// Result is primitive times gcd of the contents; sign is not normalized.
template <class R>
PolyOver<R> subresultant_gcd(PolyOver<R> a, PolyOver<R> b) {
    using T = RingTraits<R>;
    trim(a);
    trim(b);
    if (deg(b) > deg(a)) std::swap(a, b);
    if (b.empty()) return a;
    R ca = content_of(a), cb = content_of(b);
    R d = T::gcd(ca, cb);
    a = divide_coeffs(std::move(a), ca);
    b = divide_coeffs(std::move(b), cb);
    R g = T::one(), h = T::one();
    for (;;) {
        int delta = deg(a) - deg(b);
        PolyOver<R> r = prem(a, b);
        if (r.empty()) break;
        if (deg(r) == 0) {
            b = PolyOver<R>{T::one()};
            break;
        }
        a = std::move(b);
        R div = g * T::pow(h, static_cast<unsigned long>(delta));
        b = divide_coeffs(std::move(r), div);
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = T::exact_div(T::pow(g, static_cast<unsigned long>(delta)),
                             T::pow(h, static_cast<unsigned long>(delta - 1)));
        }
    }
    R cb2 = content_of(b);
    b = divide_coeffs(std::move(b), cb2);
    for (auto& c : b) c *= d;
    return b;
}

}  // namespace quadorbit::detail
