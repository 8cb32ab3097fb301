#include "quadorbit/zpoly.hpp"

#include "prs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadorbit {

ZPoly::ZPoly(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const Int& coeff, std::size_t degree) {
    ZPoly p;
    if (coeff == 0) return p;
    p.c_.assign(degree + 1, Int(0));
    p.c_[degree] = coeff;
    return p;
}

void ZPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Int& ZPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly& ZPoly::operator*=(const ZPoly& o) {
    *this = *this * o;
    return *this;
}

ZPoly& ZPoly::operator*=(const Int& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

namespace {

std::size_t max_bits(const std::vector<Int>& v) {
    std::size_t m = 0;
    for (const auto& x : v)
        if (sgn(x) != 0) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
}

// Kronecker substitution: evaluate at 2^k, multiply the big integers, split.
Int pack(const std::vector<Int>& v, std::size_t lo, std::size_t hi, mp_bitcnt_t k) {
    if (hi - lo == 1) return v[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    Int high = pack(v, mid, hi, k);
    mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), k * (mid - lo));
    return high + pack(v, lo, mid, k);
}

void unpack(Int m, std::vector<Int>& out, std::size_t lo, std::size_t hi, mp_bitcnt_t k) {
    if (hi - lo == 1) {
        out[lo] = std::move(m);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    mp_bitcnt_t bits = k * (mid - lo);
    Int low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), m.get_mpz_t(), bits);
    if (mpz_tstbit(low.get_mpz_t(), bits - 1)) {
        Int span;
        mpz_setbit(span.get_mpz_t(), bits);
        low -= span;
    }
    m -= low;
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), bits);
    unpack(std::move(low), out, lo, mid, k);
    unpack(std::move(m), out, mid, hi, k);
}

}  // namespace

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::size_t n = x.size() + y.size() - 1;
    std::vector<Int> out(n);
    if (std::min(x.size(), y.size()) < 12) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
        }
        return ZPoly(std::move(out));
    }
    std::size_t terms = std::min(x.size(), y.size());
    mp_bitcnt_t k = max_bits(x) + max_bits(y) + mpz_sizeinbase(Int(static_cast<unsigned long>(terms)).get_mpz_t(), 2) + 2;
    Int prod = pack(x, 0, x.size(), k) * pack(y, 0, y.size(), k);
    unpack(std::move(prod), out, 0, n, k);
    return ZPoly(std::move(out));
}

ZPoly pow(const ZPoly& p, unsigned e) {
    ZPoly out(1), base = p;
    while (e) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return out;
}

Int ZPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Int ZPoly::eval_homogeneous(const Int& u, const Int& v) const {
    Int acc = 0, vp = 1;
    // Horner in u with powers of v attached to the lower coefficients.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= u;
        acc += *it * vp;
        vp *= v;
    }
    return acc;
}

Rat ZPoly::eval(const Rat& x) const {
    if (c_.empty()) return Rat(0);
    Int h = eval_homogeneous(x.num_ref(), x.den_ref());
    Int d;
    mpz_pow_ui(d.get_mpz_t(), x.den_ref().get_mpz_t(), static_cast<unsigned long>(degree()));
    return Rat::normalize(h, d);
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(d));
}

ZPoly ZPoly::shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<Int> v(k, Int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return ZPoly(std::move(v));
}

std::string ZPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& a = c_[i];
        if (sgn(a) == 0) continue;
        Int mag = ::abs(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Int content(const ZPoly& p) {
    Int g = 0;
    for (const auto& x : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (sgn(p.lc()) < 0) g = -g;
    return exact_div(p, g);
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
    return ZPoly(detail::prem<Int>(a.coeffs(), b.coeffs()));
}

ZPoly exact_div(const ZPoly& a, const Int& k) {
    if (k == 0) throw std::domain_error("division by zero");
    std::vector<Int> q(a.coeffs());
    for (auto& x : q) {
        if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t()))
            throw std::domain_error("inexact scalar division");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    }
    return ZPoly(std::move(q));
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact division: remainder " + a.str());
    std::vector<Int> r(a.coeffs());
    const auto& d = b.coeffs();
    std::size_t db = d.size() - 1;
    std::vector<Int> q(r.size() - db);
    const Int& lb = d.back();
    Int qi;
    for (std::size_t i = q.size(); i-- > 0;) {
        Int& top = r[i + db];
        if (sgn(top) != 0) {
            if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
                throw std::domain_error("inexact division: leading coefficient does not divide");
            mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
            for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), qi.get_mpz_t(), d[j].get_mpz_t());
            q[i] = qi;
        }
    }
    ZPoly rem(std::move(r));
    if (!rem.is_zero()) throw std::domain_error("inexact division: remainder " + rem.str());
    return ZPoly(std::move(q));
}

bool divides(const ZPoly& b, const ZPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    return prem(a, b).is_zero();
}

namespace {

// Certificate: if gcd(a mod p, b mod p) is constant for a prime p that does
// not divide both leading coefficients, gcd(a, b) over Q is constant.
bool coprime_by_modular_certificate(const ZPoly& a, const ZPoly& b) {
    int tries = 0;
    for (std::uint64_t p = 1000003; tries < 3; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_fdiv_ui(a.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lc().get_mpz_t(), p) == 0) continue;
        ++tries;
        if (gcd_degree_mod(reduce_mod(a, p), reduce_mod(b, p), p) == 0) return true;
    }
    return false;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    Int cg = gcd(content(a), content(b));
    if (a.degree() == 0 || b.degree() == 0) return ZPoly(cg);
    if (coprime_by_modular_certificate(a, b)) return ZPoly(cg);
    ZPoly g = primitive_part(ZPoly(detail::subresultant_gcd<Int>(a.coeffs(), b.coeffs())));
    return g * cg;
}

ZPoly squarefree_part(const ZPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    ZPoly pp = primitive_part(p);
    if (pp.degree() <= 0) return pp;
    ZPoly g = gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return primitive_part(exact_div(pp, primitive_part(g)));
}

Int cauchy_bound(const ZPoly& p) {
    if (p.degree() <= 0) return 1;
    Int m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Int a = ::abs(p[i]);
        if (a > m) m = a;
    }
    Int lc = ::abs(p.lc());
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

// ---- modular helpers ---------------------------------------------------

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1u) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1u;
    }
    return r;
}

void trim_mod(ModPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ModPoly reduce_mod(const ZPoly& p, std::uint64_t prime) {
    ModPoly v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = mpz_fdiv_ui(p[i].get_mpz_t(), prime);
    trim_mod(v);
    return v;
}

std::uint64_t eval_mod(const ModPoly& p, std::uint64_t x, std::uint64_t prime) {
    std::uint64_t acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = (mulmod(acc, x, prime) + *it) % prime;
    return acc;
}

ModPoly derivative_mod(const ModPoly& p, std::uint64_t prime) {
    if (p.size() <= 1) return {};
    ModPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = mulmod(p[i], i % prime, prime);
    trim_mod(d);
    return d;
}

int gcd_degree_mod(ModPoly a, ModPoly b, std::uint64_t prime) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        // a <- a mod b
        std::uint64_t inv = powmod(b.back(), prime - 2, prime);
        while (a.size() >= b.size()) {
            std::uint64_t q = mulmod(a.back(), inv, prime);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + prime - mulmod(q, b[i], prime)) % prime;
            trim_mod(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace quadorbit
