#include "quadorbit/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadorbit {

std::vector<Rat> RootReport::values() const {
    std::vector<Rat> out;
    out.reserve(roots.size());
    for (const auto& [r, m] : roots) out.push_back(r);
    return out;
}

bool RootReport::contains(const Rat& r) const {
    return std::any_of(roots.begin(), roots.end(), [&](const auto& e) { return e.first == r; });
}

namespace {

Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int eval_mod_big(const ZPoly& p, const Int& x, const Int& m) {
    Int acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
        acc = mod_nonneg(acc, m);
    }
    return acc;
}

// Multiplicity of the root u/v (lowest terms) in p, counted by exact deflation.
int multiplicity(ZPoly p, const Int& u, const Int& v) {
    ZPoly lin(std::vector<Int>{-u, v});
    int m = 0;
    while (!p.is_zero() && p.degree() >= 1 && sgn(p.eval_homogeneous(u, v)) == 0) {
        p = exact_div(p, lin);
        ++m;
    }
    return m;
}

void add_root(RootReport& rep, const ZPoly& original, const Int& u, const Int& v) {
    Rat r = Rat::normalize(u, v);
    if (rep.contains(r)) return;
    rep.roots.emplace_back(r, multiplicity(original, r.num(), r.den()));
}

// Roots of a x^2 + b x + c (or b x + c) through the discriminant.
bool small_degree(RootReport& rep, const ZPoly& original, const ZPoly& p, bool integers_only) {
    if (p.degree() == 1) {
        rep.method = rep.method == "none" ? "linear" : rep.method;
        Rat r = Rat::normalize(-p[0], p[1]);
        if (!integers_only || r.is_integer()) add_root(rep, original, r.num(), r.den());
        return true;
    }
    if (p.degree() == 2) {
        rep.method = "quadratic";
        Int disc = p[1] * p[1] - 4 * p[2] * p[0];
        if (sgn(disc) < 0) return true;
        auto s = exact_sqrt(disc);
        if (!s) return true;
        for (const Int& root_num : {Int(-p[1] + *s), Int(-p[1] - *s)}) {
            Rat r = Rat::normalize(root_num, 2 * p[2]);
            if (!integers_only || r.is_integer()) add_root(rep, original, r.num(), r.den());
        }
        return true;
    }
    return false;
}

std::uint64_t choose_prime(const ZPoly& s) {
    Int lc = s.lc();
    for (std::uint64_t q = 53;; q += 2) {
        if (!is_prime(q)) continue;
        if (sgn(Int(lc % Int(static_cast<unsigned long>(q)))) == 0) continue;
        ModPoly sm = reduce_mod(s, q);
        if (gcd_degree_mod(sm, derivative_mod(sm, q), q) == 0) return q;
    }
}

// Core search. With scale == 1 it finds integer roots; with scale == lc(s)
// it finds a * root for every rational root (the a^(n-1) s(x / a) transform,
// applied implicitly: modular roots of s are multiplied by a before the
// symmetric lift is read off).
void modular_roots(RootReport& rep, const ZPoly& original, const ZPoly& s, bool integers_only) {
    std::uint64_t q = choose_prime(s);
    rep.method = "hensel";
    rep.prime = q;
    ModPoly sm = reduce_mod(s, q), dm = derivative_mod(sm, q);

    Int a = integers_only ? Int(1) : Int(abs(s.lc()));
    Int bound = cauchy_bound(s) * a;
    Int target = 2 * bound + 1;

    Int Q = static_cast<unsigned long>(q);
    unsigned k = 1;
    Int M = Q;
    while (M <= target) {
        M *= M;
        k *= 2;
    }
    rep.precision = k;

    ZPoly ds = s.derivative();
    for (std::uint64_t x0 = 0; x0 < q; ++x0) {
        if (eval_mod(sm, x0, q) != 0) continue;
        if (eval_mod(dm, x0, q) == 0) throw std::logic_error("non-simple root modulo a squarefree reduction");
        // Quadratic Newton lifting: r is a root modulo mod.
        Int r = static_cast<unsigned long>(x0), mod = Q;
        while (mod < M) {
            Int next = mod * mod;
            Int fr = eval_mod_big(s, r, next);
            Int dr = eval_mod_big(ds, r, next);
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), next.get_mpz_t()) == 0)
                throw std::logic_error("derivative not invertible during lifting");
            r = mod_nonneg(r - fr * inv, next);
            mod = next;
        }
        Int x = mod_nonneg(a * r, M);
        if (x > M / 2) x -= M;
        if (abs(x) > bound) continue;
        if (integers_only) {
            if (sgn(s.eval(x)) == 0) add_root(rep, original, x, 1);
        } else {
            Rat cand = Rat::normalize(x, a);
            if (sgn(s.eval_homogeneous(cand.num(), cand.den())) == 0) add_root(rep, original, cand.num(), cand.den());
        }
    }
}

RootReport find_roots(const ZPoly& input, bool integers_only) {
    if (input.is_zero()) throw std::invalid_argument("root finding on the zero polynomial");
    RootReport rep;
    ZPoly p = primitive_part(input);
    std::size_t low = 0;
    while (low < p.size() && sgn(p[low]) == 0) ++low;
    if (low > 0) rep.roots.emplace_back(Rat(0), static_cast<int>(low));
    ZPoly rest(std::vector<Int>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
    if (rest.degree() >= 1) {
        if (!small_degree(rep, rest, rest, integers_only)) {
            ZPoly s = squarefree_part(rest);
            if (!small_degree(rep, rest, s, integers_only)) modular_roots(rep, rest, s, integers_only);
        }
    }
    std::sort(rep.roots.begin(), rep.roots.end());
    return rep;
}

}  // namespace

RootReport integer_roots(const ZPoly& p) { return find_roots(p, true); }

RootReport rational_roots(const ZPoly& p) { return find_roots(p, false); }

RootReport rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root finding on the zero polynomial");
    return find_roots(content_primitive(p).primitive, false);
}

}  // namespace quadorbit
