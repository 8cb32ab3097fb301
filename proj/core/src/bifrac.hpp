#pragma once

// Quotients of bivariate polynomials, used to build the numerators of the
// iterate relations. Reduction only cancels a known list of linear factors
// (the poles of the parametrizations involved), which is all the callers need
// to recover reduced numerators.

#include "quadorbit/bipoly.hpp"
#include "quadorbit/ratfunc.hpp"

#include <string>
#include <vector>

namespace quadorbit::detail {

/// Linear factor (variable `which` minus `root`).
struct PoleFactor {
    int which;
    Rat root;
};

class BiFracContext {
public:
    BiFracContext(std::string v1, std::string v2, std::vector<PoleFactor> poles = {})
        : v1_(std::move(v1)), v2_(std::move(v2)), poles_(std::move(poles)) {}
    const std::string& v1() const { return v1_; }
    const std::string& v2() const { return v2_; }
    const std::vector<PoleFactor>& poles() const { return poles_; }

    BiPoly constant(const Rat& r) const { return BiPoly::constant(r, v1_, v2_); }
    BiPoly parse(const std::string& s) const { return BiPoly::parse(s, v1_, v2_); }
    BiPoly linear(const PoleFactor& f) const {
        return BiPoly::variable(f.which, v1_, v2_) - constant(f.root);
    }
    bool vanishes(const BiPoly& p, const PoleFactor& f) const {
        return f.which == 0 ? p.specialize_v1(f.root).is_zero() : p.specialize_v2(f.root).is_zero();
    }

private:
    std::string v1_, v2_;
    std::vector<PoleFactor> poles_;
};

struct BiFrac {
    BiPoly num, den;
    const BiFracContext* ctx = nullptr;

    BiFrac reduced() const {
        BiFrac a = *this;
        for (const auto& f : ctx->poles()) {
            BiPoly l = ctx->linear(f);
            while (!a.num.is_zero() && ctx->vanishes(a.num, f) && ctx->vanishes(a.den, f)) {
                a.num = exact_divide(a.num, l);
                a.den = exact_divide(a.den, l);
            }
        }
        return a;
    }

    friend BiFrac operator+(const BiFrac& a, const BiFrac& b) {
        return BiFrac{a.num * b.den + b.num * a.den, a.den * b.den, a.ctx}.reduced();
    }
    friend BiFrac operator-(const BiFrac& a, const BiFrac& b) {
        return BiFrac{a.num * b.den - b.num * a.den, a.den * b.den, a.ctx}.reduced();
    }
    friend BiFrac operator*(const BiFrac& a, const BiFrac& b) {
        return BiFrac{a.num * b.num, a.den * b.den, a.ctx}.reduced();
    }
    BiFrac operator-() const { return BiFrac{-num, den, ctx}; }

    /// Numerator with the context's pole factors and the content removed.
    BiPoly numerator() const {
        BiPoly n = num;
        if (n.is_zero()) return n;
        for (const auto& f : ctx->poles()) {
            BiPoly l = ctx->linear(f);
            while (!n.is_constant() && ctx->vanishes(n, f)) n = exact_divide(n, l);
        }
        return content_primitive(n).primitive;
    }

    Rat eval(const Rat& a, const Rat& b) const;  // throws std::domain_error at a pole
};

inline Rat BiFrac::eval(const Rat& a, const Rat& b) const {
    Rat d = den.eval(a, b);
    if (d.is_zero()) throw std::domain_error("pole of a bivariate fraction");
    return num.eval(a, b) / d;
}

inline BiFrac make_frac(const BiFracContext& ctx, const std::string& num, const std::string& den = "1") {
    BiPoly d = ctx.parse(den);
    if (d.is_zero()) throw std::domain_error("zero denominator");
    return BiFrac{ctx.parse(num), d, &ctx}.reduced();
}

inline BiFrac make_const(const BiFracContext& ctx, const Rat& r) {
    return BiFrac{ctx.constant(r), ctx.constant(Rat(1)), &ctx};
}

/// x^2 + c.
inline BiFrac quad(const BiFrac& c, const BiFrac& x) { return x * x + c; }

/// The six factors of f^4(x) - f^2(x) for f = x^2 + c.
std::vector<BiFrac> preperiodic_factors(const BiFrac& c, const BiFrac& x);

/// Substitutes the bivariate fraction a/b for the variable of f.
BiFrac substitute(const RatFunc& f, const BiFrac& x);

/// Embeds a univariate polynomial in variable v1 (which = 0) or v2.
BiPoly embed(const UniPoly& p, int which, const BiFracContext& ctx);

}  // namespace quadorbit::detail
