#include "bifrac.hpp"

#include "quadorbit/dynamics.hpp"

#include <algorithm>

namespace quadorbit::detail {

std::vector<BiFrac> preperiodic_factors(const BiFrac& c, const BiFrac& x) {
    const BiFracContext& ctx = *x.ctx;
    auto out = preperiodic_relation_factors(x, c, make_const(ctx, Rat(1)));
    return {out.begin(), out.end()};
}

BiPoly embed(const UniPoly& p, int which, const BiFracContext& ctx) {
    return BiPoly::from_uni(p, which, ctx.v1(), ctx.v2());
}

namespace {

// Homogenized evaluation b^deg * p(a/b) for p of degree <= deg.
BiPoly homogenize(const UniPoly& p, const BiPoly& a, const BiPoly& b, int deg, const BiFracContext& ctx) {
    BiPoly acc = ctx.constant(Rat(0));
    std::vector<BiPoly> bp(static_cast<std::size_t>(deg) + 1, ctx.constant(Rat(1)));
    for (int i = 1; i <= deg; ++i) bp[static_cast<std::size_t>(i)] = bp[static_cast<std::size_t>(i) - 1] * b;
    BiPoly apow = ctx.constant(Rat(1));
    for (int i = 0; i <= p.degree(); ++i) {
        const Rat& k = p.coeffs()[static_cast<std::size_t>(i)];
        if (!k.is_zero()) acc += apow * bp[static_cast<std::size_t>(deg - i)] * k;
        if (i < p.degree()) apow = apow * a;
    }
    return acc;
}

}  // namespace

BiFrac substitute(const RatFunc& f, const BiFrac& x) {
    const BiFracContext& ctx = *x.ctx;
    int dn = f.num().is_zero() ? 0 : f.num().degree();
    int dd = f.den().degree();
    int d = std::max(dn, dd);
    BiPoly n = homogenize(f.num(), x.num, x.den, d, ctx);
    BiPoly m = homogenize(f.den(), x.num, x.den, d, ctx);
    return BiFrac{n, m, &ctx}.reduced();
}

}  // namespace quadorbit::detail
