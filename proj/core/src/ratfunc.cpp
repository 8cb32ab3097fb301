#include "quadorbit/ratfunc.hpp"

#include "expr_parser.hpp"

#include <stdexcept>

namespace quadorbit {

namespace {

const std::string& pick_var(const RatFunc& a, const RatFunc& b) {
    return a.is_constant() ? b.var() : a.var();
}

UniPoly one(const std::string& v) { return UniPoly::constant(Rat(1), v); }

}  // namespace

RatFunc::RatFunc(const UniPoly& num) : num_(num), den_(one(num.var())) {}

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

RatFunc RatFunc::constant(const Rat& c, const std::string& var) { return RatFunc(UniPoly::constant(c, var)); }

RatFunc RatFunc::variable(const std::string& var) { return RatFunc(UniPoly::variable(var)); }

RatFunc RatFunc::parse(const std::string& text, const std::string& var) {
    detail::ExprParser<RatFunc> parser(
        text,
        [&](const std::string& name) {
            if (name != var) throw std::invalid_argument("unexpected variable '" + name + "' (expected " + var + ")");
            return RatFunc::variable(var);
        },
        [&](const Rat& c) { return RatFunc::constant(c, var); },
        [](const RatFunc& f, Rat& out) {
            if (!f.is_constant()) return false;
            out = f.num().coeff(0);
            return true;
        },
        [](const RatFunc& a, const RatFunc& b) { return a / b; });
    return parser.parse();
}

int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

void RatFunc::reduce() {
    std::string v = num_.is_constant() ? den_.var() : num_.var();
    if (num_.is_zero()) {
        num_ = UniPoly(v);
        den_ = one(v);
        return;
    }
    if (!den_.is_constant()) {
        UniPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    Rat l = den_.lc();
    if (l != Rat(1)) {
        Rat inv = Rat(1) / l;
        num_ *= inv;
        den_ *= inv;
    }
    num_ = num_.relabeled(v);
    den_ = den_.relabeled(v);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    std::string v = pick_var(*this, o);
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b d') where
        // b = g b', d = g d'; only gcd(num, g) can cancel.
        UniPoly g = gcd(den_, o.den_);
        UniPoly b1 = exact_divide(den_, g), d1 = exact_divide(o.den_, g);
        num_ = num_ * d1 + o.num_ * b1;
        den_ = den_ * d1;
    }
    num_ = num_.relabeled(v);
    den_ = den_.relabeled(v);
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    std::string v = pick_var(*this, o);
    // Cross-cancel before multiplying: gcd(a, d) and gcd(c, b).
    UniPoly a = num_, b = den_, c = o.num_, d = o.den_;
    if (a.is_zero() || c.is_zero()) {
        num_ = UniPoly(v);
        den_ = one(v);
        return *this;
    }
    UniPoly g1 = gcd(a, d), g2 = gcd(c, b);
    if (!g1.is_constant()) {
        a = exact_divide(a, g1);
        d = exact_divide(d, g1);
    }
    if (!g2.is_constant()) {
        c = exact_divide(c, g2);
        b = exact_divide(b, g2);
    }
    num_ = (a * c).relabeled(v);
    den_ = (b * d).relabeled(v);
    Rat l = den_.lc();
    if (l != Rat(1)) {
        num_ *= Rat(1) / l;
        den_ *= Rat(1) / l;
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    RatFunc inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    Rat l = inv.den_.lc();
    inv.num_ *= Rat(1) / l;
    inv.den_ *= Rat(1) / l;
    return *this *= inv;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

Rat RatFunc::specialize(const Rat& t0) const {
    Rat d = den_.eval(t0);
    if (d.is_zero()) throw std::domain_error("pole at " + var() + " = " + t0.str() + " of " + str());
    return num_.eval(t0) / d;
}

std::string RatFunc::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc pow(const RatFunc& f, unsigned e) {
    // Powers of reduced fractions stay reduced.
    RatFunc out(pow(f.num(), e), pow(f.den(), e));
    return out;
}

RatFunc apply_quadmap(const RatFunc& c, const RatFunc& x) {
    // x = p/q, c = a/b: (p^2 b + a q^2) / (q^2 b).
    UniPoly q2 = x.den() * x.den();
    UniPoly num = x.num() * x.num() * c.den() + c.num() * q2;
    return RatFunc(num, q2 * c.den());
}

RatFunc compose(const RatFunc& f, const RatFunc& g) {
    // Homogeneous Horner: N(g) / D(g) with g = u/v, multiplying through by v^deg.
    int n = std::max(f.num().degree(), f.den().degree());
    const UniPoly& u = g.num();
    const UniPoly& v = g.den();
    auto homog = [&](const UniPoly& p) {
        UniPoly acc(u.var());
        std::vector<UniPoly> vpow{UniPoly::constant(Rat(1), u.var())};
        for (int i = 1; i <= n; ++i) vpow.push_back(vpow.back() * v);
        UniPoly upow = UniPoly::constant(Rat(1), u.var());
        for (int i = 0; i <= p.degree(); ++i) {
            acc += upow * vpow[static_cast<std::size_t>(n - i)] * p.coeff(static_cast<std::size_t>(i));
            upow *= u;
        }
        return acc;
    };
    return RatFunc(homog(f.num()), homog(f.den()));
}

}  // namespace quadorbit
