#include "quadorbit/unipoly.hpp"

#include "expr_parser.hpp"

#include <sstream>
#include <stdexcept>

namespace quadorbit {

namespace {

const std::string& merged_var(const UniPoly& a, const UniPoly& b) {
    if (a.is_constant()) return b.var();
    if (b.is_constant()) return a.var();
    if (a.var() != b.var())
        throw std::invalid_argument("polynomial variables differ: " + a.var() + " vs " + b.var());
    return a.var();
}

// Common denominator of the coefficients.
Int coeff_lcm(const std::vector<Rat>& c) {
    Int l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den_ref().get_mpz_t());
    return l;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rat> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) { trim(); }

UniPoly UniPoly::constant(const Rat& c, std::string var) { return UniPoly(std::vector<Rat>{c}, std::move(var)); }

UniPoly UniPoly::variable(std::string var) { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}, std::move(var)); }

UniPoly UniPoly::from_zpoly(const ZPoly& p, std::string var) {
    std::vector<Rat> c;
    c.reserve(p.size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return UniPoly(std::move(c), std::move(var));
}

UniPoly UniPoly::parse(const std::string& text, const std::string& var) {
    std::string seen = var;
    detail::ExprParser<UniPoly> parser(
        text,
        [&](const std::string& name) {
            if (seen.empty()) seen = name;
            if (name != seen) throw std::invalid_argument("unexpected variable '" + name + "' (expected " + seen + ")");
            return UniPoly::variable(name);
        },
        [&](const Rat& c) { return UniPoly::constant(c, seen.empty() ? "x" : seen); },
        [](const UniPoly& p, Rat& out) {
            if (!p.is_constant()) return false;
            out = p.coeff(0);
            return true;
        });
    UniPoly p = parser.parse();
    return p.relabeled(seen.empty() ? "x" : seen);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& UniPoly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    var_ = merged_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    var_ = merged_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    var_ = merged_var(*this, o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    if (c_.size() > 24 && o.c_.size() > 24) {
        // Large products go through integer polynomials.
        Int la = coeff_lcm(c_), lb = coeff_lcm(o.c_);
        std::vector<Int> a(c_.size()), b(o.c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) a[i] = c_[i].num_ref() * (la / c_[i].den_ref());
        for (std::size_t i = 0; i < o.c_.size(); ++i) b[i] = o.c_[i].num_ref() * (lb / o.c_[i].den_ref());
        ZPoly prod = ZPoly(std::move(a)) * ZPoly(std::move(b));
        Int l = la * lb;
        c_.assign(prod.size(), Rat(0));
        for (std::size_t i = 0; i < prod.size(); ++i) c_[i] = Rat::normalize(prod[i], l);
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& k) {
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_ != b.c_) return false;
    return a.is_constant() || a.var_ == b.var_;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(var_);
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::relabeled(std::string var) const {
    UniPoly r = *this;
    r.var_ = std::move(var);
    return r;
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    return *this * (Rat(1) / lc());
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a.is_zero()) continue;
        Rat mag = abs(a);
        if (first) {
            if (a.sign() < 0) os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != Rat(1)) {
            os << mag.str();
            if (i > 0) os << "*";
        }
        if (i > 0) os << var_;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly out = UniPoly::constant(Rat(1), p.var()), base = p;
    while (e) {
        if (e & 1u) out *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return out;
}

UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
    UniPoly acc(inner.var());
    const auto& c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= inner;
        acc += UniPoly::constant(*it, inner.var());
    }
    return acc.relabeled(inner.is_constant() && acc.is_constant() ? outer.var() : inner.var());
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::string& v = merged_var(p, d);
    std::vector<Rat> r = p.coeffs();
    const auto& dc = d.coeffs();
    if (r.size() < dc.size()) return {UniPoly(v), p.relabeled(v)};
    std::size_t dd = dc.size() - 1;
    std::vector<Rat> q(r.size() - dd, Rat(0));
    Rat inv = Rat(1) / dc.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        Rat t = r[i + dd] * inv;
        if (t.is_zero()) continue;
        q[i] = t;
        for (std::size_t j = 0; j <= dd; ++j) r[i + j] -= t * dc[j];
    }
    return {UniPoly(std::move(q), v), UniPoly(std::move(r), v)};
}

UniPoly exact_divide(const UniPoly& p, const UniPoly& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw std::domain_error("inexact division: remainder " + r.str());
    return q;
}

ContentPrimitive content_primitive(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("content of zero polynomial");
    Int l = coeff_lcm(p.coeffs());
    std::vector<Int> z(p.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = p.coeffs()[i].num_ref() * (l / p.coeffs()[i].den_ref());
    ZPoly q(std::move(z));
    Int g = content(q);
    if (sgn(q.lc()) < 0) g = -g;
    return {Rat::normalize(g, l), exact_div(q, g)};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    const std::string& v = merged_var(a, b);
    if (a.is_zero() && b.is_zero()) return UniPoly(v);
    if (a.is_zero()) return b.monic().relabeled(v);
    if (b.is_zero()) return a.monic().relabeled(v);
    ZPoly g = gcd(content_primitive(a).primitive, content_primitive(b).primitive);
    return UniPoly::from_zpoly(g, v).monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    ZPoly s = quadorbit::squarefree_part(content_primitive(p).primitive);
    return UniPoly::from_zpoly(s, p.var()).monic();
}

}  // namespace quadorbit
