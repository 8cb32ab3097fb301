#include "quadorbit/bipoly.hpp"

#include "expr_parser.hpp"
#include "prs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadorbit {

namespace {

void check_vars(const BiPoly& a, const BiPoly& b) {
    if (a.is_constant() || b.is_constant()) return;
    if (a.var1() != b.var1() || a.var2() != b.var2())
        throw std::invalid_argument("bivariate variables differ: (" + a.var1() + "," + a.var2() + ") vs (" +
                                    b.var1() + "," + b.var2() + ")");
}

}  // namespace

BiPoly BiPoly::constant(const Rat& c, std::string v1, std::string v2) {
    BiPoly p(std::move(v1), std::move(v2));
    p.add_term(c, 0, 0);
    return p;
}

BiPoly BiPoly::variable(int which, std::string v1, std::string v2) {
    BiPoly p(std::move(v1), std::move(v2));
    p.add_term(Rat(1), which == 0 ? 1 : 0, which == 0 ? 0 : 1);
    return p;
}

BiPoly BiPoly::monomial(const Rat& c, int e1, int e2, std::string v1, std::string v2) {
    BiPoly p(std::move(v1), std::move(v2));
    p.add_term(c, e1, e2);
    return p;
}

BiPoly BiPoly::from_uni(const UniPoly& u, int which, std::string v1, std::string v2) {
    BiPoly p(std::move(v1), std::move(v2));
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        int e = static_cast<int>(i);
        p.add_term(u.coeffs()[i], which == 0 ? e : 0, which == 0 ? 0 : e);
    }
    return p;
}

BiPoly BiPoly::parse(const std::string& text, const std::string& v1, const std::string& v2) {
    detail::ExprParser<BiPoly> parser(
        text,
        [&](const std::string& name) {
            if (name == v1) return BiPoly::variable(0, v1, v2);
            if (name == v2) return BiPoly::variable(1, v1, v2);
            throw std::invalid_argument("unexpected variable '" + name + "'");
        },
        [&](const Rat& c) { return BiPoly::constant(c, v1, v2); },
        [](const BiPoly& p, Rat& out) {
            if (!p.is_constant()) return false;
            out = p.coeff(0, 0);
            return true;
        });
    return parser.parse();
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rat BiPoly::coeff(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(const Rat& c, int e1, int e2) {
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::degree_v1() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.first;
}

int BiPoly::degree_v2() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

std::pair<Exponent, Rat> BiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    check_vars(*this, o);
    if (is_constant() && !o.is_constant()) {
        v1_ = o.v1_;
        v2_ = o.v2_;
    }
    for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    check_vars(*this, o);
    if (is_constant() && !o.is_constant()) {
        v1_ = o.v1_;
        v2_ = o.v2_;
    }
    for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rat& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    check_vars(a, b);
    const BiPoly& lab = a.is_constant() ? b : a;
    BiPoly out(lab.v1_, lab.v2_);
    if (a.terms_.size() * b.terms_.size() > 4096) {
        // Large products: integer recursive form with Kronecker-backed ZPoly.
        auto ca = content_primitive(a);
        auto cb = content_primitive(b);
        RecPoly ra = to_recursive(ca.primitive), rb = to_recursive(cb.primitive);
        RecPoly prod(ra.size() + rb.size() - 1);
        for (std::size_t i = 0; i < ra.size(); ++i) {
            if (ra[i].is_zero()) continue;
            for (std::size_t j = 0; j < rb.size(); ++j) prod[i + j] += ra[i] * rb[j];
        }
        return from_recursive(prod, lab.v1_, lab.v2_) * (ca.content * cb.content);
    }
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.terms_ != b.terms_) return false;
    return a.is_constant() || (a.v1_ == b.v1_ && a.v2_ == b.v2_);
}

Rat BiPoly::eval(const Rat& a, const Rat& b) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow(a, static_cast<unsigned>(e.first)) * pow(b, static_cast<unsigned>(e.second));
    return acc;
}

UniPoly BiPoly::specialize_v2(const Rat& b) const {
    std::vector<Rat> c(static_cast<std::size_t>(degree_v1() + 1), Rat(0));
    for (const auto& [e, k] : terms_) c[static_cast<std::size_t>(e.first)] += k * pow(b, static_cast<unsigned>(e.second));
    return UniPoly(std::move(c), v1_);
}

UniPoly BiPoly::specialize_v1(const Rat& a) const {
    std::vector<Rat> c(static_cast<std::size_t>(degree_v2() + 1), Rat(0));
    for (const auto& [e, k] : terms_) c[static_cast<std::size_t>(e.second)] += k * pow(a, static_cast<unsigned>(e.first));
    return UniPoly(std::move(c), v2_);
}

UniPoly BiPoly::coeff_v1(int k) const {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(degree_v2() + 1, 0)), Rat(0));
    for (const auto& [e, v] : terms_)
        if (e.first == k) c[static_cast<std::size_t>(e.second)] = v;
    return UniPoly(std::move(c), v2_);
}

UniPoly BiPoly::coeff_v2(int k) const {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(degree_v1() + 1, 0)), Rat(0));
    for (const auto& [e, v] : terms_)
        if (e.second == k) c[static_cast<std::size_t>(e.first)] = v;
    return UniPoly(std::move(c), v1_);
}

BiPoly BiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / leading_term().second);
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = e.first > 0 || e.second > 0;
        bool wrote = false;
        if (!has_var || mag != Rat(1)) {
            os << mag.str();
            wrote = true;
        }
        auto put = [&](const std::string& v, int k) {
            if (k == 0) return;
            if (wrote) os << "*";
            os << v;
            if (k > 1) os << "^" << k;
            wrote = true;
        };
        put(v1_, e.first);
        put(v2_, e.second);
    }
    return os.str();
}

std::vector<std::tuple<int, int, std::string>> BiPoly::dump_terms() const {
    std::vector<std::tuple<int, int, std::string>> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.emplace_back(it->first.first, it->first.second, it->second.str());
    return out;
}

BiPoly pow(const BiPoly& p, unsigned e) {
    BiPoly out = BiPoly::constant(Rat(1), p.var1(), p.var2()), base = p;
    while (e) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return out;
}

BiContentPrimitive content_primitive(const BiPoly& p) {
    if (p.is_zero()) throw std::domain_error("content of zero polynomial");
    Int l = 1, g = 0;
    for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
    for (const auto& [e, c] : p.terms()) {
        Int v = c.num_ref() * (l / c.den_ref());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (p.leading_term().second.sign() < 0) g = -g;
    Rat content = Rat::normalize(g, l);
    BiPoly prim(p.var1(), p.var2());
    Rat inv = Rat(1) / content;
    for (const auto& [e, c] : p.terms()) prim.add_term(c * inv, e.first, e.second);
    return {content, prim};
}

RecPoly to_recursive(const BiPoly& p) {
    RecPoly r(static_cast<std::size_t>(p.degree_v1() + 1));
    std::vector<std::vector<Int>> dense(r.size());
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_integer()) throw std::invalid_argument("to_recursive: non-integer coefficient");
        auto& row = dense[static_cast<std::size_t>(e.first)];
        if (row.size() <= static_cast<std::size_t>(e.second)) row.resize(static_cast<std::size_t>(e.second) + 1);
        row[static_cast<std::size_t>(e.second)] = c.num_ref();
    }
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ZPoly(std::move(dense[i]));
    return r;
}

BiPoly from_recursive(const RecPoly& p, const std::string& v1, const std::string& v2) {
    BiPoly out(v1, v2);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (sgn(p[i][j]) != 0) out.add_term(Rat(p[i][j]), static_cast<int>(i), static_cast<int>(j));
    return out;
}

ZPoly resultant_recursive(const RecPoly& p, const RecPoly& q) {
    return detail::subresultant_resultant<ZPoly>(p, q);
}

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
    check_vars(p, q);
    if (p.degree_v1() < 1 || q.degree_v1() < 1)
        throw std::domain_error("resultant: input has degree 0 in " + p.var1());
    auto cp = content_primitive(p);
    auto cq = content_primitive(q);
    ZPoly r = resultant_recursive(to_recursive(cp.primitive), to_recursive(cq.primitive));
    // Res(a P, b Q) = a^deg Q * b^deg P * Res(P, Q).
    Rat scale = pow(cp.content, static_cast<unsigned>(q.degree_v1())) *
                pow(cq.content, static_cast<unsigned>(p.degree_v1()));
    return UniPoly::from_zpoly(r, p.var2()) * scale;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    check_vars(a, b);
    const BiPoly& lab = a.is_constant() ? b : a;
    if (a.is_zero() && b.is_zero()) return BiPoly(lab.var1(), lab.var2());
    if (a.is_zero()) return content_primitive(b).primitive;
    if (b.is_zero()) return content_primitive(a).primitive;
    RecPoly ra = to_recursive(content_primitive(a).primitive);
    RecPoly rb = to_recursive(content_primitive(b).primitive);
    RecPoly g = detail::subresultant_gcd<ZPoly>(ra, rb);
    BiPoly out = from_recursive(g, lab.var1(), lab.var2());
    return content_primitive(out).primitive;
}

BiPoly exact_divide(const BiPoly& p, const BiPoly& d) {
    check_vars(p, d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const BiPoly& lab = p.is_constant() ? d : p;
    BiPoly q(lab.var1(), lab.var2());
    BiPoly r = p;
    auto [dl, dc] = d.leading_term();
    Rat inv = Rat(1) / dc;
    while (!r.is_zero()) {
        auto [rl, rc] = r.leading_term();
        if (rl.first < dl.first || rl.second < dl.second)
            throw std::domain_error("inexact division: remainder " + r.str());
        BiPoly t = BiPoly::monomial(rc * inv, rl.first - dl.first, rl.second - dl.second, lab.var1(), lab.var2());
        q += t;
        r -= t * d;
    }
    return q;
}

namespace {

// Determinant over Q by Gaussian elimination with exact rationals.
Rat determinant(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rat f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Rat sylvester_from_coeffs(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    // a, b indexed by degree with formal degrees a.size()-1, b.size()-1.
    std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
    if (N == 0) return Rat(1);
    std::vector<std::vector<Rat>> s(N, std::vector<Rat>(N, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
    return determinant(std::move(s));
}

}  // namespace

Rat sylvester_resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return Rat(0);
    return sylvester_from_coeffs(p.coeffs(), q.coeffs());
}

Rat sylvester_resultant_at(const BiPoly& p, const BiPoly& q, const Rat& b) {
    std::vector<Rat> a(static_cast<std::size_t>(p.degree_v1() + 1), Rat(0));
    std::vector<Rat> c(static_cast<std::size_t>(q.degree_v1() + 1), Rat(0));
    for (const auto& [e, k] : p.terms()) a[static_cast<std::size_t>(e.first)] += k * pow(b, static_cast<unsigned>(e.second));
    for (const auto& [e, k] : q.terms()) c[static_cast<std::size_t>(e.first)] += k * pow(b, static_cast<unsigned>(e.second));
    return sylvester_from_coeffs(a, c);
}

}  // namespace quadorbit
