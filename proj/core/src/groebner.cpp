#include "quadorbit/groebner.hpp"

#include "expr_parser.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace quadorbit {

// ---- monomials -----------------------------------------------------------

namespace {
constexpr unsigned field_shift(std::size_t var) { return static_cast<unsigned>(16 * (Monomial::kMaxVars - 1 - var)); }
}  // namespace

Monomial::Monomial(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("at most four variables are supported");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || static_cast<unsigned>(exps[i]) > kMaxExponent)
            throw std::invalid_argument("exponent out of range");
        bits_ |= static_cast<std::uint64_t>(exps[i]) << field_shift(i);
    }
}

int Monomial::total_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) d += exponent(i);
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exponent(i) > o.exponent(i)) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exponent(i) && o.exponent(i)) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < Monomial::kMaxVars; ++i)
        if (static_cast<unsigned>(a.exponent(i) + b.exponent(i)) > Monomial::kMaxExponent)
            throw std::overflow_error("monomial exponent overflow");
    return Monomial::from_packed(a.bits_ + b.bits_);
}

Monomial operator/(const Monomial& a, const Monomial& b) { return Monomial::from_packed(a.bits_ - b.bits_); }

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < Monomial::kMaxVars; ++i)
        bits |= static_cast<std::uint64_t>(std::max(a.exponent(i), b.exponent(i))) << field_shift(i);
    return Monomial::from_packed(bits);
}

// ---- polynomials over Q --------------------------------------------------

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.size() > Monomial::kMaxVars) throw std::invalid_argument("at most four variables are supported");
}

MPoly MPoly::from_terms(std::vector<Term> terms, std::vector<std::string> vars) {
    MPoly p(std::move(vars));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

MPoly MPoly::constant(const Rat& c, std::vector<std::string> vars) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(), c);
    return p;
}

MPoly MPoly::variable(std::size_t index, std::vector<std::string> vars) {
    if (index >= vars.size()) throw std::out_of_range("variable index");
    std::vector<int> e(vars.size(), 0);
    e[index] = 1;
    MPoly p(std::move(vars));
    p.terms_.emplace_back(Monomial(e), Rat(1));
    return p;
}

MPoly pow(const MPoly& p, unsigned e) {
    MPoly r = MPoly::constant(Rat(1), p.vars()), b = p;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MPoly MPoly::parse(const std::string& text, const std::vector<std::string>& vars) {
    detail::ExprParser<MPoly> parser(
        text,
        [&](const std::string& name) {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return MPoly::variable(i, vars);
            throw std::invalid_argument("unexpected variable '" + name + "'");
        },
        [&](const Rat& c) { return MPoly::constant(c, vars); },
        [](const MPoly& p, Rat& out) {
            if (!p.is_constant()) return false;
            out = p.is_zero() ? Rat(0) : p.terms_.front().second;
            return true;
        });
    return parser.parse();
}

MPoly MPoly::from_bipoly(const BiPoly& p) {
    std::vector<Term> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(Monomial({e.first, e.second}), c);
    return from_terms(std::move(terms), {p.var1(), p.var2()});
}

BiPoly MPoly::to_bipoly() const {
    if (vars_.size() != 2) throw std::logic_error("to_bipoly needs two variables");
    BiPoly b(vars_[0], vars_[1]);
    for (const auto& [m, c] : terms_) b.add_term(c, m.exponent(0), m.exponent(1));
    return b;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.packed() == 0); }

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero");
    return terms_.front().first;
}

const Rat& MPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero");
    return terms_.front().second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

bool MPoly::only_in(std::size_t var) const {
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < Monomial::kMaxVars; ++i)
            if (i != var && t.first.exponent(i)) return false;
    return true;
}

namespace {

template <class Combine>
std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                                     Combine comb) {
    std::vector<MPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.emplace_back(b[j].first, comb(Rat(0), b[j].second));
            ++j;
        } else {
            Rat c = comb(a[i].second, b[j].second);
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
    if (vars_.empty()) vars_ = o.vars_;
    terms_ = merge_terms(terms_, o.terms_, [](const Rat& x, const Rat& y) { return x + y; });
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (vars_.empty()) vars_ = o.vars_;
    terms_ = merge_terms(terms_, o.terms_, [](const Rat& x, const Rat& y) { return x - y; });
    return *this;
}

MPoly& MPoly::operator*=(const Rat& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= k;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    std::map<std::uint64_t, Rat, std::greater<>> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[(ma * mb).packed()] += ca * cb;
    MPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(Monomial::from_packed(m), std::move(c));
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

MPoly MPoly::mul_term(const Monomial& m, const Rat& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt * m, ct * c);
    return r;
}

MPoly MPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / leading_coefficient());
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = m.packed() == 0;
        bool need_star = false;
        if (a != Rat(1) || unit) {
            os << a;
            need_star = true;
        }
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            int e = m.exponent(i);
            if (!e) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

// ---- integer-coefficient core used by the reductions -----------------------

namespace {

using ZTerm = std::pair<Monomial, Int>;
using ZP = std::vector<ZTerm>;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct Limits {
    const GroebnerBudget* budget = nullptr;
    const Clock* clock = nullptr;
    std::size_t* max_bits = nullptr;

    void check(const ZP& h) const {
        if (!budget) return;
        std::size_t bits = 0;
        for (const auto& t : h) bits = std::max(bits, mpz_sizeinbase(t.second.get_mpz_t(), 2));
        if (max_bits) *max_bits = std::max(*max_bits, bits);
        if (bits > budget->max_bits)
            throw BudgetExhausted("coefficient size " + std::to_string(bits) + " bits exceeds the budget of " +
                                  std::to_string(budget->max_bits));
        if (clock->seconds() > budget->max_seconds)
            throw BudgetExhausted("time budget of " + std::to_string(budget->max_seconds) + " s exhausted");
    }
};

// Divides out the content and makes the leading coefficient positive;
// returns the factor removed.
Rat make_primitive(ZP& h) {
    if (h.empty()) return Rat(1);
    Int g = 0;
    for (const auto& t : h) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
        if (g == 1) break;
    }
    if (h.front().second < 0) g = -g;
    if (g != 1)
        for (auto& t : h) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
    return Rat(g);
}

// Clears denominators; returns p = content * result.
std::pair<Rat, ZP> to_z(const MPoly& p) {
    Int l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.den_ref().get_mpz_t());
    ZP z;
    z.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) z.emplace_back(m, c.num() * (l / c.den()));
    Rat g = make_primitive(z);
    return {g / Rat(l), std::move(z)};
}

MPoly from_z(const ZP& z, const std::vector<std::string>& vars, const Rat& scale) {
    std::vector<MPoly::Term> terms;
    terms.reserve(z.size());
    for (const auto& [m, c] : z) terms.emplace_back(m, Rat(c) * scale);
    return MPoly::from_terms(std::move(terms), vars);
}

// a*h - b*m*g, where the term of h at `pos` cancels.
ZP combine(const ZP& h, const Int& a, const Int& b, const Monomial& m, const ZP& g) {
    ZP out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    Int tmp;
    while (i < h.size() || j < g.size()) {
        Monomial mg = j < g.size() ? g[j].first * m : Monomial();
        if (j == g.size() || (i < h.size() && h[i].first > mg)) {
            out.emplace_back(h[i].first, a * h[i].second);
            ++i;
        } else if (i == h.size() || mg > h[i].first) {
            out.emplace_back(mg, -b * g[j].second);
            ++j;
        } else {
            tmp = a * h[i].second - b * g[j].second;
            if (tmp != 0) out.emplace_back(mg, tmp);
            ++i;
            ++j;
        }
    }
    return out;
}

// Full reduction of h by the polynomials of G flagged active. `scale` tracks
// the rational factor with (true remainder) = scale * h.
void reduce_full(ZP& h, const std::vector<ZP>& G, const std::vector<char>& active, Rat& scale,
                 const Limits& lim, std::size_t skip = static_cast<std::size_t>(-1)) {
    std::size_t pos = 0, steps = 0;
    while (pos < h.size()) {
        const Monomial& lt = h[pos].first;
        const ZP* div = nullptr;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (!active[k] || k == skip) continue;
            if (G[k].front().first.divides(lt)) {
                div = &G[k];
                break;
            }
        }
        if (!div) {
            ++pos;
            continue;
        }
        Int a = div->front().second, b = h[pos].second;
        Int d = gcd(a, b);
        a /= d;
        b /= d;
        Monomial m = lt / div->front().first;
        h = combine(h, a, b, m, *div);
        scale /= Rat(a);
        scale *= make_primitive(h);
        if (++steps % 8 == 0) lim.check(h);
    }
    lim.check(h);
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
};

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
    if (f.is_zero()) return f;
    std::vector<ZP> G;
    std::vector<char> active;
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        G.push_back(to_z(b).second);
        active.push_back(1);
    }
    auto [scale, h] = to_z(f);
    reduce_full(h, G, active, scale, Limits{});
    return from_z(h, f.vars(), scale);
}

MPoly normal_form(const MPoly& f, const IdealBasis& basis) { return normal_form(f, basis.generators); }

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("S-polynomial of zero");
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    return f.mul_term(l / f.leading_monomial(), Rat(1) / f.leading_coefficient()) -
           g.mul_term(l / g.leading_monomial(), Rat(1) / g.leading_coefficient());
}

namespace {

ZP s_poly_z(const ZP& f, const ZP& g) {
    Monomial l = lcm(f.front().first, g.front().first);
    Int a = g.front().second, b = f.front().second;
    Int d = gcd(a, b);
    a /= d;
    b /= d;
    // a * (l/lt f) * f - b * (l/lt g) * g
    ZP fm;
    fm.reserve(f.size());
    Monomial mf = l / f.front().first;
    for (const auto& t : f) fm.emplace_back(t.first * mf, t.second);
    return combine(fm, a, b, l / g.front().first, g);
}

}  // namespace

GroebnerResult buchberger(const std::vector<MPoly>& gens, const GroebnerBudget& budget) {
    GroebnerResult res;
    Clock clock;
    std::vector<std::string> vars;
    for (const auto& g : gens)
        if (!g.vars().empty()) {
            vars = g.vars();
            break;
        }
    Limits lim{&budget, &clock, &res.max_bits};

    std::vector<ZP> G;
    std::vector<char> active;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        G.push_back(to_z(g).second);
        active.push_back(1);
    }
    auto unit = [&] {
        res.basis.generators = {MPoly::constant(Rat(1), vars)};
        res.basis.is_groebner = true;
        res.completed = true;
        res.seconds = clock.seconds();
        return res;
    };
    if (G.empty()) {
        res.completed = true;
        res.basis.is_groebner = true;
        return res;
    }
    for (const auto& g : G)
        if (g.front().first.packed() == 0) return unit();

    std::vector<Pair> B;
    std::vector<std::vector<char>> treated;  // treated[j][i] for i < j
    auto add_pairs = [&](std::size_t j) {
        treated.emplace_back(j, 0);
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = lcm(G[i].front().first, G[j].front().first);
            B.push_back({i, j, l, l.total_degree()});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) add_pairs(j);
    auto is_treated = [&](std::size_t a, std::size_t b) {
        if (a == b) return true;
        if (a > b) std::swap(a, b);
        return treated[b][a] != 0;
    };

    try {
        while (!B.empty()) {
            auto it = std::min_element(B.begin(), B.end(), [](const Pair& x, const Pair& y) {
                if (x.lcm != y.lcm) return x.lcm < y.lcm;
                return x.degree < y.degree;
            });
            Pair pr = *it;
            *it = B.back();
            B.pop_back();
            treated[pr.j][pr.i] = 1;

            const Monomial& li = G[pr.i].front().first;
            const Monomial& lj = G[pr.j].front().first;
            bool skip = li.coprime(lj);
            for (std::size_t k = 0; !skip && k < G.size(); ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (G[k].front().first.divides(pr.lcm) && is_treated(pr.i, k) && is_treated(pr.j, k)) skip = true;
            }
            if (skip) {
                ++res.pairs_skipped;
                continue;
            }
            if (res.pairs_processed >= budget.max_pairs)
                throw BudgetExhausted("pair budget of " + std::to_string(budget.max_pairs) + " exhausted");
            ++res.pairs_processed;

            ZP h = s_poly_z(G[pr.i], G[pr.j]);
            Rat scale = make_primitive(h);
            reduce_full(h, G, active, scale, lim);
            if (h.empty()) continue;
            if (h.front().first.packed() == 0) return unit();
            G.push_back(std::move(h));
            active.push_back(1);
            add_pairs(G.size() - 1);
        }
    } catch (const BudgetExhausted& e) {
        res.completed = false;
        res.note = e.what();
        for (std::size_t k = 0; k < G.size(); ++k) res.basis.generators.push_back(from_z(G[k], vars, Rat(1)).monic());
        res.basis.is_groebner = false;
        res.seconds = clock.seconds();
        return res;
    }

    // Minimal basis, then inter-reduction.
    for (std::size_t k = 0; k < G.size(); ++k) {
        for (std::size_t l = 0; l < G.size() && active[k]; ++l) {
            if (l == k || !active[l]) continue;
            const Monomial& a = G[l].front().first;
            const Monomial& b = G[k].front().first;
            if (a.divides(b) && (a != b || l < k)) active[k] = 0;
        }
    }
    std::vector<MPoly> out;
    Limits none;
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (!active[k]) continue;
        ZP h = G[k];
        Rat scale(1);
        reduce_full(h, G, active, scale, none, k);
        out.push_back(from_z(h, vars, Rat(1)).monic());
    }
    std::sort(out.begin(), out.end(),
              [](const MPoly& a, const MPoly& b) { return a.leading_monomial() > b.leading_monomial(); });
    res.basis.generators = std::move(out);
    res.basis.is_groebner = true;
    res.completed = true;
    res.seconds = clock.seconds();
    return res;
}

bool ideal_membership(const MPoly& f, const std::vector<MPoly>& gens, const GroebnerBudget& budget) {
    if (f.is_zero()) return true;
    GroebnerResult r = buchberger(gens, budget);
    if (!r.completed) throw BudgetExhausted(r.note);
    return normal_form(f, r.basis).is_zero();
}

bool is_groebner_basis(const std::vector<MPoly>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    return true;
}

}  // namespace quadorbit
