#include "quadorbit/dynamics.hpp"

#include "quadorbit/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace quadorbit {

UniPoly QuadMap::poly(const std::string& var) const {
    return UniPoly(std::vector<Rat>{c, Rat(0), Rat(1)}, var);
}

std::string to_string(Guard g) {
    return g == Guard::EscapeBound ? "escape-bound" : "denominator-growth";
}

std::optional<Guard> guard_violation(const Rat& c, const Rat& x) {
    if (abs(x) > abs(c) + Rat(1)) return Guard::EscapeBound;
    Int q2 = x.den_ref() * x.den_ref();
    if (!mpz_divisible_p(c.den_ref().get_mpz_t(), q2.get_mpz_t())) return Guard::DenominatorGrowth;
    return std::nullopt;
}

MapSet::MapSet(std::vector<Rat> cs) {
    if (cs.empty()) throw std::invalid_argument("map set must be nonempty");
    std::set<Rat> seen;
    for (const auto& c : cs) {
        if (!seen.insert(c).second) throw std::invalid_argument("repeated map x^2 + " + c.str());
        maps_.push_back(QuadMap{c});
    }
}

std::vector<Rat> MapSet::cs() const {
    std::vector<Rat> out;
    for (const auto& m : maps_) out.push_back(m.c);
    return out;
}

std::string MapSet::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        if (i) os << ", ";
        os << maps_[i].c;
    }
    os << "}";
    return os.str();
}

PreperiodicityReport is_preperiodic(const QuadMap& f, const Rat& x) {
    PreperiodicityReport rep;
    std::unordered_map<Rat, int> seen;
    std::vector<Rat> path;
    Rat cur = x;
    for (int step = 0;; ++step) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            rep.preperiodic = true;
            rep.tail = it->second;
            rep.cycle = step - it->second;
            rep.cycle_points.assign(path.begin() + it->second, path.end());
            return rep;
        }
        if (auto g = guard_violation(f.c, cur)) {
            rep.reason = g;
            rep.witness = cur;
            rep.witness_step = step;
            return rep;
        }
        seen.emplace(cur, step);
        path.push_back(cur);
        cur = f(cur);
    }
}

namespace {

std::vector<Rat> exact_period_filter(const QuadMap& f, const std::vector<Rat>& cands, int n) {
    std::vector<Rat> out;
    for (const Rat& r : cands) {
        Rat y = r;
        int period = 0;
        for (int k = 1; k <= n; ++k) {
            y = f(y);
            if (y == r) {
                period = k;
                break;
            }
        }
        if (period == n) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace

UniPoly dynatomic(const QuadMap& f, int n) {
    if (n < 1) throw std::invalid_argument("period must be positive");
    UniPoly x = UniPoly::variable("x"), fx = f.poly("x");
    UniPoly num = UniPoly::constant(Rat(1), "x"), den = UniPoly::constant(Rat(1), "x");
    UniPoly iter = x;
    for (int d = 1; d <= n; ++d) {
        iter = compose(fx, iter);
        if (n % d) continue;
        int m = moebius(n / d);
        if (m == 1) num *= iter - x;
        if (m == -1) den *= iter - x;
    }
    return exact_divide(num, den);
}

std::vector<Rat> periodic_points_dynatomic(const QuadMap& f, int n) {
    return exact_period_filter(f, rational_roots(dynatomic(f, n)).values(), n);
}

std::vector<Rat> periodic_points(const QuadMap& f, int n) {
    switch (n) {
        case 1:
            return exact_period_filter(f, rational_roots(UniPoly(std::vector<Rat>{f.c, Rat(-1), Rat(1)})).values(), 1);
        case 2:
            return exact_period_filter(
                f, rational_roots(UniPoly(std::vector<Rat>{f.c + Rat(1), Rat(1), Rat(1)})).values(), 2);
        case 3: {
            UniPoly fx = f.poly("x"), x = UniPoly::variable("x");
            UniPoly phi3 = exact_divide(compose(fx, compose(fx, fx)) - x, fx - x);
            return exact_period_filter(f, rational_roots(phi3).values(), 3);
        }
        default:
            throw std::invalid_argument("periodic_points supports n = 1, 2, 3");
    }
}

MuReport mu_set(const MapSet& s) {
    MuReport rep;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (int n = 1; n <= rep.max_period; ++n) {
            std::vector<Rat> pts = n <= 3 ? periodic_points(s[i], n) : periodic_points_dynatomic(s[i], n);
            for (const Rat& p : pts) rep.hits.push_back({i, n, p});
            if (!pts.empty()) rep.mu = std::max(rep.mu, n);
        }
    }
    return rep;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "id";
    std::ostringstream os;
    for (std::size_t i = w.size(); i-- > 0;) {
        os << "f" << (w[i] + 1);
        if (i) os << "∘";
    }
    return os.str();
}

OrbitResult monoid_orbit(const MapSet& s, const Rat& p) {
    std::unordered_map<Rat, Word> words;
    std::deque<Rat> queue;
    words.emplace(p, Word{});
    queue.push_back(p);
    while (!queue.empty()) {
        Rat x = queue.front();
        queue.pop_front();
        const Word& wx = words.at(x);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (auto g = guard_violation(s[i].c, x)) return {InfiniteOrbit{x, i, *g, wx}};
        }
        Word base = wx;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Rat y = s[i](x);
            if (words.count(y)) continue;
            Word wy = base;
            wy.push_back(static_cast<int>(i));
            words.emplace(y, std::move(wy));
            queue.push_back(y);
        }
    }
    FiniteOrbit fin;
    for (const auto& [pt, w] : words) fin.points.push_back(pt);
    std::sort(fin.points.begin(), fin.points.end());
    for (const Rat& pt : fin.points) fin.words.push_back(words.at(pt));
    return {fin};
}

bool is_stable_set(const MapSet& s, const std::vector<Rat>& t_set) {
    std::set<Rat> t(t_set.begin(), t_set.end());
    for (const Rat& x : t)
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!t.count(s[i](x))) return false;
    return true;
}

Rat apply_word(const MapSet& s, const Word& w, const Rat& p) {
    Rat x = p;
    for (int i : w) {
        if (i < 0 || static_cast<std::size_t>(i) >= s.size()) throw std::out_of_range("word index out of range");
        x = s[static_cast<std::size_t>(i)](x);
    }
    return x;
}

std::vector<Rat> finite_orbit_points(const MapSet& s) {
    Int g = 0;
    Rat bound;
    for (std::size_t i = 0; i < s.size(); ++i) {
        g = gcd(g, s[i].c.den_ref());
        Rat b = abs(s[i].c) + Rat(1);
        if (i == 0 || b < bound) bound = b;
    }
    std::set<Rat> finite, infinite;
    for (Int q = 1; q * q <= g; ++q) {
        if (g % (q * q) != 0) continue;
        Int pmax = (bound.num_ref() * q) / bound.den_ref();
        for (Int p = -pmax; p <= pmax; ++p) {
            if (gcd(p, q) != 1) continue;
            Rat x = Rat::normalize(p, q);
            if (finite.count(x) || infinite.count(x)) continue;
            OrbitResult r = monoid_orbit(s, x);
            if (r.finite()) {
                finite.insert(r.orbit().points.begin(), r.orbit().points.end());
            } else {
                infinite.insert(x);
            }
        }
    }
    return {finite.begin(), finite.end()};
}

}  // namespace quadorbit
