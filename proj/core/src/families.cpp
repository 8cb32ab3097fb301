#include "quadorbit/families.hpp"

#include "quadorbit/roots.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace quadorbit {

namespace detail {
extern const char* const kCatalogJson;
}

namespace {

// Grammar: expr := ('-')? (P | f<k>(expr))
template <class V>
class OrbitExpr {
public:
    using Step = std::function<V(std::size_t, const V&)>;
    OrbitExpr(const std::string& s, std::size_t nmaps, Step step, V p)
        : s_(s), nmaps_(nmaps), step_(std::move(step)), p_(std::move(p)) {}

    V parse() {
        V v = expr();
        ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad orbit expression '" + s_ + "': " + why);
    }
    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    V expr() {
        if (accept('-')) return -expr();
        if (accept('P')) return p_;
        if (!accept('f')) fail("expected P or f<k>(...)");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("missing map index");
        std::size_t k = std::stoul(s_.substr(start, pos_ - start));
        if (k == 0 || k > nmaps_) fail("map index out of range");
        if (!accept('(')) fail("expected '('");
        V inner = expr();
        if (!accept(')')) fail("expected ')'");
        return step_(k - 1, inner);
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t nmaps_;
    Step step_;
    V p_;
};

std::vector<Rat> sorted_unique(std::vector<Rat> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Rat> roots_of(const UniPoly& p) {
    if (p.is_zero() || p.is_constant()) return {};
    return rational_roots(p).values();
}

}  // namespace

RatFunc eval_orbit_expr(const std::string& expr, const std::vector<RatFunc>& cs, const RatFunc& p) {
    return OrbitExpr<RatFunc>(
               expr, cs.size(), [&](std::size_t k, const RatFunc& x) { return apply_quadmap(cs[k], x); }, p)
        .parse();
}

Rat eval_orbit_expr(const std::string& expr, const std::vector<Rat>& cs, const Rat& p) {
    return OrbitExpr<Rat>(
               expr, cs.size(), [&](std::size_t k, const Rat& x) { return x * x + cs[k]; }, p)
        .parse();
}

FamilyDef make_family(std::string id, std::string lemma, std::string parameter, std::vector<std::string> maps,
                      std::vector<int> cycle_types, std::string basepoint, std::vector<std::string> stable) {
    FamilyDef f;
    f.id = std::move(id);
    f.lemma = std::move(lemma);
    f.parameter = std::move(parameter);
    f.map_text = std::move(maps);
    f.cycle_types = std::move(cycle_types);
    f.basepoint_text = std::move(basepoint);
    f.stable_text = std::move(stable);
    for (const auto& m : f.map_text) f.cs.push_back(RatFunc::parse(m, f.parameter));
    f.basepoint = RatFunc::parse(f.basepoint_text, f.parameter);
    for (const auto& e : f.stable_text) f.stable_set.push_back(eval_orbit_expr(e, f.cs, f.basepoint));

    std::vector<Rat> ex;
    auto add_poles = [&](const RatFunc& r) {
        for (const Rat& x : roots_of(r.den())) ex.push_back(x);
    };
    for (const auto& c : f.cs) add_poles(c);
    add_poles(f.basepoint);
    for (const auto& s : f.stable_set) add_poles(s);
    for (std::size_t i = 0; i < f.cs.size(); ++i)
        for (std::size_t j = i + 1; j < f.cs.size(); ++j)
            for (const Rat& x : roots_of((f.cs[i] - f.cs[j]).num())) ex.push_back(x);
    f.excluded = sorted_unique(std::move(ex));
    return f;
}

Catalog parse_catalog(const std::string& json_text) {
    Catalog cat;
    try {
        auto doc = nlohmann::json::parse(json_text);
        for (const auto& j : doc.at("families")) {
            cat.families.push_back(make_family(j.at("id"), j.at("lemma"), j.at("parameter"),
                                               j.at("maps").get<std::vector<std::string>>(),
                                               j.at("cycle_types").get<std::vector<int>>(), j.at("basepoint"),
                                               j.at("stable_set").get<std::vector<std::string>>()));
        }
        for (const auto& j : doc.at("sporadic")) {
            SporadicTuple s;
            s.source = j.at("source");
            for (const auto& c : j.at("maps")) s.cs.push_back(Rat::parse(c.get<std::string>()));
            for (const auto& p : j.at("basepoints")) s.basepoints.push_back(Rat::parse(p.get<std::string>()));
            cat.sporadic.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed catalog: ") + e.what());
    }
    return cat;
}

const Catalog& catalog() {
    static const Catalog cat = parse_catalog(detail::kCatalogJson);
    return cat;
}

const FamilyDef& Catalog::family(const std::string& id) const {
    for (const auto& f : families)
        if (f.id == id) return f;
    throw std::out_of_range("unknown family id " + id);
}

std::vector<SporadicTuple> Catalog::sporadic_from(const std::string& source) const {
    std::vector<SporadicTuple> out;
    for (const auto& s : sporadic)
        if (s.source == source) out.push_back(s);
    return out;
}

SymbolicCheck family_verify_symbolic(const FamilyDef& fam) {
    SymbolicCheck chk;
    auto in_set = [&](const RatFunc& u) {
        return std::any_of(fam.stable_set.begin(), fam.stable_set.end(), [&](const RatFunc& s) { return s == u; });
    };
    if (!in_set(fam.basepoint)) chk.failures.push_back("basepoint not in set");
    for (std::size_t k = 0; k < fam.cs.size(); ++k) {
        for (std::size_t e = 0; e < fam.stable_set.size(); ++e) {
            if (!in_set(apply_quadmap(fam.cs[k], fam.stable_set[e])))
                chk.failures.push_back("f" + std::to_string(k + 1) + "(" + fam.stable_text[e] + ") not in set");
        }
    }
    chk.ok = chk.failures.empty();
    return chk;
}

std::pair<MapSet, Rat> family_instance(const FamilyDef& fam, const Rat& t0) {
    auto pole = [&](const RatFunc& r) { return r.den().eval(t0).is_zero(); };
    for (std::size_t i = 0; i < fam.cs.size(); ++i)
        if (pole(fam.cs[i]))
            throw std::domain_error(fam.id + " at " + fam.parameter + " = " + t0.str() + ": pole of c" +
                                    std::to_string(i + 1));
    if (pole(fam.basepoint))
        throw std::domain_error(fam.id + " at " + fam.parameter + " = " + t0.str() + ": pole of the basepoint");
    for (const auto& s : fam.stable_set)
        if (pole(s))
            throw std::domain_error(fam.id + " at " + fam.parameter + " = " + t0.str() +
                                    ": pole of a stable-set element");
    std::vector<Rat> cs;
    for (const auto& c : fam.cs) cs.push_back(c.specialize(t0));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i] == cs[j])
                throw std::domain_error(fam.id + " at " + fam.parameter + " = " + t0.str() + ": c" +
                                        std::to_string(i + 1) + " = c" + std::to_string(j + 1));
    return {MapSet(std::move(cs)), fam.basepoint.specialize(t0)};
}

std::vector<Rat> family_match(const FamilyDef& fam, const std::vector<Rat>& cs, const Rat& p) {
    if (cs.size() != fam.cs.size()) return {};
    std::vector<Rat> cands;
    bool have = false;
    for (std::size_t i = 0; i < cs.size() && !have; ++i) {
        UniPoly eq = (fam.cs[i] - RatFunc::constant(cs[i], fam.parameter)).num();
        if (eq.is_zero()) continue;
        cands = roots_of(eq);
        have = true;
    }
    if (!have) {
        UniPoly eq = (fam.basepoint - RatFunc::constant(p, fam.parameter)).num();
        if (eq.is_zero()) throw std::logic_error("constant family");
        cands = roots_of(eq);
    }
    std::vector<Rat> out;
    for (const Rat& t : cands) {
        if (std::binary_search(fam.excluded.begin(), fam.excluded.end(), t)) continue;
        bool ok = fam.basepoint.specialize(t) == p;
        for (std::size_t i = 0; ok && i < cs.size(); ++i) ok = fam.cs[i].specialize(t) == cs[i];
        if (ok) out.push_back(t);
    }
    return out;
}

namespace {
std::optional<Rat> value_at_infinity(const RatFunc& r) {
    int dn = r.num().degree(), dd = r.den().degree();
    if (r.num().is_zero()) return Rat(0);
    if (dn > dd) return std::nullopt;
    if (dn < dd) return Rat(0);
    return r.num().lc() / r.den().lc();
}
}  // namespace

std::optional<std::pair<std::vector<Rat>, Rat>> family_at_infinity(const FamilyDef& fam) {
    std::vector<Rat> cs;
    for (const auto& c : fam.cs) {
        auto v = value_at_infinity(c);
        if (!v) return std::nullopt;
        cs.push_back(*v);
    }
    auto p = value_at_infinity(fam.basepoint);
    if (!p) return std::nullopt;
    return std::make_pair(cs, *p);
}

std::vector<Rat> random_admissible_parameters(const FamilyDef& fam, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 24);
    std::set<Rat> seen;
    std::vector<Rat> out;
    while (out.size() < count) {
        Rat t = Rat::normalize(Int(num(gen)), Int(den(gen)));
        if (!seen.insert(t).second) continue;
        if (std::binary_search(fam.excluded.begin(), fam.excluded.end(), t)) continue;
        out.push_back(t);
    }
    return out;
}

bool FamilyCheck::ok() const {
    return symbolic.ok && std::all_of(specializations.begin(), specializations.end(),
                                      [](const auto& s) { return s.second; });
}

FamilyCheck family_check(const FamilyDef& fam, std::size_t specializations, std::uint64_t seed) {
    FamilyCheck c;
    c.family = &fam;
    c.symbolic = family_verify_symbolic(fam);
    for (const Rat& t : random_admissible_parameters(fam, specializations, seed)) {
        auto [maps, p] = family_instance(fam, t);
        c.specializations.emplace_back(t, monoid_orbit(maps, p).finite());
    }
    return c;
}

}  // namespace quadorbit
