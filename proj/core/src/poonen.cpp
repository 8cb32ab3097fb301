#include "quadorbit/verifier.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace quadorbit {

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::PeriodBound:
            return "period-bound";
        case Axiom::TailBound:
            return "tail-bound";
        case Axiom::ThreeCycleEntry:
            return "three-cycle-entry";
    }
    return "?";
}

std::string axiom_citation(Axiom a) {
    switch (a) {
        case Axiom::PeriodBound:
            return "hypothesis mu_S(Q) <= 3 (conjectured by B. Poonen, 'The classification of rational preperiodic "
                   "points of quadratic polynomials over Q', J. Number Theory 1998; verified here for periods 1-6 only)";
        case Axiom::TailBound:
            return "Poonen 1998, Theorems 1-3: with mu <= 3 and no rational 3-cycle, rational preperiodic points "
                   "reach a fixed point or 2-cycle within two steps";
        case Axiom::ThreeCycleEntry:
            return "Poonen 1998, Theorems 1-3: with a rational 3-cycle, rational preperiodic orbits contain the "
                   "cycle, entering after one step unless c = -29/16";
    }
    return "?";
}

bool poonen_criterion(const QuadMap& f, const Rat& x) {
    Rat y2 = f(f(x));
    return f(f(y2)) == y2;
}

bool tail_bound_applies(const QuadMap& f) { return periodic_points(f, 3).empty(); }

std::string PoonenWitness::str() const {
    std::ostringstream os;
    os << "Q = (" << word_str(word) << ")(P) = " << q << ", f" << (map + 1) << "^4(Q) = " << f4
       << " != f" << (map + 1) << "^2(Q) = " << f2;
    return os.str();
}

bool check_witness(const MapSet& s, const Rat& p, const PoonenWitness& w) {
    if (w.map >= s.size()) return false;
    Rat q = apply_word(s, w.word, p);
    return q == w.q && tail_bound_applies(s[w.map]) && !poonen_criterion(s[w.map], q);
}

std::optional<PoonenWitness> find_poonen_witness(const MapSet& s, const Rat& p, int max_len) {
    std::vector<std::size_t> usable;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (tail_bound_applies(s[k])) usable.push_back(k);
    if (usable.empty()) return std::nullopt;

    std::unordered_set<Rat> seen{p};
    std::deque<std::pair<Rat, Word>> queue{{p, Word{}}};
    while (!queue.empty()) {
        auto [x, w] = queue.front();
        queue.pop_front();
        for (std::size_t k : usable) {
            const QuadMap& f = s[k];
            Rat y2 = f(f(x)), y4 = f(f(y2));
            if (y4 != y2) return PoonenWitness{w, x, k, y2, y4};
        }
        if (static_cast<int>(w.size()) >= max_len) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Rat y = s[i](x);
            if (!seen.insert(y).second) continue;
            Word wy = w;
            wy.push_back(static_cast<int>(i));
            queue.emplace_back(std::move(y), std::move(wy));
        }
    }
    return std::nullopt;
}

Word parse_word(const std::string& text) {
    // Composition order: the rightmost map applies first.
    Word rev;
    std::size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("bad composition word '" + text + "'"); };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '*' || ch == 'o' || ch == '(' || ch == ')') {
            ++i;
            continue;
        }
        if (text.compare(i, 3, "\xE2\x88\x98") == 0) {  // U+2218 ring operator
            i += 3;
            continue;
        }
        if (text.compare(i, 3, "phi") == 0) {
            i += 3;
        } else if (ch == 'f') {
            ++i;
        } else {
            fail();
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail();
        int k = std::stoi(text.substr(start, i - start));
        if (k < 1) fail();
        rev.push_back(k - 1);
    }
    return Word(rev.rbegin(), rev.rend());
}

std::string to_string(Disposition d) {
    switch (d) {
        case Disposition::Pole:
            return "pole";
        case Disposition::EqualMaps:
            return "equal-maps";
        case Disposition::FamilyMember:
            return "family-member";
        case Disposition::Finite:
            return "finite";
        case Disposition::Contradiction:
            return "contradiction";
    }
    return "?";
}

std::string to_string(Route r) { return r == Route::Resultant ? "resultant" : "groebner"; }

PointVerdict dispose_point(const std::vector<Rat>& cs, const Rat& p, const std::vector<const FamilyDef*>& families) {
    PointVerdict v;
    v.cs = cs;
    v.p = p;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i] == cs[j]) {
                v.kind = Disposition::EqualMaps;
                v.detail = "c" + std::to_string(i + 1) + " = c" + std::to_string(j + 1) + " = " + cs[i].str();
                return v;
            }
    for (const FamilyDef* f : families) {
        auto ts = family_match(*f, cs, p);
        if (!ts.empty()) {
            v.kind = Disposition::FamilyMember;
            v.family = f->id;
            v.family_param = ts.front();
            v.detail = f->id + " at " + f->parameter + " = " + ts.front().str();
            return v;
        }
    }
    MapSet s(cs);
    OrbitResult r = monoid_orbit(s, p);
    if (r.finite()) {
        v.kind = Disposition::Finite;
        v.orbit = r.orbit().points;
        v.detail = "finite orbit of size " + std::to_string(v.orbit.size());
        return v;
    }
    v.kind = Disposition::Contradiction;
    v.escape = r.infinite();
    v.witness = find_poonen_witness(s, p);
    v.detail = v.witness ? v.witness->str()
                         : "(" + word_str(v.escape->word) + ")(P) = " + v.escape->witness.str() + " trips the " +
                               to_string(v.escape->reason) + " guard of f" + std::to_string(v.escape->map_index + 1);
    return v;
}

}  // namespace quadorbit
