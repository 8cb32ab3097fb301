#include "quadorbit/variety.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace quadorbit {

BiPoly FactoredPoly::expand() const {
    if (factors.empty()) throw std::invalid_argument("empty factor list");
    BiPoly out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
    return out;
}

std::vector<Rat> PlaneSolution::candidate_values() const {
    std::vector<Rat> out;
    for (const auto& c : candidates) out.push_back(c.v2);
    return out;
}

namespace {

BiPoly normalize(const BiPoly& p) { return content_primitive(p).primitive; }

struct Solver {
    const std::vector<FactoredPoly>& gens;
    std::vector<BiPoly> components;
    std::vector<ZeroDimPiece> pieces;

    void curve(const BiPoly& a, std::size_t k) {
        if (a.is_constant()) return;
        if (k == gens.size()) {
            components.push_back(normalize(a));
            return;
        }
        for (const BiPoly& b : gens[k].factors) {
            if (b.is_constant()) {
                if (b.is_zero()) curve(a, k + 1);
                continue;
            }
            BiPoly g = gcd(a, b);
            BiPoly a1 = a, b1 = b;
            if (!g.is_constant()) {
                curve(g, k + 1);
                a1 = exact_divide(a, g);
                b1 = exact_divide(b, g);
            }
            if (a1.is_constant() || b1.is_constant()) continue;
            pieces.push_back(ZeroDimPiece{normalize(a1), normalize(b1), k + 1, {}, {}});
        }
    }
};

void eliminate(ZeroDimPiece& p) {
    int da = p.a.degree_v1(), db = p.b.degree_v1();
    if (da >= 1 && db >= 1) {
        p.eliminant = resultant_y(p.a, p.b);
    } else if (da == 0) {
        p.eliminant = p.a.coeff_v1(0);
    } else {
        p.eliminant = p.b.coeff_v1(0);
    }
    if (p.eliminant.is_zero()) throw std::logic_error("vanishing eliminant for coprime polynomials");
    p.roots = rational_roots(p.eliminant);
}

UniPoly product_at(const FactoredPoly& g, const Rat& v2) {
    UniPoly out;
    bool first = true;
    for (const BiPoly& f : g.factors) {
        UniPoly s = f.specialize_v2(v2);
        out = first ? s : out * s;
        first = false;
    }
    return out;
}

// Divides out every root of h shared with s.
UniPoly strip(UniPoly h, const UniPoly& s) {
    if (s.is_zero()) return UniPoly::constant(Rat(1), h.var());
    for (;;) {
        if (h.is_constant()) return h;
        UniPoly g = gcd(h, s);
        if (g.is_constant()) return h;
        h = exact_divide(h, g);
    }
}

}  // namespace

std::vector<BiPoly> coprime_refine(std::vector<BiPoly> polys) {
    std::vector<BiPoly> work;
    for (auto& p : polys)
        if (!p.is_constant()) work.push_back(normalize(p));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                BiPoly g = gcd(work[i], work[j]);
                if (g.is_constant()) continue;
                BiPoly u = exact_divide(work[i], g), v = exact_divide(work[j], g);
                work.erase(work.begin() + static_cast<long>(j));
                work.erase(work.begin() + static_cast<long>(i));
                work.push_back(normalize(g));
                if (!u.is_constant()) work.push_back(normalize(u));
                if (!v.is_constant()) work.push_back(normalize(v));
                changed = true;
            }
        }
    }
    // Drop repeated factors inside a single entry is not attempted (no
    // multivariate factorization); entries are coprime to one another.
    std::sort(work.begin(), work.end(), [](const BiPoly& a, const BiPoly& b) { return a.str() < b.str(); });
    return work;
}

namespace {

void collect(PlaneSolution& out, const std::vector<FactoredPoly>& polys, bool strip_components) {
    std::map<Rat, PlaneCandidate> cands;
    std::set<Rat> all_roots;
    for (auto& p : out.pieces) {
        eliminate(p);
        out.eliminant_degree += p.eliminant.degree();
        for (const auto& [z0, mult] : p.roots.roots) {
            all_roots.insert(z0);
            UniPoly sa = p.a.specialize_v2(z0), sb = p.b.specialize_v2(z0);
            UniPoly h = sa.is_zero() ? sb : (sb.is_zero() ? sa : gcd(sa, sb));
            for (std::size_t m = p.next; m < polys.size() && !h.is_constant(); ++m) {
                UniPoly g = product_at(polys[m], z0);
                if (!g.is_zero()) h = gcd(h, g);
            }
            if (strip_components)
                for (const BiPoly& c : out.components) h = strip(h, c.specialize_v2(z0));
            if (h.is_zero() || h.is_constant()) continue;
            auto [it, inserted] = cands.try_emplace(z0, PlaneCandidate{z0, h.monic(), {}});
            if (!inserted) {
                UniPoly g = gcd(it->second.residual, h);
                it->second.residual = (exact_divide(it->second.residual, g) * h).monic();
            }
        }
    }
    for (auto& [z0, c] : cands) {
        c.v1_values = rational_roots(c.residual).values();
        out.candidates.push_back(c);
    }
    for (const Rat& r : all_roots) {
        out.eliminant_roots.push_back(r);
        if (!cands.count(r)) out.attached.push_back(r);
    }
}

// Splits V(c_k, ..., c_n) into zero-dimensional pieces, given that the
// cofactors have no common factor all together.
void split_cofactors(const std::vector<BiPoly>& c, std::size_t k, const BiPoly& first,
                     std::vector<ZeroDimPiece>& pieces) {
    if (first.is_constant()) return;
    if (k == c.size()) throw std::logic_error("cofactors share a component");
    BiPoly h = gcd(first, c[k]);
    BiPoly a = first, b = c[k];
    if (!h.is_constant()) {
        split_cofactors(c, k + 1, h, pieces);
        a = exact_divide(a, h);
        b = exact_divide(b, h);
    }
    if (a.is_constant() || b.is_constant()) return;
    pieces.push_back(ZeroDimPiece{normalize(a), normalize(b), k + 1, {}, {}});
}

}  // namespace

PlaneSolution solve_plane_cofactors(const std::vector<FactoredPoly>& generators) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    std::vector<BiPoly> full;
    for (const auto& g : generators) full.push_back(normalize(g.expand()));
    BiPoly g = full.front();
    for (std::size_t i = 1; i < full.size(); ++i) g = gcd(g, full[i]);

    PlaneSolution out;
    std::vector<BiPoly> cof;
    if (!g.is_constant()) {
        // The components are read off the generator factors so they come out
        // split as finely as the factor lists allow.
        std::vector<BiPoly> parts;
        for (const auto& gen : generators)
            for (const BiPoly& f : gen.factors) {
                BiPoly h = gcd(f, g);
                if (!h.is_constant()) parts.push_back(h);
            }
        out.components = coprime_refine(parts);
        for (const BiPoly& f : full) cof.push_back(exact_divide(f, g));
    } else {
        cof = full;
    }
    split_cofactors(cof, 1, cof.front(), out.pieces);
    std::vector<FactoredPoly> wrapped;
    for (auto& c : cof) wrapped.push_back(FactoredPoly{{c}});
    collect(out, wrapped, false);
    return out;
}

PlaneSolution solve_plane_system(const std::vector<FactoredPoly>& generators) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    Solver s{generators, {}, {}};
    for (const BiPoly& a : generators.front().factors) s.curve(a, 1);

    PlaneSolution out;
    out.components = coprime_refine(s.components);
    out.pieces = std::move(s.pieces);
    collect(out, generators, true);
    return out;
}

}  // namespace quadorbit
