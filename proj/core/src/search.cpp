#include "quadorbit/search.hpp"

#include "quadorbit/dynamics.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace quadorbit {

std::vector<Rat> SearchSpec::grid() const {
    std::set<Rat> out(extra.begin(), extra.end());
    for (const Int& d : denominators) {
        if (d <= 0) throw std::invalid_argument("denominators must be positive");
        for (Int k = -numerator_bound; k <= numerator_bound; ++k) out.insert(Rat::normalize(k, d));
    }
    return {out.begin(), out.end()};
}

namespace {

using Set = std::vector<Rat>;

// Finite-orbit points of s among `candidates`.
std::vector<Rat> closed_points(const MapSet& s, const std::vector<Rat>& candidates) {
    std::set<Rat> finite, infinite;
    for (const Rat& x : candidates) {
        if (finite.count(x) || infinite.count(x)) continue;
        OrbitResult r = monoid_orbit(s, x);
        if (r.finite())
            finite.insert(r.orbit().points.begin(), r.orbit().points.end());
        else
            infinite.insert(x);
    }
    return {finite.begin(), finite.end()};
}

std::vector<Rat> intersect(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& f) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) f(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

SearchResult search(const SearchSpec& spec) {
    auto start = std::chrono::steady_clock::now();
    if (spec.set_size < 1 || spec.set_size > 4) throw std::invalid_argument("set size must be in 1..4");
    std::vector<Rat> grid = spec.grid();
    if (grid.empty()) throw std::invalid_argument("empty grid");
    SearchResult res;
    res.grid_size = grid.size();

    if (!spec.subset_pruning) {
        std::vector<Set> all;
        std::vector<std::size_t> idx(spec.set_size);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::size_t n = grid.size(), m = idx.size();
        while (m <= n) {
            Set s;
            for (std::size_t i : idx) s.push_back(grid[i]);
            all.push_back(std::move(s));
            // Next combination in lexicographic order.
            std::size_t i = m;
            while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::vector<std::vector<Rat>> pts(all.size());
        parallel_for(all.size(), spec.workers, [&](std::size_t i) { pts[i] = finite_orbit_points(MapSet(all[i])); });
        for (std::size_t i = 0; i < all.size(); ++i)
            if (!pts[i].empty()) res.hits.push_back({all[i], pts[i]});
        res.sets_examined = all.size();
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    }

    // Level 1.
    std::map<Set, std::vector<Rat>> level;
    {
        std::vector<std::vector<Rat>> pts(grid.size());
        parallel_for(grid.size(), spec.workers, [&](std::size_t i) { pts[i] = finite_orbit_points(MapSet({grid[i]})); });
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (!pts[i].empty()) level[{grid[i]}] = std::move(pts[i]);
        res.sets_examined = grid.size();
    }

    for (int k = 2; k <= spec.set_size; ++k) {
        // Extend each surviving (k-1)-set by a larger c; keep sets whose every
        // (k-1)-subset survived.
        std::vector<std::pair<Set, std::vector<Rat>>> todo;
        for (const auto& [base, pts] : level) {
            auto from = std::upper_bound(grid.begin(), grid.end(), base.back());
            for (auto it = from; it != grid.end(); ++it) {
                Set s = base;
                s.push_back(*it);
                std::vector<Rat> cand = pts;
                bool ok = true;
                for (std::size_t drop = 0; drop + 1 < s.size() && ok; ++drop) {
                    Set sub;
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != drop) sub.push_back(s[j]);
                    auto f = level.find(sub);
                    if (f == level.end()) {
                        ok = false;
                    } else {
                        cand = intersect(cand, f->second);
                        ok = !cand.empty();
                    }
                }
                if (ok) todo.emplace_back(std::move(s), std::move(cand));
            }
        }
        std::vector<std::vector<Rat>> found(todo.size());
        parallel_for(todo.size(), spec.workers,
                     [&](std::size_t i) { found[i] = closed_points(MapSet(todo[i].first), todo[i].second); });
        std::map<Set, std::vector<Rat>> next;
        for (std::size_t i = 0; i < todo.size(); ++i)
            if (!found[i].empty()) next[todo[i].first] = std::move(found[i]);
        res.sets_examined = todo.size();
        level = std::move(next);
    }

    for (auto& [cs, pts] : level) res.hits.push_back({cs, pts});
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

SearchSpec parse_search_spec(const std::string& json_text) {
    SearchSpec spec;
    try {
        auto j = nlohmann::json::parse(json_text);
        if (!j.is_object()) throw std::invalid_argument("search spec must be a JSON object");
        auto to_int = [](const nlohmann::json& v) {
            if (v.is_number_integer()) return Int(v.get<long>());
            if (v.is_string()) {
                Rat r = Rat::parse(v.get<std::string>());
                if (!r.is_integer()) throw std::invalid_argument("expected an integer");
                return r.num();
            }
            throw std::invalid_argument("expected an integer");
        };
        if (j.contains("denominators")) {
            spec.denominators.clear();
            for (const auto& d : j.at("denominators")) spec.denominators.push_back(to_int(d));
        }
        if (j.contains("numerator_bound")) spec.numerator_bound = to_int(j.at("numerator_bound"));
        if (j.contains("set_size")) spec.set_size = j.at("set_size").get<int>();
        if (j.contains("workers")) spec.workers = j.at("workers").get<unsigned>();
        if (j.contains("extra"))
            for (const auto& e : j.at("extra")) spec.extra.push_back(Rat::parse(e.get<std::string>()));
        for (const auto& [key, _] : j.items())
            if (key != "denominators" && key != "numerator_bound" && key != "set_size" && key != "workers" &&
                key != "extra")
                throw std::invalid_argument("unknown search spec key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed search spec: ") + e.what());
    }
    if (spec.set_size < 1 || spec.set_size > 4) throw std::invalid_argument("set_size must be in 1..4");
    return spec;
}

std::string format_hits(const std::vector<SearchHit>& hits) {
    std::ostringstream os;
    for (const auto& h : hits) {
        for (std::size_t i = 0; i < h.cs.size(); ++i) os << (i ? "," : "") << h.cs[i];
        os << ":";
        for (const Rat& p : h.basepoints) os << " " << p;
        os << "\n";
    }
    return os.str();
}

}  // namespace quadorbit
