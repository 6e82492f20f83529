#include "adjmin/primes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adjmin {

namespace {

// Interaction of a partial in/out assignment with one minor: the set must
// either avoid the minor or contain one of its edges.
bool minor_still_satisfiable(const UnitMinor& m, const std::map<Cell, int>& state) {
    // state: -1 out, +1 in, absent undecided
    auto get = [&](const Cell& c) {
        auto it = state.find(c);
        return it == state.end() ? 0 : it->second;
    };
    bool any_in = false;
    for (const Cell& v : m.vertices())
        if (get(v) == 1) any_in = true;
    if (!any_in) return true; // empty intersection still possible
    for (const CellPair& e : m.edges())
        if (get(e.first) >= 0 && get(e.second) >= 0) return true;
    return false;
}

bool minor_satisfied(const UnitMinor& m, const std::set<Cell>& in) {
    bool any = false;
    for (const Cell& v : m.vertices())
        if (in.count(v)) any = true;
    if (!any) return true;
    for (const CellPair& e : m.edges())
        if (in.count(e.first) && in.count(e.second)) return true;
    return false;
}

} // namespace

bool is_admissible(const Configuration& c, const std::vector<Cell>& cells) {
    std::set<Cell> in(cells.begin(), cells.end());
    auto verts = c.vertex_set();
    std::set<Cell> vset(verts.begin(), verts.end());
    for (const Cell& x : in)
        if (!vset.count(x)) return false;
    for (const Cell& a : c.anchors())
        if (!minor_satisfied(UnitMinor{a}, in)) return false;
    return true;
}

std::vector<AdmissibleSet> admissible_sets(const Configuration& c, std::size_t cap) {
    std::vector<Cell> verts = c.vertex_set();
    std::vector<AdmissibleSet> out;

    // Backtracking over the cells with per-minor consistency propagation.
    std::map<Cell, int> state;
    std::vector<Cell> chosen;
    // Minors touching each cell, for incremental checks.
    std::map<Cell, std::vector<UnitMinor>> touching;
    for (const Cell& a : c.anchors())
        for (const Cell& v : UnitMinor{a}.vertices()) touching[v].push_back(UnitMinor{a});

    auto consistent = [&](const Cell& v) {
        for (const UnitMinor& m : touching[v])
            if (!minor_still_satisfiable(m, state)) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == verts.size()) {
            std::set<Cell> in(chosen.begin(), chosen.end());
            for (const Cell& a : c.anchors())
                if (!minor_satisfied(UnitMinor{a}, in)) return;
            if (out.size() >= cap)
                throw CapExceeded("more than " + std::to_string(cap) + " admissible sets");
            out.push_back(AdmissibleSet{chosen});
            return;
        }
        const Cell& v = verts[idx];
        for (int val : {-1, 1}) {
            state[v] = val;
            if (val == 1) chosen.push_back(v);
            if (consistent(v)) self(self, idx + 1);
            if (val == 1) chosen.pop_back();
        }
        state.erase(v);
    };
    rec(rec, 0);

    for (AdmissibleSet& w : out) std::sort(w.cells.begin(), w.cells.end());
    std::sort(out.begin(), out.end(), [](const AdmissibleSet& a, const AdmissibleSet& b) {
        if (a.cells.size() != b.cells.size()) return a.cells.size() < b.cells.size();
        return a.cells < b.cells;
    });
    return out;
}

std::vector<GeneralMinor> inner_minors(const std::vector<Cell>& region) {
    std::set<Cell> cells(region.begin(), region.end());
    std::map<int, std::set<int>> cols_of_row;
    for (const Cell& c : cells) cols_of_row[c.row].insert(c.col);

    std::vector<GeneralMinor> out;
    std::vector<int> rows;
    for (const auto& [r, cs] : cols_of_row) rows.push_back(r);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            int r1 = rows[i], r2 = rows[j];
            if (rows[j] - rows[i] != static_cast<int>(j - i)) continue; // missing row inside
            // Columns whose full vertical segment r1..r2 lies in the region.
            std::vector<int> full;
            for (int col : cols_of_row[r1]) {
                bool ok = true;
                for (int r = r1 + 1; r <= r2 && ok; ++r)
                    if (!cells.count(Cell{r, col})) ok = false;
                if (ok) full.push_back(col);
            }
            // Runs of consecutive columns give the admissible rectangles.
            for (std::size_t s = 0; s < full.size(); ++s) {
                std::size_t e = s;
                while (e + 1 < full.size() && full[e + 1] == full[e] + 1) ++e;
                for (std::size_t a = s; a <= e; ++a)
                    for (std::size_t b = a + 1; b <= e; ++b)
                        out.push_back(GeneralMinor{r1, r2, full[a], full[b]});
                s = e;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PrimeComponent prime_component(const Configuration& c, const AdmissibleSet& w,
                               InnerRegion region) {
    if (!is_admissible(c, w.cells))
        throw NotAdmissible("the given vertex set is not admissible for the configuration");
    std::set<Cell> in(w.cells.begin(), w.cells.end());
    std::vector<Cell> reg;
    if (region == InnerRegion::ComplementOfW) {
        for (const Cell& v : c.vertex_set())
            if (!in.count(v)) reg.push_back(v);
    } else {
        std::set<Cell> cells;
        for (const Cell& a : c.anchors()) {
            UnitMinor m{a};
            bool avoids = true;
            for (const Cell& v : m.vertices())
                if (in.count(v)) avoids = false;
            if (avoids)
                for (const Cell& v : m.vertices()) cells.insert(v);
        }
        reg.assign(cells.begin(), cells.end());
    }
    PrimeComponent p;
    p.config = c;
    p.admissible = w;
    std::sort(p.admissible.cells.begin(), p.admissible.cells.end());
    p.inner = inner_minors(reg);
    return p;
}

bool component_contains(const PrimeComponent& p_v, const PrimeComponent& p_w) {
    if (p_v.config != p_w.config)
        throw MismatchedConfiguration("components built over different configurations");
    if (!std::includes(p_w.admissible.cells.begin(), p_w.admissible.cells.end(),
                       p_v.admissible.cells.begin(), p_v.admissible.cells.end()))
        return false;
    std::set<Cell> w(p_w.admissible.cells.begin(), p_w.admissible.cells.end());
    std::set<GeneralMinor> w_inner(p_w.inner.begin(), p_w.inner.end());
    for (const GeneralMinor& d : p_v.inner) {
        if (w_inner.count(d)) continue;
        bool edge_inside = false;
        for (const CellPair& e : d.edges())
            if (w.count(e.first) && w.count(e.second)) edge_inside = true;
        if (!edge_inside) return false;
    }
    return true;
}

std::vector<PrimeComponent> minimal_primes(const Configuration& c, std::size_t cap) {
    if (!is_special(c))
        throw NotSpecial("minimal prime decomposition requires a special configuration");
    auto sets = admissible_sets(c, cap);
    std::vector<PrimeComponent> comps;
    comps.reserve(sets.size());
    for (const AdmissibleSet& w : sets) comps.push_back(prime_component(c, w));

    // Deduplicate syntactically equal components, keeping the smaller W.
    std::sort(comps.begin(), comps.end(), [](const PrimeComponent& a, const PrimeComponent& b) {
        if (a.admissible.cells.size() != b.admissible.cells.size())
            return a.admissible.cells.size() < b.admissible.cells.size();
        return a.admissible.cells < b.admissible.cells;
    });
    std::vector<PrimeComponent> unique;
    for (const PrimeComponent& p : comps) {
        bool dup = false;
        for (const PrimeComponent& q : unique)
            if (q.admissible == p.admissible && q.inner == p.inner) dup = true;
        if (!dup) unique.push_back(p);
    }

    std::vector<PrimeComponent> minimal;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        bool is_minimal = true;
        for (std::size_t j = 0; j < unique.size() && is_minimal; ++j) {
            if (i == j) continue;
            if (component_contains(unique[j], unique[i]) &&
                !(unique[j].admissible == unique[i].admissible &&
                  unique[j].inner == unique[i].inner))
                is_minimal = false;
        }
        if (is_minimal) minimal.push_back(unique[i]);
    }
    return minimal;
}

} // namespace adjmin
