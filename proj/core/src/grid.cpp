#include "adjmin/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace adjmin {

std::string to_string(const Cell& c) {
    std::ostringstream os;
    os << "(" << c.row << "," << c.col << ")";
    return os.str();
}

Configuration Configuration::from_anchors(std::vector<Cell> anchors) {
    std::sort(anchors.begin(), anchors.end());
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (anchors[i].row < 1 || anchors[i].col < 1)
            throw ParseError("anchor " + to_string(anchors[i]) + " has row/col < 1");
        if (i > 0 && anchors[i] == anchors[i - 1])
            throw ParseError("duplicate anchor " + to_string(anchors[i]));
    }
    Configuration c;
    c.anchors_ = std::move(anchors);
    return c;
}

std::vector<UnitMinor> Configuration::minors() const {
    std::vector<UnitMinor> out;
    out.reserve(anchors_.size());
    for (const Cell& a : anchors_) out.push_back(UnitMinor{a});
    return out;
}

bool Configuration::contains(const Cell& anchor) const {
    return std::binary_search(anchors_.begin(), anchors_.end(), anchor);
}

std::vector<Cell> Configuration::vertex_set() const {
    std::set<Cell> cells;
    for (const Cell& a : anchors_)
        for (const Cell& v : UnitMinor{a}.vertices()) cells.insert(v);
    return std::vector<Cell>(cells.begin(), cells.end());
}

std::vector<Cell> shared_vertices(const UnitMinor& a, const UnitMinor& b) {
    std::vector<Cell> out;
    auto va = a.vertices();
    auto vb = b.vertices();
    for (const Cell& x : va)
        if (std::find(vb.begin(), vb.end(), x) != vb.end()) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

bool share_edge(const UnitMinor& a, const UnitMinor& b) {
    if (a == b) return false;
    int dr = a.anchor.row - b.anchor.row;
    int dc = a.anchor.col - b.anchor.col;
    return (dr == 0 && (dc == 1 || dc == -1)) || (dc == 0 && (dr == 1 || dr == -1));
}

namespace {

// Edge-sharing neighbor indices for each minor in anchor order.
std::vector<std::vector<std::size_t>> edge_neighbors(const Configuration& c) {
    const auto& as = c.anchors();
    std::vector<std::vector<std::size_t>> nbr(as.size());
    std::map<Cell, std::size_t> index;
    for (std::size_t i = 0; i < as.size(); ++i) index[as[i]] = i;
    const int dr[] = {-1, 1, 0, 0};
    const int dc[] = {0, 0, -1, 1};
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (int d = 0; d < 4; ++d) {
            auto it = index.find(Cell{as[i].row + dr[d], as[i].col + dc[d]});
            if (it != index.end()) nbr[i].push_back(it->second);
        }
        std::sort(nbr[i].begin(), nbr[i].end());
    }
    return nbr;
}

} // namespace

std::vector<Configuration> connected_components(const Configuration& c) {
    const auto& as = c.anchors();
    auto nbr = edge_neighbors(c);
    std::vector<int> comp(as.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (comp[i] != -1) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = next;
        while (!stack.empty()) {
            std::size_t k = stack.back();
            stack.pop_back();
            for (std::size_t j : nbr[k])
                if (comp[j] == -1) {
                    comp[j] = next;
                    stack.push_back(j);
                }
        }
        ++next;
    }
    std::vector<std::vector<Cell>> groups(next);
    for (std::size_t i = 0; i < as.size(); ++i) groups[comp[i]].push_back(as[i]);
    std::vector<Configuration> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.push_back(Configuration::from_anchors(std::move(g)));
    std::sort(out.begin(), out.end(), [](const Configuration& a, const Configuration& b) {
        return a.anchors().front() < b.anchors().front();
    });
    return out;
}

ComponentGraph component_graph(const Configuration& c) {
    ComponentGraph g;
    g.nodes = connected_components(c);
    std::map<Cell, std::size_t> node_of;
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
        for (const Cell& a : g.nodes[n].anchors()) node_of[a] = n;
    const auto& as = c.anchors();
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            std::size_t na = node_of[as[i]];
            std::size_t nb = node_of[as[j]];
            if (na == nb) continue;
            auto shared = shared_vertices(UnitMinor{as[i]}, UnitMinor{as[j]});
            if (shared.size() == 1)
                g.links.push_back({std::min(na, nb), std::max(na, nb), shared.front()});
        }
    }
    std::sort(g.links.begin(), g.links.end());
    return g;
}

bool ComponentGraph::is_simple() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Link& l : links)
        if (!seen.insert({l.a, l.b}).second) return false;
    return true;
}

std::optional<std::array<std::size_t, 4>> ComponentGraph::find_four_cycle() const {
    std::vector<std::set<std::size_t>> adj(nodes.size());
    for (const Link& l : links) {
        adj[l.a].insert(l.b);
        adj[l.b].insert(l.a);
    }
    for (std::size_t u = 0; u < nodes.size(); ++u) {
        for (std::size_t w = u + 1; w < nodes.size(); ++w) {
            std::vector<std::size_t> common;
            for (std::size_t x : adj[u])
                if (x != w && adj[w].count(x)) common.push_back(x);
            if (common.size() >= 2) return std::array<std::size_t, 4>{u, common[0], w, common[1]};
        }
    }
    return std::nullopt;
}

bool is_chessboard(const Configuration& c) {
    const auto& as = c.anchors();
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = i + 1; j < as.size(); ++j)
            if (shared_vertices(UnitMinor{as[i]}, UnitMinor{as[j]}).size() > 1) return false;
    return true;
}

bool is_special(const Configuration& c) {
    const auto& as = c.anchors();
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            UnitMinor mi{as[i]}, mj{as[j]};
            if (shared_vertices(mi, mj).size() != 1) continue;
            bool mediated = false;
            for (const Cell& a : as) {
                UnitMinor m{a};
                if (share_edge(m, mi) && share_edge(m, mj)) {
                    mediated = true;
                    break;
                }
            }
            if (!mediated) return false;
        }
    }
    return true;
}

std::string to_string(MotifKind k) {
    switch (k) {
        case MotifKind::Square: return "Square";
        case MotifKind::Pin: return "Pin";
        case MotifKind::Saddle: return "Saddle";
    }
    return "?";
}

std::vector<Motif> detect_motifs(const Configuration& c) {
    std::set<Motif> found;
    auto has = [&](int r, int col) { return c.contains(Cell{r, col}); };
    auto add = [&](MotifKind k, std::vector<Cell> anchors) {
        std::sort(anchors.begin(), anchors.end());
        found.insert(Motif{k, std::move(anchors)});
    };

    for (const Cell& a : c.anchors()) {
        int r = a.row, k = a.col;
        // Square: 2x2 block of boxes anchored here.
        if (has(r, k + 1) && has(r + 1, k) && has(r + 1, k + 1))
            add(MotifKind::Square, {{r, k}, {r, k + 1}, {r + 1, k}, {r + 1, k + 1}});
        // Pin: three collinear boxes plus one attached to the middle on the
        // perpendicular side.
        if (has(r, k + 1) && has(r, k + 2)) {
            if (has(r - 1, k + 1))
                add(MotifKind::Pin, {{r, k}, {r, k + 1}, {r, k + 2}, {r - 1, k + 1}});
            if (has(r + 1, k + 1))
                add(MotifKind::Pin, {{r, k}, {r, k + 1}, {r, k + 2}, {r + 1, k + 1}});
        }
        if (has(r + 1, k) && has(r + 2, k)) {
            if (has(r + 1, k - 1))
                add(MotifKind::Pin, {{r, k}, {r + 1, k}, {r + 2, k}, {r + 1, k - 1}});
            if (has(r + 1, k + 1))
                add(MotifKind::Pin, {{r, k}, {r + 1, k}, {r + 2, k}, {r + 1, k + 1}});
        }
    }

    // Saddle: a run of >=2 collinear boxes with one box attached
    // perpendicularly at each end, both on the same side.  (Opposite-side
    // attachments give a monotone staircase, which is not a motif.)
    auto add_saddle = [&](std::vector<Cell> line, Cell end1, Cell end2) {
        line.push_back(end1);
        line.push_back(end2);
        add(MotifKind::Saddle, std::move(line));
    };
    for (const Cell& a : c.anchors()) {
        int r = a.row, k = a.col;
        if (!has(r, k - 1)) { // start of a horizontal run
            std::vector<Cell> line{{r, k}};
            for (int e = k + 1; has(r, e); ++e) {
                line.push_back({r, e});
                for (std::size_t s = 0; s + 1 < line.size(); ++s) {
                    int c1 = line[s].col, c2 = e;
                    std::vector<Cell> run(line.begin() + s, line.end());
                    if (has(r - 1, c1) && has(r - 1, c2))
                        add_saddle(run, {r - 1, c1}, {r - 1, c2});
                    if (has(r + 1, c1) && has(r + 1, c2))
                        add_saddle(run, {r + 1, c1}, {r + 1, c2});
                }
            }
        }
        if (!has(r - 1, k)) { // start of a vertical run
            std::vector<Cell> line{{r, k}};
            for (int e = r + 1; has(e, k); ++e) {
                line.push_back({e, k});
                for (std::size_t s = 0; s + 1 < line.size(); ++s) {
                    int r1 = line[s].row, r2 = e;
                    std::vector<Cell> run(line.begin() + s, line.end());
                    if (has(r1, k - 1) && has(r2, k - 1))
                        add_saddle(run, {r1, k - 1}, {r2, k - 1});
                    if (has(r1, k + 1) && has(r2, k + 1))
                        add_saddle(run, {r1, k + 1}, {r2, k + 1});
                }
            }
        }
    }
    return std::vector<Motif>(found.begin(), found.end());
}

std::string to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::LinePath: return "LinePath";
        case ShapeKind::MonotoneNE: return "MonotoneNE";
        case ShapeKind::MonotoneSE: return "MonotoneSE";
        case ShapeKind::NonMonotonePath: return "NonMonotonePath";
        case ShapeKind::Cycle: return "Cycle";
        case ShapeKind::Other: return "Other";
    }
    return "?";
}

bool is_valid_path_ordering(const std::vector<UnitMinor>& ordering) {
    for (std::size_t i = 1; i < ordering.size(); ++i) {
        auto shared = shared_vertices(ordering[i - 1], ordering[i]);
        if (shared.size() != 2) return false; // consecutive minors meet in an edge
        for (std::size_t j = 0; j + 1 < i; ++j) {
            for (const Cell& v : shared_vertices(ordering[j], ordering[i]))
                if (std::find(shared.begin(), shared.end(), v) == shared.end()) return false;
        }
    }
    // Distinctness.
    std::set<UnitMinor> uniq(ordering.begin(), ordering.end());
    return uniq.size() == ordering.size();
}

namespace {

// Endpoint corner cells of a monotone ordering, following the column trend.
std::pair<Cell, Cell> endpoints_for(const std::vector<UnitMinor>& order) {
    const Cell& first = order.front().anchor;
    const Cell& last = order.back().anchor;
    bool cols_non_decreasing = last.col >= first.col;
    if (cols_non_decreasing)
        return {Cell{first.row, first.col}, Cell{last.row + 1, last.col + 1}};
    return {Cell{first.row, first.col + 1}, Cell{last.row + 1, last.col}};
}

bool monotone_seq(const std::vector<int>& v) {
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) inc = false;
        if (v[i] > v[i - 1]) dec = false;
    }
    return inc || dec;
}

} // namespace

PathShape classify_shape(const Configuration& c) {
    auto comps = connected_components(c);
    if (comps.size() != 1)
        throw NotConnected("classify_shape requires a connected configuration (got " +
                           std::to_string(comps.size()) + " components)");
    const auto& as = c.anchors();
    auto nbr = edge_neighbors(c);

    PathShape shape;
    if (as.size() == 1) {
        shape.kind = ShapeKind::LinePath;
        shape.ordering = {UnitMinor{as[0]}};
        shape.endpoints = endpoints_for(shape.ordering);
        shape.endpoints_reversed = endpoints_for({shape.ordering.rbegin(), shape.ordering.rend()});
        return shape;
    }

    bool all_two = true;
    std::vector<std::size_t> ends;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (nbr[i].size() != 2) all_two = false;
        if (nbr[i].size() <= 1) ends.push_back(i);
        if (nbr[i].size() > 2) {
            shape.kind = ShapeKind::Other;
            shape.ordering = c.minors();
            return shape;
        }
    }

    if (all_two && as.size() >= 3) {
        // Canonical cycle traversal from the smallest anchor.
        std::vector<UnitMinor> order;
        std::vector<bool> used(as.size(), false);
        used[0] = true;
        order.push_back(UnitMinor{as[0]});
        std::size_t next = std::min(nbr[0][0], nbr[0][1]);
        while (true) {
            used[next] = true;
            order.push_back(UnitMinor{as[next]});
            std::size_t follow = as.size();
            for (std::size_t j : nbr[next])
                if (!used[j]) follow = j;
            if (follow == as.size()) break;
            next = follow;
        }
        shape.kind = ShapeKind::Cycle;
        shape.ordering = std::move(order);
        return shape;
    }

    if (ends.size() != 2) {
        shape.kind = ShapeKind::Other;
        shape.ordering = c.minors();
        return shape;
    }

    // Greedy chain from an end.
    auto build = [&](std::size_t start) {
        std::vector<std::size_t> chain{start};
        std::vector<bool> used(as.size(), false);
        used[start] = true;
        std::size_t cur = start;
        while (true) {
            std::size_t follow = as.size();
            for (std::size_t j : nbr[cur])
                if (!used[j]) follow = j;
            if (follow == as.size()) break;
            used[follow] = true;
            chain.push_back(follow);
            cur = follow;
        }
        return chain;
    };
    std::size_t start = as[ends[0]] < as[ends[1]] ? ends[0] : ends[1];
    auto chain = build(start);
    if (chain.size() != as.size()) {
        shape.kind = ShapeKind::Other;
        shape.ordering = c.minors();
        return shape;
    }
    std::vector<UnitMinor> order;
    order.reserve(chain.size());
    for (std::size_t i : chain) order.push_back(UnitMinor{as[i]});
    if (!is_valid_path_ordering(order)) {
        shape.kind = ShapeKind::Other;
        shape.ordering = c.minors();
        return shape;
    }

    std::vector<int> rows, cols;
    for (const UnitMinor& m : order) {
        rows.push_back(m.anchor.row);
        cols.push_back(m.anchor.col);
    }
    bool same_row = std::all_of(rows.begin(), rows.end(), [&](int r) { return r == rows[0]; });
    bool same_col = std::all_of(cols.begin(), cols.end(), [&](int x) { return x == cols[0]; });
    if (same_row || same_col)
        shape.kind = ShapeKind::LinePath;
    else if (monotone_seq(rows) && monotone_seq(cols)) {
        int dr = rows.back() - rows.front();
        int dc = cols.back() - cols.front();
        shape.kind = (dr > 0) == (dc > 0) ? ShapeKind::MonotoneSE : ShapeKind::MonotoneNE;
    } else {
        shape.kind = ShapeKind::NonMonotonePath;
    }

    shape.ordering = std::move(order);
    if (shape.monotone()) {
        shape.endpoints = endpoints_for(shape.ordering);
        std::vector<UnitMinor> rev(shape.ordering.rbegin(), shape.ordering.rend());
        shape.endpoints_reversed = endpoints_for(rev);
    }
    return shape;
}

std::vector<UnitMinor> free_minors(const Configuration& c) {
    std::map<Cell, int> count;
    for (const Cell& a : c.anchors())
        for (const Cell& v : UnitMinor{a}.vertices()) ++count[v];
    std::vector<UnitMinor> out;
    for (const Cell& a : c.anchors()) {
        UnitMinor m{a};
        bool diag_free = count[m.nw()] == 1 && count[m.se()] == 1;
        bool anti_free = count[m.ne()] == 1 && count[m.sw()] == 1;
        if (diag_free || anti_free) out.push_back(m);
    }
    return out;
}

} // namespace adjmin
