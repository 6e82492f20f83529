#include "adjmin/fiber.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "adjmin/classify.hpp"

namespace adjmin {

Table::Table(std::map<Cell, long long> entries) : entries_(std::move(entries)) {
    for (const auto& [c, v] : entries_)
        if (v < 0) throw ParseError("negative table entry at " + to_string(c));
}

long long Table::value(const Cell& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
}

long long Table::total() const {
    long long t = 0;
    for (const auto& [c, v] : entries_) t += v;
    return t;
}

Table Table::normalized() const {
    std::map<Cell, long long> out;
    for (const auto& [c, v] : entries_)
        if (v != 0) out[c] = v;
    return Table(std::move(out));
}

namespace {

void check_support(const Table& t, const Configuration& c) {
    auto verts = c.vertex_set();
    std::set<Cell> vset(verts.begin(), verts.end());
    for (const auto& [cell, v] : t.entries())
        if (!vset.count(cell))
            throw SupportViolation("table keys cell " + to_string(cell) +
                                   " outside the configuration's vertex set");
}

} // namespace

MarginVector margins(const Table& t, const Configuration& c) {
    check_support(t, c);
    MarginVector mv;
    for (const Configuration& comp : connected_components(c)) {
        ComponentMargins cm;
        std::map<int, long long> rows, cols;
        for (const Cell& v : comp.vertex_set()) {
            rows[v.row] += t.value(v);
            cols[v.col] += t.value(v);
        }
        cm.rows.assign(rows.begin(), rows.end());
        cm.cols.assign(cols.begin(), cols.end());
        mv.components.push_back(std::move(cm));
    }
    return mv;
}

std::optional<Table> apply_move(const Table& t, const Move& m, const Configuration& c) {
    if (!c.contains(m.box.anchor)) return std::nullopt;
    std::map<Cell, long long> out = t.entries();
    out[m.box.nw()] += m.sign;
    out[m.box.se()] += m.sign;
    out[m.box.ne()] -= m.sign;
    out[m.box.sw()] -= m.sign;
    for (const Cell& v : m.box.vertices())
        if (out[v] < 0) return std::nullopt;
    return Table(std::move(out));
}

std::vector<Table> bfs_fiber(const Configuration& c, const Table& t, std::size_t node_cap) {
    check_support(t, c);
    std::set<Table> seen;
    std::deque<Table> frontier;
    Table start = t.normalized();
    seen.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        Table cur = frontier.front();
        frontier.pop_front();
        for (const Cell& a : c.anchors()) {
            for (int sign : {1, -1}) {
                auto next = apply_move(cur, Move{UnitMinor{a}, sign}, c);
                if (!next) continue;
                Table norm = next->normalized();
                if (seen.count(norm)) continue;
                if (seen.size() >= node_cap)
                    throw CapExceeded("fiber search exceeded node cap " +
                                      std::to_string(node_cap));
                seen.insert(norm);
                frontier.push_back(std::move(norm));
            }
        }
    }
    return std::vector<Table>(seen.begin(), seen.end());
}

bool pair_in_component(const Table& t, const Table& t2, const PrimeComponent& p) {
    const Configuration& c = p.config;
    check_support(t, c);
    check_support(t2, c);

    // Condition (i): both tables put weight on W.
    long long w1 = 0, w2 = 0;
    for (const Cell& cell : p.admissible.cells) {
        w1 += t.value(cell);
        w2 += t2.value(cell);
    }
    if (w1 >= 1 && w2 >= 1) return true;

    // Condition (ii): the difference is supported on the minors avoiding W
    // and has matching margins on each connected piece of that region.
    std::set<Cell> w(p.admissible.cells.begin(), p.admissible.cells.end());
    std::vector<Cell> avoiding;
    for (const Cell& a : c.anchors()) {
        UnitMinor m{a};
        bool avoids = true;
        for (const Cell& v : m.vertices())
            if (w.count(v)) avoids = false;
        if (avoids) avoiding.push_back(a);
    }
    Configuration cprime = Configuration::from_anchors(avoiding);
    auto verts = cprime.vertex_set();
    std::set<Cell> vset(verts.begin(), verts.end());
    for (const Cell& v : c.vertex_set())
        if (t.value(v) != t2.value(v) && !vset.count(v)) return false;
    for (const Configuration& piece : connected_components(cprime)) {
        std::map<int, long long> rows, cols;
        for (const Cell& v : piece.vertex_set()) {
            long long d = t.value(v) - t2.value(v);
            rows[v.row] += d;
            cols[v.col] += d;
        }
        for (const auto& [r, s] : rows)
            if (s != 0) return false;
        for (const auto& [cc, s] : cols)
            if (s != 0) return false;
    }
    return true;
}

std::string to_string(ConnStatus s) {
    switch (s) {
        case ConnStatus::Connected: return "Connected";
        case ConnStatus::Disconnected: return "Disconnected";
        case ConnStatus::Unknown: return "Unknown";
    }
    return "?";
}

ConnectivityVerdict connected_with_components(const Table& t, const Table& t2,
                                              const Configuration& c,
                                              const std::vector<PrimeComponent>& minimal,
                                              bool radical, const ConnectOptions& opts) {
    check_support(t, c);
    check_support(t2, c);
    ConnectivityVerdict v;
    if (t.normalized() == t2.normalized()) {
        v.status = ConnStatus::Connected;
        v.reason = "identical tables";
        return v;
    }
    for (const PrimeComponent& p : minimal) {
        if (!pair_in_component(t, t2, p)) {
            v.status = ConnStatus::Disconnected;
            v.reason = "pair fails the criterion of a minimal component";
            v.witness = p;
            return v;
        }
    }
    if (radical) {
        v.status = ConnStatus::Connected;
        v.reason = "criterion holds on all minimal components and the ideal is radical";
        return v;
    }
    if (opts.oracle_fallback) {
        auto fiber = bfs_fiber(c, t, opts.node_cap);
        Table target = t2.normalized();
        bool found = std::binary_search(fiber.begin(), fiber.end(), target);
        v.status = found ? ConnStatus::Connected : ConnStatus::Disconnected;
        v.reason = found ? "reached by the brute-force fiber search"
                         : "brute-force fiber search exhausted without reaching the target";
        v.via_bfs = true;
        return v;
    }
    v.status = ConnStatus::Unknown;
    v.reason =
        "criterion holds on all minimal components but radicality is not established";
    return v;
}

ConnectivityVerdict connected(const Table& t, const Table& t2, const Configuration& c,
                              const ConnectOptions& opts) {
    if (!is_special(c))
        throw NotSpecial("the connectivity criterion requires a special configuration");
    auto minimal = minimal_primes(c, opts.admissible_cap);
    bool radical = radical_verdict(c).status == RadicalStatus::Radical;
    return connected_with_components(t, t2, c, minimal, radical, opts);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

Table random_walk(const Configuration& c, const Table& t, std::uint64_t steps,
                  std::uint64_t seed) {
    check_support(t, c);
    if (c.empty()) return t;
    Table cur = t;
    std::uint64_t state = seed;
    const auto& as = c.anchors();
    for (std::uint64_t i = 0; i < steps; ++i) {
        std::uint64_t r = splitmix64(state);
        std::size_t box = static_cast<std::size_t>(r % as.size());
        int sign = (r >> 32) % 2 == 0 ? 1 : -1;
        auto next = apply_move(cur, Move{UnitMinor{as[box]}, sign}, c);
        if (next) cur = *next;
    }
    return cur;
}

} // namespace adjmin
