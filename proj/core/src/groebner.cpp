#include "adjmin/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <list>
#include <set>
#include <sstream>
#include <tuple>

namespace adjmin {

Monomial::Monomial(std::map<Cell, int> exponents) : exp_(std::move(exponents)) {
    for (auto it = exp_.begin(); it != exp_.end();) {
        if (it->second < 0) throw ParseError("negative exponent in monomial");
        if (it->second == 0)
            it = exp_.erase(it);
        else
            ++it;
    }
}

int Monomial::exponent(const Cell& c) const {
    auto it = exp_.find(c);
    return it == exp_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [c, e] : exp_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::map<Cell, int> out = exp_;
    for (const auto& [c, e] : o.exp_) out[c] += e;
    return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [c, e] : exp_)
        if (o.exponent(c) < e) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    std::map<Cell, int> out = o.exp_;
    for (const auto& [c, e] : exp_) {
        auto it = out.find(c);
        if (it == out.end() || it->second < e)
            throw VerificationFailure("non-exact monomial division");
        it->second -= e;
    }
    return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::map<Cell, int> out = a.exp_;
    for (const auto& [c, e] : b.exp_) {
        auto& slot = out[c];
        slot = std::max(slot, e);
    }
    return Monomial(std::move(out));
}

bool Monomial::coprime(const Monomial& o) const {
    for (const auto& [c, e] : exp_)
        if (o.exponent(c) > 0) return false;
    return true;
}

BinomialElement make_binomial(const Monomial& a, const Monomial& b) {
    if (a == b) throw ParseError("binomial with equal terms is zero");
    return BinomialElement{a, b};
}

BinomialElement binomial_of(const GeneralMinor& m) {
    return BinomialElement{Monomial::variable(m.nw()) * Monomial::variable(m.se()),
                           Monomial::variable(m.ne()) * Monomial::variable(m.sw())};
}

BinomialElement binomial_of(const UnitMinor& m) { return binomial_of(as_general(m)); }

VariableRanking::VariableRanking(std::vector<Cell> largest_first)
    : cells_(std::move(largest_first)) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (!rank_.emplace(cells_[i], static_cast<int>(i)).second)
            throw ParseError("duplicate cell in variable ranking: " + to_string(cells_[i]));
    }
}

bool VariableRanking::covers(const Cell& c) const { return rank_.count(c) > 0; }

int VariableRanking::rank(const Cell& c) const {
    auto it = rank_.find(c);
    if (it == rank_.end()) throw ParseError("cell " + to_string(c) + " not in ranking");
    return it->second;
}

int VariableRanking::compare(const Monomial& a, const Monomial& b) const {
    for (const Cell& c : cells_) {
        int ea = a.exponent(c), eb = b.exponent(c);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

VariableRanking row_major_ranking(const std::vector<Cell>& cells) {
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return VariableRanking(std::move(sorted));
}

std::string to_string(MarkChoice m) {
    return m == MarkChoice::Diagonal ? "Diagonal" : "AntiDiagonal";
}

Monomial mark_monomial(const UnitMinor& m, MarkChoice choice) {
    if (choice == MarkChoice::Diagonal)
        return Monomial::variable(m.nw()) * Monomial::variable(m.se());
    return Monomial::variable(m.ne()) * Monomial::variable(m.sw());
}

VariableRanking marked_order(const Configuration& c, const Marking& marking) {
    for (const Cell& a : c.anchors())
        if (!marking.count(a)) throw ParseError("marking missing minor " + to_string(a));

    // Group the vertex set by row.
    std::map<int, std::vector<Cell>> rows;
    for (const Cell& v : c.vertex_set()) rows[v.row].push_back(v);

    std::vector<Cell> ranking;
    for (auto& [row, cells] : rows) {
        std::sort(cells.begin(), cells.end());
        // Within the row, each marked minor anchored here compares its two
        // top vertices; realize the chain by inserting at an extreme.
        std::list<Cell> order; // highest variable first
        for (const Cell& v : cells) {
            if (order.empty()) {
                order.push_back(v);
                continue;
            }
            const Cell prev{v.row, v.col - 1}; // anchor of the constraining minor
            if (c.contains(prev) && marking.at(prev) == MarkChoice::AntiDiagonal)
                order.push_front(v); // top-right vertex must outrank top-left
            else
                order.push_back(v); // diagonal mark or no constraint
        }
        ranking.insert(ranking.end(), order.begin(), order.end());
    }

    VariableRanking r(std::move(ranking));
    for (const Cell& a : c.anchors()) {
        UnitMinor m{a};
        MarkChoice choice = marking.at(a);
        Monomial mark = mark_monomial(m, choice);
        Monomial other = mark_monomial(
            m, choice == MarkChoice::Diagonal ? MarkChoice::AntiDiagonal : MarkChoice::Diagonal);
        if (r.compare(mark, other) <= 0)
            throw VerificationFailure("marked order does not realize mark of minor " +
                                      to_string(a));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Dense lex engine.

namespace {

using Exp = std::uint16_t;
using DM = std::vector<Exp>; // exponents indexed by rank, rank 0 largest

int dm_deg(const DM& m) {
    int d = 0;
    for (Exp e : m) d += e;
    return d;
}

// Lex: the first differing rank decides, larger exponent wins.
int dm_cmp(const DM& a, const DM& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

bool dm_divides(const DM& a, const DM& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool dm_coprime(const DM& a, const DM& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

DM dm_mul_quot(const DM& m, const DM& den, const DM& num) {
    // m / den * num, assuming den | m.
    DM out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i] = static_cast<Exp>(m[i] - den[i] + num[i]);
    return out;
}

DM dm_lcm(const DM& a, const DM& b) {
    DM out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

struct El {
    DM lead;
    DM tail; // empty-vector-sized zero monomial means the constant 1
    bool has_tail = false;
};

class LexEngine {
public:
    LexEngine(std::size_t nvars, int degree_cap) : n_(nvars), cap_(degree_cap) {}

    // nullopt: the pair of monomials cancels to zero.
    std::optional<El> element(DM a, DM b) const {
        int c = dm_cmp(a, b);
        if (c == 0) return std::nullopt;
        El e;
        if (c > 0) {
            e.lead = std::move(a);
            e.tail = std::move(b);
        } else {
            e.lead = std::move(b);
            e.tail = std::move(a);
        }
        e.has_tail = true;
        return e;
    }

    void check_cap(const DM& m) const {
        if (dm_deg(m) > cap_)
            throw CapExceeded("intermediate degree " + std::to_string(dm_deg(m)) +
                              " exceeds cap " + std::to_string(cap_));
    }

    // Full normal form of a monomial; nullopt means zero.
    std::optional<DM> nf_mono(DM m, const std::vector<El>& basis) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const El& e : basis) {
                if (!dm_divides(e.lead, m)) continue;
                if (!e.has_tail) return std::nullopt;
                m = dm_mul_quot(m, e.lead, e.tail);
                check_cap(m);
                changed = true;
                break;
            }
        }
        return m;
    }

    // Full normal form of an element; nullopt means zero.
    std::optional<El> nf(El f, const std::vector<El>& basis) const {
        while (true) {
            if (!f.has_tail) {
                auto m = nf_mono(f.lead, basis);
                if (!m) return std::nullopt;
                return El{std::move(*m), {}, false};
            }
            bool reduced = false;
            for (const El& e : basis) {
                if (!dm_divides(e.lead, f.lead)) continue;
                if (!e.has_tail) {
                    f = El{std::move(f.tail), {}, false};
                } else {
                    DM a = dm_mul_quot(f.lead, e.lead, e.tail);
                    check_cap(a);
                    auto next = element(std::move(a), std::move(f.tail));
                    if (!next) return std::nullopt;
                    f = std::move(*next);
                }
                reduced = true;
                break;
            }
            if (reduced) continue;
            for (const El& e : basis) {
                if (!dm_divides(e.lead, f.tail)) continue;
                if (!e.has_tail) {
                    f = El{std::move(f.lead), {}, false};
                } else {
                    DM b = dm_mul_quot(f.tail, e.lead, e.tail);
                    check_cap(b);
                    auto next = element(std::move(f.lead), std::move(b));
                    if (!next) return std::nullopt;
                    f = std::move(*next);
                }
                reduced = true;
                break;
            }
            if (!reduced) return f;
        }
    }

    std::optional<El> s_pair(const El& f, const El& g) const {
        DM L = dm_lcm(f.lead, g.lead);
        check_cap(L);
        if (f.has_tail && g.has_tail) {
            DM a = dm_mul_quot(L, g.lead, g.tail);
            DM b = dm_mul_quot(L, f.lead, f.tail);
            check_cap(a);
            check_cap(b);
            return element(std::move(a), std::move(b));
        }
        if (f.has_tail && !g.has_tail) {
            DM a = dm_mul_quot(L, f.lead, f.tail);
            check_cap(a);
            return El{std::move(a), {}, false};
        }
        if (!f.has_tail && g.has_tail) {
            DM a = dm_mul_quot(L, g.lead, g.tail);
            check_cap(a);
            return El{std::move(a), {}, false};
        }
        return std::nullopt;
    }

    std::vector<El> complete(std::vector<El> gens) const {
        std::vector<El> basis;
        using Pair = std::tuple<int, DM, std::size_t, std::size_t>;
        std::set<Pair> queue; // (deg lcm, lcm, i, j) ascending

        auto push_pairs = [&](std::size_t j) {
            for (std::size_t i = 0; i < j; ++i) {
                DM L = dm_lcm(basis[i].lead, basis[j].lead);
                queue.insert(Pair{dm_deg(L), std::move(L), i, j});
            }
        };
        for (El& g : gens) {
            check_cap(g.lead);
            basis.push_back(std::move(g));
            push_pairs(basis.size() - 1);
        }
        while (!queue.empty()) {
            auto [d, L, i, j] = *queue.begin();
            queue.erase(queue.begin());
            const El& f = basis[i];
            const El& g = basis[j];
            if (!f.has_tail && !g.has_tail) continue;
            if (dm_coprime(f.lead, g.lead)) continue; // product criterion
            auto s = s_pair(f, g);
            if (!s) continue;
            auto r = nf(std::move(*s), basis);
            if (!r) continue;
            check_cap(r->lead);
            basis.push_back(std::move(*r));
            push_pairs(basis.size() - 1);
        }
        return autoreduce(std::move(basis));
    }

    std::vector<El> autoreduce(std::vector<El> basis) const {
        // Minimalize: drop elements whose lead is divisible by another lead.
        std::vector<El> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (i == j) continue;
                if (!dm_divides(basis[j].lead, basis[i].lead)) continue;
                int c = dm_cmp(basis[j].lead, basis[i].lead);
                if (c != 0 || j < i) redundant = true; // equal leads keep the first
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        // Tail-reduce each element against the others.
        std::vector<El> out;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            if (!minimal[i].has_tail) {
                out.push_back(minimal[i]);
                continue;
            }
            std::vector<El> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            auto t = nf_mono(minimal[i].tail, others);
            if (!t)
                out.push_back(El{minimal[i].lead, {}, false});
            else
                out.push_back(El{minimal[i].lead, std::move(*t), true});
        }
        std::sort(out.begin(), out.end(), [](const El& a, const El& b) {
            int c = dm_cmp(a.lead, b.lead);
            if (c != 0) return c < 0;
            if (a.has_tail != b.has_tail) return !a.has_tail;
            return dm_cmp(a.tail, b.tail) < 0;
        });
        out.erase(std::unique(out.begin(), out.end(),
                              [](const El& a, const El& b) {
                                  return a.has_tail == b.has_tail && a.lead == b.lead &&
                                         a.tail == b.tail;
                              }),
                  out.end());
        return out;
    }

    std::size_t nvars() const { return n_; }

private:
    std::size_t n_;
    int cap_;
};

// Conversion between the sparse public form and the dense engine form.
struct DenseContext {
    const VariableRanking* ranking;

    DM to_dense(const Monomial& m) const {
        DM out(ranking->size(), 0);
        for (const auto& [c, e] : m.exponents()) {
            if (e > 60000) throw CapExceeded("exponent too large for the engine");
            out[static_cast<std::size_t>(ranking->rank(c))] = static_cast<Exp>(e);
        }
        return out;
    }

    El to_dense(const BinomialElement& f) const {
        if (f.is_monomial()) return El{to_dense(f.lead), {}, false};
        DM a = to_dense(f.lead);
        DM b = to_dense(*f.tail);
        int c = dm_cmp(a, b);
        if (c == 0) throw ParseError("binomial with equal terms is zero");
        El e;
        e.has_tail = true;
        if (c > 0) {
            e.lead = std::move(a);
            e.tail = std::move(b);
        } else {
            e.lead = std::move(b);
            e.tail = std::move(a);
        }
        return e;
    }

    Monomial to_sparse(const DM& m) const {
        std::map<Cell, int> exps;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) exps[ranking->cells()[i]] = m[i];
        return Monomial(std::move(exps));
    }

    BinomialElement to_sparse(const El& e) const {
        if (!e.has_tail) return BinomialElement{to_sparse(e.lead), std::nullopt};
        return BinomialElement{to_sparse(e.lead), to_sparse(e.tail)};
    }
};

} // namespace

GroebnerBasis reduced_basis(const std::vector<BinomialElement>& gens,
                            const VariableRanking& ranking, int degree_cap) {
    DenseContext ctx{&ranking};
    LexEngine engine(ranking.size(), degree_cap);
    std::vector<El> dense;
    dense.reserve(gens.size());
    for (const BinomialElement& g : gens) dense.push_back(ctx.to_dense(g));
    auto completed = engine.complete(std::move(dense));
    GroebnerBasis basis;
    basis.ranking = ranking;
    basis.reduced = true;
    for (const El& e : completed) basis.elements.push_back(ctx.to_sparse(e));
    std::sort(basis.elements.begin(), basis.elements.end());
    return basis;
}

std::optional<Monomial> normal_form(const Monomial& m, const GroebnerBasis& basis) {
    DenseContext ctx{&basis.ranking};
    LexEngine engine(basis.ranking.size(), kDefaultSaturationDegreeCap + m.degree());
    std::vector<El> dense;
    dense.reserve(basis.elements.size());
    for (const BinomialElement& e : basis.elements) dense.push_back(ctx.to_dense(e));
    auto r = engine.nf_mono(ctx.to_dense(m), dense);
    if (!r) return std::nullopt;
    return ctx.to_sparse(*r);
}

bool member(const BinomialElement& f, const GroebnerBasis& basis) {
    auto nf_lead = normal_form(f.lead, basis);
    if (f.is_monomial()) return !nf_lead.has_value();
    auto nf_tail = normal_form(*f.tail, basis);
    return nf_lead == nf_tail;
}

std::vector<BinomialElement> saturate(const std::vector<BinomialElement>& gens,
                                      const std::vector<Cell>& vars, int degree_cap) {
    const Cell aux{0, 0}; // ranked above every grid cell
    std::vector<Cell> ranked{aux};
    std::vector<Cell> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Cell& c : sorted) {
        if (c.row < 1 || c.col < 1) throw ParseError("variable cell with row/col < 1");
        ranked.push_back(c);
    }
    VariableRanking ranking(std::move(ranked));

    std::map<Cell, int> prod{{aux, 1}};
    for (const Cell& c : sorted) prod[c] = 1;
    std::vector<BinomialElement> extended = gens;
    extended.push_back(BinomialElement{Monomial(std::move(prod)), Monomial::one()});

    GroebnerBasis basis = reduced_basis(extended, ranking, degree_cap);
    std::vector<BinomialElement> out;
    for (const BinomialElement& e : basis.elements)
        if (e.lead.exponent(aux) == 0) out.push_back(e);
    return out;
}

bool nonradical_witness_check(const Configuration& c, const BinomialElement& f,
                              int degree_cap) {
    std::vector<Cell> vars = c.vertex_set();
    for (const auto& [cell, e] : f.lead.exponents()) vars.push_back(cell);
    if (f.tail)
        for (const auto& [cell, e] : f.tail->exponents()) vars.push_back(cell);
    VariableRanking ranking = row_major_ranking(vars);

    std::vector<BinomialElement> gens;
    for (const Cell& a : c.anchors()) gens.push_back(binomial_of(UnitMinor{a}));
    GroebnerBasis basis = reduced_basis(gens, ranking, degree_cap);

    if (member(f, basis)) return false;
    if (f.is_monomial()) {
        auto nf_sq = normal_form(f.lead * f.lead, basis);
        return !nf_sq.has_value();
    }
    // f^2 = lead^2 - 2*lead*tail + tail^2 reduces to zero iff the three
    // monomial normal forms coincide (distinct monomials are independent).
    auto nf_uu = normal_form(f.lead * f.lead, basis);
    auto nf_uv = normal_form(f.lead * *f.tail, basis);
    auto nf_vv = normal_form(*f.tail * *f.tail, basis);
    return nf_uu == nf_uv && nf_uv == nf_vv;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected integer in binomial at offset " +
                                     std::to_string(start));
    return std::stoi(s.substr(start, i - start));
}

Monomial parse_term(const std::string& s, std::size_t& i) {
    std::map<Cell, int> exps;
    bool first = true;
    while (true) {
        skip_ws(s, i);
        if (!first) {
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws(s, i);
            } else
                break;
        }
        if (i < s.size() && s[i] == '1' && first) {
            ++i;
            return Monomial::one();
        }
        if (i >= s.size() || s[i] != 'x') {
            if (first) throw ParseError("expected term in binomial");
            break;
        }
        ++i;
        skip_ws(s, i);
        if (i >= s.size() || s[i] != '[') throw ParseError("expected '[' after x");
        ++i;
        int row = parse_int(s, i);
        skip_ws(s, i);
        if (i >= s.size() || s[i] != ',') throw ParseError("expected ',' in x[..]");
        ++i;
        int col = parse_int(s, i);
        skip_ws(s, i);
        if (i >= s.size() || s[i] != ']') throw ParseError("expected ']' in x[..]");
        ++i;
        if (row < 1 || col < 1) throw ParseError("variable cell with row/col < 1");
        ++exps[Cell{row, col}];
        first = false;
    }
    return Monomial(std::move(exps));
}

} // namespace

BinomialElement parse_binomial(const std::string& text) {
    std::size_t i = 0;
    Monomial lead = parse_term(text, i);
    skip_ws(text, i);
    if (i >= text.size()) return BinomialElement{lead, std::nullopt};
    if (text[i] != '-') throw ParseError("expected '-' between binomial terms");
    ++i;
    Monomial tail = parse_term(text, i);
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing characters in binomial");
    if (lead == tail) throw ParseError("binomial with equal terms is zero");
    return BinomialElement{lead, tail};
}

std::string format_monomial(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, e] : m.exponents())
        for (int k = 0; k < e; ++k) {
            if (!first) os << "*";
            os << "x[" << c.row << "," << c.col << "]";
            first = false;
        }
    return os.str();
}

std::string format_binomial(const BinomialElement& f) {
    if (f.is_monomial()) return format_monomial(f.lead);
    return format_monomial(f.lead) + "-" + format_monomial(*f.tail);
}

} // namespace adjmin
