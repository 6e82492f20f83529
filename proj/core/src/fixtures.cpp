#include "adjmin/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adjmin {

Labeling::Labeling(std::vector<std::pair<char, Cell>> pairs) {
    for (const auto& [ch, cell] : pairs) {
        if (!to_cell_.emplace(ch, cell).second)
            throw ParseError(std::string("duplicate label '") + ch + "'");
        if (!to_label_.emplace(cell, ch).second)
            throw ParseError("duplicate cell in labeling: " + to_string(cell));
    }
}

std::optional<Cell> Labeling::cell(char label) const {
    auto it = to_cell_.find(label);
    if (it == to_cell_.end()) return std::nullopt;
    return it->second;
}

std::optional<char> Labeling::label(const Cell& c) const {
    auto it = to_label_.find(c);
    if (it == to_label_.end()) return std::nullopt;
    return it->second;
}

Monomial Labeling::parse_monomial(const std::string& text) const {
    std::map<Cell, int> exps;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++i;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(ch)))
            throw ParseError(std::string("unexpected character '") + ch + "' in labeled term");
        auto c = cell(ch);
        if (!c) throw ParseError(std::string("unknown label '") + ch + "'");
        ++i;
        int power = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected exponent after '^'");
            power = std::stoi(text.substr(start, i - start));
        }
        exps[*c] += power;
    }
    return Monomial(std::move(exps));
}

BinomialElement Labeling::parse_binomial(const std::string& text) const {
    auto dash = text.find('-');
    if (dash == std::string::npos)
        return BinomialElement{parse_monomial(text), std::nullopt};
    Monomial lead = parse_monomial(text.substr(0, dash));
    Monomial tail = parse_monomial(text.substr(dash + 1));
    if (lead == tail) throw ParseError("binomial with equal terms is zero");
    return BinomialElement{lead, tail};
}

std::string Labeling::format(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream os;
    for (const auto& [c, e] : m.exponents()) {
        auto l = label(c);
        if (!l) {
            os << "x[" << c.row << "," << c.col << "]";
            if (e > 1) os << "^" << e;
            continue;
        }
        os << *l;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string Labeling::format(const BinomialElement& f) const {
    if (f.is_monomial()) return format(f.lead);
    return format(f.lead) + "-" + format(*f.tail);
}

Labeling row_major_labeling(const std::vector<Cell>& cells) {
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() > 26) throw ParseError("too many cells for single-letter labels");
    std::vector<std::pair<char, Cell>> pairs;
    char ch = 'a';
    for (const Cell& c : sorted) pairs.emplace_back(ch++, c);
    return Labeling(std::move(pairs));
}

namespace {

Configuration config(std::vector<Cell> anchors) {
    return Configuration::from_anchors(std::move(anchors));
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;

    // A four-box staircase: two boxes side by side with two more stepping up
    // to the right.
    {
        Configuration c = config({{2, 1}, {2, 2}, {1, 2}, {1, 3}});
        Labeling l({{'a', {1, 2}}, {'b', {1, 3}}, {'c', {1, 4}}, {'d', {2, 1}},
                    {'e', {2, 2}}, {'f', {2, 3}}, {'g', {2, 4}}, {'h', {3, 1}},
                    {'i', {3, 2}}, {'j', {3, 3}}});
        out.push_back(Fixture{"CFG-L", std::move(c), std::move(l)});
    }

    // Four boxes meeting pairwise in single vertices around a hole.
    {
        Configuration c = config({{1, 2}, {2, 1}, {2, 3}, {3, 2}});
        Labeling l({{'a', {1, 2}}, {'b', {1, 3}}, {'c', {2, 1}}, {'d', {2, 2}},
                    {'e', {2, 3}}, {'f', {2, 4}}, {'g', {3, 1}}, {'h', {3, 2}},
                    {'i', {3, 3}}, {'j', {3, 4}}, {'k', {4, 2}}, {'l', {4, 3}}});
        out.push_back(Fixture{"CFG-RING4", std::move(c), std::move(l)});
    }

    // The ring with its hole filled in.
    {
        Configuration c = config({{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}});
        Labeling l({{'a', {1, 2}}, {'b', {1, 3}}, {'c', {2, 1}}, {'d', {2, 2}},
                    {'e', {2, 3}}, {'f', {2, 4}}, {'g', {3, 1}}, {'h', {3, 2}},
                    {'i', {3, 3}}, {'j', {3, 4}}, {'k', {4, 2}}, {'l', {4, 3}}});
        out.push_back(Fixture{"CFG-PLUS", std::move(c), std::move(l)});
    }

    // Three boxes in a row with a fourth on top of the middle one.
    {
        Configuration c = config({{2, 1}, {2, 2}, {2, 3}, {1, 2}});
        Labeling l({{'a', {1, 2}}, {'b', {1, 3}}, {'c', {2, 1}}, {'d', {2, 2}},
                    {'e', {2, 3}}, {'f', {2, 4}}, {'g', {3, 1}}, {'h', {3, 2}},
                    {'i', {3, 3}}, {'j', {3, 4}}});
        out.push_back(Fixture{"CFG-PIN", std::move(c), std::move(l)});
    }

    // The eight boxes of a 3x3 anchor grid minus its center: a cycle.
    {
        Configuration c =
            config({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}, {3, 3}});
        std::vector<std::pair<char, Cell>> pairs;
        char ch = 'a';
        for (int r = 1; r <= 4; ++r)
            for (int col = 1; col <= 4; ++col) pairs.emplace_back(ch++, Cell{r, col});
        out.push_back(Fixture{"CFG-CYC8", std::move(c), Labeling(std::move(pairs))});
    }

    // Two three-box staircases touching in a single vertex; in the first the
    // contact sits next to the upper staircase's interior bend, in the second
    // it sits beside both bends.
    {
        Configuration c = config({{2, 1}, {2, 2}, {1, 2}, {4, 3}, {3, 3}, {3, 4}});
        Labeling l;
        out.push_back(Fixture{"CFG-FIG11-L", std::move(c), std::move(l)});
    }
    {
        Configuration c = config({{1, 1}, {1, 2}, {2, 1}, {4, 2}, {3, 2}, {3, 3}});
        Labeling l;
        out.push_back(Fixture{"CFG-FIG11-R", std::move(c), std::move(l)});
    }
    return out;
}

} // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build_fixtures();
    return all;
}

std::optional<Fixture> find_fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f;
    return std::nullopt;
}

} // namespace adjmin
