#include "adjmin/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace adjmin {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    return doc;
}

Configuration configuration_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("boxes") || !doc["boxes"].is_array())
        throw ParseError("configuration document must be {\"boxes\": [[row, col], ...]}");
    std::vector<Cell> anchors;
    for (const auto& b : doc["boxes"]) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
            !b[1].is_number_integer())
            throw ParseError("each box must be a [row, col] pair of integers");
        anchors.push_back(Cell{b[0].get<int>(), b[1].get<int>()});
    }
    return Configuration::from_anchors(std::move(anchors));
}

} // namespace

Configuration parse_configuration(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return configuration_from_json(parse_json(text));

    // ASCII grid: one line per anchor row, '#' box present, '.' or ' ' absent.
    std::vector<Cell> anchors;
    int row = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        for (std::size_t i = 0; i < line.size(); ++i) {
            char ch = line[i];
            if (ch == '#')
                anchors.push_back(Cell{row, static_cast<int>(i) + 1});
            else if (ch != '.' && ch != ' ')
                throw ParseError(std::string("unexpected character '") + ch +
                                 "' in ASCII grid (use '#' and '.')");
        }
    }
    return Configuration::from_anchors(std::move(anchors));
}

std::string serialize_configuration(const Configuration& c) {
    json doc;
    doc["boxes"] = json::array();
    for (const Cell& a : c.anchors()) doc["boxes"].push_back({a.row, a.col});
    return doc.dump();
}

std::string ascii_grid(const Configuration& c) {
    if (c.empty()) return "";
    int max_row = 0, max_col = 0;
    for (const Cell& a : c.anchors()) {
        max_row = std::max(max_row, a.row);
        max_col = std::max(max_col, a.col);
    }
    std::ostringstream os;
    for (int r = 1; r <= max_row; ++r) {
        for (int col = 1; col <= max_col; ++col) os << (c.contains(Cell{r, col}) ? '#' : '.');
        os << "\n";
    }
    return os.str();
}

Table parse_table(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw ParseError("table document must be {\"entries\": [[row, col, value], ...]}");
    std::map<Cell, long long> entries;
    for (const auto& e : doc["entries"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
            throw ParseError("each entry must be a [row, col, value] triple of integers");
        Cell cell{e[0].get<int>(), e[1].get<int>()};
        if (cell.row < 1 || cell.col < 1)
            throw ParseError("table cell " + to_string(cell) + " has row/col < 1");
        long long v = e[2].get<long long>();
        if (v < 0) throw ParseError("negative value at " + to_string(cell));
        if (entries.count(cell)) throw ParseError("duplicate table cell " + to_string(cell));
        entries[cell] = v;
    }
    return Table(std::move(entries));
}

std::string serialize_table(const Table& t) {
    json doc;
    doc["entries"] = json::array();
    for (const auto& [c, v] : t.entries()) doc["entries"].push_back({c.row, c.col, v});
    return doc.dump();
}

namespace {

Monomial monomial_from_json(const json& arr) {
    if (!arr.is_array()) throw ParseError("monomial must be a list of [row, col, exp] triples");
    std::map<Cell, int> exps;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
            throw ParseError("each factor must be a [row, col, exp] triple of integers");
        Cell cell{e[0].get<int>(), e[1].get<int>()};
        if (cell.row < 1 || cell.col < 1)
            throw ParseError("variable cell " + to_string(cell) + " has row/col < 1");
        int exp = e[2].get<int>();
        if (exp < 0) throw ParseError("negative exponent at " + to_string(cell));
        exps[cell] += exp;
    }
    return Monomial(std::move(exps));
}

json monomial_to_json(const Monomial& m) {
    json arr = json::array();
    for (const auto& [c, e] : m.exponents()) arr.push_back({c.row, c.col, e});
    return arr;
}

} // namespace

BinomialElement parse_structured_binomial(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("lead"))
        throw ParseError("binomial document must be {\"lead\": [...], \"tail\": [...]}");
    Monomial lead = monomial_from_json(doc["lead"]);
    if (!doc.contains("tail") || doc["tail"].is_null())
        return BinomialElement{lead, std::nullopt};
    Monomial tail = monomial_from_json(doc["tail"]);
    if (lead == tail) throw ParseError("binomial with equal terms is zero");
    return BinomialElement{lead, tail};
}

std::string serialize_binomial(const BinomialElement& f) {
    json doc;
    doc["lead"] = monomial_to_json(f.lead);
    doc["tail"] = f.tail ? monomial_to_json(*f.tail) : json(nullptr);
    return doc.dump();
}

std::string pretty_table(const Table& t, const Configuration& c) {
    auto verts = c.vertex_set();
    if (verts.empty()) return "";
    int max_row = 0, max_col = 0;
    for (const Cell& v : verts) {
        max_row = std::max(max_row, v.row);
        max_col = std::max(max_col, v.col);
    }
    std::set<Cell> vset(verts.begin(), verts.end());
    std::size_t width = 1;
    for (const auto& [cell, v] : t.entries())
        width = std::max(width, std::to_string(v).size());
    std::ostringstream os;
    for (int r = 1; r <= max_row; ++r) {
        for (int col = 1; col <= max_col; ++col) {
            if (col > 1) os << " ";
            std::string s = vset.count(Cell{r, col}) ? std::to_string(t.value(Cell{r, col}))
                                                     : std::string("·");
            std::size_t pad = width >= s.size() ? width - s.size() : 0;
            if (!vset.count(Cell{r, col}) && width > 1) pad = width - 1;
            os << std::string(pad, ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace adjmin
