#ifndef ADJMIN_FIXTURES_HPP
#define ADJMIN_FIXTURES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjmin/grid.hpp"
#include "adjmin/groebner.hpp"

namespace adjmin {

// Letter names for the vertices of a configuration, used by the bundled
// fixtures and the pretty printers.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<std::pair<char, Cell>> pairs);

    std::optional<Cell> cell(char label) const;
    std::optional<char> label(const Cell& c) const;
    const std::map<char, Cell>& to_cell() const { return to_cell_; }

    // Parses "acej-bcfh" or "b^2hino-abhjno"; '*' and whitespace are ignored.
    BinomialElement parse_binomial(const std::string& text) const;
    Monomial parse_monomial(const std::string& text) const;

    std::string format(const Monomial& m) const;
    std::string format(const BinomialElement& f) const;

private:
    std::map<char, Cell> to_cell_;
    std::map<Cell, char> to_label_;
};

// Row-major labeling a, b, c, ... of a cell set.
Labeling row_major_labeling(const std::vector<Cell>& cells);

struct Fixture {
    std::string name;
    Configuration config;
    Labeling labels;
};

// The bundled named fixtures (CFG-L, CFG-RING4, CFG-PLUS, CFG-PIN, CFG-CYC8,
// CFG-FIG11-L, CFG-FIG11-R).
const std::vector<Fixture>& fixtures();
std::optional<Fixture> find_fixture(const std::string& name);

} // namespace adjmin

#endif
