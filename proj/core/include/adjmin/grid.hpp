#ifndef ADJMIN_GRID_HPP
#define ADJMIN_GRID_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjmin/errors.hpp"

namespace adjmin {

// A grid position in matrix convention: row 1 is the top row and rows grow
// downward, column 1 is leftmost and columns grow rightward.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

// An unordered pair of cells, normalized so that first <= second.
struct CellPair {
    Cell first;
    Cell second;

    CellPair() = default;
    CellPair(Cell a, Cell b) : first(a < b ? a : b), second(a < b ? b : a) {}

    friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

// The unit box with top-left cell `anchor`: its vertex set is
// {(r,c),(r,c+1),(r+1,c),(r+1,c+1)} with r=anchor.row, c=anchor.col.
struct UnitMinor {
    Cell anchor;

    Cell nw() const { return anchor; }
    Cell ne() const { return {anchor.row, anchor.col + 1}; }
    Cell sw() const { return {anchor.row + 1, anchor.col}; }
    Cell se() const { return {anchor.row + 1, anchor.col + 1}; }

    std::array<Cell, 4> vertices() const { return {nw(), ne(), sw(), se()}; }

    // The four sides: top and bottom row pairs, left and right column pairs.
    std::array<CellPair, 4> edges() const {
        return {CellPair(nw(), ne()), CellPair(nw(), sw()),
                CellPair(ne(), se()), CellPair(sw(), se())};
    }

    CellPair diagonal_pair() const { return CellPair(nw(), se()); }
    CellPair anti_diagonal_pair() const { return CellPair(ne(), sw()); }

    friend auto operator<=>(const UnitMinor&, const UnitMinor&) = default;
};

// A 2-minor [row_lo,row_hi|col_lo,col_hi], not necessarily of adjacent rows
// or columns.  As a binomial it is
// x[row_lo,col_lo]*x[row_hi,col_hi] - x[row_lo,col_hi]*x[row_hi,col_lo].
struct GeneralMinor {
    int row_lo = 0;
    int row_hi = 0;
    int col_lo = 0;
    int col_hi = 0;

    Cell nw() const { return {row_lo, col_lo}; }
    Cell ne() const { return {row_lo, col_hi}; }
    Cell sw() const { return {row_hi, col_lo}; }
    Cell se() const { return {row_hi, col_hi}; }

    std::array<Cell, 4> corners() const { return {nw(), ne(), sw(), se()}; }

    std::array<CellPair, 4> edges() const {
        return {CellPair(nw(), ne()), CellPair(nw(), sw()),
                CellPair(ne(), se()), CellPair(sw(), se())};
    }

    friend auto operator<=>(const GeneralMinor&, const GeneralMinor&) = default;
};

inline GeneralMinor as_general(const UnitMinor& m) {
    return GeneralMinor{m.anchor.row, m.anchor.row + 1, m.anchor.col, m.anchor.col + 1};
}

// A finite set of unit minors with no duplicate anchors.  Anchors are kept
// sorted, so equal configurations compare equal.
class Configuration {
public:
    Configuration() = default;

    // Throws ParseError on anchors with row/col < 1 or duplicates.
    static Configuration from_anchors(std::vector<Cell> anchors);

    const std::vector<Cell>& anchors() const { return anchors_; }
    std::vector<UnitMinor> minors() const;

    bool contains(const Cell& anchor) const;
    std::size_t size() const { return anchors_.size(); }
    bool empty() const { return anchors_.empty(); }

    // Union of the member vertex sets, sorted.
    std::vector<Cell> vertex_set() const;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    std::vector<Cell> anchors_;
};

// Shared vertices of two unit minors (0, 1 or 2 cells; 2 cells form an edge).
std::vector<Cell> shared_vertices(const UnitMinor& a, const UnitMinor& b);
bool share_edge(const UnitMinor& a, const UnitMinor& b);

// Maximal classes of minors under the edge-sharing connectivity relation,
// ordered by smallest anchor.
std::vector<Configuration> connected_components(const Configuration& c);

// Graph on the connected components: one link per pair of minors from
// distinct components sharing a single vertex.  May have parallel links.
struct ComponentGraph {
    struct Link {
        std::size_t a = 0;
        std::size_t b = 0; // a < b
        Cell via;

        friend auto operator<=>(const Link&, const Link&) = default;
    };

    std::vector<Configuration> nodes;
    std::vector<Link> links;

    bool is_simple() const;
    // Four distinct node indices forming a cycle, if any.
    std::optional<std::array<std::size_t, 4>> find_four_cycle() const;
};

ComponentGraph component_graph(const Configuration& c);

// True iff every pair of distinct minors shares at most one vertex.
bool is_chessboard(const Configuration& c);

// True iff every single-vertex meeting of two minors is mediated by a third
// minor sharing an edge with each.
bool is_special(const Configuration& c);

enum class MotifKind { Square, Pin, Saddle };

std::string to_string(MotifKind k);

struct Motif {
    MotifKind kind;
    std::vector<Cell> anchors; // sorted participating anchors

    friend auto operator<=>(const Motif&, const Motif&) = default;
};

// All placements of Square, Pin and Saddle occurring as sub-configurations,
// under all rotations and reflections.  Overlapping motifs are all reported.
std::vector<Motif> detect_motifs(const Configuration& c);

enum class ShapeKind { LinePath, MonotoneNE, MonotoneSE, NonMonotonePath, Cycle, Other };

std::string to_string(ShapeKind k);

struct PathShape {
    ShapeKind kind = ShapeKind::Other;
    // For paths: the canonical valid path ordering (the one whose first
    // anchor is lexicographically smaller).  For cycles: a canonical
    // traversal.  For Other: anchors in sorted order.
    std::vector<UnitMinor> ordering;
    // Corner cells for monotone kinds.  The two orderings of a path give
    // different corner pairs, so both are exposed: `endpoints` comes from the
    // canonical ordering, `endpoints_reversed` from the reversed one.
    std::optional<std::pair<Cell, Cell>> endpoints;
    std::optional<std::pair<Cell, Cell>> endpoints_reversed;

    bool monotone() const {
        return kind == ShapeKind::LinePath || kind == ShapeKind::MonotoneNE ||
               kind == ShapeKind::MonotoneSE;
    }
};

// Shape of a connected configuration.  Throws NotConnected otherwise.
PathShape classify_shape(const Configuration& c);

// Checks the path-ordering conditions: consecutive minors meet in an edge and
// earlier minors meet each minor only inside that edge.
bool is_valid_path_ordering(const std::vector<UnitMinor>& ordering);

// All minors whose diagonal pair or anti-diagonal pair consists of vertices
// belonging to no other minor of the configuration.
std::vector<UnitMinor> free_minors(const Configuration& c);

} // namespace adjmin

#endif
