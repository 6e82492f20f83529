#ifndef ADJMIN_GROEBNER_HPP
#define ADJMIN_GROEBNER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjmin/grid.hpp"

namespace adjmin {

// A monomial in the grid variables x[r,c]: a finitely supported exponent
// map with no zero entries stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<Cell, int> exponents);

    static Monomial one() { return Monomial(); }
    static Monomial variable(const Cell& c) { return Monomial({{c, 1}}); }

    const std::map<Cell, int>& exponents() const { return exp_; }
    int exponent(const Cell& c) const;
    int degree() const;
    bool is_one() const { return exp_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o) in the caller's direction: returns o / *this.
    Monomial divide_into(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::map<Cell, int> exp_;
};

// lead - tail with coefficients +1/-1; tail absent means a pure monomial
// element.  Once normalized under a ranking, lead > tail in lex order.
struct BinomialElement {
    Monomial lead;
    std::optional<Monomial> tail;

    bool is_monomial() const { return !tail.has_value(); }

    friend auto operator<=>(const BinomialElement&, const BinomialElement&) = default;
};

BinomialElement make_binomial(const Monomial& a, const Monomial& b);
BinomialElement binomial_of(const GeneralMinor& m);
BinomialElement binomial_of(const UnitMinor& m);

// A total order on a finite set of cells; rank 0 is the largest variable in
// lex comparisons.
class VariableRanking {
public:
    VariableRanking() = default;
    // Throws ParseError if the list contains duplicates.
    explicit VariableRanking(std::vector<Cell> largest_first);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool covers(const Cell& c) const;
    int rank(const Cell& c) const; // throws ParseError if absent

    // Lex comparison induced by this ranking: returns <0, 0, >0 as a < b,
    // a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const VariableRanking&, const VariableRanking&) = default;

private:
    std::vector<Cell> cells_;
    std::map<Cell, int> rank_;
};

// Row-major ranking (row 1 first, then by column), the default order used by
// the command line tools.
VariableRanking row_major_ranking(const std::vector<Cell>& cells);

struct GroebnerBasis {
    std::vector<BinomialElement> elements; // sorted canonically
    VariableRanking ranking;
    bool reduced = false;
};

// Per-minor choice between the two monomials of its binomial.
enum class MarkChoice { Diagonal, AntiDiagonal };

std::string to_string(MarkChoice m);

// One choice per minor, keyed by anchor.
using Marking = std::map<Cell, MarkChoice>;

Monomial mark_monomial(const UnitMinor& m, MarkChoice choice);

// A ranking under which each marked monomial is the lex-initial monomial of
// its minor.  Built row by row: within each row the two top vertices of every
// marked minor impose one comparison, realized by a fence-order insertion,
// and earlier rows dominate later ones.  The result is verified by direct
// lex comparison; failure throws VerificationFailure.
VariableRanking marked_order(const Configuration& c, const Marking& marking);

inline constexpr int kDefaultDegreeCap = 24;
inline constexpr int kDefaultSaturationDegreeCap = 30;

// Buchberger completion specialized to +1/-1 binomials and monomials, with
// the normal pair-selection strategy (lowest lcm degree, then lex) and final
// auto-reduction.  Any intermediate element whose lead exceeds degree_cap
// aborts with CapExceeded.
GroebnerBasis reduced_basis(const std::vector<BinomialElement>& gens,
                            const VariableRanking& ranking,
                            int degree_cap = kDefaultDegreeCap);

// Normal form of a monomial modulo a reduced basis; nullopt means it reduces
// to zero.
std::optional<Monomial> normal_form(const Monomial& m, const GroebnerBasis& basis);

// True iff the normal form of f modulo the (reduced) basis is zero.
bool member(const BinomialElement& f, const GroebnerBasis& basis);

// Generators of (gens) : (prod of vars)^infinity, computed by adjoining an
// auxiliary variable t ranked above all others, adding t*(prod vars) - 1,
// completing under lex, and keeping the t-free elements.  The result is the
// reduced basis of the saturation under the row-major order on `vars`.
std::vector<BinomialElement> saturate(const std::vector<BinomialElement>& gens,
                                      const std::vector<Cell>& vars,
                                      int degree_cap = kDefaultSaturationDegreeCap);

// True iff f does not lie in I(c) but f^2 does, certifying that I(c) is not
// a radical ideal.
bool nonradical_witness_check(const Configuration& c, const BinomialElement& f,
                              int degree_cap = kDefaultSaturationDegreeCap);

// Text format "x[1,2]*x[2,3]-x[1,3]*x[2,2]"; whitespace insignificant,
// repeated factors denote powers.
BinomialElement parse_binomial(const std::string& text);
std::string format_monomial(const Monomial& m);
std::string format_binomial(const BinomialElement& f);

} // namespace adjmin

#endif
