#ifndef ADJMIN_FIBER_HPP
#define ADJMIN_FIBER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjmin/grid.hpp"
#include "adjmin/primes.hpp"

namespace adjmin {

// A contingency table supported on the vertex set of a configuration.
// Keyed cells carry a non-negative value; unkeyed cells of V(C) read as
// zero for sums and moves, while cells outside V(C) are support violations.
class Table {
public:
    Table() = default;
    // Throws ParseError on negative values.
    explicit Table(std::map<Cell, long long> entries);

    const std::map<Cell, long long>& entries() const { return entries_; }
    long long value(const Cell& c) const;
    long long total() const;

    // Entries with zero values dropped; the comparison form used by the
    // fiber search.
    Table normalized() const;

    friend auto operator<=>(const Table&, const Table&) = default;

private:
    std::map<Cell, long long> entries_;
};

// The adjacent move of a unit box: +1 at its diagonal cells and -1 at its
// anti-diagonal cells, scaled by sign.
struct Move {
    UnitMinor box;
    int sign = 1;
};

struct ComponentMargins {
    std::vector<std::pair<int, long long>> rows; // (row index, sum) ascending
    std::vector<std::pair<int, long long>> cols;

    friend auto operator<=>(const ComponentMargins&, const ComponentMargins&) = default;
};

// Row and column sums of the table restricted to each connected component,
// components in canonical order.
struct MarginVector {
    std::vector<ComponentMargins> components;

    friend auto operator<=>(const MarginVector&, const MarginVector&) = default;
};

// Throws SupportViolation if the table keys cells outside V(C).
MarginVector margins(const Table& t, const Configuration& c);

// The table after the move, or nullopt when an entry would become negative.
std::optional<Table> apply_move(const Table& t, const Move& m, const Configuration& c);

inline constexpr std::size_t kDefaultFiberNodeCap = 1000000;

// All tables reachable from t by moves of boxes of C while staying
// non-negative, in canonical sorted order.  Throws CapExceeded past node_cap.
std::vector<Table> bfs_fiber(const Configuration& c, const Table& t,
                             std::size_t node_cap = kDefaultFiberNodeCap);

// Membership of the pair binomial in a prime component: either both tables
// put weight on W, or their difference is supported on the minors avoiding W
// and has matching margins on every connected piece of that region.
bool pair_in_component(const Table& t, const Table& t2, const PrimeComponent& p);

enum class ConnStatus { Connected, Disconnected, Unknown };

std::string to_string(ConnStatus s);

struct ConnectivityVerdict {
    ConnStatus status = ConnStatus::Unknown;
    std::string reason;
    // Disconnected via the criterion: the witnessing minimal component.
    std::optional<PrimeComponent> witness;
    // Whether the answer came from the brute-force fiber search.
    bool via_bfs = false;
};

struct ConnectOptions {
    bool oracle_fallback = false;
    std::size_t node_cap = kDefaultFiberNodeCap;
    std::size_t admissible_cap = kDefaultAdmissibleCap;
};

// Connectivity of two tables under adjacent moves for a special
// configuration: a failed component criterion is decisive for Disconnected;
// all criteria passing is decisive for Connected only when the ideal is
// known radical, otherwise the verdict is Unknown unless the BFS fallback is
// enabled.  Throws NotSpecial / SupportViolation / CapExceeded.
ConnectivityVerdict connected(const Table& t, const Table& t2, const Configuration& c,
                              const ConnectOptions& opts = {});

// Variant with precomputed minimal components (and precomputed radicality),
// for batch callers.
ConnectivityVerdict connected_with_components(const Table& t, const Table& t2,
                                              const Configuration& c,
                                              const std::vector<PrimeComponent>& minimal,
                                              bool radical, const ConnectOptions& opts = {});

// `steps` random move proposals from a splitmix64 generator seeded by `seed`;
// proposals that would go negative are rejected.  Margins are preserved
// exactly.
Table random_walk(const Configuration& c, const Table& t, std::uint64_t steps,
                  std::uint64_t seed);

} // namespace adjmin

#endif
