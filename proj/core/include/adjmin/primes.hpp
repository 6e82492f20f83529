#ifndef ADJMIN_PRIMES_HPP
#define ADJMIN_PRIMES_HPP

#include <cstddef>
#include <vector>

#include "adjmin/grid.hpp"

namespace adjmin {

// A vertex subset meeting every minor of the configuration either trivially
// or in a full edge.
struct AdmissibleSet {
    std::vector<Cell> cells; // sorted

    friend auto operator<=>(const AdmissibleSet&, const AdmissibleSet&) = default;
};

bool is_admissible(const Configuration& c, const std::vector<Cell>& cells);

inline constexpr std::size_t kDefaultAdmissibleCap = 100000;

// All admissible subsets of V(C), including the empty set and V(C) itself,
// ordered by size then lexicographically.  Throws CapExceeded when the count
// exceeds `cap`.
std::vector<AdmissibleSet> admissible_sets(const Configuration& c,
                                           std::size_t cap = kDefaultAdmissibleCap);

// Every general 2-minor whose full coordinate rectangle lies inside `region`.
std::vector<GeneralMinor> inner_minors(const std::vector<Cell>& region);

// Region over which the inner minors of a component are computed: the
// complement V(C) \ W, or the vertex set of the minors avoiding W.
enum class InnerRegion { ComplementOfW, MinorsAvoidingW };

// The component with generators W plus the inner minors of the complementary
// region.  The inner set is stored in full (closure), not as a generating
// subset.  Throws NotAdmissible.
struct PrimeComponent {
    Configuration config;
    AdmissibleSet admissible;
    std::vector<GeneralMinor> inner; // sorted

    friend auto operator<=>(const PrimeComponent&, const PrimeComponent&) = default;
};

PrimeComponent prime_component(const Configuration& c, const AdmissibleSet& w,
                               InnerRegion region = InnerRegion::ComplementOfW);

// Containment criterion: P_V is contained in P_W iff V is a subset of W and
// every inner minor of V dropped in W meets W in a full edge.  Throws
// MismatchedConfiguration when the components come from different
// configurations.
bool component_contains(const PrimeComponent& p_v, const PrimeComponent& p_w);

// The irredundant list of minimal components over all admissible sets of a
// special configuration, ordered by size of W then lexicographically.
// Throws NotSpecial or CapExceeded.
std::vector<PrimeComponent> minimal_primes(const Configuration& c,
                                           std::size_t cap = kDefaultAdmissibleCap);

} // namespace adjmin

#endif
