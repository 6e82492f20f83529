#ifndef ADJMIN_CLASSIFY_HPP
#define ADJMIN_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjmin/grid.hpp"
#include "adjmin/groebner.hpp"

namespace adjmin {

struct PrimalityResult {
    bool prime = false;
    // When not prime: either a pair of minors sharing an edge, or four minors
    // (one per component) forming a 4-cycle in the component graph.
    std::optional<std::pair<UnitMinor, UnitMinor>> edge_sharing_pair;
    std::optional<std::array<UnitMinor, 4>> four_cycle;
    // When prime: the evidence is chessboard-ness plus 4-cycle-freeness.
    bool chessboard = false;
};

// A configuration ideal is prime iff it is a chessboard configuration whose
// component graph has no cycle of length 4.  The empty configuration is
// prime (zero ideal).
PrimalityResult is_prime(const Configuration& c);

struct QuadraticCertificate {
    Marking marking;
    VariableRanking variable_ranking;
    bool verified = false;
};

inline constexpr int kDefaultComponentCap = 20;

// Decides whether the configuration ideal has a quadratic lex Groebner basis.
// Every connected component must be a monotone path; component mark choices
// are searched for a globally coprime marking, and an accepted marking is
// certified by building the marked order and running the completion.  A
// combinatorially accepted marking that fails certification throws
// VerificationFailure.
std::optional<QuadraticCertificate> has_quadratic_gb(const Configuration& c,
                                                     int degree_cap = kDefaultDegreeCap,
                                                     int component_cap = kDefaultComponentCap);

enum class RadicalStatus { Radical, NotRadical, ConditionallyRadical, Unknown };

std::string to_string(RadicalStatus s);

struct RadicalVerdict {
    RadicalStatus status = RadicalStatus::Unknown;
    std::string reason;
};

// Combines per-component verdicts: components with quadratic certificates are
// radical; special components that are neither paths nor cycles contain a pin
// and are not radical; non-monotone paths are radical conditional on the
// absence of embedded primes; cycles and everything else stay unknown.
RadicalVerdict radical_verdict(const Configuration& c);

} // namespace adjmin

#endif
