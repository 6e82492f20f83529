#include "adjmin/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace adjmin {

PrimalityResult is_prime(const Configuration& c) {
    PrimalityResult r;
    const auto& as = c.anchors();
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            if (share_edge(UnitMinor{as[i]}, UnitMinor{as[j]})) {
                r.prime = false;
                r.edge_sharing_pair = {UnitMinor{as[i]}, UnitMinor{as[j]}};
                return r;
            }
        }
    }
    r.chessboard = true;
    ComponentGraph g = component_graph(c);
    if (auto cyc = g.find_four_cycle()) {
        r.prime = false;
        std::array<UnitMinor, 4> minors{};
        for (int k = 0; k < 4; ++k) minors[k] = UnitMinor{g.nodes[(*cyc)[k]].anchors().front()};
        r.four_cycle = minors;
        return r;
    }
    r.prime = true;
    return r;
}

namespace {

// Mark choices that are internally coprime within one connected component.
std::vector<MarkChoice> admissible_choices(const Configuration& component,
                                           const PathShape& shape) {
    std::vector<MarkChoice> out;
    if (!shape.monotone()) return out;
    for (MarkChoice choice : {MarkChoice::Diagonal, MarkChoice::AntiDiagonal}) {
        std::set<Cell> used;
        bool ok = true;
        for (const Cell& a : component.anchors()) {
            Monomial m = mark_monomial(UnitMinor{a}, choice);
            for (const auto& [cell, e] : m.exponents())
                if (!used.insert(cell).second) ok = false;
        }
        if (ok) out.push_back(choice);
    }
    return out;
}

} // namespace

std::optional<QuadraticCertificate> has_quadratic_gb(const Configuration& c, int degree_cap,
                                                     int component_cap) {
    if (c.empty()) {
        QuadraticCertificate cert;
        cert.verified = true;
        return cert;
    }
    auto comps = connected_components(c);
    if (comps.size() > static_cast<std::size_t>(component_cap))
        throw CapExceeded("configuration has " + std::to_string(comps.size()) +
                          " components, assignment search cap is " +
                          std::to_string(component_cap));

    std::vector<std::vector<MarkChoice>> choices;
    for (const Configuration& comp : comps) {
        PathShape shape = classify_shape(comp);
        if (!shape.monotone()) return std::nullopt;
        auto admissible = admissible_choices(comp, shape);
        if (admissible.empty()) return std::nullopt;
        choices.push_back(std::move(admissible));
    }

    // Depth-first search for the lexicographically smallest assignment whose
    // marks are pairwise coprime across the whole configuration.
    std::map<Cell, int> used;
    std::vector<MarkChoice> assignment(comps.size());
    auto apply = [&](std::size_t k, MarkChoice choice, int delta) {
        for (const Cell& a : comps[k].anchors()) {
            Monomial m = mark_monomial(UnitMinor{a}, choice);
            for (const auto& [cell, e] : m.exponents()) used[cell] += delta;
        }
    };
    auto clash = [&](std::size_t k, MarkChoice choice) {
        for (const Cell& a : comps[k].anchors()) {
            Monomial m = mark_monomial(UnitMinor{a}, choice);
            for (const auto& [cell, e] : m.exponents())
                if (used.count(cell) && used.at(cell) > 0) return true;
        }
        return false;
    };
    std::optional<Marking> accepted;
    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == comps.size()) {
            Marking m;
            for (std::size_t i = 0; i < comps.size(); ++i)
                for (const Cell& a : comps[i].anchors()) m[a] = assignment[i];
            accepted = std::move(m);
            return true;
        }
        for (MarkChoice choice : choices[k]) {
            if (clash(k, choice)) continue;
            assignment[k] = choice;
            apply(k, choice, +1);
            if (self(self, k + 1)) return true;
            apply(k, choice, -1);
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    QuadraticCertificate cert;
    cert.marking = *accepted;
    cert.variable_ranking = marked_order(c, cert.marking);

    // Certify: each mark must be the lex-initial monomial of its minor, and
    // the generators must already form the reduced basis.
    std::vector<BinomialElement> gens;
    for (const Cell& a : c.anchors()) {
        UnitMinor m{a};
        Monomial mark = mark_monomial(m, cert.marking.at(a));
        MarkChoice other_choice = cert.marking.at(a) == MarkChoice::Diagonal
                                      ? MarkChoice::AntiDiagonal
                                      : MarkChoice::Diagonal;
        Monomial other = mark_monomial(m, other_choice);
        if (cert.variable_ranking.compare(mark, other) <= 0)
            throw VerificationFailure("accepted mark is not lex-initial for minor " +
                                      to_string(a));
        gens.push_back(BinomialElement{mark, other});
    }
    GroebnerBasis basis = reduced_basis(gens, cert.variable_ranking, degree_cap);
    std::vector<BinomialElement> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    if (basis.elements != sorted)
        throw VerificationFailure(
            "coprime marks accepted but completion does not return the generators");
    cert.verified = true;
    return cert;
}

std::string to_string(RadicalStatus s) {
    switch (s) {
        case RadicalStatus::Radical: return "Radical";
        case RadicalStatus::NotRadical: return "NotRadical";
        case RadicalStatus::ConditionallyRadical: return "ConditionallyRadical";
        case RadicalStatus::Unknown: return "Unknown";
    }
    return "?";
}

RadicalVerdict radical_verdict(const Configuration& c) {
    if (c.empty()) return {RadicalStatus::Radical, "empty configuration (zero ideal)"};

    RadicalStatus combined = RadicalStatus::Radical;
    std::ostringstream reason;
    auto weaken = [&](RadicalStatus s) {
        auto strength = [](RadicalStatus x) {
            switch (x) {
                case RadicalStatus::Radical: return 3;
                case RadicalStatus::ConditionallyRadical: return 2;
                case RadicalStatus::Unknown: return 1;
                case RadicalStatus::NotRadical: return 0;
            }
            return 0;
        };
        if (strength(s) < strength(combined)) combined = s;
    };

    auto comps = connected_components(c);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const Configuration& comp = comps[i];
        PathShape shape = classify_shape(comp);
        std::string where = "component " + std::to_string(i + 1);
        if (shape.monotone()) {
            // A monotone path always certifies: squarefree quadratic initial
            // ideal, hence radical.
            auto cert = has_quadratic_gb(comp);
            if (!cert)
                throw VerificationFailure("monotone component without a certificate");
            reason << where << ": monotone path, quadratic certificate, radical. ";
            continue;
        }
        if (shape.kind == ShapeKind::Other && is_special(comp)) {
            weaken(RadicalStatus::NotRadical);
            reason << where
                   << ": connected special, neither path nor cycle, contains a pin; "
                      "not radical. ";
            continue;
        }
        if (shape.kind == ShapeKind::NonMonotonePath) {
            weaken(RadicalStatus::ConditionallyRadical);
            reason << where
                   << ": non-monotone path; radical provided the ideal has no embedded "
                      "primes (conditional). ";
            continue;
        }
        if (shape.kind == ShapeKind::Cycle) {
            weaken(RadicalStatus::Unknown);
            reason << where << ": cycle of length " << comp.size()
                   << "; status unknown (computational evidence suggests cycles are "
                      "radical exactly when the length is at least 12, not asserted). ";
            continue;
        }
        weaken(RadicalStatus::Unknown);
        reason << where << ": no applicable criterion; status unknown. ";
    }
    std::string text = reason.str();
    if (!text.empty() && text.back() == ' ') text.pop_back();
    return {combined, text};
}

} // namespace adjmin
