// Command line surface of the adjacent 2-minor toolkit.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "adjmin/classify.hpp"
#include "adjmin/fiber.hpp"
#include "adjmin/fixtures.hpp"
#include "adjmin/grid.hpp"
#include "adjmin/groebner.hpp"
#include "adjmin/io.hpp"
#include "adjmin/primes.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace adjmin;

constexpr const char* kVersion = "adjmin 1.0.0";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct ConfigInput {
    Configuration config;
    std::optional<Labeling> labels;
};

// Accepts "@path", "fixture:NAME", or a raw document (JSON or ASCII grid).
ConfigInput resolve_config(const std::string& arg) {
    if (arg.rfind("fixture:", 0) == 0) {
        auto f = find_fixture(arg.substr(8));
        if (!f) throw ParseError("unknown fixture '" + arg.substr(8) + "'");
        return {f->config, f->labels};
    }
    if (!arg.empty() && arg[0] == '@') return {parse_configuration(slurp(arg.substr(1))), {}};
    return {parse_configuration(arg), {}};
}

Table resolve_table(const std::string& arg) {
    if (arg.empty()) throw ParseError("missing table argument");
    if (arg[0] == '@') return parse_table(slurp(arg.substr(1)));
    return parse_table(arg);
}

std::size_t default_cap(std::size_t fallback) {
    const char* env = std::getenv("ADJMIN_CAP");
    if (!env) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw ParseError("ADJMIN_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
}

json cell_json(const Cell& c) { return json::array({c.row, c.col}); }

json cells_json(const std::vector<Cell>& cells) {
    json a = json::array();
    for (const Cell& c : cells) a.push_back(cell_json(c));
    return a;
}

json config_json(const Configuration& c) {
    json doc;
    doc["boxes"] = cells_json(c.anchors());
    return doc;
}

json table_json(const Table& t) {
    json doc;
    doc["entries"] = json::array();
    for (const auto& [c, v] : t.entries()) doc["entries"].push_back({c.row, c.col, v});
    return doc;
}

json component_json(const PrimeComponent& p) {
    json doc;
    doc["W"] = cells_json(p.admissible.cells);
    doc["inner"] = json::array();
    for (const GeneralMinor& m : p.inner)
        doc["inner"].push_back({m.row_lo, m.row_hi, m.col_lo, m.col_hi});
    return doc;
}

std::string pretty_component(const PrimeComponent& p, const std::optional<Labeling>& labels) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const Cell& c : p.admissible.cells) {
        if (!first) os << ", ";
        if (labels && labels->label(c))
            os << *labels->label(c);
        else
            os << "x[" << c.row << "," << c.col << "]";
        first = false;
    }
    for (const GeneralMinor& m : p.inner) {
        if (!first) os << ", ";
        if (labels)
            os << labels->format(binomial_of(m));
        else
            os << format_binomial(binomial_of(m));
        first = false;
    }
    os << ")";
    return os.str();
}

json shape_json(const PathShape& s) {
    json doc;
    doc["kind"] = to_string(s.kind);
    json order = json::array();
    for (const UnitMinor& m : s.ordering) order.push_back(cell_json(m.anchor));
    doc["ordering"] = order;
    if (s.endpoints)
        doc["endpoints"] = json::array({cell_json(s.endpoints->first), cell_json(s.endpoints->second)});
    else
        doc["endpoints"] = nullptr;
    if (s.endpoints_reversed)
        doc["endpoints_reversed"] = json::array(
            {cell_json(s.endpoints_reversed->first), cell_json(s.endpoints_reversed->second)});
    else
        doc["endpoints_reversed"] = nullptr;
    return doc;
}

void emit(const json& doc, const std::string& pretty, const std::string& format) {
    if (format == "pretty" && !pretty.empty())
        std::cout << pretty;
    else
        std::cout << doc.dump(2) << "\n";
}

struct Options {
    std::string format = "structured";
};

int run_classify(const ConfigInput& in, const Options& opt, std::size_t cap) {
    const Configuration& c = in.config;
    json doc;
    doc["command"] = "classify";
    doc["config"] = config_json(c);
    doc["vertex_count"] = c.vertex_set().size();
    auto comps = connected_components(c);
    doc["component_count"] = comps.size();
    doc["components"] = json::array();
    for (const Configuration& comp : comps) {
        json cj;
        cj["anchors"] = cells_json(comp.anchors());
        cj["shape"] = shape_json(classify_shape(comp));
        doc["components"].push_back(cj);
    }
    doc["chessboard"] = is_chessboard(c);
    doc["special"] = is_special(c);
    doc["motifs"] = json::array();
    for (const Motif& m : detect_motifs(c)) {
        json mj;
        mj["kind"] = to_string(m.kind);
        mj["anchors"] = cells_json(m.anchors);
        doc["motifs"].push_back(mj);
    }
    PrimalityResult pr = is_prime(c);
    json pj;
    pj["value"] = pr.prime;
    if (pr.edge_sharing_pair)
        pj["edge_sharing_pair"] = json::array({cell_json(pr.edge_sharing_pair->first.anchor),
                                               cell_json(pr.edge_sharing_pair->second.anchor)});
    if (pr.four_cycle) {
        json fc = json::array();
        for (const UnitMinor& m : *pr.four_cycle) fc.push_back(cell_json(m.anchor));
        pj["four_cycle"] = fc;
    }
    if (pr.prime) pj["chessboard"] = pr.chessboard;
    doc["prime"] = pj;
    auto cert = has_quadratic_gb(c, static_cast<int>(cap));
    json qj;
    qj["exists"] = cert.has_value();
    if (cert) {
        json marks = json::array();
        for (const auto& [anchor, choice] : cert->marking)
            marks.push_back(json::array({cell_json(anchor), to_string(choice)}));
        qj["marking"] = marks;
        qj["ranking"] = cells_json(cert->variable_ranking.cells());
        qj["verified"] = cert->verified;
    }
    doc["quadratic_gb"] = qj;
    RadicalVerdict rv = radical_verdict(c);
    doc["radical"] = {{"status", to_string(rv.status)}, {"reason", rv.reason}};

    std::ostringstream pretty;
    pretty << ascii_grid(c);
    pretty << "components: " << comps.size() << ", chessboard: " << std::boolalpha
           << is_chessboard(c) << ", special: " << is_special(c) << "\n";
    for (const Configuration& comp : comps)
        pretty << "  shape: " << to_string(classify_shape(comp).kind) << "\n";
    pretty << "prime: " << pr.prime << "\n";
    pretty << "quadratic_gb: " << cert.has_value() << "\n";
    pretty << "radical: " << to_string(rv.status) << " (" << rv.reason << ")\n";
    emit(doc, pretty.str(), opt.format);
    return 0;
}

int run_primes(const ConfigInput& in, bool all, const char* command, const Options& opt,
               std::size_t cap) {
    const Configuration& c = in.config;
    std::vector<PrimeComponent> comps;
    if (all) {
        for (const AdmissibleSet& w : admissible_sets(c, cap))
            comps.push_back(prime_component(c, w));
    } else {
        comps = minimal_primes(c, cap);
    }
    json doc;
    doc["command"] = command;
    doc["config"] = config_json(c);
    doc["special"] = is_special(c);
    doc["count"] = comps.size();
    doc["components"] = json::array();
    for (const PrimeComponent& p : comps) doc["components"].push_back(component_json(p));

    std::ostringstream pretty;
    for (const PrimeComponent& p : comps) pretty << pretty_component(p, in.labels) << "\n";
    emit(doc, pretty.str(), opt.format);
    return 0;
}

int run_gb(const ConfigInput& in, const std::string& ranking_arg, std::size_t cap,
           const Options& opt) {
    const Configuration& c = in.config;
    VariableRanking ranking;
    if (ranking_arg.empty()) {
        ranking = row_major_ranking(c.vertex_set());
    } else {
        json doc = json::parse(ranking_arg, nullptr, false);
        if (doc.is_discarded() || !doc.is_array())
            throw ParseError("ranking must be a JSON array of [row, col] pairs");
        std::vector<Cell> cells;
        for (const auto& p : doc) {
            if (!p.is_array() || p.size() != 2)
                throw ParseError("ranking must be a JSON array of [row, col] pairs");
            cells.push_back(Cell{p[0].get<int>(), p[1].get<int>()});
        }
        ranking = VariableRanking(std::move(cells));
        for (const Cell& v : c.vertex_set())
            if (!ranking.covers(v))
                throw ParseError("ranking does not cover vertex " + to_string(v));
    }
    std::vector<BinomialElement> gens;
    for (const Cell& a : c.anchors()) gens.push_back(binomial_of(UnitMinor{a}));
    GroebnerBasis basis = reduced_basis(gens, ranking, static_cast<int>(cap));
    json doc;
    doc["command"] = "gb";
    doc["config"] = config_json(c);
    doc["ranking"] = cells_json(ranking.cells());
    doc["reduced_basis"] = json::array();
    for (const BinomialElement& e : basis.elements)
        doc["reduced_basis"].push_back(format_binomial(e));

    std::ostringstream pretty;
    for (const BinomialElement& e : basis.elements) {
        if (in.labels && !in.labels->to_cell().empty())
            pretty << in.labels->format(e) << "\n";
        else
            pretty << format_binomial(e) << "\n";
    }
    emit(doc, pretty.str(), opt.format);
    return 0;
}

BinomialElement resolve_binomial(const std::string& arg, const ConfigInput& in) {
    std::size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return parse_structured_binomial(arg);
    if (arg.find("x[") != std::string::npos) return parse_binomial(arg);
    if (in.labels && !in.labels->to_cell().empty()) return in.labels->parse_binomial(arg);
    throw ParseError("binomial must use the x[row,col] format (labels need a fixture)");
}

int run_member(const ConfigInput& in, const std::string& binomial_arg, std::size_t cap,
               const Options& opt) {
    const Configuration& c = in.config;
    BinomialElement f = resolve_binomial(binomial_arg, in);
    std::vector<Cell> vars = c.vertex_set();
    for (const auto& [cell, e] : f.lead.exponents()) vars.push_back(cell);
    if (f.tail)
        for (const auto& [cell, e] : f.tail->exponents()) vars.push_back(cell);
    VariableRanking ranking = row_major_ranking(vars);
    std::vector<BinomialElement> gens;
    for (const Cell& a : c.anchors()) gens.push_back(binomial_of(UnitMinor{a}));
    GroebnerBasis basis = reduced_basis(gens, ranking, static_cast<int>(cap));
    bool verdict = member(f, basis);
    json doc;
    doc["command"] = "member";
    doc["config"] = config_json(c);
    doc["binomial"] = format_binomial(f);
    doc["member"] = verdict;
    emit(doc, std::string(verdict ? "member\n" : "not a member\n"), opt.format);
    return 0;
}

int run_saturate(const ConfigInput& in, std::size_t cap, const Options& opt) {
    const Configuration& c = in.config;
    std::vector<BinomialElement> gens;
    for (const Cell& a : c.anchors()) gens.push_back(binomial_of(UnitMinor{a}));
    auto sat = saturate(gens, c.vertex_set(), static_cast<int>(cap));
    json doc;
    doc["command"] = "saturate";
    doc["config"] = config_json(c);
    doc["generators"] = json::array();
    for (const BinomialElement& e : sat) doc["generators"].push_back(format_binomial(e));
    std::ostringstream pretty;
    for (const BinomialElement& e : sat) {
        if (in.labels && !in.labels->to_cell().empty())
            pretty << in.labels->format(e) << "\n";
        else
            pretty << format_binomial(e) << "\n";
    }
    emit(doc, pretty.str(), opt.format);
    return 0;
}

int run_connect(const ConfigInput& in, const Table& a, const Table& b, bool oracle,
                std::size_t cap, const Options& opt) {
    ConnectOptions copts;
    copts.oracle_fallback = oracle;
    copts.node_cap = cap;
    ConnectivityVerdict v = connected(a, b, in.config, copts);
    json doc;
    doc["command"] = "connect";
    doc["config"] = config_json(in.config);
    doc["tableA"] = table_json(a);
    doc["tableB"] = table_json(b);
    doc["status"] = to_string(v.status);
    doc["reason"] = v.reason;
    doc["witness"] = v.witness ? component_json(*v.witness) : json(nullptr);
    doc["via_bfs"] = v.via_bfs;
    std::ostringstream pretty;
    pretty << to_string(v.status) << ": " << v.reason << "\n";
    if (v.witness) pretty << "witness " << pretty_component(*v.witness, in.labels) << "\n";
    emit(doc, pretty.str(), opt.format);
    return 0;
}

int run_fiber(const ConfigInput& in, const Table& t, std::size_t cap, const Options& opt) {
    auto tables = bfs_fiber(in.config, t, cap);
    json doc;
    doc["command"] = "fiber";
    doc["config"] = config_json(in.config);
    doc["count"] = tables.size();
    doc["tables"] = json::array();
    for (const Table& x : tables) doc["tables"].push_back(table_json(x));
    std::ostringstream pretty;
    for (const Table& x : tables) pretty << pretty_table(x, in.config) << "\n";
    emit(doc, pretty.str(), opt.format);
    return 0;
}

int run_walk(const ConfigInput& in, const Table& t, std::uint64_t steps, std::uint64_t seed,
             const Options& opt) {
    Table result = random_walk(in.config, t, steps, seed).normalized();
    json doc;
    doc["command"] = "walk";
    doc["config"] = config_json(in.config);
    doc["steps"] = steps;
    doc["seed"] = seed;
    doc["table"] = table_json(result);
    emit(doc, pretty_table(result, in.config), opt.format);
    return 0;
}

int run_fixtures(const Options& opt) {
    json doc;
    doc["command"] = "fixtures";
    doc["fixtures"] = json::array();
    std::ostringstream pretty;
    for (const Fixture& f : fixtures()) {
        json fj;
        fj["name"] = f.name;
        fj["config"] = config_json(f.config);
        json labels = json::array();
        for (const auto& [ch, cell] : f.labels.to_cell())
            labels.push_back(json::array({std::string(1, ch), cell_json(cell)}));
        fj["labels"] = labels;
        doc["fixtures"].push_back(fj);
        pretty << f.name << ":\n" << ascii_grid(f.config) << "\n";
    }
    emit(doc, pretty.str(), opt.format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification, decomposition and fiber walks for configurations of "
                 "adjacent 2-minors"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"structured", "pretty"}))
        ->capture_default_str();

    std::string config_arg, fixture_name, table_a, table_b, binomial_arg, ranking_arg;
    bool all_components = false, oracle = false;
    std::uint64_t steps = 0, seed = 0;
    std::optional<std::size_t> cap_flag;

    auto add_config = [&](CLI::App* cmd) {
        cmd->fallthrough();
        cmd->add_option("config", config_arg,
                        "configuration: raw document, @file or fixture:NAME");
        cmd->add_option("--fixture", fixture_name, "load a bundled fixture by name");
    };
    auto resolve = [&]() -> ConfigInput {
        if (!fixture_name.empty()) {
            auto f = find_fixture(fixture_name);
            if (!f) throw ParseError("unknown fixture '" + fixture_name + "'");
            return {f->config, f->labels};
        }
        if (config_arg.empty()) throw ParseError("missing configuration argument");
        return resolve_config(config_arg);
    };
    // With --fixture the config positional is unused: shift the remaining
    // positionals into their intended slots.
    auto shift_positionals = [&](int needed) {
        if (fixture_name.empty() || config_arg.empty()) return;
        if (needed >= 1 && table_b.empty() && !table_a.empty()) {
            table_b = table_a;
            table_a.clear();
        }
        if (needed >= 1 && table_a.empty()) {
            table_a = config_arg;
            config_arg.clear();
        }
        if (binomial_arg.empty()) {
            binomial_arg = config_arg;
            config_arg.clear();
        }
    };

    auto* cmd_classify = app.add_subcommand("classify", "components, motifs and verdicts");
    add_config(cmd_classify);
    cmd_classify->add_option("--cap", cap_flag, "completion degree cap");

    auto* cmd_primes = app.add_subcommand("primes", "prime components over admissible sets");
    add_config(cmd_primes);
    cmd_primes->add_flag("--all", all_components, "all admissible components, not only minimal");
    cmd_primes->add_option("--cap", cap_flag, "admissible set cap");

    auto* cmd_decompose =
        app.add_subcommand("decompose", "irredundant radical decomposition (special only)");
    add_config(cmd_decompose);
    cmd_decompose->add_option("--cap", cap_flag, "admissible set cap");

    auto* cmd_gb = app.add_subcommand("gb", "reduced lex basis of the configuration ideal");
    add_config(cmd_gb);
    cmd_gb->add_option("--ranking", ranking_arg, "JSON array of [row, col] pairs, largest first");
    cmd_gb->add_option("--cap", cap_flag, "completion degree cap");

    auto* cmd_member = app.add_subcommand("member", "ideal membership of a binomial");
    add_config(cmd_member);
    cmd_member->add_option("binomial", binomial_arg, "binomial, e.g. x[1,1]*x[2,2]-x[1,2]*x[2,1]");
    cmd_member->add_option("--cap", cap_flag, "completion degree cap");

    auto* cmd_saturate =
        app.add_subcommand("saturate", "saturation at the product of all variables");
    add_config(cmd_saturate);
    cmd_saturate->add_option("--cap", cap_flag, "completion degree cap");

    auto* cmd_connect = app.add_subcommand("connect", "connectivity of two tables under moves");
    add_config(cmd_connect);
    cmd_connect->add_option("tableA", table_a, "first table document or @file");
    cmd_connect->add_option("tableB", table_b, "second table document or @file");
    cmd_connect->add_flag("--oracle", oracle, "fall back to the brute-force fiber search");
    cmd_connect->add_option("--cap", cap_flag, "fiber node cap");

    auto* cmd_fiber = app.add_subcommand("fiber", "all tables reachable by adjacent moves");
    add_config(cmd_fiber);
    cmd_fiber->add_option("table", table_a, "table document or @file");
    cmd_fiber->add_option("--cap", cap_flag, "fiber node cap");

    auto* cmd_walk = app.add_subcommand("walk", "seeded random walk on the fiber");
    add_config(cmd_walk);
    cmd_walk->add_option("table", table_a, "table document or @file");
    cmd_walk->add_option("--steps", steps, "number of proposals")->required();
    cmd_walk->add_option("--seed", seed, "64-bit seed")->capture_default_str();

    auto* cmd_fixtures = app.add_subcommand("fixtures", "list the bundled fixtures");
    cmd_fixtures->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "USAGE_ERROR: " << e.what() << "\n";
        return 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (app.got_subcommand(cmd_classify))
            rc = run_classify(resolve(), opt, cap_flag.value_or(default_cap(kDefaultDegreeCap)));
        else if (app.got_subcommand(cmd_primes))
            rc = run_primes(resolve(), all_components, "primes", opt,
                            cap_flag.value_or(default_cap(kDefaultAdmissibleCap)));
        else if (app.got_subcommand(cmd_decompose))
            rc = run_primes(resolve(), false, "decompose", opt,
                            cap_flag.value_or(default_cap(kDefaultAdmissibleCap)));
        else if (app.got_subcommand(cmd_gb))
            rc = run_gb(resolve(), ranking_arg, cap_flag.value_or(default_cap(kDefaultDegreeCap)),
                        opt);
        else if (app.got_subcommand(cmd_member)) {
            shift_positionals(0);
            if (binomial_arg.empty()) throw ParseError("missing binomial argument");
            rc = run_member(resolve(), binomial_arg,
                            cap_flag.value_or(default_cap(kDefaultDegreeCap)), opt);
        } else if (app.got_subcommand(cmd_saturate))
            rc = run_saturate(resolve(),
                              cap_flag.value_or(default_cap(kDefaultSaturationDegreeCap)), opt);
        else if (app.got_subcommand(cmd_connect)) {
            shift_positionals(1);
            rc = run_connect(resolve(), resolve_table(table_a), resolve_table(table_b), oracle,
                             cap_flag.value_or(default_cap(kDefaultFiberNodeCap)), opt);
        } else if (app.got_subcommand(cmd_fiber)) {
            shift_positionals(1);
            rc = run_fiber(resolve(), resolve_table(table_a),
                           cap_flag.value_or(default_cap(kDefaultFiberNodeCap)), opt);
        } else if (app.got_subcommand(cmd_walk)) {
            shift_positionals(1);
            rc = run_walk(resolve(), resolve_table(table_a), steps, seed, opt);
        }
        else if (app.got_subcommand(cmd_fixtures))
            rc = run_fixtures(opt);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "INTERNAL_ERROR: " << e.what() << "\n";
        return 4;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "timing_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
    return rc;
}
