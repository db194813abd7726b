// Command-line front end: ring information, counting, table reproduction, lifting and verification.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/enumeration.hpp"
#include "chaincodes/field_codes.hpp"
#include "chaincodes/lifting.hpp"
#include "chaincodes/oracle.hpp"
#include "chaincodes/ring_codes.hpp"

namespace {

using namespace chaincodes;
using json = nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

/// Malformed input detected after flag parsing; reported like a parse error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingFlags {
    std::string ring;
    std::string preset;
};

struct Config {
    RingFlags ring;
    int n = -1;
    std::string type;
    int table = 0;
    std::string output;
    std::uint64_t budget = 0;
    std::uint64_t seed = 1;
    bool oracle = false;
    bool self_dual = false;
    std::string oracle_max = "2000";
    std::string chain_path;
};

std::string dec(const BigInt& v) { return v.str(); }

std::pair<std::string, ChainRingSpec> resolve_ring(const RingFlags& flags) {
    try {
        if (!flags.preset.empty()) return {flags.preset, preset_ring(flags.preset)};
        if (!flags.ring.empty()) {
            if (flags.ring.rfind("CR", 0) == 0) return {flags.ring, parse_chain_ring(flags.ring)};
            return {flags.ring, preset_ring(flags.ring)};
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("a ring is required: pass --ring CR(2^s,m;kappa,t;g) or --preset R4,1|R5,1|R6,2|R8,2");
}

int require_n(const Config& cfg) {
    if (cfg.n < 0) throw UsageError("--n is required");
    return cfg.n;
}

TypeProfile read_type(const Config& cfg, int e) {
    if (cfg.type.empty()) throw UsageError("--type is required");
    TypeProfile type;
    try {
        type = parse_type(require_n(cfg), cfg.type);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    if (type.levels() != e) throw UsageError("--type must list exactly e = " + std::to_string(e) + " lambdas");
    return type;
}

/// Compact type tuple used in CSV output ("0100"), falling back to ':' separators for lambdas >= 10.
std::string csv_type(const TypeProfile& type) {
    const bool compact = std::all_of(type.lambdas.begin(), type.lambdas.end(), [](int l) { return l < 10; });
    std::string out;
    for (std::size_t i = 0; i < type.lambdas.size(); ++i) {
        if (!compact && i > 0) out += ':';
        out += std::to_string(type.lambdas[i]);
    }
    return out;
}

std::string output_format(const Config& cfg, const std::string& fallback) {
    const std::string f = cfg.output.empty() ? fallback : cfg.output;
    if (f != "json" && f != "csv") throw UsageError("--output must be json or csv");
    return f;
}

std::uint64_t budget_of(const Config& cfg) { return cfg.budget ? cfg.budget : default_budget(); }

json report_json(const CountReport& rep) {
    json j;
    j["ring"] = rep.ring;
    j["type"] = rep.type.to_string();
    if (rep.expected) j["expected"] = dec(*rep.expected);
    j["closed_form"] = dec(rep.closed_form);
    if (rep.brute_force) j["oracle"] = dec(*rep.brute_force);
    if (!rep.note.empty()) j["note"] = rep.note;
    j["match"] = rep.match;
    return j;
}

void print_reports(const std::vector<CountReport>& reports, const std::string& format) {
    if (format == "json") {
        json list = json::array();
        for (const auto& rep : reports) list.push_back(report_json(rep));
        std::cout << list.dump(2) << "\n";
        return;
    }
    std::cout << "type,count,closed_form,oracle,match,note\n";
    for (const auto& rep : reports) {
        const BigInt count = rep.expected ? *rep.expected : rep.closed_form;
        std::cout << csv_type(rep.type) << ',' << dec(count) << ',' << dec(rep.closed_form) << ','
                  << (rep.brute_force ? dec(*rep.brute_force) : std::string()) << ','
                  << (rep.match ? "true" : "false") << ',' << rep.note << "\n";
    }
}

bool all_match(const std::vector<CountReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CountReport& r) { return r.match; });
}

int cmd_ring_info(const Config& cfg) {
    const auto [name, spec] = resolve_ring(cfg.ring);
    json j;
    j["ring"] = name;
    j["spec"] = to_string(spec);
    j["e"] = spec.e;
    j["m"] = spec.m();
    j["kappa"] = spec.kappa;
    j["t"] = spec.tee;
    j["s"] = spec.s_half;
    j["theta"] = spec.theta_e;
    j["kappa_1"] = spec.kappa_1;
    j["residue_field_size"] = std::to_string(spec.q());
    j["ring_size"] = dec(boost::multiprecision::pow(BigInt(spec.q()), static_cast<unsigned>(spec.e)));
    json two = json::array();
    for (auto d : to_u_adic(spec, cr_from_int(spec, 2))) two.push_back(d);
    j["two_u_adic"] = two;
    j["construction"] = 2 * spec.kappa <= spec.e ? "A" : "B";
    json stages = json::array();
    for (const auto& st : stage_plan(spec)) stages.push_back({{"level", st.level}, {"kind", to_string(st.kind)}});
    j["stages"] = stages;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_count(const Config& cfg) {
    const auto [name, spec] = resolve_ring(cfg.ring);
    const ChainRingPtr ring = make_chain_ring(spec);
    const TypeProfile type = read_type(cfg, spec.e);
    const CodePredicate predicate = cfg.self_dual ? CodePredicate::SelfDual : CodePredicate::SelfOrthogonal;
    const CountReport rep = compare_counts(name, ring, type, predicate, cfg.oracle, budget_of(cfg));
    if (output_format(cfg, "json") == "csv") {
        print_reports({rep}, "csv");
    } else {
        json j;
        j["query"] = {{"ring", name},
                      {"n", type.n},
                      {"type", type.to_string()},
                      {"predicate", cfg.self_dual ? "self-dual" : "self-orthogonal"}};
        j["closed_form"] = dec(rep.closed_form);
        if (rep.brute_force) j["oracle"] = dec(*rep.brute_force);
        if (!rep.note.empty()) j["note"] = rep.note;
        j["match"] = rep.match;
        std::cout << j.dump(2) << "\n";
    }
    return rep.match ? 0 : kExitMismatch;
}

int cmd_table(const Config& cfg) {
    const std::string format = output_format(cfg, "csv");
    std::vector<std::pair<TypeProfile, BigInt>> rows;
    std::string name;
    if (cfg.table != 0) {
        GoldenTable golden;
        try {
            golden = load_golden_table(cfg.table);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        name = golden.ring;
        const ChainRingSpec spec = preset_ring(golden.ring);
        for (const auto& [type, expected] : golden.rows) rows.emplace_back(type, count_so_type(spec, type));
    } else {
        const auto [ring_name, spec] = resolve_ring(cfg.ring);
        name = ring_name;
        const int n = require_n(cfg);
        for (const auto& type : all_types(spec.e, n)) {
            const BigInt c = cfg.self_dual ? count_sd_type(spec, type) : count_so_type(spec, type);
            if (c != 0) rows.emplace_back(type, c);
        }
    }
    if (format == "json") {
        json list = json::array();
        for (const auto& [type, c] : rows) list.push_back({{"ring", name}, {"type", type.to_string()}, {"count", dec(c)}});
        std::cout << list.dump(2) << "\n";
    } else {
        std::cout << "type,count\n";
        for (const auto& [type, c] : rows) std::cout << csv_type(type) << ',' << dec(c) << "\n";
    }
    return 0;
}

int cmd_total(const Config& cfg) {
    const auto [name, spec] = resolve_ring(cfg.ring);
    const int n = require_n(cfg);
    const Totals t = total_counts(spec, n);
    if (output_format(cfg, "json") == "csv") {
        std::cout << "ring,n,total_so,total_sd\n" << name << ',' << n << ',' << dec(t.total_so) << ','
                  << dec(t.total_sd) << "\n";
    } else {
        json j;
        j["query"] = {{"ring", name}, {"n", n}};
        j["total_so"] = dec(t.total_so);
        j["total_sd"] = dec(t.total_sd);
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

BigInt parse_count(const std::string& text) {
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw UsageError("not a decimal integer: " + text);
    }
}

int cmd_verify(const Config& cfg) {
    if (cfg.table == 0) throw UsageError("--table is required");
    std::vector<CountReport> reports;
    try {
        reports = reproduce_table(cfg.table, true, parse_count(cfg.oracle_max), budget_of(cfg));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    print_reports(reports, output_format(cfg, "csv"));
    return all_match(reports) ? 0 : kExitMismatch;
}

int cmd_oracle_compare(const Config& cfg) {
    const auto [name, spec] = resolve_ring(cfg.ring);
    const ChainRingPtr ring = make_chain_ring(spec);
    const CodePredicate predicate = cfg.self_dual ? CodePredicate::SelfDual : CodePredicate::SelfOrthogonal;
    std::vector<TypeProfile> types;
    if (!cfg.type.empty()) {
        types.push_back(read_type(cfg, spec.e));
    } else {
        for (const auto& type : all_types(spec.e, require_n(cfg)))
            if (cfg.self_dual ? type.sd_feasible() && type.so_feasible() : type.so_feasible()) types.push_back(type);
    }
    std::vector<CountReport> reports;
    for (const auto& type : types) reports.push_back(compare_counts(name, ring, type, predicate, true, budget_of(cfg)));
    print_reports(reports, output_format(cfg, "csv"));
    return all_match(reports) ? 0 : kExitMismatch;
}

/// Chain description: {"ring": optional, "n": N, "codes": [[row, ...], ...], "upper_lambdas": [...]},
/// where codes[i - 1] lists generator rows of C^(i) as residue values.
SOChain read_chain(const Config& cfg, const json& j, std::string& name) {
    RingFlags flags = cfg.ring;
    if (flags.ring.empty() && flags.preset.empty() && j.contains("ring")) flags.ring = j.at("ring").get<std::string>();
    const auto resolved = resolve_ring(flags);
    name = resolved.first;
    const ChainRingPtr ring = make_chain_ring(resolved.second);
    const ChainRingSpec& spec = ring->spec();
    const ResidueField F = ResidueField::of(spec);
    const int n = j.contains("n") ? j.at("n").get<int>() : require_n(cfg);
    if (n < 1) throw UsageError("chain length must be positive");
    const int depth = spec.s_half + spec.theta_e;
    const json& codes = j.at("codes");
    if (!codes.is_array() || static_cast<int>(codes.size()) != depth)
        throw UsageError("\"codes\" must list s + theta = " + std::to_string(depth) + " codes");
    std::vector<FieldCode> chain_codes;
    for (const auto& code : codes) {
        std::vector<FieldVector> rows;
        for (const auto& row : code) {
            FieldVector v = row.get<FieldVector>();
            if (static_cast<int>(v.size()) != n) throw UsageError("chain rows must have length n");
            for (auto x : v)
                if (x >= F.q()) throw UsageError("residue value out of range");
            rows.push_back(std::move(v));
        }
        chain_codes.push_back(make_field_code(F, n, std::move(rows)));
    }
    std::vector<int> upper(spec.e - depth, 0);
    if (j.contains("upper_lambdas")) upper = j.at("upper_lambdas").get<std::vector<int>>();
    if (static_cast<int>(upper.size()) != spec.e - depth)
        throw UsageError("\"upper_lambdas\" must list e - s - theta = " + std::to_string(spec.e - depth) + " values");
    try {
        return make_chain(ring, n, std::move(chain_codes), upper);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

struct StageRecord {
    LiftStage stage;
    BigInt lifts;
    BigInt formula;
};

/// Depth-first walk through the stages; the seeded generator fixes the order in which lifts are tried.
bool descend(const SOChain& chain, const std::vector<LiftStage>& plan, std::size_t idx, const RingCode* prev,
             std::mt19937_64& rng, std::vector<StageRecord>& path, RingCode& result) {
    const int level = plan[idx].level;
    std::vector<RingCode> lifts = prev ? lift_once(*prev, chain, level) : base_lift(chain);
    const StageRecord record{plan[idx], BigInt(lifts.size()), stage_count_formula(chain, level)};
    std::vector<std::size_t> order(lifts.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i : order) {
        path.push_back(record);
        if (idx + 1 == plan.size()) {
            result = lifts[i];
            return true;
        }
        if (descend(chain, plan, idx + 1, &lifts[i], rng, path, result)) return true;
        path.resize(idx);
    }
    return false;
}

int cmd_lift(const Config& cfg) {
    json input;
    try {
        if (cfg.chain_path.empty() || cfg.chain_path == "-") {
            input = json::parse(std::cin);
        } else {
            std::ifstream in(cfg.chain_path);
            if (!in) throw UsageError("cannot open " + cfg.chain_path);
            input = json::parse(in);
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid chain JSON: ") + e.what());
    }
    std::string name;
    SOChain chain;
    try {
        chain = read_chain(cfg, input, name);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid chain JSON: ") + e.what());
    }
    const ChainRingSpec& spec = chain.ring->spec();
    json out;
    out["ring"] = name;
    out["n"] = chain.n;
    out["type"] = chain.type.to_string();
    const auto violations = validate_chain(chain);
    if (!violations.empty()) {
        out["valid_chain"] = false;
        out["violations"] = violations;
        std::cout << out.dump(2) << "\n";
        return kExitMismatch;
    }
    out["valid_chain"] = true;
    const auto plan = stage_plan(spec);
    std::mt19937_64 rng(cfg.seed);
    std::vector<StageRecord> path;
    RingCode code;
    const bool found = descend(chain, plan, 0, nullptr, rng, path, code);
    bool stages_match = true;
    json stages = json::array();
    for (const auto& rec : path) {
        stages_match = stages_match && rec.lifts == rec.formula;
        stages.push_back({{"level", rec.stage.level},
                          {"kind", to_string(rec.stage.kind)},
                          {"lifts", dec(rec.lifts)},
                          {"formula", dec(rec.formula)},
                          {"match", rec.lifts == rec.formula}});
    }
    out["stages"] = stages;
    out["per_chain_formula"] = dec(per_chain_lift_count(spec, chain.type, chain_flags(chain)));
    out["lift_found"] = found;
    if (found) {
        json rows = json::array();
        for (std::size_t r = 0; r < code.rows.size(); ++r) {
            json entries = json::array();
            for (auto x : code.row_vector(r)) entries.push_back(code.R().to_digits(x));
            rows.push_back({{"block", code.rows[r].block}, {"pivot", code.rows[r].pivot}, {"entries", entries}});
        }
        out["generator"] = rows;
        out["self_orthogonal"] = is_self_orthogonal(code);
    }
    std::cout << out.dump(2) << "\n";
    return found && stages_match ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-orthogonal and self-dual codes over finite commutative chain rings"};
    app.require_subcommand(1);
    Config cfg;

    auto add_ring = [&](CLI::App* sub) {
        auto* ring = sub->add_option("--ring", cfg.ring.ring, "Ring spec CR(2^s,m;kappa,t;g) or a preset name");
        auto* preset = sub->add_option("--preset", cfg.ring.preset, "Preset ring: R4,1 | R5,1 | R6,2 | R8,2");
        ring->excludes(preset);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "Output format: json | csv");
        sub->add_option("--budget", cfg.budget, "Candidate ceiling for exhaustive searches");
        sub->add_option("--seed", cfg.seed, "Seed for randomized choices");
    };

    auto* ring_info = app.add_subcommand("ring-info", "Parameters of a chain ring");
    add_ring(ring_info);
    add_common(ring_info);

    auto* count = app.add_subcommand("count", "Closed-form count for one type, optionally against the oracle");
    add_ring(count);
    add_common(count);
    count->add_option("--n", cfg.n, "Code length");
    count->add_option("--type", cfg.type, "Type lambda_1,...,lambda_e");
    count->add_flag("--oracle", cfg.oracle, "Also run the exhaustive oracle");
    count->add_flag("--self-dual", cfg.self_dual, "Count self-dual codes");

    auto* table = app.add_subcommand("table", "Counts for a golden table or for all types of a ring and length");
    add_ring(table);
    add_common(table);
    table->add_option("--table", cfg.table, "Golden table id 1..4");
    table->add_option("--n", cfg.n, "Code length");
    table->add_flag("--self-dual", cfg.self_dual, "Count self-dual codes");

    auto* total = app.add_subcommand("total", "Total numbers of self-orthogonal and self-dual codes");
    add_ring(total);
    add_common(total);
    total->add_option("--n", cfg.n, "Code length");

    auto* lift = app.add_subcommand("lift", "Construct a self-orthogonal code from a JSON chain description");
    add_ring(lift);
    add_common(lift);
    lift->add_option("--chain", cfg.chain_path, "Chain description file, - for stdin");
    lift->add_option("--n", cfg.n, "Code length when the description omits it");

    auto* verify = app.add_subcommand("verify", "Reproduce a golden table with the closed form and the oracle");
    add_common(verify);
    verify->add_option("--table", cfg.table, "Golden table id 1..4");
    verify->add_option("--oracle-max", cfg.oracle_max, "Run the oracle on rows with golden count at most this");

    auto* compare = app.add_subcommand("oracle-compare", "Compare the closed form with the oracle");
    add_ring(compare);
    add_common(compare);
    compare->add_option("--n", cfg.n, "Code length");
    compare->add_option("--type", cfg.type, "Single type; all feasible types when omitted");
    compare->add_flag("--self-dual", cfg.self_dual, "Count self-dual codes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ring_info) return cmd_ring_info(cfg);
        if (*count) return cmd_count(cfg);
        if (*table) return cmd_table(cfg);
        if (*total) return cmd_total(cfg);
        if (*lift) return cmd_lift(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*compare) return cmd_oracle_compare(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
