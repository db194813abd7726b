#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chaincodes/enumeration.hpp"
#include "chaincodes/lifting.hpp"
#include "chaincodes/ring_codes.hpp"

namespace chaincodes {

/// Candidate ceiling for exhaustive searches: CHAINCODES_BUDGET when set, otherwise 2^27.
std::uint64_t default_budget();

enum class CodePredicate { SelfOrthogonal, SelfDual };

/// Number of distinct codes of the exact type over R_{level,m} (level = type.levels()) satisfying
/// the predicate, found by enumerating every pivot placement and every reduced entry of the
/// standard-form generator and deduplicating by codeword sets. Throws std::length_error when the
/// search exceeds the budget.
BigInt brute_force_code_count(ChainRingPtr ring, const TypeProfile& type, CodePredicate predicate,
                              std::uint64_t budget = default_budget());

/// All self-orthogonal codes of the exact type over R_{level,m}, level = type.levels().
std::vector<RingCode> brute_force_so_codes(ChainRingPtr ring, const TypeProfile& type,
                                           std::uint64_t budget = default_budget());

/// Exhaustive count of d-dimensional doubly even codes of length n over T_m, using the
/// criterion that sum x_i^2 of Teichmueller lifts vanishes in GR(4, m) for every codeword.
BigInt brute_force_doubly_even_count(int n, int d, int m, bool with_one, std::uint64_t budget = default_budget());

/// Type over R_{level,m} of the stage codes of the construction at the given level.
TypeProfile stage_type(const SOChain& chain, int level);

/// All codes over R_{level,m} of the stage type that are self-orthogonal, have
/// Tor_i = C^(gamma+i) for gamma+i <= s+theta, truncate to prev (when given) under
/// {x mod u^{level-2} : u x in D}, and admit property (P) with the chain-adapted first block.
/// Candidates are filtered naively; prev must be absent exactly at the base level. Chains violating
/// only the all-one condition are accepted, so obstructed instances count zero lifts.
std::vector<RingCode> brute_force_lifts(const RingCode* prev, const SOChain& chain, int level,
                                        std::uint64_t budget = default_budget());
BigInt brute_force_lift_count(const RingCode* prev, const SOChain& chain, int level,
                              std::uint64_t budget = default_budget());

/// Visits every chain of the type's first s+theta dimensions satisfying the chain conditions,
/// checked directly: self-orthogonality, nesting, doubly even C^(s-kappa_1) by the GR(4, m)
/// criterion, and the all-one obstruction.
void for_each_valid_chain(ChainRingPtr ring, const TypeProfile& type, const std::function<void(const SOChain&)>& visit);

struct ChainSum {
    BigInt chains;    ///< number of valid chains
    BigInt weighted;  ///< sum of 2^epsilon q^mu over valid unobstructed chains
    BigInt lifts;     ///< sum of per_chain_lift_count over valid chains
};
ChainSum brute_force_chain_sum(ChainRingPtr ring, const TypeProfile& type);

struct CountReport {
    std::string ring;
    TypeProfile type;
    std::optional<BigInt> expected;     ///< golden value when reproducing a table
    BigInt closed_form;
    std::optional<BigInt> brute_force;  ///< absent when skipped or over budget
    std::string note;
    double elapsed_ms = 0;
    bool match = false;  ///< all present values agree
};

/// Closed form (and optionally the exhaustive count) for one type.
CountReport compare_counts(const std::string& ring_name, ChainRingPtr ring, const TypeProfile& type,
                           CodePredicate predicate, bool with_oracle, std::uint64_t budget = default_budget());

struct GoldenTable {
    int id = 0;
    std::string ring;  ///< preset name
    int n = 0;
    std::vector<std::pair<TypeProfile, BigInt>> rows;
};

/// Reads a golden table (1..4) from the data directory.
GoldenTable load_golden_table(int id);

/// Compares every golden row with the closed form and, for rows whose golden count is at most
/// oracle_max_count, with the exhaustive oracle.
std::vector<CountReport> reproduce_table(int id, bool with_oracle = true,
                                         std::optional<BigInt> oracle_max_count = std::nullopt,
                                         std::uint64_t budget = default_budget());

}  // namespace chaincodes
