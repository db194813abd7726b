#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/field_codes.hpp"
#include "chaincodes/ring_codes.hpp"

namespace chaincodes {

using BigInt = boost::multiprecision::cpp_int;

/// Nested self-orthogonal field codes C^(1) <= ... <= C^(s+theta) together with the full type
/// {lambda_1, ..., lambda_e}; the first s+theta lambdas are the successive dimension jumps.
struct SOChain {
    ChainRingPtr ring;
    int n = 0;
    std::vector<FieldCode> codes;
    TypeProfile type;

    /// C^(i) for 1 <= i <= s+theta; the zero code for i <= 0.
    FieldCode code(int i) const;
    /// Whether the all-one vector lies in C^(i) (false for i <= 0).
    bool one_in(int i) const;
};

/// Builds a chain from its codes and the remaining lambdas lambda_{s+theta+1}, ..., lambda_e.
SOChain make_chain(ChainRingPtr ring, int n, std::vector<FieldCode> codes, const std::vector<int>& upper_lambdas);

/// Lists violated chain conditions (empty when valid).
std::vector<std::string> validate_chain(const SOChain& chain);

/// Rows of the echelon basis of C^(h) whose pivot is not a pivot of C^(h-1), labelled h, for h <= max_label.
std::vector<LabeledResidue> chain_adapted_basis(const SOChain& chain, int max_label);

enum class StageKind { Base, Lower, Ramification, Middle, Transition, Final };
std::string to_string(StageKind kind);

struct LiftStage {
    int level = 0;
    StageKind kind = StageKind::Base;
};

/// Levels visited by the construction (base level 2 or 3, then steps of 2 up to e) and their kinds:
/// for 2 kappa <= e Lower (l <= kappa), Ramification (l = kappa+1 or kappa+2), Middle
/// (kappa+3 <= l <= e-kappa+1), Final; for 2 kappa > e Lower (l <= e-kappa+1-2 theta),
/// Transition (l <= kappa - floor((2 kappa - e)/2) + 1), Final.
std::vector<LiftStage> stage_plan(const ChainRingSpec& spec);

/// Self-orthogonal codes over R_{2,m} (e even) or R_{3,m} (e odd) with the prescribed torsion codes
/// that admit property (P), in a deterministic order.
std::vector<RingCode> base_lift(const SOChain& chain);
/// All self-orthogonal lifts D over R_{l,m} of D_prev (a lift at level l-2) with Tor_1(D) = C^(gamma_l+1),
/// {x mod u^{l-2} : u x in D} = D_prev, admitting property (P).
std::vector<RingCode> lift_once(const RingCode& prev, const SOChain& chain, int level);

/// First code reached by the stage pipeline (depth first, backtracking); throws std::runtime_error
/// when the chain has no lift.
RingCode construct_self_orthogonal(const SOChain& chain);

/// Closed-form number of lifts at the given stage level for the chain.
BigInt stage_count_formula(const SOChain& chain, int level);

/// Chain of torsion codes Tor_1, ..., Tor_{s+theta} of a self-orthogonal code over R_{e,m}.
SOChain extract_chain(const RingCode& De);

}  // namespace chaincodes
