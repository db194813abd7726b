#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/field_codes.hpp"

namespace chaincodes {

/// Type {lambda_1, ..., lambda_L} of a code of length n over R_{L,m}.
struct TypeProfile {
    int n = 0;
    std::vector<int> lambdas;

    int levels() const { return static_cast<int>(lambdas.size()); }
    /// lambda_i for 1 <= i <= L + 1, with lambda_{L+1} = n - Lambda_L.
    int lambda(int i) const;
    /// Lambda_i for 0 <= i <= L + 1 (zero for negative i).
    int Lambda(int i) const;
    bool valid() const;
    /// 2 lambda_1 + ... + 2 lambda_{L-i+1} + lambda_{L-i+2} + ... + lambda_i <= n for ceil((L+1)/2) <= i <= L.
    bool so_feasible() const;
    /// lambda_i = lambda_{L-i+2} for 1 <= i <= L.
    bool sd_feasible() const;
    /// Comma separated lambdas, e.g. "0,1,0,0".
    std::string to_string() const;
    bool operator==(const TypeProfile&) const = default;
};

TypeProfile make_type(int n, std::vector<int> lambdas);
/// Parses "0,1,0,0" or the compact digit form "0100".
TypeProfile parse_type(int n, const std::string& text);
/// {n - Lambda_L, lambda_L, lambda_{L-1}, ..., lambda_2}.
TypeProfile dual_type(const TypeProfile& type);

using RingVector = std::vector<ChainRing::Elem>;

/// Generator row u^block * w, with w reduced modulo u^{level-block}. The label records which
/// chain code the row residue belongs to (label = block + 1 for plain standard forms).
struct RingRow {
    int block = 0;
    int label = 1;
    RingVector w;
    int pivot = -1;
};

/// Linear code over R_{level,m} = R_{e,m} / <u^level>, given by generator rows.
struct RingCode {
    ChainRingPtr ring;
    int level = 0;
    int n = 0;
    std::vector<RingRow> rows;

    const ChainRing& R() const { return *ring; }
    TypeProfile type() const;
    /// The full row u^block * w.
    RingVector row_vector(std::size_t r) const;
    /// log_q of the number of codewords.
    int size_exponent() const;
};

RingCode zero_ring_code(ChainRingPtr ring, int level, int n);
/// Standard form of the code generated by the given vectors (entries are reduced mod u^level).
RingCode make_ring_code(ChainRingPtr ring, int level, int n, const std::vector<RingVector>& generators);
/// Standard form: each row is u^b w with w equal to 1 at its pivot column, zero at pivot columns of
/// rows with block <= b, and reduced below u^{b'-b} at pivot columns of rows with block b' > b.
/// Pivots are chosen leftmost at each valuation, so first-block pivots are the echelon pivots of Tor_1.
RingCode standard_form(const RingCode& D);

/// Canonical Howell form of the submodule, flattened; equal keys iff equal codes.
std::vector<std::uint32_t> howell_key(const RingCode& D);
bool same_code(const RingCode& a, const RingCode& b);

bool is_self_orthogonal(const RingCode& D);
/// Pairwise products of all codewords (oracle); throws if the code has more than bound codewords.
bool is_self_orthogonal_exhaustive(const RingCode& D, std::uint64_t bound = 1u << 12);
/// Requires level = e; self-orthogonal with a palindromic type.
bool is_self_dual(const RingCode& D);
RingCode dual_code(const RingCode& D);
/// Dual by testing every vector of R_level^n (oracle).
RingCode dual_code_exhaustive(const RingCode& D, std::uint64_t bound = 1u << 20);

/// Tor_i(D) for 1 <= i <= level.
FieldCode torsion_code(const RingCode& D, int i);

/// Truncation of a code over R_{e,m} (rows labelled by block + 1 or by chain labels) to R_{l,m}:
/// labels up to gamma_l + 1 form the first block, label gamma_l + j goes to block j - 1.
RingCode truncate_code(const RingCode& De, int level);
/// {x mod u^{l-2} : u x in D} for a code over R_{l,m}; labels are preserved.
RingCode stage_truncation(const RingCode& D);

/// Packed codeword; requires n * m * e <= 128.
using PackedWord = unsigned __int128;
PackedWord pack_word(const ChainRing& R, const RingVector& v);
RingVector unpack_word(const ChainRing& R, int n, PackedWord w);
/// Sorted list of all codewords; throws std::length_error above bound.
std::vector<PackedWord> enumerate_codewords(const RingCode& D, std::uint64_t bound = 1u << 22);

/// One diagonal condition of property (P): every first-block row with label <= max_label
/// satisfies x.x = 0 mod u^index (digit_only = false) or pi_index(x.x) = 0 (digit_only = true),
/// with products taken in R_{e,m}.
struct PropertyPCondition {
    int max_label = 0;
    bool digit_only = false;
    int index = 0;
};

struct PropertyPCases {
    int case_id = 0;  ///< 1..4 for the four ranges of the level
    std::vector<PropertyPCondition> conditions;
};

/// Conditions for level l. Throws std::invalid_argument for l out of range or of the wrong parity,
/// std::logic_error when no range or more than one range applies.
PropertyPCases property_P_conditions(const ChainRingSpec& spec, int level);

/// Checks the conditions literally on the first-block rows of D and their labels.
bool satisfies_property_P(const RingCode& D);

/// Residue of a chain-adapted basis row together with its label.
struct LabeledResidue {
    int label = 0;
    FieldVector residue;
};

/// Whether D has a generator matrix of the shape used by property (P) satisfying it, where the
/// first-block residues are the given chain-adapted rows: the row of label h is 1 at its own
/// pivot, 0 at the pivots of the other rows of label <= h, and otherwise free within D.
bool admits_property_P(const RingCode& D, const std::vector<LabeledResidue>& first_block);

/// "[[d0,d1,...],...]": rows of u-adic coordinates of each entry.
std::string format_ring_vector(const ChainRing& R, const RingVector& v);

}  // namespace chaincodes
