#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/lifting.hpp"
#include "chaincodes/ring_codes.hpp"

namespace chaincodes {

/// Gaussian binomial [n k]_q; zero for k < 0 or k > n.
BigInt gaussian_binomial(long long n, long long k, const BigInt& q);

/// Number of d-dimensional doubly even codes of length n over T_m with (with_one) or without the
/// all-one vector. Computed by exhaustive subspace enumeration and cached; throws
/// std::length_error when the number of d-dimensional subspaces exceeds the budget.
BigInt sigma_doubly_even(int n, int d, int m, bool with_one);

/// Source of the doubly even code counts; the default is sigma_doubly_even.
using SigmaProvider = std::function<BigInt(int n, int d, int m, bool with_one)>;

struct CountOptions {
    /// Evaluate the coefficient of the B_0 term in N exactly as printed (reproduces a known error).
    bool verbatim_n = false;
    SigmaProvider sigma;
};

enum class ChainFamily { N, Y, M, Z };

/// Closed-form number of chains C^(1) <= ... <= C^(s+theta) of the given type in one membership
/// family: N (all-one vector outside C^(s-kappa_1)), Y_omega, M and Z. omega is used by Y only.
/// Throws std::invalid_argument for an omega outside the admissible range.
BigInt chain_family_count(ChainFamily kind, const ChainRingSpec& spec, const TypeProfile& type, int omega = 0,
                          const CountOptions& options = {});

/// Weighted chain count combining N, Y_omega, M and Z according to n mod 8, the parity of m and
/// the sign of e - 2 kappa.
BigInt b_theta(const ChainRingSpec& spec, const TypeProfile& type, const CountOptions& options = {});

/// Membership case of a chain: obstructed chains have no lift; otherwise each chain contributes
/// 2^epsilon q^mu times the common lift factor.
struct ChainFlags {
    bool obstructed = false;
    int epsilon = 0;
    int mu = 0;
};

/// Flags of a concrete chain, read off from the all-one vector memberships.
ChainFlags chain_flags(const SOChain& chain);

/// Number of self-orthogonal codes over R_{e,m} of the given type whose torsion chain is a fixed
/// chain with the given flags. Throws std::invalid_argument for flags outside their ranges.
BigInt per_chain_lift_count(const ChainRingSpec& spec, const TypeProfile& type, const ChainFlags& flags);

/// Number of self-orthogonal codes of length type.n and the given type over R_{e,m}; zero for
/// types violating the self-orthogonality inequalities.
BigInt count_so_type(const ChainRingSpec& spec, const TypeProfile& type, const CountOptions& options = {});
/// Number of self-dual codes of the given type; zero unless lambda_i = lambda_{e-i+2} for all i.
BigInt count_sd_type(const ChainRingSpec& spec, const TypeProfile& type, const CountOptions& options = {});

/// Every type {lambda_1, ..., lambda_e} with Lambda_e <= n, in lexicographic order.
std::vector<TypeProfile> all_types(int e, int n);

struct Totals {
    BigInt total_so;
    BigInt total_sd;
};
/// Sums over all types, including the zero type and types with Lambda_e = n.
Totals total_counts(const ChainRingSpec& spec, int n, const CountOptions& options = {});

}  // namespace chaincodes
