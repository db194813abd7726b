#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chaincodes {

/// Galois ring GR(2^s, m) = Z_{2^s}[x] / <f(x)> with f monic of degree m.
struct GaloisRingSpec {
    int exponent = 1;                     ///< s, so the characteristic is 2^s
    int degree = 1;                       ///< m
    std::vector<std::uint32_t> modulus;   ///< m+1 coefficients of f, low degree first, f[m] == 1

    std::uint32_t characteristic() const { return 1u << exponent; }
    std::uint32_t residue_modulus() const;  ///< f mod 2 as a bitmask (bit i = coefficient of x^i)
    bool operator==(const GaloisRingSpec&) const = default;
};

/// Element of GR(2^s, m): coefficients of 1, x, ..., x^{m-1}, each in [0, 2^s).
struct GaloisRingElem {
    std::vector<std::uint32_t> coeffs;
    bool operator==(const GaloisRingElem&) const = default;
};

/// Residue field element of GF(2^m), stored as a bitmask polynomial over GF(2) modulo f mod 2.
using ResidueElem = std::uint32_t;

/// Default modulus: x for m = 1, x^2 + x + 1 for m = 2, otherwise the lexicographically
/// smallest monic polynomial whose reduction mod 2 is irreducible.
std::vector<std::uint32_t> default_modulus(int m);

/// Validates and builds a spec. Throws std::invalid_argument on a non-monic modulus, wrong degree,
/// or a modulus whose reduction mod 2 is reducible.
GaloisRingSpec make_galois_ring(int exponent, int degree, std::vector<std::uint32_t> modulus = {});

/// Parses "GR(2^s,m)" or "GR(2^s,m;f)" where f is written in x, e.g. "x^2+x+1".
GaloisRingSpec parse_galois_ring(const std::string& text);
std::string to_string(const GaloisRingSpec& spec);

/// Irreducibility of a GF(2) polynomial given as a bitmask, by trial division.
bool gf2_irreducible(std::uint32_t poly);

GaloisRingElem gr_zero(const GaloisRingSpec& spec);
GaloisRingElem gr_one(const GaloisRingSpec& spec);
GaloisRingElem gr_from_int(const GaloisRingSpec& spec, long long value);
GaloisRingElem gr_from_coeffs(const GaloisRingSpec& spec, const std::vector<long long>& coeffs);

GaloisRingElem gr_add(const GaloisRingSpec& spec, const GaloisRingElem& a, const GaloisRingElem& b);
GaloisRingElem gr_sub(const GaloisRingSpec& spec, const GaloisRingElem& a, const GaloisRingElem& b);
GaloisRingElem gr_neg(const GaloisRingSpec& spec, const GaloisRingElem& a);
GaloisRingElem gr_mul(const GaloisRingSpec& spec, const GaloisRingElem& a, const GaloisRingElem& b);
GaloisRingElem gr_pow(const GaloisRingSpec& spec, const GaloisRingElem& a, unsigned long long k);
bool gr_is_unit(const GaloisRingSpec& spec, const GaloisRingElem& a);
/// Inverse of a unit. Throws std::domain_error for non-units.
GaloisRingElem gr_inv(const GaloisRingSpec& spec, const GaloisRingElem& a);
bool gr_is_zero(const GaloisRingElem& a);

/// Unique root of X^{2^m} = X reducing to r mod 2.
GaloisRingElem teichmuller_lift(const GaloisRingSpec& spec, ResidueElem r);
ResidueElem residue(const GaloisRingSpec& spec, const GaloisRingElem& a);

/// "c0+c1*x+..." with zero terms omitted ("0" for zero).
std::string to_string(const GaloisRingSpec& spec, const GaloisRingElem& a);
GaloisRingElem parse_galois_elem(const GaloisRingSpec& spec, const std::string& text);

/// Arithmetic in GF(2^m) = GF(2)[x] / <fbar>.
ResidueElem gf_mul(ResidueElem a, ResidueElem b, int m, std::uint32_t fbar);

}  // namespace chaincodes
