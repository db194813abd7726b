#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chaincodes/galois_ring.hpp"

namespace chaincodes {

/// Element of R_{e,m}: coefficients of 1, y, ..., y^{kappa-1}; coefficient i reduced mod 2^{s-1} for i >= t.
struct ChainRingElem {
    std::vector<GaloisRingElem> coeffs;
    bool operator==(const ChainRingElem&) const = default;
};

/// R_{e,m} = GR(2^s, m)[y] / <y^kappa + 2 g(y), 2^{s-1} y^t> with nilpotency index e = kappa (s-1) + t.
struct ChainRingSpec {
    GaloisRingSpec galois;
    int kappa = 3;
    int tee = 1;
    std::vector<GaloisRingElem> tail;  ///< g(y), kappa coefficients over GR(2^s, m)
    int e = 0;
    int s_half = 0;    ///< floor(e / 2)
    int theta_e = 0;   ///< e mod 2
    int kappa_1 = 0;   ///< (kappa - 1) / 2
    std::vector<ResidueElem> eta;  ///< u-adic coordinates kappa .. e-1 of the element 2
    ChainRingElem tail_inverse;    ///< g(y)^{-1}, used to divide by u

    int m() const { return galois.degree; }
    std::uint32_t q() const { return 1u << galois.degree; }
};

/// Teichmueller coordinates d_0, ..., d_{e-1} with x = sum u^i d_i; d_i are residue-field values.
using UAdicCoords = std::vector<ResidueElem>;

/// Validates parameters and derives e, s, theta, kappa_1 and eta. Throws std::invalid_argument.
ChainRingSpec make_ring(const GaloisRingSpec& galois, int kappa, int tee, const std::vector<GaloisRingElem>& tail);
/// Convenience overload with an integer tail polynomial in y.
ChainRingSpec make_ring(const GaloisRingSpec& galois, int kappa, int tee, const std::vector<long long>& tail);

/// Parses "CR(2^s,m;kappa,t;g)" with g an integer polynomial in y, e.g. "CR(2^2,1;3,1;1)".
ChainRingSpec parse_chain_ring(const std::string& text);
/// Presets "R4,1", "R5,1", "R6,2", "R8,2" (all with kappa = 3 and g = 1).
ChainRingSpec preset_ring(const std::string& name);
std::vector<std::string> preset_names();
std::string to_string(const ChainRingSpec& spec);

ChainRingElem cr_zero(const ChainRingSpec& spec);
ChainRingElem cr_one(const ChainRingSpec& spec);
ChainRingElem cr_from_int(const ChainRingSpec& spec, long long value);
ChainRingElem cr_from_galois(const ChainRingSpec& spec, const GaloisRingElem& a);
/// u^k.
ChainRingElem cr_u_power(const ChainRingSpec& spec, int k);

ChainRingElem cr_add(const ChainRingSpec& spec, const ChainRingElem& a, const ChainRingElem& b);
ChainRingElem cr_sub(const ChainRingSpec& spec, const ChainRingElem& a, const ChainRingElem& b);
ChainRingElem cr_neg(const ChainRingSpec& spec, const ChainRingElem& a);
ChainRingElem cr_mul(const ChainRingSpec& spec, const ChainRingElem& a, const ChainRingElem& b);
ChainRingElem cr_pow(const ChainRingSpec& spec, const ChainRingElem& a, unsigned long long k);
/// Inverse of a unit; throws std::domain_error otherwise.
ChainRingElem cr_inv(const ChainRingSpec& spec, const ChainRingElem& a);
bool cr_is_zero(const ChainRingElem& a);
ResidueElem cr_residue(const ChainRingSpec& spec, const ChainRingElem& a);

int u_valuation(const ChainRingSpec& spec, const ChainRingElem& a);
UAdicCoords to_u_adic(const ChainRingSpec& spec, const ChainRingElem& a);
ChainRingElem from_u_adic(const ChainRingSpec& spec, const UAdicCoords& coords);
/// Zeroes the u-adic coordinates from position level on; level in [1, e].
ChainRingElem truncate_elem(const ChainRingSpec& spec, const ChainRingElem& a, int level);

std::string to_string(const ChainRingSpec& spec, const ChainRingElem& a);

/// Table-driven arithmetic on R_{e,m} with elements encoded by their u-adic coordinates:
/// the code of sum u^i d_i is sum d_i q^i. Multiplication by u^k is a shift of the code, and
/// reduction modulo u^l keeps the low l digits.
class ChainRing {
public:
    using Elem = std::uint32_t;

    explicit ChainRing(ChainRingSpec spec);

    const ChainRingSpec& spec() const { return spec_; }
    int e() const { return spec_.e; }
    int m() const { return spec_.galois.degree; }
    int kappa() const { return spec_.kappa; }
    std::uint32_t q() const { return q_; }
    std::uint32_t size() const { return size_; }
    int digit_bits() const { return m(); }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    /// Product of a Teichmueller digit and an element.
    Elem scale(ResidueElem d, Elem b) const;
    Elem inverse(Elem unit) const;

    int valuation(Elem a) const;
    ResidueElem digit(Elem a, int i) const { return (a >> (bits_ * i)) & (q_ - 1); }
    Elem truncate(Elem a, int level) const { return level >= spec_.e ? a : (a & ((1u << (bits_ * level)) - 1)); }
    /// u^k a.
    Elem shift_up(Elem a, int k) const { return k >= spec_.e ? 0 : ((a << (bits_ * k)) & (size_ - 1)); }
    /// Drops the k lowest digits; for a in <u^k> the result b satisfies u^k b = a.
    Elem shift_down(Elem a, int k) const { return k >= spec_.e ? 0 : (a >> (bits_ * k)); }
    Elem u_power(int k) const { return k >= spec_.e ? 0 : (1u << (bits_ * k)); }
    Elem from_digits(const UAdicCoords& d) const;
    UAdicCoords to_digits(Elem a) const;

    ResidueElem fmul(ResidueElem a, ResidueElem b) const { return fmul_[a * q_ + b]; }
    ResidueElem finv(ResidueElem a) const { return finv_[a]; }

    ChainRingElem to_elem(Elem a) const;
    Elem from_elem(const ChainRingElem& x) const;

    /// "d0,d1,...": u-adic coordinates as residue values.
    std::string format(Elem a) const;

private:
    std::uint64_t lanes_of(Elem a) const { return lanes_[a]; }
    Elem elem_of_lanes(std::uint64_t lanes) const;

    ChainRingSpec spec_;
    std::uint32_t q_ = 0;
    int bits_ = 0;
    std::uint32_t size_ = 0;
    int lane_count_ = 0;
    std::uint64_t lane_mask_ = 0;
    std::vector<std::uint32_t> lane_modulus_;
    std::vector<int> lane_offset_;  // bit offset in the dense polynomial index
    std::vector<std::uint64_t> lanes_;
    std::vector<Elem> elem_of_dense_;
    std::vector<Elem> add_table_;
    std::vector<ResidueElem> fmul_;
    std::vector<ResidueElem> finv_;
};

using ChainRingPtr = std::shared_ptr<const ChainRing>;
ChainRingPtr make_chain_ring(const ChainRingSpec& spec);

}  // namespace chaincodes
