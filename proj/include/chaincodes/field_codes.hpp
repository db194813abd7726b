#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/galois_ring.hpp"

namespace chaincodes {

using FieldVector = std::vector<ResidueElem>;

/// The residue field GF(2^m), identified with the Teichmueller set T_m via residues.
class ResidueField {
public:
    ResidueField(int m, std::uint32_t fbar);
    static ResidueField of(const ChainRingSpec& spec);
    static ResidueField of(const ChainRing& ring) { return of(ring.spec()); }

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return fbar_; }
    ResidueElem add(ResidueElem a, ResidueElem b) const { return a ^ b; }
    ResidueElem mul(ResidueElem a, ResidueElem b) const { return mul_[a * q_ + b]; }
    ResidueElem inv(ResidueElem a) const;

private:
    int m_;
    std::uint32_t q_;
    std::uint32_t fbar_;
    std::vector<ResidueElem> mul_;
    std::vector<ResidueElem> inv_;
};

/// Linear code over T_m stored by its reduced row echelon basis.
struct FieldCode {
    int n = 0;
    std::vector<FieldVector> basis;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(basis.size()); }
    bool operator==(const FieldCode& other) const { return n == other.n && basis == other.basis; }
};

/// Row-reduces arbitrary generators into canonical form.
FieldCode make_field_code(const ResidueField& F, int n, std::vector<FieldVector> rows);
FieldCode zero_field_code(int n);
FieldCode full_field_code(int n);

bool field_code_contains(const ResidueField& F, const FieldCode& C, const FieldVector& v);
bool is_subcode(const ResidueField& F, const FieldCode& A, const FieldCode& B);
FieldCode field_code_sum(const ResidueField& F, const FieldCode& A, const FieldCode& B);

/// Residue-field dot product sum v_i w_i.
ResidueElem field_dot(const ResidueField& F, const FieldVector& v, const FieldVector& w);
/// B_m(v, w): the constant u-adic coordinate of the chain-ring dot product of Teichmueller lifts.
ResidueElem bilinear_form(const ChainRing& R, const FieldVector& v, const FieldVector& w);

FieldCode dual_code_field(const ResidueField& F, const FieldCode& C);
bool is_self_orthogonal_field(const ResidueField& F, const FieldCode& C);

/// Second elementary symmetric function sum_{i<j} v_i v_j.
ResidueElem elementary_e2(const ResidueField& F, const FieldVector& v);
/// Basis test e_2(b) = 0; throws std::invalid_argument for codes that are not self-orthogonal.
bool is_doubly_even(const ResidueField& F, const FieldCode& C);
/// Literal test: coordinate kappa of b.b in R_{e,m} vanishes for every codeword b.
bool is_doubly_even_exhaustive(const ChainRing& R, const FieldCode& C);
/// Same property read in GR(4, m): c.c = 0 mod 4 for the Teichmueller lift of every codeword.
bool is_doubly_even_galois4(const ResidueField& F, const FieldCode& C);

bool contains_all_one(const ResidueField& F, const FieldCode& C);

/// All q^dim codewords in a fixed order.
std::vector<FieldVector> field_codewords(const ResidueField& F, const FieldCode& C);
/// Calls visit on every d-dimensional subspace of T_m^n (each given in canonical form).
void for_each_subspace(const ResidueField& F, int n, int d, const std::function<void(const FieldCode&)>& visit);

/// "(a,b,c)" with residue values.
std::string format_field_vector(const FieldVector& v);

}  // namespace chaincodes
