#include "chaincodes/field_codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chaincodes {

ResidueField::ResidueField(int m, std::uint32_t fbar) : m_(m), q_(1u << m), fbar_(fbar) {
    if (m < 1 || m > 8) throw std::invalid_argument("residue field degree must lie in [1, 8]");
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
            mul_[a * q_ + b] = gf_mul(a, b, m, fbar);
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
        }
}

ResidueField ResidueField::of(const ChainRingSpec& spec) {
    return ResidueField(spec.m(), spec.galois.residue_modulus());
}

ResidueElem ResidueField::inv(ResidueElem a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    return inv_[a];
}

FieldCode make_field_code(const ResidueField& F, int n, std::vector<FieldVector> rows) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("field vector length mismatch");
    FieldCode C;
    C.n = n;
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        const ResidueElem iv = F.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = F.mul(x, iv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const ResidueElem f = rows[r][col];
            for (int j = 0; j < n; ++j) rows[r][j] ^= F.mul(f, rows[rank][j]);
        }
        C.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    C.basis = std::move(rows);
    return C;
}

FieldCode zero_field_code(int n) { return FieldCode{n, {}, {}}; }

FieldCode full_field_code(int n) {
    FieldCode C{n, {}, {}};
    for (int i = 0; i < n; ++i) {
        FieldVector v(n, 0);
        v[i] = 1;
        C.basis.push_back(v);
        C.pivots.push_back(i);
    }
    return C;
}

bool field_code_contains(const ResidueField& F, const FieldCode& C, const FieldVector& v) {
    if (static_cast<int>(v.size()) != C.n) throw std::invalid_argument("field vector length mismatch");
    FieldVector r = v;
    for (int k = 0; k < C.dim(); ++k) {
        const ResidueElem f = r[C.pivots[k]];
        if (f == 0) continue;
        for (int j = 0; j < C.n; ++j) r[j] ^= F.mul(f, C.basis[k][j]);
    }
    return std::all_of(r.begin(), r.end(), [](ResidueElem x) { return x == 0; });
}

bool is_subcode(const ResidueField& F, const FieldCode& A, const FieldCode& B) {
    for (const auto& row : A.basis)
        if (!field_code_contains(F, B, row)) return false;
    return true;
}

FieldCode field_code_sum(const ResidueField& F, const FieldCode& A, const FieldCode& B) {
    std::vector<FieldVector> rows = A.basis;
    rows.insert(rows.end(), B.basis.begin(), B.basis.end());
    return make_field_code(F, A.n, rows);
}

ResidueElem field_dot(const ResidueField& F, const FieldVector& v, const FieldVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("field vector length mismatch");
    ResidueElem r = 0;
    for (std::size_t i = 0; i < v.size(); ++i) r ^= F.mul(v[i], w[i]);
    return r;
}

ResidueElem bilinear_form(const ChainRing& R, const FieldVector& v, const FieldVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("field vector length mismatch");
    ChainRing::Elem acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc = R.add(acc, R.mul(v[i], w[i]));
    return R.digit(acc, 0);
}

FieldCode dual_code_field(const ResidueField& F, const FieldCode& C) {
    // Kernel of the basis: one vector per non-pivot column.
    std::vector<FieldVector> rows;
    std::vector<bool> is_pivot(C.n, false);
    for (int p : C.pivots) is_pivot[p] = true;
    for (int j = 0; j < C.n; ++j) {
        if (is_pivot[j]) continue;
        FieldVector v(C.n, 0);
        v[j] = 1;
        for (int k = 0; k < C.dim(); ++k) v[C.pivots[k]] = C.basis[k][j];
        rows.push_back(v);
    }
    return make_field_code(F, C.n, rows);
}

bool is_self_orthogonal_field(const ResidueField& F, const FieldCode& C) {
    for (int a = 0; a < C.dim(); ++a)
        for (int b = a; b < C.dim(); ++b)
            if (field_dot(F, C.basis[a], C.basis[b]) != 0) return false;
    return true;
}

ResidueElem elementary_e2(const ResidueField& F, const FieldVector& v) {
    ResidueElem r = 0;
    ResidueElem prefix = 0;
    for (auto x : v) {
        r ^= F.mul(prefix, x);
        prefix ^= x;
    }
    return r;
}

bool is_doubly_even(const ResidueField& F, const FieldCode& C) {
    if (!is_self_orthogonal_field(F, C)) throw std::invalid_argument("doubly even test needs a self-orthogonal code");
    for (const auto& row : C.basis)
        if (elementary_e2(F, row) != 0) return false;
    return true;
}

bool is_doubly_even_exhaustive(const ChainRing& R, const FieldCode& C) {
    const ResidueField F = ResidueField::of(R);
    if (!is_self_orthogonal_field(F, C)) throw std::invalid_argument("doubly even test needs a self-orthogonal code");
    for (const auto& b : field_codewords(F, C)) {
        ChainRing::Elem acc = 0;
        for (auto x : b) acc = R.add(acc, R.mul(x, x));
        if (R.digit(acc, R.kappa()) != 0) return false;
    }
    return true;
}

bool is_doubly_even_galois4(const ResidueField& F, const FieldCode& C) {
    std::vector<std::uint32_t> f(F.m() + 1);
    for (int i = 0; i <= F.m(); ++i) f[i] = (F.modulus() >> i) & 1u;
    const GaloisRingSpec gr4 = make_galois_ring(2, F.m(), f);
    std::vector<GaloisRingElem> lift(F.q());
    for (std::uint32_t a = 0; a < F.q(); ++a) lift[a] = teichmuller_lift(gr4, a);
    for (const auto& b : field_codewords(F, C)) {
        GaloisRingElem acc = gr_zero(gr4);
        for (auto x : b) acc = gr_add(gr4, acc, gr_mul(gr4, lift[x], lift[x]));
        if (!gr_is_zero(acc)) return false;
    }
    return true;
}

bool contains_all_one(const ResidueField& F, const FieldCode& C) {
    return field_code_contains(F, C, FieldVector(C.n, 1));
}

std::vector<FieldVector> field_codewords(const ResidueField& F, const FieldCode& C) {
    std::vector<FieldVector> out;
    std::vector<ResidueElem> coeff(C.dim(), 0);
    while (true) {
        FieldVector v(C.n, 0);
        for (int k = 0; k < C.dim(); ++k)
            if (coeff[k])
                for (int j = 0; j < C.n; ++j) v[j] ^= F.mul(coeff[k], C.basis[k][j]);
        out.push_back(std::move(v));
        int k = 0;
        while (k < C.dim() && ++coeff[k] == F.q()) coeff[k++] = 0;
        if (k == C.dim()) break;
    }
    return out;
}

void for_each_subspace(const ResidueField& F, int n, int d, const std::function<void(const FieldCode&)>& visit) {
    if (d < 0 || d > n) return;
    std::vector<int> piv(d);
    for (int i = 0; i < d; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (int p : piv) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < d; ++r)
            for (int c = piv[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);
        FieldCode C;
        C.n = n;
        C.pivots = piv;
        C.basis.assign(d, FieldVector(n, 0));
        for (int r = 0; r < d; ++r) C.basis[r][piv[r]] = 1;
        std::vector<ResidueElem> vals(free.size(), 0);
        while (true) {
            for (std::size_t k = 0; k < free.size(); ++k) C.basis[free[k].first][free[k].second] = vals[k];
            visit(C);
            std::size_t k = 0;
            while (k < vals.size() && ++vals[k] == F.q()) vals[k++] = 0;
            if (k == vals.size()) break;
        }
        // Next pivot combination.
        int i = d - 1;
        while (i >= 0 && piv[i] == n - d + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::string format_field_vector(const FieldVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace chaincodes
