#include "chaincodes/ring_codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chaincodes {

namespace {

using Elem = ChainRing::Elem;

int floor_div2(int w) { return w >= 0 ? w / 2 : -((-w + 1) / 2); }
int ceil_div2(int w) { return -floor_div2(-w); }

bool is_zero_vector(const RingVector& v) {
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

/// y <- y - c x modulo u^level.
void sub_scaled(const ChainRing& R, RingVector& y, Elem c, const RingVector& x, int level) {
    if (c == 0) return;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = R.truncate(R.sub(y[j], R.mul(c, x[j])), level);
}

/// y <- y + c x modulo u^level.
void add_scaled(const ChainRing& R, RingVector& y, Elem c, const RingVector& x, int level) {
    if (c == 0) return;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = R.truncate(R.add(y[j], R.mul(c, x[j])), level);
}

void scale_vector(const ChainRing& R, RingVector& y, Elem c, int level) {
    for (auto& a : y) a = R.truncate(R.mul(c, a), level);
}

Elem dot(const ChainRing& R, const RingVector& a, const RingVector& b) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j) acc = R.add(acc, R.mul(a[j], b[j]));
    return acc;
}

int entry_valuation(const ChainRing& R, Elem a, int level) {
    const int v = R.valuation(a);
    return v >= level ? level : v;
}

/// Multiplies a row so that its entry at column j becomes exactly u^v.
void normalize_pivot(const ChainRing& R, RingVector& row, int j, int v, int level) {
    const Elem unit = R.shift_down(row[j], v);
    if (unit == 1) return;
    scale_vector(R, row, R.inverse(unit), level);
}

struct PivotRow {
    RingVector full;
    int column;
    int valuation;
};

std::vector<PivotRow> standard_pivots(const ChainRing& R, int level, int n, std::vector<RingVector> remaining) {
    std::vector<PivotRow> done;
    auto prune = [&]() {
        remaining.erase(std::remove_if(remaining.begin(), remaining.end(), is_zero_vector), remaining.end());
    };
    for (auto& v : remaining) {
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("ring vector length mismatch");
        for (auto& a : v) a = R.truncate(a, level);
    }
    prune();
    for (int v = 0; v < level && !remaining.empty(); ++v) {
        while (true) {
            int col = -1;
            std::size_t sel = 0;
            for (int j = 0; j < n && col < 0; ++j)
                for (std::size_t r = 0; r < remaining.size(); ++r)
                    if (remaining[r][j] != 0 && entry_valuation(R, remaining[r][j], level) == v) {
                        col = j;
                        sel = r;
                        break;
                    }
            if (col < 0) break;
            RingVector piv = remaining[sel];
            remaining.erase(remaining.begin() + static_cast<long>(sel));
            normalize_pivot(R, piv, col, v, level);
            for (auto& other : remaining) sub_scaled(R, other, R.shift_down(other[col], v), piv, level);
            for (auto& prev : done) sub_scaled(R, prev.full, R.shift_down(prev.full[col], v), piv, level);
            done.push_back({std::move(piv), col, v});
            prune();
        }
    }
    return done;
}

std::vector<RingVector> full_rows(const RingCode& D) {
    std::vector<RingVector> out;
    for (std::size_t r = 0; r < D.rows.size(); ++r) out.push_back(D.row_vector(r));
    return out;
}

}  // namespace

int TypeProfile::lambda(int i) const {
    if (i < 1 || i > levels() + 1) throw std::out_of_range("lambda index out of range");
    if (i == levels() + 1) return n - Lambda(levels());
    return lambdas[i - 1];
}

int TypeProfile::Lambda(int i) const {
    if (i <= 0) return 0;
    if (i > levels()) return n;
    int s = 0;
    for (int k = 0; k < i; ++k) s += lambdas[k];
    return s;
}

bool TypeProfile::valid() const {
    if (n < 0) return false;
    for (int x : lambdas)
        if (x < 0) return false;
    return Lambda(levels()) <= n;
}

bool TypeProfile::so_feasible() const {
    if (!valid()) return false;
    const int L = levels();
    for (int i = (L + 2) / 2; i <= L; ++i)
        if (2 * Lambda(L - i + 1) + (Lambda(i) - Lambda(L - i + 1)) > n) return false;
    return true;
}

bool TypeProfile::sd_feasible() const {
    if (!valid()) return false;
    const int L = levels();
    for (int i = 1; i <= L; ++i)
        if (lambda(i) != lambda(L - i + 2)) return false;
    return true;
}

std::string TypeProfile::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < lambdas.size(); ++i) os << (i ? "," : "") << lambdas[i];
    return os.str();
}

TypeProfile make_type(int n, std::vector<int> lambdas) {
    TypeProfile t{n, std::move(lambdas)};
    if (!t.valid()) throw std::invalid_argument("invalid type: need nonnegative lambdas with Lambda_L <= n");
    return t;
}

TypeProfile parse_type(int n, const std::string& text) {
    std::vector<int> lambdas;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("malformed type: " + text);
            lambdas.push_back(c - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed type: " + text);
            }
            if (pos != item.size()) throw std::invalid_argument("malformed type: " + text);
            lambdas.push_back(v);
        }
    }
    if (lambdas.empty()) throw std::invalid_argument("empty type");
    return make_type(n, lambdas);
}

TypeProfile dual_type(const TypeProfile& type) {
    const int L = type.levels();
    std::vector<int> out{type.n - type.Lambda(L)};
    for (int i = L; i >= 2; --i) out.push_back(type.lambda(i));
    return TypeProfile{type.n, out};
}

TypeProfile RingCode::type() const {
    std::vector<int> lambdas(level, 0);
    for (const auto& row : rows) ++lambdas.at(row.block);
    return TypeProfile{n, lambdas};
}

RingVector RingCode::row_vector(std::size_t r) const {
    const auto& row = rows.at(r);
    RingVector v(n);
    for (int j = 0; j < n; ++j) v[j] = ring->truncate(ring->shift_up(row.w[j], row.block), level);
    return v;
}

int RingCode::size_exponent() const {
    int s = 0;
    for (const auto& row : rows) s += level - row.block;
    return s;
}

RingCode zero_ring_code(ChainRingPtr ring, int level, int n) {
    if (level < 1 || level > ring->e()) throw std::invalid_argument("level out of range");
    return RingCode{std::move(ring), level, n, {}};
}

RingCode make_ring_code(ChainRingPtr ring, int level, int n, const std::vector<RingVector>& generators) {
    if (level < 1 || level > ring->e()) throw std::invalid_argument("level out of range");
    const ChainRing& R = *ring;
    auto pivots = standard_pivots(R, level, n, generators);
    std::stable_sort(pivots.begin(), pivots.end(), [](const PivotRow& a, const PivotRow& b) {
        return a.valuation != b.valuation ? a.valuation < b.valuation : a.column < b.column;
    });
    RingCode D{ring, level, n, {}};
    for (const auto& p : pivots) {
        RingRow row;
        row.block = p.valuation;
        row.label = p.valuation + 1;
        row.pivot = p.column;
        row.w.resize(n);
        for (int j = 0; j < n; ++j) row.w[j] = R.shift_down(p.full[j], p.valuation);
        D.rows.push_back(std::move(row));
    }
    return D;
}

RingCode standard_form(const RingCode& D) { return make_ring_code(D.ring, D.level, D.n, full_rows(D)); }

std::vector<std::uint32_t> howell_key(const RingCode& D) {
    const ChainRing& R = D.R();
    const int L = D.level;
    std::vector<RingVector> S = full_rows(D);
    std::vector<PivotRow> piv;
    for (int j = 0; j < D.n; ++j) {
        S.erase(std::remove_if(S.begin(), S.end(), is_zero_vector), S.end());
        int best = -1;
        int best_v = L;
        for (std::size_t r = 0; r < S.size(); ++r) {
            const int v = entry_valuation(R, S[r][j], L);
            if (v < best_v) {
                best_v = v;
                best = static_cast<int>(r);
            }
        }
        if (best < 0) continue;
        RingVector p = S[best];
        S.erase(S.begin() + best);
        normalize_pivot(R, p, j, best_v, L);
        for (auto& x : S) sub_scaled(R, x, R.shift_down(x[j], best_v), p, L);
        RingVector sat = p;
        scale_vector(R, sat, R.u_power(L - best_v), L);
        if (!is_zero_vector(sat)) S.push_back(std::move(sat));
        piv.push_back({std::move(p), j, best_v});
    }
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t k2 = k + 1; k2 < piv.size(); ++k2) {
            const Elem a = piv[k].full[piv[k2].column];
            sub_scaled(R, piv[k].full, R.shift_down(a, piv[k2].valuation), piv[k2].full, L);
        }
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(L), static_cast<std::uint32_t>(D.n),
                                   static_cast<std::uint32_t>(piv.size())};
    for (const auto& p : piv) {
        key.push_back(static_cast<std::uint32_t>(p.column));
        key.insert(key.end(), p.full.begin(), p.full.end());
    }
    return key;
}

bool same_code(const RingCode& a, const RingCode& b) { return howell_key(a) == howell_key(b); }

bool is_self_orthogonal(const RingCode& D) {
    const ChainRing& R = D.R();
    const auto rows = full_rows(D);
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a; b < rows.size(); ++b)
            if (R.truncate(dot(R, rows[a], rows[b]), D.level) != 0) return false;
    return true;
}

bool is_self_orthogonal_exhaustive(const RingCode& D, std::uint64_t bound) {
    const ChainRing& R = D.R();
    const auto words = enumerate_codewords(D, bound);
    std::vector<RingVector> vecs;
    for (auto w : words) vecs.push_back(unpack_word(R, D.n, w));
    for (std::size_t a = 0; a < vecs.size(); ++a)
        for (std::size_t b = a; b < vecs.size(); ++b)
            if (R.truncate(dot(R, vecs[a], vecs[b]), D.level) != 0) return false;
    return true;
}

bool is_self_dual(const RingCode& D) {
    if (D.level != D.R().e()) throw std::invalid_argument("self-duality is defined over R_{e,m}");
    const RingCode S = standard_form(D);
    return S.type().sd_feasible() && is_self_orthogonal(S);
}

RingCode dual_code(const RingCode& D) {
    const ChainRing& R = D.R();
    const int L = D.level;
    const int n = D.n;
    std::vector<RingVector> G = full_rows(D);
    const int k = static_cast<int>(G.size());
    std::vector<RingVector> Q(n, RingVector(n, 0));  // Q[i][j]: row i, column j
    for (int i = 0; i < n; ++i) Q[i][i] = 1;
    std::vector<int> diag;
    int r = 0;
    while (r < k && r < n) {
        int bi = -1, bj = -1, bv = L;
        for (int i = r; i < k; ++i)
            for (int j = r; j < n; ++j) {
                const int v = entry_valuation(R, G[i][j], L);
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;
        std::swap(G[r], G[bi]);
        if (bj != r) {
            for (auto& row : G) std::swap(row[r], row[bj]);
            for (auto& row : Q) std::swap(row[r], row[bj]);
        }
        normalize_pivot(R, G[r], r, bv, L);
        for (int i = 0; i < k; ++i)
            if (i != r) sub_scaled(R, G[i], R.shift_down(G[i][r], bv), G[r], L);
        for (int j = r + 1; j < n; ++j) {
            const Elem f = R.shift_down(G[r][j], bv);
            if (f == 0) continue;
            for (auto& row : G) row[j] = R.truncate(R.sub(row[j], R.mul(f, row[r])), L);
            for (auto& row : Q) row[j] = R.truncate(R.sub(row[j], R.mul(f, row[r])), L);
        }
        diag.push_back(bv);
        ++r;
    }
    std::vector<RingVector> gens;
    for (int c = 0; c < n; ++c) {
        RingVector v(n);
        const Elem f = c < r ? R.u_power(L - diag[c]) : 1;
        for (int i = 0; i < n; ++i) v[i] = R.truncate(R.mul(f, Q[i][c]), L);
        gens.push_back(v);
    }
    return make_ring_code(D.ring, L, n, gens);
}

RingCode dual_code_exhaustive(const RingCode& D, std::uint64_t bound) {
    const ChainRing& R = D.R();
    const int L = D.level;
    const std::uint64_t per = 1ull << (R.m() * L);
    std::uint64_t total = 1;
    for (int j = 0; j < D.n; ++j) {
        total *= per;
        if (total > bound) throw std::length_error("dual search space exceeds the budget");
    }
    const auto rows = full_rows(D);
    std::vector<RingVector> kernel;
    RingVector v(D.n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int j = 0; j < D.n; ++j) {
            v[j] = static_cast<Elem>(t % per);
            t /= per;
        }
        bool ok = true;
        for (const auto& row : rows)
            if (R.truncate(dot(R, row, v), L) != 0) {
                ok = false;
                break;
            }
        if (ok) kernel.push_back(v);
    }
    return make_ring_code(D.ring, L, D.n, kernel);
}

FieldCode torsion_code(const RingCode& D, int i) {
    if (i < 1 || i > D.level) throw std::invalid_argument("torsion index out of range");
    const RingCode S = standard_form(D);
    const ResidueField F = ResidueField::of(D.R());
    std::vector<FieldVector> rows;
    for (const auto& row : S.rows) {
        if (row.block >= i) continue;
        FieldVector v(D.n);
        for (int j = 0; j < D.n; ++j) v[j] = D.R().digit(row.w[j], 0);
        rows.push_back(v);
    }
    return make_field_code(F, D.n, rows);
}

RingCode truncate_code(const RingCode& De, int level) {
    const ChainRing& R = De.R();
    const int e = R.e();
    if (De.level != e) throw std::invalid_argument("truncate_code expects a code over R_{e,m}");
    if (level < 2 || level > e) throw std::invalid_argument("truncation level out of range");
    if ((e - level) % 2 != 0) throw std::invalid_argument("truncation level must have the parity of e");
    const int gamma = e / 2 - level / 2;
    RingCode out{De.ring, level, De.n, {}};
    for (const auto& row : De.rows) {
        if (row.label > gamma + level) continue;
        RingRow nr;
        nr.label = row.label;
        nr.block = std::max(0, row.label - gamma - 1);
        nr.pivot = row.pivot;
        nr.w.resize(De.n);
        for (int j = 0; j < De.n; ++j) nr.w[j] = R.truncate(row.w[j], level - nr.block);
        out.rows.push_back(std::move(nr));
    }
    return out;
}

RingCode stage_truncation(const RingCode& D) {
    const ChainRing& R = D.R();
    if (D.level < 3) throw std::invalid_argument("stage truncation needs level >= 3");
    const int L = D.level - 2;
    RingCode out{D.ring, L, D.n, {}};
    for (const auto& row : D.rows) {
        const int nb = std::max(0, row.block - 1);
        if (nb >= L) continue;
        RingRow nr;
        nr.label = row.label;
        nr.block = nb;
        nr.pivot = row.pivot;
        nr.w.resize(D.n);
        for (int j = 0; j < D.n; ++j) nr.w[j] = R.truncate(row.w[j], L - nb);
        if (is_zero_vector(nr.w)) continue;
        out.rows.push_back(std::move(nr));
    }
    return out;
}

PackedWord pack_word(const ChainRing& R, const RingVector& v) {
    const int bits = R.m() * R.e();
    if (bits * static_cast<int>(v.size()) > 128) throw std::length_error("codeword too long to pack");
    PackedWord w = 0;
    for (std::size_t j = 0; j < v.size(); ++j) w |= static_cast<PackedWord>(v[j]) << (bits * j);
    return w;
}

RingVector unpack_word(const ChainRing& R, int n, PackedWord w) {
    const int bits = R.m() * R.e();
    RingVector v(n);
    for (int j = 0; j < n; ++j) v[j] = static_cast<Elem>((w >> (bits * j)) & ((PackedWord{1} << bits) - 1));
    return v;
}

std::vector<PackedWord> enumerate_codewords(const RingCode& D, std::uint64_t bound) {
    const ChainRing& R = D.R();
    const RingCode S = standard_form(D);
    const int exponent = S.size_exponent() * R.m();
    if (exponent >= 63 || (1ull << exponent) > bound) throw std::length_error("code too large to enumerate");
    std::vector<RingVector> rows = full_rows(S);
    std::vector<PackedWord> out;
    out.reserve(1ull << exponent);
    RingVector acc(D.n, 0);
    // Depth-first over coefficients c_r < q^{level - block_r}.
    auto rec = [&](auto&& self, std::size_t r, const RingVector& cur) -> void {
        if (r == rows.size()) {
            out.push_back(pack_word(R, cur));
            return;
        }
        const Elem range = 1u << (R.m() * (S.level - S.rows[r].block));
        RingVector next(cur.size());
        for (Elem c = 0; c < range; ++c) {
            for (std::size_t j = 0; j < cur.size(); ++j)
                next[j] = R.truncate(R.add(cur[j], R.mul(c, rows[r][j])), S.level);
            self(self, r + 1, next);
        }
    };
    rec(rec, 0, acc);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PropertyPCases property_P_conditions(const ChainRingSpec& spec, int level) {
    const int e = spec.e;
    const int kappa = spec.kappa;
    const int theta = spec.theta_e;
    if (level < 2 || level > e) throw std::invalid_argument("property (P) needs 2 <= level <= e");
    if ((e - level) % 2 != 0) throw std::invalid_argument("property (P) is defined only for levels of the parity of e");
    const int gamma = spec.s_half - level / 2;
    const int bound2 = kappa - floor_div2(2 * kappa - e) + 1;
    const bool c1 = level <= std::min(kappa - 1, e - kappa);
    const bool c2 = e - kappa < level && level <= bound2;
    const bool c3 = kappa <= level && level <= e - kappa;
    const bool c4 = level > std::max(e - kappa, bound2);
    const int matches = int(c1) + int(c2) + int(c3) + int(c4);
    if (matches == 0) throw std::logic_error("no range of property (P) applies to this level");
    if (matches > 1) throw std::logic_error("several ranges of property (P) apply to this level");
    PropertyPCases out;
    auto add = [&](int max_label, bool digit_only, int index) {
        if (max_label <= 0) return;
        out.conditions.push_back({max_label, digit_only, index});
    };
    if (c1 || c2) {
        out.case_id = c1 ? 1 : 2;
        for (int i = 2; i <= level - theta; i += 2) add(gamma + 1 - floor_div2(i), false, level + i);
        const int jmax = c1 ? kappa - 2 + theta : e - level - 1 - theta;
        for (int j = level - 1; j <= jmax; j += 2) add(gamma + 1 - floor_div2(j + 2), true, level + j);
    } else if (c3) {
        out.case_id = 3;
        std::vector<int> idx;
        for (int i = 2; i <= kappa - 1; i += 2) idx.push_back(i);
        idx.push_back(kappa);
        for (int i : idx) add(gamma + 1 - ceil_div2(i), false, level + i);
    } else {
        out.case_id = 4;
        for (int i = 2; i <= e - level; i += 2) add(gamma + 1 - floor_div2(i), false, level + i);
    }
    return out;
}

namespace {

bool condition_holds(const ChainRing& R, const PropertyPCondition& c, Elem square) {
    if (c.digit_only) return c.index >= R.e() || R.digit(square, c.index) == 0;
    return R.truncate(square, c.index) == 0;
}

}  // namespace

bool satisfies_property_P(const RingCode& D) {
    const ChainRing& R = D.R();
    const auto cases = property_P_conditions(R.spec(), D.level);
    for (std::size_t r = 0; r < D.rows.size(); ++r) {
        if (D.rows[r].block != 0) continue;
        const RingVector x = D.row_vector(r);
        const Elem sq = dot(R, x, x);
        for (const auto& c : cases.conditions)
            if (D.rows[r].label <= c.max_label && !condition_holds(R, c, sq)) return false;
    }
    return true;
}

bool admits_property_P(const RingCode& D, const std::vector<LabeledResidue>& first_block) {
    const ChainRing& R = D.R();
    const int L = D.level;
    const auto cases = property_P_conditions(R.spec(), L);
    int max_label = 0;
    for (const auto& c : cases.conditions) max_label = std::max(max_label, c.max_label);
    if (max_label == 0) return true;

    const RingCode S = standard_form(D);
    std::vector<int> first_rows;  // indices into S.rows with block 0
    std::vector<int> later_rows;
    for (std::size_t r = 0; r < S.rows.size(); ++r) (S.rows[r].block == 0 ? first_rows : later_rows).push_back(int(r));
    if (first_rows.size() != first_block.size())
        throw std::invalid_argument("first-block residues do not match Tor_1 of the code");

    // Locate the chain row pivots among the standard-form first-block pivots.
    std::vector<int> pivot_of(first_block.size());
    std::vector<int> row_of_pivot(D.n, -1);
    for (int r : first_rows) row_of_pivot[S.rows[r].pivot] = r;
    std::vector<int> label_of_row(S.rows.size(), 0);
    for (std::size_t h = 0; h < first_block.size(); ++h) {
        const auto& t = first_block[h].residue;
        int p = 0;
        while (p < D.n && t[p] == 0) ++p;
        if (p == D.n || row_of_pivot[p] < 0) throw std::invalid_argument("chain residues do not match Tor_1 of the code");
        pivot_of[h] = p;
        label_of_row[row_of_pivot[p]] = first_block[h].label;
    }

    for (std::size_t h = 0; h < first_block.size(); ++h) {
        const int label = first_block[h].label;
        std::vector<PropertyPCondition> conds;
        for (const auto& c : cases.conditions)
            if (label <= c.max_label) conds.push_back(c);
        if (conds.empty()) continue;
        const auto& t = first_block[h].residue;

        RingVector base = S.row_vector(row_of_pivot[pivot_of[h]]);
        // Each slot contributes T(d) u^k v for a chosen digit d.
        std::vector<std::pair<int, RingVector>> slots;  // (u-power, vector)
        for (int r : first_rows) {
            if (label_of_row[r] <= label) continue;
            const RingVector w = S.row_vector(r);
            add_scaled(R, base, t[S.rows[r].pivot], w, L);
            for (int k = 1; k < L; ++k) slots.emplace_back(k, w);
        }
        for (int r : later_rows) {
            const RingVector w = S.row_vector(r);
            for (int k = 0; k < L - S.rows[r].block; ++k) slots.emplace_back(k, w);
        }
        std::vector<std::vector<RingVector>> options(slots.size());
        for (std::size_t sidx = 0; sidx < slots.size(); ++sidx) {
            const auto& [k, w] = slots[sidx];
            for (Elem d = 1; d < R.q(); ++d) {
                RingVector v(D.n, 0);
                add_scaled(R, v, R.shift_up(d, k), w, L);
                options[sidx].push_back(std::move(v));
            }
        }
        bool found = false;
        auto rec = [&](auto&& self, std::size_t sidx, const RingVector& x) -> void {
            if (found) return;
            if (sidx == slots.size()) {
                const Elem sq = dot(R, x, x);
                for (const auto& c : conds)
                    if (!condition_holds(R, c, sq)) return;
                found = true;
                return;
            }
            self(self, sidx + 1, x);
            RingVector y(x.size());
            for (const auto& v : options[sidx]) {
                for (std::size_t j = 0; j < x.size(); ++j) y[j] = R.truncate(R.add(x[j], v[j]), L);
                self(self, sidx + 1, y);
                if (found) return;
            }
        };
        rec(rec, 0, base);
        if (!found) return false;
    }
    return true;
}

std::string format_ring_vector(const ChainRing& R, const RingVector& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << "[" << R.format(v[j]) << "]";
    os << "]";
    return os.str();
}

}  // namespace chaincodes
