#include "chaincodes/lifting.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace chaincodes {

namespace {

using Elem = ChainRing::Elem;

int top_chain_index(const ChainRingSpec& spec) { return spec.s_half + spec.theta_e; }

int floor_div2(int w) { return w >= 0 ? w / 2 : -((-w + 1) / 2); }

Elem dot(const ChainRing& R, const RingVector& a, const RingVector& b) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j) acc = R.add(acc, R.mul(a[j], b[j]));
    return acc;
}

int leading_position(const FieldVector& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return static_cast<int>(j);
    return -1;
}

/// Enumerates the lifts of the given rows to the level: previous digits are kept, new digits are
/// free except where they can be cleared by adding multiples of other rows, and lambda_{gamma+l}
/// new rows u^{l-1} v are added with v in echelon form outside the existing pivots.
std::vector<RingCode> lift_rows(const std::vector<RingRow>& prev_rows, const std::vector<int>& old_len,
                                const SOChain& chain, int level) {
    const ChainRing& R = *chain.ring;
    const ChainRingSpec& spec = R.spec();
    const ResidueField F = ResidueField::of(spec);
    const int n = chain.n;
    const int gamma = spec.s_half - level / 2;
    const int bits = R.digit_bits();

    std::vector<RingRow> base_rows;
    std::vector<int> len_old;
    for (std::size_t r = 0; r < prev_rows.size(); ++r) {
        RingRow row = prev_rows[r];
        const int b = std::max(0, row.label - gamma - 1);
        if (b >= level) throw std::logic_error("row label beyond the stage");
        row.block = b;
        base_rows.push_back(row);
        len_old.push_back(old_len[r]);
    }
    std::vector<int> old_pivot_block(n, -1);
    for (const auto& row : base_rows) {
        if (row.pivot < 0 || old_pivot_block[row.pivot] >= 0) throw std::logic_error("rows need distinct pivots");
        old_pivot_block[row.pivot] = row.block;
    }
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (old_pivot_block[j] < 0) free_cols.push_back(j);

    const int new_label = gamma + level;
    const int new_count = new_label <= spec.e ? chain.type.lambda(new_label) : 0;
    if (new_count > static_cast<int>(free_cols.size())) return {};

    std::vector<RingCode> out;

    auto handle_subspace = [&](const FieldCode& sub) {
        std::vector<RingRow> rows;
        for (int k = 0; k < sub.dim(); ++k) {
            RingRow row;
            row.block = level - 1;
            row.label = new_label;
            row.w.assign(n, 0);
            for (std::size_t c = 0; c < free_cols.size(); ++c) row.w[free_cols[c]] = sub.basis[k][c];
            row.pivot = free_cols[sub.pivots[k]];
            rows.push_back(row);
        }
        const std::size_t fixed = rows.size();
        for (const auto& row : base_rows) rows.push_back(row);

        // Free digit slots (column, digit position of w) per lifted row. Digit d of the row with
        // label h may be nonzero at the pivot of a row with label h' only when d < h' - h.
        std::vector<int> pivot_label(n, -1);
        for (const auto& row : rows) pivot_label[row.pivot] = row.label;
        std::vector<std::vector<std::pair<int, int>>> slots(rows.size());
        for (std::size_t r = fixed; r < rows.size(); ++r) {
            const int b = rows[r].block;
            for (int d = len_old[r - fixed]; d < level - b; ++d)
                for (int j = 0; j < n; ++j)
                    if (pivot_label[j] < 0 || pivot_label[j] - rows[r].label > d) slots[r].emplace_back(j, d);
        }

        std::vector<RingVector> full(rows.size());
        auto make_full = [&](std::size_t r) {
            full[r].assign(n, 0);
            for (int j = 0; j < n; ++j) full[r][j] = R.truncate(R.shift_up(rows[r].w[j], rows[r].block), level);
        };
        for (std::size_t r = 0; r < fixed; ++r) make_full(r);

        std::function<void(std::size_t)> rec = [&](std::size_t r) {
            if (r == rows.size()) {
                RingCode D{chain.ring, level, n, rows};
                std::sort(D.rows.begin(), D.rows.end(), [](const RingRow& a, const RingRow& b) {
                    if (a.block != b.block) return a.block < b.block;
                    if (a.label != b.label) return a.label < b.label;
                    return a.pivot < b.pivot;
                });
                if (satisfies_property_P(D)) out.push_back(std::move(D));
                return;
            }
            const RingVector original = rows[r].w;
            const auto& sl = slots[r];
            std::vector<Elem> digit(sl.size(), 0);
            while (true) {
                rows[r].w = original;
                for (std::size_t k = 0; k < sl.size(); ++k)
                    rows[r].w[sl[k].first] |= digit[k] << (bits * sl[k].second);
                make_full(r);
                bool ok = true;
                for (std::size_t o = 0; o <= r && ok; ++o)
                    if (R.truncate(dot(R, full[r], full[o]), level) != 0) ok = false;
                if (ok) rec(r + 1);
                std::size_t k = 0;
                while (k < digit.size() && ++digit[k] == R.q()) digit[k++] = 0;
                if (k == digit.size()) break;
            }
            rows[r].w = original;
        };
        // New rows are mutually orthogonal modulo u^l since l >= 2.
        rec(fixed);
    };
    for_each_subspace(F, static_cast<int>(free_cols.size()), new_count, handle_subspace);
    return out;
}

BigInt big_pow(const BigInt& base, long long exp) {
    if (exp < 0) throw std::domain_error("negative exponent in a stage count");
    BigInt r = 1;
    for (long long i = 0; i < exp; ++i) r *= base;
    return r;
}

BigInt gauss_binom(long long n, long long k, const BigInt& q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= big_pow(q, n - i) - 1;
        den *= big_pow(q, i + 1) - 1;
    }
    return num / den;
}

}  // namespace

FieldCode SOChain::code(int i) const {
    if (i <= 0) return zero_field_code(n);
    if (i > static_cast<int>(codes.size())) throw std::out_of_range("chain index out of range");
    return codes[i - 1];
}

bool SOChain::one_in(int i) const {
    if (i <= 0 || i > static_cast<int>(codes.size())) return false;
    return contains_all_one(ResidueField::of(ring->spec()), codes[i - 1]);
}

SOChain make_chain(ChainRingPtr ring, int n, std::vector<FieldCode> codes, const std::vector<int>& upper_lambdas) {
    const ChainRingSpec& spec = ring->spec();
    const int top = top_chain_index(spec);
    if (static_cast<int>(codes.size()) != top) throw std::invalid_argument("chain needs s + theta codes");
    if (static_cast<int>(upper_lambdas.size()) != spec.e - top)
        throw std::invalid_argument("chain needs e - s - theta upper lambdas");
    std::vector<int> lambdas;
    int prev = 0;
    for (const auto& c : codes) {
        if (c.n != n) throw std::invalid_argument("chain code length mismatch");
        if (c.dim() < prev) throw std::invalid_argument("chain dimensions must be nondecreasing");
        lambdas.push_back(c.dim() - prev);
        prev = c.dim();
    }
    lambdas.insert(lambdas.end(), upper_lambdas.begin(), upper_lambdas.end());
    return SOChain{std::move(ring), n, std::move(codes), make_type(n, lambdas)};
}

std::vector<std::string> validate_chain(const SOChain& chain) {
    std::vector<std::string> issues;
    const ChainRingSpec& spec = chain.ring->spec();
    const ResidueField F = ResidueField::of(spec);
    const int top = top_chain_index(spec);
    if (static_cast<int>(chain.codes.size()) != top) {
        issues.push_back("chain must contain s + theta codes");
        return issues;
    }
    if (chain.type.levels() != spec.e) issues.push_back("type must have e entries");
    for (int i = 1; i <= top; ++i) {
        const FieldCode C = chain.code(i);
        if (C.n != chain.n) issues.push_back("C^(" + std::to_string(i) + ") has the wrong length");
        if (C.dim() != chain.type.Lambda(i))
            issues.push_back("C^(" + std::to_string(i) + ") dimension differs from Lambda_" + std::to_string(i));
        if (!is_self_orthogonal_field(F, C)) issues.push_back("C^(" + std::to_string(i) + ") is not self-orthogonal");
        if (i > 1 && !is_subcode(F, chain.code(i - 1), C))
            issues.push_back("C^(" + std::to_string(i - 1) + ") is not contained in C^(" + std::to_string(i) + ")");
    }
    if (!issues.empty()) return issues;
    const int de = spec.s_half - spec.kappa_1;
    if (de >= 1 && !is_doubly_even(F, chain.code(de)))
        issues.push_back("C^(" + std::to_string(de) + ") is not doubly even");
    if (2 * spec.kappa <= spec.e && chain.n % 8 == 4 && spec.m() % 2 == 1 &&
        chain.one_in(spec.s_half - spec.kappa + spec.theta_e))
        issues.push_back("the all-one vector lies in C^(" + std::to_string(spec.s_half - spec.kappa + spec.theta_e) +
                         ") while n = 4 mod 8 and m is odd");
    if (!chain.type.so_feasible()) issues.push_back("type violates the self-orthogonality inequalities");
    return issues;
}

std::vector<LabeledResidue> chain_adapted_basis(const SOChain& chain, int max_label) {
    std::vector<LabeledResidue> out;
    std::vector<bool> used(chain.n, false);
    const int top = std::min<int>(max_label, static_cast<int>(chain.codes.size()));
    for (int h = 1; h <= top; ++h) {
        const FieldCode& C = chain.codes[h - 1];
        for (int k = 0; k < C.dim(); ++k) {
            if (used[C.pivots[k]]) continue;
            out.push_back({h, C.basis[k]});
        }
        for (int p : C.pivots) used[p] = true;
    }
    return out;
}

std::string to_string(StageKind kind) {
    switch (kind) {
        case StageKind::Base: return "base";
        case StageKind::Lower: return "lower";
        case StageKind::Ramification: return "ramification";
        case StageKind::Middle: return "middle";
        case StageKind::Transition: return "transition";
        case StageKind::Final: return "final";
    }
    return "unknown";
}

std::vector<LiftStage> stage_plan(const ChainRingSpec& spec) {
    const int e = spec.e;
    const int kappa = spec.kappa;
    const int theta = spec.theta_e;
    std::vector<LiftStage> plan;
    const int base = 2 + theta;
    plan.push_back({base, StageKind::Base});
    for (int l = base + 2; l <= e; l += 2) {
        StageKind kind;
        if (2 * kappa <= e) {
            if (l <= kappa)
                kind = StageKind::Lower;
            else if (l == kappa + 1 + theta)
                kind = StageKind::Ramification;
            else if (l >= kappa + 3 && l <= e - kappa + 1)
                kind = StageKind::Middle;
            else if (l >= e - kappa + 2)
                kind = StageKind::Final;
            else
                throw std::logic_error("level " + std::to_string(l) + " is not covered by the construction");
        } else {
            if (l <= e - kappa + 1 - 2 * theta)
                kind = StageKind::Lower;
            else if (l <= kappa - floor_div2(2 * kappa - e) + 1)
                kind = StageKind::Transition;
            else
                kind = StageKind::Final;
        }
        plan.push_back({l, kind});
    }
    return plan;
}

std::vector<RingCode> base_lift(const SOChain& chain) {
    const auto issues = validate_chain(chain);
    if (!issues.empty()) throw std::invalid_argument("invalid chain: " + issues.front());
    const ChainRingSpec& spec = chain.ring->spec();
    std::vector<RingRow> rows;
    std::vector<int> old_len;
    for (const auto& lr : chain_adapted_basis(chain, top_chain_index(spec))) {
        RingRow row;
        row.block = 0;
        row.label = lr.label;
        row.w.assign(lr.residue.begin(), lr.residue.end());
        row.pivot = leading_position(lr.residue);
        rows.push_back(std::move(row));
        old_len.push_back(1);
    }
    return lift_rows(rows, old_len, chain, 2 + spec.theta_e);
}

std::vector<RingCode> lift_once(const RingCode& prev, const SOChain& chain, int level) {
    if (prev.level != level - 2) throw std::invalid_argument("lift_once expects a code two levels below");
    if (level > chain.ring->e()) throw std::invalid_argument("level exceeds e");
    std::vector<int> old_len;
    for (const auto& row : prev.rows) {
        if (row.pivot < 0) throw std::invalid_argument("lift_once expects rows with pivots");
        old_len.push_back(prev.level - row.block);
    }
    return lift_rows(prev.rows, old_len, chain, level);
}

RingCode construct_self_orthogonal(const SOChain& chain) {
    const auto plan = stage_plan(chain.ring->spec());
    std::function<bool(const RingCode&, std::size_t, RingCode&)> descend = [&](const RingCode& cur, std::size_t idx,
                                                                               RingCode& result) {
        if (idx == plan.size()) {
            result = cur;
            return true;
        }
        for (const auto& next : lift_once(cur, chain, plan[idx].level))
            if (descend(next, idx + 1, result)) return true;
        return false;
    };
    RingCode result;
    for (const auto& start : base_lift(chain))
        if (descend(start, 1, result)) return result;
    throw std::runtime_error("the chain admits no self-orthogonal lift");
}

BigInt stage_count_formula(const SOChain& chain, int level) {
    const ChainRingSpec& spec = chain.ring->spec();
    const auto plan = stage_plan(spec);
    StageKind kind = StageKind::Base;
    bool found = false;
    for (const auto& st : plan)
        if (st.level == level) {
            kind = st.kind;
            found = true;
        }
    if (!found) throw std::invalid_argument("level is not a stage of the construction");

    const TypeProfile& t = chain.type;
    const long long n = chain.n;
    const int e = spec.e;
    const int s = spec.s_half;
    const int kappa = spec.kappa;
    const int k1 = spec.kappa_1;
    const int theta = spec.theta_e;
    const BigInt q = BigInt(1) << spec.m();
    auto lam = [&](int i) -> long long { return (i < 1 || i > e + 1) ? 0 : t.lambda(i); };
    auto Lam = [&](int i) -> long long { return t.Lambda(i); };
    auto one = [&](int i) { return chain.one_in(i); };
    const bool obstructed = 2 * kappa <= e && n % 8 == 4 && spec.m() % 2 == 1 && one(s - kappa + theta);

    if (kind == StageKind::Base && theta == 0) {
        long long ex = 0;
        for (int i = 3; i <= s + 1; ++i) ex += lam(i) * Lam(i - 2);
        ex += Lam(s) * (n - Lam(s + 1)) - Lam(s - 1) - Lam(s) * (Lam(s) - 1) / 2;
        return big_pow(q, ex) * gauss_binom(lam(s + 1) + n - Lam(s + 1) - Lam(s), lam(s + 1), q);
    }
    if (kind == StageKind::Base) {
        long long ex = 0;
        for (int i = 3; i <= s + 2; ++i) ex += lam(i) * Lam(i - 2);
        for (int j = 4; j <= s + 2; ++j) ex += lam(j) * Lam(j - 3);
        ex += (Lam(s) + Lam(s + 1)) * (n - Lam(s + 2) - Lam(s)) + Lam(s) * Lam(s) - Lam(s - 1) - Lam(s - k1 - 1);
        ex += one(s - k1 - 1) ? 1 : 0;
        return big_pow(q, ex) * gauss_binom(lam(s + 2) + n - Lam(s + 2) - Lam(s), lam(s + 2), q);
    }
    if (kind == StageKind::Ramification) {
        if (obstructed) return 0;
        const int top = s + k1 + 1 + theta;  // gamma + l
        const int g1 = s - k1;               // gamma + 1
        long long ex = 0;
        for (int i = kappa + 1 + theta; i <= top; ++i) ex += lam(i) * Lam(i - kappa - theta);
        for (int j = kappa + 2 + theta; j <= top; ++j) ex += lam(j) * Lam(j - kappa - 1 - theta);
        ex += (Lam(top - 1) + Lam(g1)) * (n - Lam(top) - Lam(g1)) + Lam(g1) * Lam(g1) + Lam(g1);
        int eps = 0;
        if (theta == 0) {
            ex += -Lam(s - kappa) - 2 * Lam(s - kappa + 1) + (one(s - kappa + 1) ? 1 : 0);
            eps = one(s - kappa) ? 1 : 0;
        } else {
            ex += -Lam(s - kappa + 1) - Lam(s - kappa);
            eps = one(s - kappa + 1) ? 1 : 0;
        }
        return BigInt(1 << eps) * big_pow(q, ex) * gauss_binom(lam(top) + n - Lam(top) - Lam(g1), lam(top), q);
    }
    if (obstructed) return 0;
    const int gamma = s - level / 2;
    const int top = gamma + level;
    const int g1 = gamma + 1;
    long long ex = 0;
    for (int i = level; i <= top; ++i) ex += lam(i) * Lam(i - level + 1);
    for (int j = level + 1; j <= top; ++j) ex += lam(j) * Lam(j - level);
    ex += (Lam(top - 1) + Lam(g1)) * (n - Lam(top) - Lam(g1)) + Lam(g1) * Lam(g1) + Lam(g1);
    const int fl = level / 2;
    switch (kind) {
        case StageKind::Lower:
            ex += -Lam(s - 2 * fl + 2) - Lam(s - 2 * fl + 1) - Lam(g1 - k1 - theta) + (one(g1 - k1 - theta) ? 1 : 0);
            break;
        case StageKind::Middle: ex += -Lam(g1 - k1) - Lam(gamma - k1); break;
        case StageKind::Transition: ex += -Lam(s - 2 * fl + 2) - Lam(s - 2 * fl + 1); break;
        default: break;
    }
    return big_pow(q, ex) * gauss_binom(lam(top) + n - Lam(top) - Lam(g1), lam(top), q);
}

SOChain extract_chain(const RingCode& De) {
    const ChainRingSpec& spec = De.R().spec();
    if (De.level != spec.e) throw std::invalid_argument("extract_chain expects a code over R_{e,m}");
    if (!is_self_orthogonal(De)) throw std::invalid_argument("extract_chain expects a self-orthogonal code");
    const RingCode S = standard_form(De);
    std::vector<FieldCode> codes;
    for (int i = 1; i <= top_chain_index(spec); ++i) codes.push_back(torsion_code(S, i));
    const TypeProfile t = S.type();
    std::vector<int> upper(t.lambdas.begin() + top_chain_index(spec), t.lambdas.end());
    return make_chain(De.ring, De.n, std::move(codes), upper);
}

}  // namespace chaincodes
