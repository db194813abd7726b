#include "chaincodes/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chaincodes/field_codes.hpp"
#include "chaincodes/galois_ring.hpp"

#ifndef CHAINCODES_DATA_DIR
#define CHAINCODES_DATA_DIR "data"
#endif

namespace chaincodes {

namespace {

using Elem = ChainRing::Elem;
using WordSet = std::vector<PackedWord>;

class Budget {
public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}
    void tick(std::uint64_t k = 1) {
        used_ += k;
        if (used_ > limit_) throw std::length_error("exhaustive search exceeds the budget of " + std::to_string(limit_));
    }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// Shape of one standard-form row: w is 1 at the pivot and carries at most allowed_len[j] digits at column j.
struct RowShape {
    int block = 0;
    int pivot = 0;
    std::vector<int> allowed_len;
};

using CandidateFn = std::function<std::vector<RingVector>(const RowShape&)>;
using LeafFn = std::function<void(const std::vector<RingVector>& full_rows, const std::vector<int>& blocks)>;

Elem ring_dot(const ChainRing& R, const RingVector& a, const RingVector& b) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j) acc = R.add(acc, R.mul(a[j], b[j]));
    return acc;
}

/// Every w of the given shape.
std::vector<RingVector> all_candidates(const ChainRing& R, const RowShape& shape, Budget& budget) {
    const int n = static_cast<int>(shape.allowed_len.size());
    std::vector<Elem> range(n);
    for (int j = 0; j < n; ++j) range[j] = j == shape.pivot ? 1 : (1u << (R.m() * shape.allowed_len[j]));
    std::vector<RingVector> out;
    RingVector w(n, 0);
    while (true) {
        budget.tick();
        RingVector v = w;
        v[shape.pivot] = 1;
        out.push_back(std::move(v));
        int j = 0;
        while (j < n && ++w[j] >= range[j]) w[j++] = 0;
        if (j == n) break;
    }
    return out;
}

/// Enumerates every generator in standard-form shape for the given block sizes, pruning on
/// pairwise orthogonality modulo u^level, and calls leaf for each self-orthogonal generator.
void search_codes(const ChainRing& R, int level, int n, const std::vector<int>& block_counts, const CandidateFn& candidates,
                  Budget& budget, const LeafFn& leaf) {
    std::vector<int> pivot_block(n, -1);
    std::vector<std::pair<int, int>> rows;  // (block, pivot)

    auto run_placement = [&]() {
        std::vector<std::vector<RingVector>> cands(rows.size());
        std::vector<int> blocks(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            RowShape shape;
            shape.block = rows[r].first;
            shape.pivot = rows[r].second;
            blocks[r] = shape.block;
            shape.allowed_len.assign(n, level - shape.block);
            for (int j = 0; j < n; ++j) {
                if (j == shape.pivot) continue;
                if (pivot_block[j] >= 0 && pivot_block[j] <= shape.block) shape.allowed_len[j] = 0;
                if (pivot_block[j] > shape.block) shape.allowed_len[j] = pivot_block[j] - shape.block;
            }
            cands[r] = candidates(shape);
            if (cands[r].empty()) return;
        }
        std::vector<RingVector> full(rows.size());
        std::function<void(std::size_t)> rec = [&](std::size_t r) {
            if (r == rows.size()) {
                leaf(full, blocks);
                return;
            }
            for (const auto& w : cands[r]) {
                budget.tick();
                full[r].resize(n);
                for (int j = 0; j < n; ++j) full[r][j] = R.truncate(R.shift_up(w[j], blocks[r]), level);
                bool ok = true;
                for (std::size_t o = 0; o <= r && ok; ++o)
                    ok = R.truncate(ring_dot(R, full[r], full[o]), level) == 0;
                if (ok) rec(r + 1);
            }
        };
        rec(0);
    };

    std::function<void(int, int, int)> place = [&](int b, int k, int start) {
        if (b == level) {
            run_placement();
            return;
        }
        if (k == block_counts[b]) {
            place(b + 1, 0, 0);
            return;
        }
        for (int j = start; j < n; ++j) {
            if (pivot_block[j] >= 0) continue;
            pivot_block[j] = b;
            rows.emplace_back(b, j);
            place(b, k + 1, j + 1);
            rows.pop_back();
            pivot_block[j] = -1;
        }
    };
    place(0, 0, 0);
}

/// Sorted codeword set of the module generated by the full rows (row r taken with coefficients mod u^{level-block}).
WordSet span_words(const ChainRing& R, int level, const std::vector<RingVector>& full, const std::vector<int>& blocks) {
    if (full.empty()) return {PackedWord{0}};
    const std::size_t n = full[0].size();
    const int bits = R.m();
    std::vector<RingVector> words{RingVector(n, 0)};
    for (std::size_t r = 0; r < full.size(); ++r) {
        const Elem range = 1u << (bits * (level - blocks[r]));
        // multiples[c] = c * row, built from multiples[c with its lowest nonzero digit cleared].
        std::vector<RingVector> multiples(range, RingVector(n, 0));
        for (Elem c = 1; c < range; ++c) {
            const int i = R.valuation(c);
            const ResidueElem d = R.digit(c, i);
            const RingVector& rest = multiples[c & ~(Elem{R.q() - 1} << (bits * i))];
            for (std::size_t j = 0; j < n; ++j)
                multiples[c][j] = R.truncate(R.add(rest[j], R.shift_up(R.scale(d, full[r][j]), i)), level);
        }
        std::vector<RingVector> next;
        next.reserve(words.size() * range);
        for (const auto& w : words)
            for (const auto& m : multiples) {
                RingVector v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = R.truncate(R.add(w[j], m[j]), level);
                next.push_back(std::move(v));
            }
        words = std::move(next);
    }
    WordSet out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(pack_word(R, w));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> block_counts_of(const TypeProfile& type) { return type.lambdas; }

std::uint32_t residue_modulus_bits(int m) {
    std::uint32_t fbar = 0;
    const auto f = default_modulus(m);
    for (std::size_t i = 0; i < f.size(); ++i) fbar |= (f[i] & 1u) << i;
    return fbar;
}

bool field_self_orthogonal(const ResidueField& F, const FieldCode& C) {
    for (const auto& a : C.basis)
        for (const auto& b : C.basis)
            if (field_dot(F, a, b) != 0) return false;
    return true;
}

}  // namespace

std::uint64_t default_budget() {
    if (const char* env = std::getenv("CHAINCODES_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("CHAINCODES_BUDGET must be a nonnegative integer");
        }
    }
    return 1ull << 27;
}

std::vector<RingCode> brute_force_so_codes(ChainRingPtr ring, const TypeProfile& type, std::uint64_t budget) {
    if (!type.valid()) throw std::invalid_argument("invalid type");
    const ChainRing& R = *ring;
    const int level = type.levels();
    if (level < 1 || level > R.e()) throw std::invalid_argument("type length must lie in [1, e]");
    Budget b(budget);
    std::set<WordSet> seen;
    std::vector<RingCode> out;
    search_codes(
        R, level, type.n, block_counts_of(type), [&](const RowShape& s) { return all_candidates(R, s, b); }, b,
        [&](const std::vector<RingVector>& full, const std::vector<int>& blocks) {
            if (!seen.insert(span_words(R, level, full, blocks)).second) return;
            out.push_back(make_ring_code(ring, level, type.n, full));
        });
    return out;
}

BigInt brute_force_code_count(ChainRingPtr ring, const TypeProfile& type, CodePredicate predicate, std::uint64_t budget) {
    if (!type.valid()) throw std::invalid_argument("invalid type");
    const ChainRing& R = *ring;
    const int level = type.levels();
    if (level < 1 || level > R.e()) throw std::invalid_argument("type length must lie in [1, e]");
    if (predicate == CodePredicate::SelfDual) {
        long long exponent = 0;
        for (int i = 1; i <= level; ++i) exponent += static_cast<long long>(type.lambda(i)) * (level - i + 1);
        if (2 * exponent != static_cast<long long>(level) * type.n) return 0;
    }
    Budget b(budget);
    std::set<WordSet> seen;
    search_codes(
        R, level, type.n, block_counts_of(type), [&](const RowShape& s) { return all_candidates(R, s, b); }, b,
        [&](const std::vector<RingVector>& full, const std::vector<int>& blocks) {
            seen.insert(span_words(R, level, full, blocks));
        });
    return BigInt(seen.size());
}

BigInt brute_force_doubly_even_count(int n, int d, int m, bool with_one, std::uint64_t budget) {
    if (d < 0 || d > n) return 0;
    const ResidueField F(m, residue_modulus_bits(m));
    Budget b(budget);
    BigInt count = 0;
    for_each_subspace(F, n, d, [&](const FieldCode& C) {
        b.tick(std::uint64_t{1} << (m * d));
        if (!field_self_orthogonal(F, C)) return;
        if (!is_doubly_even_galois4(F, C)) return;
        if (contains_all_one(F, C) == with_one) ++count;
    });
    return count;
}

TypeProfile stage_type(const SOChain& chain, int level) {
    const ChainRingSpec& spec = chain.ring->spec();
    const int gamma = spec.s_half - level / 2;
    std::vector<int> counts(level, 0);
    for (int h = 1; h <= spec.e && h <= gamma + level; ++h) counts[std::max(0, h - gamma - 1)] += chain.type.lambda(h);
    return TypeProfile{chain.n, counts};
}

std::vector<RingCode> brute_force_lifts(const RingCode* prev, const SOChain& chain, int level, std::uint64_t budget) {
    for (const auto& issue : validate_chain(chain))
        if (issue.find("all-one vector") == std::string::npos) throw std::invalid_argument("invalid chain: " + issue);
    const ChainRing& R = *chain.ring;
    const ChainRingSpec& spec = R.spec();
    const int base = 2 + spec.theta_e;
    if (level < base || level > spec.e || (level - base) % 2 != 0) throw std::invalid_argument("level is not a stage");
    if ((prev == nullptr) != (level == base)) throw std::invalid_argument("prev must be given exactly above the base level");
    if (prev && prev->level != level - 2) throw std::invalid_argument("prev must lie two levels below");

    const ResidueField F = ResidueField::of(spec);
    const int n = chain.n;
    const int gamma = spec.s_half - level / 2;
    const int top = spec.s_half + spec.theta_e;
    const TypeProfile target = stage_type(chain, level);
    const int bits = R.m();

    WordSet prev_words;
    if (prev) prev_words = enumerate_codewords(*prev, budget);

    Budget b(budget);
    auto residue_ok = [&](int block, const RingVector& w) {
        const int idx = gamma + 1 + block;
        if (idx > top) return true;
        FieldVector res(n);
        for (int j = 0; j < n; ++j) res[j] = R.digit(w[j], 0);
        return field_code_contains(F, chain.code(idx), res);
    };
    auto candidates = [&](const RowShape& shape) {
        std::vector<RingVector> out;
        if (!prev) {
            for (auto& w : all_candidates(R, shape, b))
                if (residue_ok(shape.block, w)) out.push_back(std::move(w));
            return out;
        }
        // w mod u^{level-2} (block 0) or u^{block-1} w mod u^{level-2} must be a codeword of prev.
        const int shift = std::max(0, shape.block - 1);
        const int low = shape.block == 0 ? level - 2 : std::max(0, level - 1 - shape.block);
        const int top_digits = level - shape.block - low;
        for (PackedWord pw : prev_words) {
            const RingVector c = unpack_word(R, n, pw);
            RingVector w(n);
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                if (R.truncate(c[j], shift) != 0) ok = false;
                w[j] = R.shift_down(c[j], shift);
                if (w[j] >= (1u << (bits * std::min(low, shape.allowed_len[j])))) ok = false;
            }
            if (!ok) continue;
            if (low > 0 && w[shape.pivot] != 1) continue;
            // Free digits above position low.
            std::vector<std::pair<int, int>> slots;
            for (int j = 0; j < n; ++j)
                for (int d = low; d < low + top_digits; ++d)
                    if (j != shape.pivot && d < shape.allowed_len[j]) slots.emplace_back(j, d);
            RingVector base_w = w;
            if (low == 0) base_w[shape.pivot] = 1;
            std::vector<Elem> digit(slots.size(), 0);
            while (true) {
                b.tick();
                RingVector v = base_w;
                for (std::size_t k = 0; k < slots.size(); ++k) v[slots[k].first] |= digit[k] << (bits * slots[k].second);
                if (residue_ok(shape.block, v)) out.push_back(std::move(v));
                std::size_t k = 0;
                while (k < digit.size() && ++digit[k] == R.q()) digit[k++] = 0;
                if (k == digit.size()) break;
            }
        }
        return out;
    };

    const auto first_block = chain_adapted_basis(chain, gamma + 1);
    std::set<WordSet> seen;
    std::vector<RingCode> out;
    search_codes(R, level, n, block_counts_of(target), candidates, b,
                 [&](const std::vector<RingVector>& full, const std::vector<int>& blocks) {
                     RingCode code = make_ring_code(chain.ring, level, n, full);
                     if (!admits_property_P(code, first_block)) return;
                     WordSet words = span_words(R, level, full, blocks);
                     if (prev) {
                         std::set<PackedWord> trunc;
                         for (PackedWord pw : words) {
                             const RingVector y = unpack_word(R, n, pw);
                             bool divisible = true;
                             RingVector x(n);
                             for (int j = 0; j < n && divisible; ++j) {
                                 if (R.digit(y[j], 0) != 0) divisible = false;
                                 x[j] = R.truncate(R.shift_down(y[j], 1), level - 2);
                             }
                             if (divisible) trunc.insert(pack_word(R, x));
                         }
                         if (!std::equal(trunc.begin(), trunc.end(), prev_words.begin(), prev_words.end())) return;
                     }
                     if (seen.insert(std::move(words)).second) out.push_back(std::move(code));
                 });
    return out;
}

BigInt brute_force_lift_count(const RingCode* prev, const SOChain& chain, int level, std::uint64_t budget) {
    return BigInt(brute_force_lifts(prev, chain, level, budget).size());
}

void for_each_valid_chain(ChainRingPtr ring, const TypeProfile& type, const std::function<void(const SOChain&)>& visit) {
    const ChainRingSpec& spec = ring->spec();
    if (type.levels() != spec.e) throw std::invalid_argument("type must have e entries");
    const ResidueField F = ResidueField::of(spec);
    const int n = type.n;
    const int top = spec.s_half + spec.theta_e;
    const int de = spec.s_half - spec.kappa_1;
    const int obstruct = spec.s_half - spec.kappa + spec.theta_e;
    const bool check_obstruction = 2 * spec.kappa <= spec.e && n % 8 == 4 && spec.m() % 2 == 1;
    std::vector<int> upper(type.lambdas.begin() + top, type.lambdas.end());

    std::vector<std::vector<FieldCode>> by_dim(n + 1);
    for (int d = 0; d <= n; ++d)
        for_each_subspace(F, n, d, [&](const FieldCode& C) {
            if (field_self_orthogonal(F, C)) by_dim[d].push_back(C);
        });

    std::vector<FieldCode> codes;
    std::function<void(int)> rec = [&](int i) {
        if (i > top) {
            if (de >= 1 && !is_doubly_even_galois4(F, codes[de - 1])) return;
            if (check_obstruction && obstruct >= 1 && contains_all_one(F, codes[obstruct - 1])) return;
            visit(make_chain(ring, n, codes, upper));
            return;
        }
        for (const auto& C : by_dim[type.Lambda(i)]) {
            if (i > 1 && !is_subcode(F, codes.back(), C)) continue;
            codes.push_back(C);
            rec(i + 1);
            codes.pop_back();
        }
    };
    rec(1);
}

ChainSum brute_force_chain_sum(ChainRingPtr ring, const TypeProfile& type) {
    ChainSum sum;
    const ChainRingSpec& spec = ring->spec();
    const BigInt q = BigInt(1) << spec.m();
    for_each_valid_chain(ring, type, [&](const SOChain& chain) {
        ++sum.chains;
        const ChainFlags flags = chain_flags(chain);
        if (!flags.obstructed) {
            BigInt w = BigInt(1) << flags.epsilon;
            for (int i = 0; i < flags.mu; ++i) w *= q;
            sum.weighted += w;
        }
        sum.lifts += per_chain_lift_count(spec, type, flags);
    });
    return sum;
}

CountReport compare_counts(const std::string& ring_name, ChainRingPtr ring, const TypeProfile& type,
                           CodePredicate predicate, bool with_oracle, std::uint64_t budget) {
    const auto start = std::chrono::steady_clock::now();
    CountReport rep;
    rep.ring = ring_name;
    rep.type = type;
    rep.closed_form = predicate == CodePredicate::SelfOrthogonal ? count_so_type(ring->spec(), type)
                                                                 : count_sd_type(ring->spec(), type);
    if (with_oracle) {
        try {
            rep.brute_force = brute_force_code_count(ring, type, predicate, budget);
        } catch (const std::length_error& e) {
            rep.note = e.what();
        }
    }
    rep.match = !rep.brute_force || *rep.brute_force == rep.closed_form;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

GoldenTable load_golden_table(int id) {
    if (id < 1 || id > 4) throw std::invalid_argument("table id must lie in 1..4");
    const std::string path = std::string(CHAINCODES_DATA_DIR) + "/table" + std::to_string(id) + ".csv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    GoldenTable t;
    t.id = id;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream is(line.substr(1));
            std::string key, value;
            is >> key >> value;
            if (key == "ring:") t.ring = value;
            if (key == "n:") t.n = std::stoi(value);
            continue;
        }
        if (!header) {
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("malformed row in " + path + ": " + line);
        t.rows.emplace_back(parse_type(t.n, line.substr(0, comma)), BigInt(line.substr(comma + 1)));
    }
    if (t.ring.empty() || t.n <= 0) throw std::runtime_error("missing ring or n in " + path);
    return t;
}

std::vector<CountReport> reproduce_table(int id, bool with_oracle, std::optional<BigInt> oracle_max_count,
                                         std::uint64_t budget) {
    const GoldenTable t = load_golden_table(id);
    const ChainRingPtr ring = make_chain_ring(preset_ring(t.ring));
    std::vector<CountReport> out;
    for (const auto& [type, expected] : t.rows) {
        const bool oracle = with_oracle && (!oracle_max_count || expected <= *oracle_max_count);
        CountReport rep = compare_counts(t.ring, ring, type, CodePredicate::SelfOrthogonal, oracle, budget);
        rep.expected = expected;
        rep.match = rep.match && rep.closed_form == expected && (!rep.brute_force || *rep.brute_force == expected);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace chaincodes
