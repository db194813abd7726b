#include <doctest.h>

#include <random>

#include "chaincodes/enumeration.hpp"
#include "chaincodes/lifting.hpp"
#include "chaincodes/oracle.hpp"

using namespace chaincodes;

namespace {

constexpr int kCases = 1000;

ChainRingPtr ring(const char* name) { return make_chain_ring(preset_ring(name)); }

/// Random code over R_{e,m} spanned by up to n + 1 random vectors, each scaled by a random power of u.
RingCode random_code(std::mt19937_64& rng, const ChainRingPtr& R, int n) {
    std::uniform_int_distribution<int> rows(0, n + 1);
    std::uniform_int_distribution<ChainRing::Elem> entry(0, R->size() - 1);
    std::uniform_int_distribution<int> shift(0, R->e());
    std::vector<RingVector> gens(rows(rng));
    for (auto& g : gens) {
        const int k = shift(rng);
        g.resize(n);
        for (auto& x : g) x = R->shift_up(entry(rng), k);
    }
    return make_ring_code(R, R->e(), n, gens);
}

/// Every self-orthogonal code over the ring of length n, over all types.
std::vector<RingCode> all_so_codes(const ChainRingPtr& R, int n) {
    std::vector<RingCode> out;
    for (const auto& t : all_types(R->e(), n)) {
        if (!t.so_feasible()) continue;
        for (auto& d : brute_force_so_codes(R, t)) out.push_back(std::move(d));
    }
    return out;
}

const std::vector<RingCode>& so_corpus() {
    static const std::vector<RingCode> corpus = [] {
        std::vector<RingCode> all;
        for (const auto& [name, n] : std::vector<std::pair<const char*, int>>{{"R4,1", 3}, {"R5,1", 3}, {"R6,2", 2}}) {
            for (auto& d : all_so_codes(ring(name), n)) all.push_back(std::move(d));
        }
        return all;
    }();
    return corpus;
}

const std::vector<ChainRingPtr>& small_rings() {
    static const std::vector<ChainRingPtr> rings{ring("R4,1"), ring("R5,1"), ring("R6,2")};
    return rings;
}

}  // namespace

TEST_CASE("dual type formula") {
    std::mt19937_64 rng(11);
    for (int c = 0; c < kCases; ++c) {
        const auto& R = small_rings()[c % 3];
        const RingCode d = random_code(rng, R, 1 + c % 3);
        REQUIRE(dual_code(d).type() == dual_type(d.type()));
    }
}

TEST_CASE("code size is the product of torsion code sizes") {
    std::mt19937_64 rng(12);
    for (int c = 0; c < kCases; ++c) {
        const auto& R = small_rings()[c % 3];
        const RingCode d = random_code(rng, R, 1 + c % 3);
        int dims = 0;
        for (int i = 1; i <= R->e(); ++i) dims += torsion_code(d, i).dim();
        REQUIRE(d.size_exponent() == dims);
        if (R->m() * dims <= 20) REQUIRE(enumerate_codewords(d).size() == (std::size_t{1} << (R->m() * dims)));
    }
}

TEST_CASE("torsion codes are nested and dual to those of the dual code") {
    std::mt19937_64 rng(13);
    for (int c = 0; c < kCases; ++c) {
        const auto& R = small_rings()[c % 3];
        const ResidueField F = ResidueField::of(*R);
        const RingCode d = random_code(rng, R, 1 + c % 3);
        const RingCode dd = dual_code(d);
        const int e = R->e();
        for (int i = 1; i <= e; ++i) {
            REQUIRE(torsion_code(d, i).dim() == d.type().Lambda(i));
            if (i < e) REQUIRE(is_subcode(F, torsion_code(d, i), torsion_code(d, i + 1)));
            REQUIRE(torsion_code(dd, i) == dual_code_field(F, torsion_code(d, e - i + 1)));
        }
        if (is_self_orthogonal(d))
            for (int i = 1; i <= e; ++i) REQUIRE(is_subcode(F, torsion_code(d, i), torsion_code(dd, i)));
    }
}

TEST_CASE("dual of the dual is the code") {
    std::mt19937_64 rng(14);
    for (int c = 0; c < kCases; ++c) {
        const auto& R = small_rings()[c % 3];
        const RingCode d = random_code(rng, R, 1 + c % 3);
        REQUIRE(same_code(dual_code(dual_code(d)), d));
        if (c % 10 == 0 && R->m() * R->e() * d.n <= 20) REQUIRE(same_code(dual_code(d), dual_code_exhaustive(d)));
    }
}

TEST_CASE("truncations of self-orthogonal codes are self-orthogonal with property (P)") {
    int cases = 0;
    for (const auto& d : so_corpus()) {
        for (const auto& stage : stage_plan(d.R().spec())) {
            const RingCode t = truncate_code(d, stage.level);
            REQUIRE(t.level == stage.level);
            REQUIRE(is_self_orthogonal(t));
            REQUIRE(satisfies_property_P(t));
            ++cases;
        }
    }
    CHECK(cases >= kCases);
}

TEST_CASE("extracted chains are valid") {
    int cases = 0;
    for (const auto& d : so_corpus()) {
        const SOChain ch = extract_chain(d);
        REQUIRE(validate_chain(ch).empty());
        REQUIRE(ch.type == d.type());
        ++cases;
    }
    CHECK(cases >= kCases);
}

TEST_CASE("doubly even basis test agrees with the exhaustive test") {
    std::mt19937_64 rng(15);
    const std::vector<FieldVector> hamming{{1, 1, 1, 1, 0, 0, 0, 0},
                                           {0, 0, 1, 1, 1, 1, 0, 0},
                                           {0, 0, 0, 0, 1, 1, 1, 1},
                                           {0, 1, 0, 1, 0, 1, 0, 1}};
    const std::vector<FieldVector> pairs{{1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 1, 1}};
    const std::vector<ChainRingPtr> rings{ring("R4,1"), ring("R6,2"), ring("R8,2")};
    int doubly_even = 0;
    for (int c = 0; c < kCases; ++c) {
        const ChainRingPtr& R = rings[c % 3];
        const ResidueField F = ResidueField::of(*R);
        std::uniform_int_distribution<ResidueElem> coef(0, F.q() - 1);
        const auto& base = (c / 3) % 2 == 0 ? hamming : pairs;
        std::vector<FieldVector> gens(1 + (c / 6) % 4, FieldVector(8, 0));
        for (auto& g : gens)
            for (const auto& b : base) {
                const ResidueElem a = coef(rng);
                for (int j = 0; j < 8; ++j) g[j] = F.add(g[j], F.mul(a, b[j]));
            }
        const FieldCode C = make_field_code(F, 8, gens);
        REQUIRE(is_self_orthogonal_field(F, C));
        const bool basis = is_doubly_even(F, C);
        REQUIRE(basis == is_doubly_even_exhaustive(*R, C));
        doubly_even += basis;
    }
    CHECK(doubly_even > 0);
    CHECK(doubly_even < kCases);
}

TEST_CASE("stage lifts agree with the exhaustive stage filter") {
    int cases = 0;
    for (const char* name : {"R4,1", "R5,1", "R6,2", "CR(2^3,1;3,1;1)", "CR(2^2,1;5,1;1)", "CR(2^2,1;3,3;1)"}) {
        const auto R = make_chain_ring(name[0] == 'R' ? preset_ring(name) : parse_chain_ring(name));
        const auto plan = stage_plan(R->spec());
        const int max_n = R->m() == 1 ? 3 : 2;
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& t : all_types(R->e(), n)) {
                if (!t.so_feasible()) continue;
                for_each_valid_chain(R, t, [&](const SOChain& ch) {
                    const auto base = base_lift(ch);
                    REQUIRE(BigInt(base.size()) == brute_force_lift_count(nullptr, ch, plan.front().level));
                    REQUIRE(BigInt(base.size()) == stage_count_formula(ch, plan.front().level));
                    ++cases;
                    std::vector<RingCode> current = base;
                    for (std::size_t k = 1; k < plan.size(); ++k) {
                        const int level = plan[k].level;
                        std::vector<RingCode> next;
                        for (const auto& d : current) {
                            auto lifts = lift_once(d, ch, level);
                            REQUIRE(BigInt(lifts.size()) == brute_force_lift_count(&d, ch, level));
                            ++cases;
                            for (auto& x : lifts) next.push_back(std::move(x));
                        }
                        current = std::move(next);
                    }
                });
            }
        }
    }
    CHECK(cases >= kCases);
}
