#include <doctest.h>

#include <stdexcept>

#include "chaincodes/enumeration.hpp"
#include "chaincodes/field_codes.hpp"

using namespace chaincodes;

namespace {

ChainRingPtr ring(const char* name) { return make_chain_ring(preset_ring(name)); }

constexpr ResidueElem kXi = 0b10;

}  // namespace

TEST_CASE("bilinear form") {
    const auto r41 = ring("R4,1");
    const auto r82 = ring("R8,2");
    CHECK(bilinear_form(*r41, {1, 1}, {1, 1}) == 0);
    CHECK(bilinear_form(*r41, {1, 0}, {0, 1}) == 0);
    const ResidueField F = ResidueField::of(*r82);
    CHECK(bilinear_form(*r82, {kXi, 1}, {1, 1}) == F.mul(kXi, kXi));
    for (ResidueElem a = 0; a < 4; ++a)
        for (ResidueElem b = 0; b < 4; ++b)
            CHECK(bilinear_form(*r82, {a, b, 1}, {b, 1, a}) == field_dot(F, {a, b, 1}, {b, 1, a}));
}

TEST_CASE("dual codes") {
    const ResidueField F = ResidueField::of(preset_ring("R4,1"));
    CHECK(dual_code_field(F, zero_field_code(3)) == full_field_code(3));
    CHECK(dual_code_field(F, full_field_code(3)) == zero_field_code(3));
    const FieldCode ones = make_field_code(F, 4, {{1, 1, 1, 1}});
    const FieldCode even = make_field_code(F, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    CHECK(dual_code_field(F, ones) == even);
    CHECK(dual_code_field(F, even) == ones);
}

TEST_CASE("self-orthogonality over the residue field") {
    const ResidueField F2 = ResidueField::of(preset_ring("R8,2"));
    const ResidueField F1 = ResidueField::of(preset_ring("R4,1"));
    CHECK(is_self_orthogonal_field(F2, make_field_code(F2, 4, {{1, 1, 1, 1}})));
    CHECK_FALSE(is_self_orthogonal_field(F1, make_field_code(F1, 2, {{1, 0}})));
    CHECK(is_self_orthogonal_field(F1, zero_field_code(5)));
}

TEST_CASE("doubly even codes") {
    const auto r82 = ring("R8,2");
    const auto r41 = ring("R4,1");
    const ResidueField F2 = ResidueField::of(*r82);
    const ResidueField F1 = ResidueField::of(*r41);
    const FieldCode ones4 = make_field_code(F2, 4, {{1, 1, 1, 1}});
    CHECK(is_doubly_even(F2, ones4));
    CHECK(is_doubly_even_exhaustive(*r82, ones4));
    CHECK(is_doubly_even(F1, zero_field_code(3)));
    const FieldCode ones2 = make_field_code(F1, 2, {{1, 1}});
    CHECK_FALSE(is_doubly_even(F1, ones2));
    CHECK_FALSE(is_doubly_even_exhaustive(*r41, ones2));
    CHECK(elementary_e2(F1, {1, 1}) == 1);
    CHECK_THROWS_AS(is_doubly_even(F1, make_field_code(F1, 2, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("doubly even tests agree on every small self-orthogonal code") {
    const auto r41 = ring("R4,1");
    const auto r62 = ring("R6,2");
    for (const auto& R : {r41, r62}) {
        const ResidueField F = ResidueField::of(*R);
        for (int n = 1; n <= 4; ++n) {
            for (int d = 0; 2 * d <= n; ++d) {
                for_each_subspace(F, n, d, [&](const FieldCode& C) {
                    if (!is_self_orthogonal_field(F, C)) return;
                    const bool basis = is_doubly_even(F, C);
                    REQUIRE(basis == is_doubly_even_exhaustive(*R, C));
                    REQUIRE(basis == is_doubly_even_galois4(F, C));
                });
            }
        }
    }
}

TEST_CASE("all-one membership") {
    const ResidueField F = ResidueField::of(preset_ring("R4,1"));
    CHECK(contains_all_one(F, make_field_code(F, 4, {{1, 1, 1, 1}})));
    CHECK_FALSE(contains_all_one(F, zero_field_code(4)));
    CHECK_FALSE(contains_all_one(F, make_field_code(F, 3, {{1, 1, 0}, {0, 1, 1}})));
}

TEST_CASE("subspace enumeration counts match gaussian binomials") {
    for (int m : {1, 2}) {
        const ResidueField F(m, static_cast<std::uint32_t>(m == 1 ? 0b10 : 0b111));
        for (int n = 0; n <= 4; ++n) {
            for (int d = 0; d <= n; ++d) {
                long long count = 0;
                for_each_subspace(F, n, d, [&](const FieldCode& C) {
                    CHECK(C.dim() == d);
                    ++count;
                });
                CHECK(BigInt(count) == gaussian_binomial(n, d, BigInt(F.q())));
            }
        }
    }
}

TEST_CASE("subcodes and sums") {
    const ResidueField F = ResidueField::of(preset_ring("R4,1"));
    const FieldCode a = make_field_code(F, 3, {{1, 1, 0}});
    const FieldCode b = make_field_code(F, 3, {{0, 1, 1}});
    const FieldCode sum = field_code_sum(F, a, b);
    CHECK(sum.dim() == 2);
    CHECK(is_subcode(F, a, sum));
    CHECK_FALSE(is_subcode(F, sum, a));
    CHECK(field_code_contains(F, sum, {1, 0, 1}));
    CHECK(field_codewords(F, sum).size() == 4);
    CHECK(format_field_vector({1, 0, 3}) == "(1,0,3)");
}
