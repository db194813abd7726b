#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "chaincodes/enumeration.hpp"
#include "chaincodes/lifting.hpp"
#include "chaincodes/oracle.hpp"

using namespace chaincodes;

namespace {

ChainRingPtr ring(const char* name) { return make_chain_ring(preset_ring(name)); }

/// Chain with C^(i) = <1...1> for every i, over the given ring and length.
SOChain all_one_chain(const ChainRingPtr& R, int n) {
    const ResidueField F = ResidueField::of(*R);
    const int depth = R->spec().s_half + R->spec().theta_e;
    const FieldCode ones = make_field_code(F, n, {FieldVector(n, 1)});
    return make_chain(R, n, std::vector<FieldCode>(depth, ones), std::vector<int>(R->e() - depth, 0));
}

SOChain zero_chain(const ChainRingPtr& R, int n) {
    const int depth = R->spec().s_half + R->spec().theta_e;
    return make_chain(R, n, std::vector<FieldCode>(depth, zero_field_code(n)), std::vector<int>(R->e() - depth, 0));
}

bool has_issue(const std::vector<std::string>& issues, const std::string& needle) {
    for (const auto& s : issues)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("chain validation") {
    const auto r41 = ring("R4,1");
    const auto r82 = ring("R8,2");
    CHECK(validate_chain(zero_chain(r41, 3)).empty());
    const ResidueField F = ResidueField::of(*r41);
    const FieldCode ones2 = make_field_code(F, 2, {{1, 1}});
    const SOChain not_de = make_chain(r41, 2, {ones2, ones2}, {0, 0});
    CHECK(has_issue(validate_chain(not_de), "doubly even"));
    CHECK(validate_chain(all_one_chain(r82, 4)).empty());
    const SOChain bad_nesting = make_chain(r41, 3, {make_field_code(F, 3, {{1, 1, 0}}), make_field_code(F, 3, {{0, 1, 1}})}, {0, 0});
    CHECK(has_issue(validate_chain(bad_nesting), "contained"));
}

TEST_CASE("stage plans") {
    auto levels = [](const char* name) {
        std::vector<int> out;
        for (const auto& st : stage_plan(preset_ring(name))) out.push_back(st.level);
        return out;
    };
    CHECK(levels("R4,1") == std::vector<int>{2, 4});
    CHECK(levels("R5,1") == std::vector<int>{3, 5});
    CHECK(levels("R6,2") == std::vector<int>{2, 4, 6});
    CHECK(levels("R8,2") == std::vector<int>{2, 4, 6, 8});
    const auto plan = stage_plan(preset_ring("R8,2"));
    CHECK(plan.front().kind == StageKind::Base);
    CHECK(plan.back().kind == StageKind::Final);
}

TEST_CASE("base lifts") {
    const auto r82 = ring("R8,2");
    const SOChain ex = all_one_chain(r82, 4);
    CHECK(base_lift(ex).size() == 16);
    CHECK(stage_count_formula(ex, 2) == 16);

    const auto r41 = ring("R4,1");
    const auto zero = base_lift(zero_chain(r41, 3));
    REQUIRE(zero.size() == 1);
    CHECK(zero.front().rows.empty());
    CHECK(stage_count_formula(zero_chain(r41, 3), 2) == 1);

    const ResidueField F = ResidueField::of(*r41);
    const SOChain c = make_chain(r41, 3, {zero_field_code(3), make_field_code(F, 3, {{1, 1, 0}})}, {0, 0});
    REQUIRE(validate_chain(c).empty());
    const auto lifts = base_lift(c);
    CHECK(BigInt(lifts.size()) == stage_count_formula(c, 2));
    CHECK(BigInt(lifts.size()) == brute_force_lift_count(nullptr, c, 2));
    CHECK_THROWS_AS(base_lift(make_chain(r41, 2, {make_field_code(F, 2, {{1, 1}}), make_field_code(F, 2, {{1, 1}})}, {0, 0})),
                    std::invalid_argument);
}

TEST_CASE("stage lifts from the zero base of the all-one chain") {
    const auto r82 = ring("R8,2");
    const SOChain ex = all_one_chain(r82, 4);
    const auto base = base_lift(ex);
    const auto plain = std::find_if(base.begin(), base.end(), [](const RingCode& d) {
        return d.rows.size() == 1 && d.rows.front().w == RingVector{1, 1, 1, 1};
    });
    REQUIRE(plain != base.end());
    const auto l4 = lift_once(*plain, ex, 4);
    CHECK(l4.size() == 16 * 32);
    CHECK(stage_count_formula(ex, 4) == 16 * 32);
    const auto l6 = lift_once(l4.front(), ex, 6);
    CHECK(l6.size() == 1024);
    CHECK(stage_count_formula(ex, 6) == 1024);
    const auto l8 = lift_once(l6.front(), ex, 8);
    CHECK(l8.size() == 4096);
    for (const auto& d : l8) REQUIRE(is_self_orthogonal(d));
}

TEST_CASE("all-one chain stage four depends on the chosen base lift") {
    const auto r82 = ring("R8,2");
    const ChainRing& R = *r82;
    const SOChain ex = all_one_chain(r82, 4);
    // Direct count: [1 1 1 1] + u[0 a1 b1 c1] + u^2[0 a2 b2 c2] + u^3[0 a3 b3 c3] with G G^t = 0 mod u^7.
    long direct = 0;
    for (std::uint32_t x = 0; x < (1u << 18); ++x) {
        ChainRing::Elem acc = 0;
        for (int c = 0; c < 4; ++c) {
            UAdicCoords d{1, 0, 0, 0};
            if (c > 0)
                for (int k = 0; k < 3; ++k) d[k + 1] = (x >> (6 * k + 2 * (c - 1))) & 3;
            const auto v = R.from_digits(d);
            acc = R.add(acc, R.mul(v, v));
        }
        direct += R.truncate(acc, 7) == 0;
    }
    long lifted = 0;
    std::size_t empty = 0;
    for (const auto& b : base_lift(ex)) {
        const auto l4 = lift_once(b, ex, 4);
        lifted += static_cast<long>(l4.size());
        empty += l4.empty();
    }
    CHECK(lifted == direct);
    CHECK(lifted == 2048);
    CHECK(empty == 9);
}

TEST_CASE("zero chain lifts uniquely at every stage") {
    const auto r82 = ring("R8,2");
    const SOChain z = zero_chain(r82, 3);
    auto cur = base_lift(z);
    REQUIRE(cur.size() == 1);
    for (int level = 4; level <= 8; level += 2) {
        cur = lift_once(cur.front(), z, level);
        REQUIRE(cur.size() == 1);
        CHECK(stage_count_formula(z, level) == 1);
    }
    CHECK(cur.front().rows.empty());
}

TEST_CASE("obstructed chains have no ramification lift") {
    const auto R = make_chain_ring(parse_chain_ring("CR(2^3,1;3,2;1)"));
    const SOChain ch = all_one_chain(R, 4);
    CHECK(has_issue(validate_chain(ch), "all-one"));
    CHECK_THROWS_AS(base_lift(ch), std::invalid_argument);
    // Every base-stage candidate [1 1 1 1] + u[0 a b c] is self-orthogonal with (P) yet has no lift.
    int candidates = 0;
    for (ResidueElem a = 0; a < 2; ++a)
        for (ResidueElem b = 0; b < 2; ++b)
            for (ResidueElem c = 0; c < 2; ++c) {
                RingRow row;
                row.w = {1, R->from_digits({1, a}), R->from_digits({1, b}), R->from_digits({1, c})};
                row.pivot = 0;
                const RingCode d2{R, 2, 4, {row}};
                if (!is_self_orthogonal(d2) || !satisfies_property_P(d2)) continue;
                ++candidates;
                CHECK(lift_once(d2, ch, 4).empty());
                CHECK(brute_force_lift_count(&d2, ch, 4) == 0);
            }
    CHECK(candidates > 0);
}

TEST_CASE("construction") {
    const auto r82 = ring("R8,2");
    const SOChain ex = all_one_chain(r82, 4);
    const RingCode d = construct_self_orthogonal(ex);
    CHECK(d.level == 8);
    CHECK(is_self_orthogonal(d));
    CHECK(d.type() == make_type(4, {1, 0, 0, 0, 0, 0, 0, 0}));

    const auto r41 = ring("R4,1");
    CHECK(construct_self_orthogonal(zero_chain(r41, 2)).rows.empty());

    const ResidueField F = ResidueField::of(*r41);
    const SOChain sd = make_chain(r41, 2, {zero_field_code(2), make_field_code(F, 2, {{1, 1}})}, {0, 1});
    REQUIRE(validate_chain(sd).empty());
    const RingCode s = construct_self_orthogonal(sd);
    CHECK(is_self_dual(s));
    CHECK(count_sd_type(r41->spec(), make_type(2, {0, 1, 0, 1})) == 2);
    CHECK(brute_force_code_count(r41, make_type(2, {0, 1, 0, 1}), CodePredicate::SelfDual) == 2);
}

TEST_CASE("chain extraction") {
    const auto r41 = ring("R4,1");
    const SOChain z = extract_chain(zero_ring_code(r41, 4, 3));
    for (const auto& c : z.codes) CHECK(c.dim() == 0);
    const auto r82 = ring("R8,2");
    const SOChain ex = all_one_chain(r82, 4);
    const SOChain back = extract_chain(construct_self_orthogonal(ex));
    CHECK(back.codes == ex.codes);
    CHECK(back.type == ex.type);
    CHECK_THROWS_AS(extract_chain(make_ring_code(r41, 4, 2, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("stage kinds are named") {
    CHECK(to_string(StageKind::Base) == "base");
    CHECK(to_string(StageKind::Ramification) == "ramification");
}
