#include <doctest.h>

#include <map>
#include <stdexcept>

#include "chaincodes/chain_ring.hpp"

using namespace chaincodes;

namespace {

UAdicCoords coords(std::initializer_list<ResidueElem> c) { return UAdicCoords(c); }

}  // namespace

TEST_CASE("preset rings have the expected invariants") {
    const ChainRingSpec r41 = preset_ring("R4,1");
    CHECK(r41.e == 4);
    CHECK(r41.s_half == 2);
    CHECK(r41.theta_e == 0);
    CHECK(r41.kappa_1 == 1);
    CHECK(r41.eta == std::vector<ResidueElem>{1});

    const ChainRingSpec r82 = preset_ring("R8,2");
    CHECK(r82.e == 8);
    CHECK(r82.eta == std::vector<ResidueElem>{1, 0, 0, 1, 0});

    CHECK(preset_ring("R5,1").e == 5);
    CHECK(preset_ring("R6,2").e == 6);
    CHECK(preset_names().size() == 4);
    CHECK_THROWS_AS(preset_ring("R9,9"), std::invalid_argument);
}

TEST_CASE("ring construction is validated") {
    const GaloisRingSpec g41 = make_galois_ring(2, 1);
    CHECK_THROWS_AS(make_ring(g41, 3, 4, std::vector<long long>{1}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring(g41, 4, 1, std::vector<long long>{1}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring(g41, 3, 1, std::vector<long long>{2}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring(make_galois_ring(1, 1), 3, 1, std::vector<long long>{1}), std::invalid_argument);
    const ChainRingSpec parsed = parse_chain_ring("CR(2^2,1;3,1;1)");
    CHECK(parsed.e == 4);
    CHECK(parse_chain_ring("CR(2^3,2;3,2;1)").e == 8);
    CHECK_THROWS_AS(parse_chain_ring("CR(2^2,1;3)"), std::invalid_argument);
}

TEST_CASE("element arithmetic") {
    const ChainRingSpec r41 = preset_ring("R4,1");
    const ChainRingSpec r82 = preset_ring("R8,2");
    CHECK(cr_is_zero(cr_mul(r41, cr_u_power(r41, 2), cr_u_power(r41, 2))));
    CHECK(cr_add(r82, cr_u_power(r82, 3), cr_u_power(r82, 6)) == cr_from_int(r82, 2));
    CHECK(cr_is_zero(cr_mul(r41, cr_from_int(r41, 2), cr_u_power(r41, 1))));
    const auto unit = cr_add(r82, cr_one(r82), cr_u_power(r82, 1));
    CHECK(cr_mul(r82, unit, cr_inv(r82, unit)) == cr_one(r82));
    CHECK_THROWS_AS(cr_inv(r82, cr_u_power(r82, 1)), std::domain_error);
}

TEST_CASE("valuations and u-adic coordinates") {
    for (const auto& name : preset_names()) {
        const ChainRingSpec spec = preset_ring(name);
        CHECK(u_valuation(spec, cr_from_int(spec, 2)) == 3);
        CHECK(u_valuation(spec, cr_zero(spec)) == spec.e);
        CHECK(to_u_adic(spec, cr_zero(spec)) == UAdicCoords(spec.e, 0));
    }
    const ChainRingSpec r41 = preset_ring("R4,1");
    const ChainRingSpec r82 = preset_ring("R8,2");
    CHECK(to_u_adic(r41, cr_from_int(r41, 3)) == coords({1, 0, 0, 1}));
    CHECK(to_u_adic(r82, cr_from_int(r82, 2)) == coords({0, 0, 0, 1, 0, 0, 1, 0}));
    CHECK(from_u_adic(r41, coords({1, 0, 0, 1})) == cr_from_int(r41, 3));
}

TEST_CASE("truncation") {
    const ChainRingSpec r82 = preset_ring("R8,2");
    const auto two = cr_from_int(r82, 2);
    CHECK(truncate_elem(r82, two, 7) == cr_add(r82, cr_u_power(r82, 3), cr_u_power(r82, 6)));
    CHECK(cr_is_zero(truncate_elem(r82, two, 3)));
    CHECK(truncate_elem(r82, two, 8) == two);
    CHECK_THROWS_AS(truncate_elem(r82, two, 0), std::invalid_argument);
}

TEST_CASE("nilpotency and ideal sizes") {
    for (const auto& name : preset_names()) {
        const ChainRingSpec spec = preset_ring(name);
        CHECK(cr_is_zero(cr_u_power(spec, spec.e)));
        CHECK_FALSE(cr_is_zero(cr_u_power(spec, spec.e - 1)));
        const ChainRing R(spec);
        std::map<int, std::uint32_t> at_least;
        for (ChainRing::Elem a = 0; a < R.size(); ++a) {
            const int v = u_valuation(spec, R.to_elem(a));
            for (int i = 0; i <= v; ++i) ++at_least[i];
        }
        for (int i = 0; i <= spec.e; ++i) CHECK(at_least[i] == (1u << (spec.m() * (spec.e - i))));
    }
}

TEST_CASE("table arithmetic agrees with polynomial arithmetic") {
    for (const auto& name : {"R4,1", "R5,1", "R6,2"}) {
        const ChainRingSpec spec = preset_ring(name);
        const ChainRing R(spec);
        for (ChainRing::Elem a = 0; a < R.size(); a += 3) {
            CHECK(R.from_elem(R.to_elem(a)) == a);
            for (ChainRing::Elem b = 0; b < R.size(); b += 7) {
                const auto x = R.to_elem(a);
                const auto y = R.to_elem(b);
                REQUIRE(R.to_elem(R.mul(a, b)) == cr_mul(spec, x, y));
                REQUIRE(R.to_elem(R.add(a, b)) == cr_add(spec, x, y));
            }
        }
    }
}

TEST_CASE("teichmueller constants form a field under the residue sum") {
    for (const auto& name : {"R4,1", "R6,2"}) {
        const ChainRingSpec spec = preset_ring(name);
        const ChainRing R(spec);
        const std::uint32_t q = R.q();
        for (ResidueElem a = 0; a < q; ++a) {
            for (ResidueElem b = 0; b < q; ++b) {
                const ResidueElem sum = R.digit(R.add(a, b), 0);
                CHECK(sum == (a ^ b));
                if (a != 0) CHECK(R.fmul(a, R.finv(a)) == 1);
                for (ResidueElem c = 0; c < q; ++c) CHECK(R.fmul(a, R.fmul(b, c)) == R.fmul(R.fmul(a, b), c));
            }
        }
    }
}

TEST_CASE("quotient maps commute with multiplication") {
    const ChainRingSpec spec = preset_ring("R5,1");
    const ChainRing R(spec);
    for (int level = 1; level <= spec.e; ++level) {
        for (ChainRing::Elem a = 0; a < R.size(); ++a) {
            for (ChainRing::Elem b = 0; b < R.size(); ++b) {
                REQUIRE(R.truncate(R.mul(a, b), level) ==
                        R.truncate(R.mul(R.truncate(a, level), R.truncate(b, level)), level));
            }
        }
    }
}
