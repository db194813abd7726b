#include <doctest.h>

#include <stdexcept>

#include "chaincodes/galois_ring.hpp"

using namespace chaincodes;

namespace {

GaloisRingSpec gr4_2() { return make_galois_ring(2, 2, {1, 1, 1}); }

GaloisRingElem poly(const GaloisRingSpec& spec, std::vector<long long> c) { return gr_from_coeffs(spec, c); }

}  // namespace

TEST_CASE("galois ring addition") {
    const GaloisRingSpec g41 = make_galois_ring(2, 1);
    const GaloisRingSpec g42 = gr4_2();
    CHECK(gr_add(g42, gr_zero(g42), poly(g42, {0, 1})) == poly(g42, {0, 1}));
    CHECK(gr_is_zero(gr_add(g41, gr_from_int(g41, 2), gr_from_int(g41, 2))));
    CHECK(gr_add(g42, poly(g42, {0, 1}), poly(g42, {1, 1})) == poly(g42, {1, 2}));
}

TEST_CASE("galois ring multiplication") {
    const GaloisRingSpec g41 = make_galois_ring(2, 1);
    const GaloisRingSpec g42 = gr4_2();
    const auto a = poly(g42, {3, 2});
    CHECK(gr_mul(g42, gr_one(g42), a) == a);
    CHECK(gr_is_zero(gr_mul(g41, gr_from_int(g41, 2), gr_from_int(g41, 2))));
    const auto x = poly(g42, {0, 1});
    CHECK(gr_mul(g42, x, gr_mul(g42, x, x)) == gr_one(g42));
}

TEST_CASE("galois ring inverses") {
    const GaloisRingSpec g41 = make_galois_ring(2, 1);
    const GaloisRingSpec g42 = gr4_2();
    CHECK(gr_inv(g42, gr_one(g42)) == gr_one(g42));
    CHECK(gr_inv(g41, gr_from_int(g41, 3)) == gr_from_int(g41, 3));
    const auto x = poly(g42, {0, 1});
    CHECK(gr_inv(g42, x) == gr_mul(g42, x, x));
    CHECK_THROWS_AS(gr_inv(g42, gr_from_int(g42, 2)), std::domain_error);
}

TEST_CASE("teichmueller lifts and residues") {
    const GaloisRingSpec g42 = gr4_2();
    const GaloisRingSpec g82 = make_galois_ring(3, 2);
    CHECK(gr_is_zero(teichmuller_lift(g42, 0)));
    CHECK(teichmuller_lift(g42, 1) == gr_one(g42));
    CHECK(teichmuller_lift(g42, 0b10) == poly(g42, {0, 1}));
    for (ResidueElem r = 0; r < 4; ++r) {
        const auto t = teichmuller_lift(g82, r);
        CHECK(gr_pow(g82, t, 4) == t);
        CHECK(residue(g82, t) == r);
    }
    CHECK(residue(g42, gr_from_int(g42, 2)) == 0);
    CHECK(residue(g42, gr_from_int(g42, 3)) == 1);
    CHECK(residue(g42, poly(g42, {1, 2})) == 1);
}

TEST_CASE("specs are validated") {
    CHECK(default_modulus(1) == std::vector<std::uint32_t>{0, 1});
    CHECK(default_modulus(2) == std::vector<std::uint32_t>{1, 1, 1});
    CHECK_THROWS_AS(make_galois_ring(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_galois_ring(2, 2, {1, 1, 2}), std::invalid_argument);
    CHECK(gf2_irreducible(0b111));
    CHECK_FALSE(gf2_irreducible(0b101));
}

TEST_CASE("text formats round trip") {
    const GaloisRingSpec g42 = parse_galois_ring("GR(2^2,2;x^2+x+1)");
    CHECK(g42 == gr4_2());
    CHECK(parse_galois_ring("GR(2^3,2)") == make_galois_ring(3, 2));
    const auto a = poly(g42, {1, 2});
    CHECK(to_string(g42, a) == "1+2*x");
    CHECK(parse_galois_elem(g42, to_string(g42, a)) == a);
    CHECK(to_string(g42, gr_zero(g42)) == "0");
}
