#include <doctest.h>

#include <stdexcept>

#include "chaincodes/enumeration.hpp"
#include "chaincodes/oracle.hpp"

using namespace chaincodes;

namespace {

ChainRingPtr ring(const char* name) { return make_chain_ring(preset_ring(name)); }

long count_chains(const ChainRingPtr& R, const TypeProfile& t, bool with_one) {
    const ChainRingSpec& spec = R->spec();
    long c = 0;
    for_each_valid_chain(R, t, [&](const SOChain& ch) { c += ch.one_in(spec.s_half - spec.kappa_1) == with_one; });
    return c;
}

}  // namespace

TEST_CASE("gaussian binomials") {
    for (int n = 0; n <= 6; ++n) CHECK(gaussian_binomial(n, 0, 2) == 1);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 4) == 357);
    CHECK(gaussian_binomial(3, 4, 2) == 0);
    CHECK(gaussian_binomial(3, -1, 2) == 0);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(gaussian_binomial(n, k, 2) == gaussian_binomial(n - 1, k - 1, 2) + BigInt(1 << k) * gaussian_binomial(n - 1, k, 2));
}

TEST_CASE("doubly even code counts") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(sigma_doubly_even(n, 0, 1, false) == 1);
        CHECK(sigma_doubly_even(n, 0, 1, true) == 0);
    }
    CHECK(sigma_doubly_even(4, 1, 1, true) == 1);
    CHECK(sigma_doubly_even(3, 1, 1, false) == 0);
    CHECK(sigma_doubly_even(8, 4, 1, true) == 30);
    CHECK(sigma_doubly_even(8, 4, 1, false) == 0);
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int d = 0; 2 * d <= n; ++d)
                for (bool one : {false, true})
                    CHECK(sigma_doubly_even(n, d, m, one) == brute_force_doubly_even_count(n, d, m, one));
}

TEST_CASE("chain family counts") {
    const ChainRingSpec r41 = preset_ring("R4,1");
    CHECK(chain_family_count(ChainFamily::N, r41, make_type(3, {0, 0, 1, 0})) == 1);
    CHECK(chain_family_count(ChainFamily::Y, preset_ring("R8,2"), make_type(4, {0, 0, 1, 0, 0, 0, 0, 0}), 1) == 0);
    CHECK_THROWS_AS(chain_family_count(ChainFamily::Y, r41, make_type(4, {0, 0, 1, 0}), 1), std::invalid_argument);
    const auto R = ring("R4,1");
    for (const auto& t : {make_type(3, {0, 1, 0, 0}), make_type(3, {1, 0, 0, 0}), make_type(4, {0, 1, 0, 0}),
                          make_type(4, {0, 2, 0, 0}), make_type(6, {1, 1, 0, 0})})
        CHECK(chain_family_count(ChainFamily::N, r41, t) == count_chains(R, t, false));
}

TEST_CASE("printed coefficient of the N count is off for one case") {
    const ChainRingSpec r41 = preset_ring("R4,1");
    const TypeProfile t = make_type(6, {1, 1, 0, 0});
    CountOptions verbatim;
    verbatim.verbatim_n = true;
    CHECK(chain_family_count(ChainFamily::N, r41, t) == 105);
    CHECK(chain_family_count(ChainFamily::N, r41, t, 0, verbatim) == 87);
    CHECK(count_chains(ring("R4,1"), t, false) == 105);
}

TEST_CASE("weighted chain counts") {
    const ChainRingSpec r41 = preset_ring("R4,1");
    CHECK(b_theta(r41, make_type(3, {0, 0, 0, 0})) == 1);
    const TypeProfile t3 = make_type(3, {0, 1, 0, 0});
    CHECK(b_theta(r41, t3) == chain_family_count(ChainFamily::N, r41, t3));
    const TypeProfile t4 = make_type(4, {0, 1, 0, 0});
    const BigInt b = b_theta(r41, t4);
    CHECK(b > 0);
    CHECK(count_so_type(r41, t4) == 448);
}

TEST_CASE("per-chain lift counts") {
    const ChainRingSpec r82 = preset_ring("R8,2");
    CHECK(per_chain_lift_count(r82, make_type(4, {0, 0, 0, 0, 0, 0, 0, 0}), {}) == 1);
    const ChainFlags flags = {false, 1, 1};
    CHECK(per_chain_lift_count(r82, make_type(4, {1, 0, 0, 0, 0, 0, 0, 0}), flags) ==
          BigInt(16) * (16 * 32) * 1024 * 4096);
    CHECK_THROWS_AS(per_chain_lift_count(r82, make_type(4, {1, 0, 0, 0, 0, 0, 0, 0}), {false, 2, 0}),
                    std::invalid_argument);
}

TEST_CASE("type counts") {
    const ChainRingSpec r41 = preset_ring("R4,1");
    CHECK(count_so_type(r41, make_type(3, {0, 1, 0, 0})) == 48);
    CHECK(count_so_type(r41, make_type(3, {1, 0, 0, 0})) == 0);
    CHECK(count_so_type(r41, make_type(3, {0, 0, 1, 0})) == 28);
    CHECK(count_so_type(preset_ring("R6,2"), make_type(2, {0, 0, 1, 0, 0, 0})) == 64);
    CHECK(count_sd_type(r41, make_type(2, {0, 0, 2, 0})) == 1);
    CHECK(count_sd_type(r41, make_type(2, {0, 1, 0, 1})) == 2);
    CHECK(count_sd_type(r41, make_type(3, {0, 1, 0, 0})) == 0);
}

TEST_CASE("totals") {
    const ChainRingSpec r41 = preset_ring("R4,1");
    CHECK(total_counts(r41, 3).total_so == 291);
    CHECK(total_counts(r41, 2).total_sd == 3);
    const Totals one = total_counts(r41, 1);
    CHECK(one.total_so >= 1);
    CHECK(all_types(2, 1).size() == 3);
    CHECK(all_types(4, 0).size() == 1);
}
