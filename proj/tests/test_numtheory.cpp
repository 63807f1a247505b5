#include <doctest.h>

#include <cmath>
#include <numeric>

#include "aos/numtheory.hpp"

using namespace aos;

TEST_CASE("sieve values") {
    const SieveTable t = build_sieve(100);
    CHECK(t.limit == 100);
    CHECK(t.mangoldt[8] == std::log(2.0));
    CHECK(t.mangoldt[9] == std::log(3.0));
    CHECK(t.mangoldt[97] == std::log(97.0));
    CHECK(t.mangoldt[1] == 0.0);
    CHECK(t.mangoldt[12] == 0.0);
    CHECK(t.mobius[1] == 1);
    CHECK(t.mobius[30] == -1);
    CHECK(t.mobius[12] == 0);
    CHECK(t.mobius[35] == 1);
    CHECK(t.liouville[12] == -1);
    CHECK(t.liouville[36] == 1);
    CHECK(t.spf[91] == 7);
    CHECK(t.spf[1] == 1);
    CHECK(t.primes.size() == 25);
    CHECK(t.prime_powers.front() == 2);
    for (std::size_t i = 1; i < t.prime_powers.size(); ++i) CHECK(t.prime_powers[i] > t.prime_powers[i - 1]);
    CHECK_THROWS_AS(build_sieve(1), Error);
    CHECK_THROWS_AS(build_sieve(kSieveMax + 1), Error);
}

TEST_CASE("prime counts") {
    const SieveTable t = build_sieve(1000000);
    CHECK(t.primes.size() == 78498);
    CHECK(shared_sieve().limit == kSharedSieveLimit);
    CHECK(shared_sieve().primes.size() == 148933);
}

TEST_CASE("divisor-sum identities") {
    const SieveTable t = build_sieve(5000);
    for (int n = 1; n <= 5000; ++n) {
        int mu_sum = 0, lio_sum = 0;
        double lam_sum = 0.0;
        for (int d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            for (int e : {d, n / d}) {
                mu_sum += t.mobius[e];
                lio_sum += t.liouville[e];
                lam_sum += t.mangoldt[e];
                if (d * d == n) break;
            }
        }
        const int r = static_cast<int>(std::lround(std::sqrt(double(n))));
        CHECK(mu_sum == (n == 1 ? 1 : 0));
        CHECK(lio_sum == (r * r == n ? 1 : 0));
        CHECK(std::abs(lam_sum - std::log(double(n))) <= 1e-12);
    }
}

TEST_CASE("character counts and tables") {
    for (int q : {1, 3, 4, 5, 8, 12}) {
        int phi = 0;
        for (int a = 1; a <= q; ++a) phi += (std::gcd(a, q) == 1);
        CHECK(character_count(q) == phi);
    }
    const DirichletCharacter chi4 = character(4, 1);
    CHECK(chi4(1) == cplx(1.0));
    CHECK(chi4(3) == cplx(-1.0));
    CHECK(chi4(2) == cplx(0.0));
    CHECK(chi4(7) == cplx(-1.0));
    CHECK(character(5, 0).principal);
    CHECK_THROWS_AS(character(7, 0), Error);
    CHECK_THROWS_AS(character(4, 2), Error);
}

TEST_CASE("characters are completely multiplicative and orthogonal") {
    for (int q : {3, 4, 5, 8, 12})
        for (int i = 0; i < character_count(q); ++i) {
            const DirichletCharacter chi = character(q, i);
            cplx s = 0.0;
            for (int a = 0; a < q; ++a) {
                s += chi(a);
                if (std::gcd(a, q) != 1) CHECK(chi(a) == cplx(0.0));
                for (int b = 0; b < q; ++b) CHECK(std::abs(chi(a * b) - chi(a) * chi(b)) == 0.0);
            }
            CHECK(std::abs(s) == (chi.principal ? double(character_count(q)) : 0.0));
            for (int j = 0; j < character_count(q); ++j) {
                const DirichletCharacter psi = character(q, j);
                cplx ip = 0.0;
                for (int a = 0; a < q; ++a) ip += chi(a) * std::conj(psi(a));
                CHECK(std::abs(ip - (i == j ? double(character_count(q)) : 0.0)) < 1e-15);
            }
        }
}
