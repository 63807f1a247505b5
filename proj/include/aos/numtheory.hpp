#pragma once

#include <cstdint>
#include <vector>

#include "aos/types.hpp"

namespace aos {

struct SieveTable {
    std::int64_t limit = 0;
    std::vector<double> mangoldt;       // Lambda(k)
    std::vector<std::int8_t> mobius;    // mu(k)
    std::vector<std::int8_t> liouville; // (-1)^Omega(k)
    std::vector<std::int32_t> spf;      // smallest prime factor, spf[1] = 1
    std::vector<std::int32_t> primes;
    // Indices k <= limit with Lambda(k) != 0, ascending.
    std::vector<std::int32_t> prime_powers;
};

inline constexpr std::int64_t kSieveMax = 10'000'000;

SieveTable build_sieve(std::int64_t N);

// Process-wide table shared by the Dirichlet-series paths; built once.
const SieveTable& shared_sieve();
inline constexpr std::int64_t kSharedSieveLimit = 2'000'000;

struct DirichletCharacter {
    int modulus = 1;
    int index = 0;
    bool principal = true;
    std::vector<cplx> table;  // chi(a) for a = 0 .. modulus-1

    cplx operator()(std::int64_t k) const { return table[static_cast<std::size_t>(k % modulus)]; }
};

int character_count(int modulus);
DirichletCharacter character(int modulus, int index);

}  // namespace aos
