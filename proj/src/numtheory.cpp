#include "aos/numtheory.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

namespace aos {

SieveTable build_sieve(std::int64_t N) {
    if (N < 2 || N > kSieveMax) throw Error(ErrorKind::invalid_parameter, "build_sieve: N must be in [2, 1e7]");
    SieveTable t;
    t.limit = N;
    const auto n = static_cast<std::size_t>(N) + 1;
    t.spf.assign(n, 0);
    t.mangoldt.assign(n, 0.0);
    t.mobius.assign(n, 0);
    t.liouville.assign(n, 0);
    t.spf[1] = 1;
    for (std::int64_t i = 2; i <= N; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = static_cast<std::int32_t>(i);
            t.primes.push_back(static_cast<std::int32_t>(i));
        }
        for (std::int32_t p : t.primes) {
            if (p > t.spf[i] || i * p > N) break;
            t.spf[i * p] = p;
        }
    }
    t.mobius[1] = 1;
    t.liouville[1] = 1;
    for (std::int64_t i = 2; i <= N; ++i) {
        const std::int32_t p = t.spf[i];
        const std::int64_t j = i / p;
        t.liouville[i] = static_cast<std::int8_t>(-t.liouville[j]);
        t.mobius[i] = (t.spf[j] == p) ? 0 : static_cast<std::int8_t>(-t.mobius[j]);
        if (j == 1 || (t.spf[j] == p && t.mangoldt[j] != 0.0)) {
            t.mangoldt[i] = std::log(static_cast<double>(p));
            t.prime_powers.push_back(static_cast<std::int32_t>(i));
        }
    }
    return t;
}

const SieveTable& shared_sieve() {
    static std::once_flag once;
    static SieveTable table;
    std::call_once(once, [] { table = build_sieve(kSharedSieveLimit); });
    return table;
}

namespace {

struct GroupShape {
    int modulus;
    std::vector<int> generators;
    std::vector<int> orders;
};

const GroupShape* shape_of(int q) {
    static const GroupShape shapes[] = {
        {1, {}, {}},
        {3, {2}, {2}},
        {4, {3}, {2}},
        {5, {2}, {4}},
        {8, {3, 5}, {2, 2}},
        {12, {5, 7}, {2, 2}},
    };
    for (const auto& s : shapes)
        if (s.modulus == q) return &s;
    return nullptr;
}

// exp(2 pi i j / order) for order in {1, 2, 4}, exactly.
cplx root_of_unity(int j, int order) {
    int r = (4 / order) * j % 4;
    switch (r) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

int character_count(int modulus) {
    const GroupShape* s = shape_of(modulus);
    if (!s) throw Error(ErrorKind::invalid_parameter, "character: unsupported modulus " + std::to_string(modulus));
    int c = 1;
    for (int o : s->orders) c *= o;
    return c;
}

DirichletCharacter character(int modulus, int index) {
    const GroupShape* s = shape_of(modulus);
    if (!s) throw Error(ErrorKind::invalid_parameter, "character: unsupported modulus " + std::to_string(modulus));
    const int count = character_count(modulus);
    if (index < 0 || index >= count)
        throw Error(ErrorKind::invalid_parameter, "character: index out of range for modulus " + std::to_string(modulus));

    DirichletCharacter chi;
    chi.modulus = modulus;
    chi.index = index;
    chi.principal = (index == 0);
    chi.table.assign(static_cast<std::size_t>(modulus), cplx{0.0, 0.0});
    if (modulus == 1) {
        chi.table[0] = 1.0;
        return chi;
    }
    // Mixed-radix digits of the index give the exponent on each generator.
    std::vector<int> digit(s->generators.size());
    int rest = index;
    for (std::size_t g = 0; g < digit.size(); ++g) {
        digit[g] = rest % s->orders[g];
        rest /= s->orders[g];
    }
    // Walk every product of generator powers; that covers the unit group.
    std::vector<int> e(s->generators.size(), 0);
    while (true) {
        long a = 1;
        int phase = 0;  // in quarter turns
        for (std::size_t g = 0; g < e.size(); ++g) {
            for (int k = 0; k < e[g]; ++k) a = a * s->generators[g] % modulus;
            phase += (4 / s->orders[g]) * digit[g] * e[g];
        }
        chi.table[static_cast<std::size_t>(a)] = root_of_unity(phase % 4, 4);
        std::size_t g = 0;
        while (g < e.size() && ++e[g] == s->orders[g]) e[g++] = 0;
        if (g == e.size()) break;
    }
    return chi;
}

}  // namespace aos
