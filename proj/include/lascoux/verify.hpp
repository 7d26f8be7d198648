#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lascoux/expansion.hpp"

namespace lascoux::verify {

struct PropertyResult {
    std::string name;
    bool pass = false;
    long long checks = 0;  // assertions evaluated (trials or exhaustive cases)
    std::string note;
};

using Report = std::vector<PropertyResult>;

/// Set-operator properties: random trials over subsets of [12] plus an
/// exhaustive sweep over subsets of [6].
Report verify_setops(std::uint64_t seed, long long trials);

/// Left-key suites: jdt-vs-chain oracle equivalence, revKjdt invariants.
Report verify_leftkey(std::uint64_t seed, long long trials);

/// Insertion suites: fixtures, round trips, bijectivity, the left-key
/// change law, and restriction compatibility.
Report verify_insertion(std::uint64_t seed, long long trials);

/// Expansion suites: the worked product expansion fixture (with the
/// 18-vs-19 adjudication), the identity grid, the Grothendieck expansion,
/// degenerations, and oracle cross-checks.
Report verify_expansion(std::uint64_t seed, long long trials);

Report verify_all(std::uint64_t seed, long long trials);

/// Worker count: LASCOUX_WORKERS when set, else available parallelism.
int worker_count();

bool all_passed(const Report& report);

} // namespace lascoux::verify
