#pragma once

#include <cstdlib>
#include <memory>
#include <map>
#include <mutex>

#include "k3disc/ints.hpp"

namespace k3disc {

// Cache of value sets mod m (per component, per coset); shared across the
// lift checks of one run.  Thread-safe.
struct ValueSetCache {
    std::map<std::string, std::vector<char>> sets;
    std::mutex mu;
};

struct SearchParams {
    std::vector<Int> moduli;        // empty = per-lattice defaults
    Int value_budget = 1000000;     // lattice points evaluated per modulus
    Int box_bound = 4;              // coordinate box for indefinite searches
    Int river_cap = 100000;         // node cap for binary reduction cycles
    Int sweep_max_radius = 64;      // witness sweep: max |coordinate|
    int sweep_max_support = 5;      // witness sweep: max nonzero coordinates
    int threads = 1;
    std::shared_ptr<ValueSetCache> cache = std::make_shared<ValueSetCache>();

    static SearchParams defaults() {
        SearchParams p;
        if (const char* env = std::getenv("K3DISC_THREADS")) {
            int t = std::atoi(env);
            if (t >= 1) p.threads = t;
        }
        return p;
    }
};

}  // namespace k3disc
