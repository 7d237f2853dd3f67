#include "udca/budget.hpp"

#include <cstdlib>
#include <string>

namespace udca {

namespace {
Budget initial_budget() {
    Budget b;
    if (const char* env = std::getenv("UNIMOD_DCA_BUDGET")) {
        try {
            std::uint64_t cap = std::stoull(env);
            if (cap > 0) {
                b.hull_subsets = cap;
                b.faces = cap;
                b.lattice_box = cap;
                b.minors = cap;
            }
        } catch (...) {
            // Malformed override: keep defaults.
        }
    }
    return b;
}
}  // namespace

Budget& Budget::current() {
    static Budget instance = initial_budget();
    return instance;
}

}  // namespace udca
