#pragma once

#include <cstdint>

namespace udca {

/// Enumeration caps for the brute-force algorithms. Every cap aborts with
/// SizeExceeded instead of silently degrading.
struct Budget {
    std::uint64_t hull_subsets = 2'000'000;   // candidate facet subsets per hull
    std::uint64_t faces = 50'000;             // faces per face-lattice closure
    std::uint64_t lattice_box = 4'000'000;    // bounding-box cells per scan
    std::uint64_t minors = 5'000'000;         // square minors per TU test

    /// Process-wide default, initialised once from UNIMOD_DCA_BUDGET when set
    /// (a single cap value applied to all four knobs).
    static Budget& current();
};

}  // namespace udca
