#ifndef SRK_ENUMERATE_HPP
#define SRK_ENUMERATE_HPP

#include <functional>

#include "srk/sring.hpp"

namespace srk {

// Streams every S-ring over G, found by backtracking over inverse-closed
// partitions with incremental closure pruning.
void for_each_sring(const AbelianGroup& G, const std::function<void(const SRing&)>& fn,
                    const Caps& caps = {});

std::vector<SRing> enumerate_all_srings(const AbelianGroup& G, const Caps& caps = {});

// All S-rings whose basic sets are unions of K-orbits, by a separate and
// deliberately plain scan over merge patterns of the orbit blocks. With the
// trivial K this enumerates all S-rings and cross-checks the engine above.
std::vector<SRing> enumerate_k_invariant_srings(const AbelianGroup& G, const AutGroup& K,
                                                const Caps& caps = {});

}  // namespace srk

#endif
