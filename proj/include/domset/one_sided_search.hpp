#pragma once

#include <algorithm>
#include <string>

#include "domset/error.hpp"

namespace domset {

struct SearchOutcome {
    int value = 0;      ///< smallest accepted probe
    int iterations = 0; ///< number of predicate evaluations
};

/// Finds an accepted x in [0, limit], probing 0, 1, 3, 7, ... until the first
/// acceptance and then bisecting the open interval above the last rejected
/// probe. The predicate need not be monotone; only accepted probes are ever
/// returned, and `limit` itself must be accepted. A target at position x
/// costs at most 2 * (floor(log2(x)) + 1) probes.
template <class Accept>
SearchOutcome one_sided_search(int limit, Accept&& accept) {
    if (limit < 0) throw InputError("one-sided search: negative limit");
    SearchOutcome out;
    int lo = -1; // last rejected probe
    int hi = 0;
    for (;;) {
        ++out.iterations;
        if (accept(hi)) break;
        if (hi == limit) throw InvariantViolation("one-sided search: limit " + std::to_string(limit) + " rejected");
        lo = hi;
        hi = static_cast<int>(std::min<long long>(2LL * hi + 1, limit));
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        ++out.iterations;
        if (accept(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.value = hi;
    return out;
}

} // namespace domset
