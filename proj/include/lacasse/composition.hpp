#pragma once

#include <span>
#include <vector>

#include "lacasse/exact.hpp"

namespace lacasse {

/// Walks every weak composition of `total` into `parts` nonnegative parts,
/// in colexicographic order, starting from (total, 0, ..., 0).
///
///   CompositionCursor cur(n, d);
///   do { use(cur.current()); } while (cur.next());
class CompositionCursor {
public:
    /// Throws std::domain_error for total < 0 or parts < 1.
    CompositionCursor(long total, long parts);

    std::span<const long> current() const { return current_; }
    long total() const { return total_; }
    long parts() const { return static_cast<long>(current_.size()); }

    /// Advances in place. Returns false (leaving the state untouched) once the
    /// last composition (0, ..., 0, total) has been reached.
    bool next();

    /// Number of states visited by a full walk: C(total + parts - 1, parts - 1).
    static ExactInt count(long total, long parts);

private:
    long total_;
    std::vector<long> current_;
};

}  // namespace lacasse
