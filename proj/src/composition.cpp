#include "lacasse/composition.hpp"

#include <string>

namespace lacasse {

CompositionCursor::CompositionCursor(long total, long parts) : total_(total) {
    if (total < 0) throw std::domain_error("composition total must be >= 0");
    if (parts < 1) throw std::domain_error("composition needs at least one part");
    current_.assign(static_cast<std::size_t>(parts), 0);
    current_[0] = total;
}

bool CompositionCursor::next() {
    const std::size_t last = current_.size() - 1;
    std::size_t i = 0;
    while (i < last && current_[i] == 0) ++i;
    if (i == last) return false;
    // move one unit right of the first nonzero slot, gather the rest at slot 0
    const long v = current_[i];
    current_[i] = 0;
    current_[i + 1] += 1;
    current_[0] = v - 1;
    return true;
}

ExactInt CompositionCursor::count(long total, long parts) {
    if (total < 0 || parts < 1) return 0;
    return binomial(total + parts - 1, parts - 1);
}

}  // namespace lacasse
