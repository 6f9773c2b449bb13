#include "splits.hpp"

#include <sstream>

namespace nefcert {

std::string TwoPartSplit::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m; ++i)
        if (side >> i & 1) {
            if (!first) os << ',';
            os << i + 1;
            first = false;
        }
    return os.str();
}

std::vector<TwoPartSplit> two_part_splits(int m) {
    if (m < 3) throw std::invalid_argument("two_part_splits: m must be >= 3");
    check_expression_m(m);
    std::vector<TwoPartSplit> out;
    out.reserve(split_count(m));
    for (std::size_t t = 0; t < split_count(m); ++t)
        out.push_back(TwoPartSplit{m, split_mask_from_index(t)});
    return out;
}

}  // namespace nefcert
