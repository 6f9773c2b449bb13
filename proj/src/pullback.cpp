#include "pullback.hpp"

#include <stdexcept>

namespace nefcert {

BoundaryExpression pullback(const FFunction& f, const Partition& lambda) {
    if (lambda.n() != f.n())
        throw std::invalid_argument("pullback: partition of " + std::to_string(lambda.n()) +
                                    " against f on n = " + std::to_string(f.n()));
    const int k = lambda.length();
    BoundaryExpression e(k);
    for (std::size_t t = 0; t < e.size(); ++t) {
        std::uint64_t side = split_mask_from_index(t);
        long long sum = 0;
        for (int i = 0; i < k; ++i)
            if (side >> i & 1) sum += lambda.part(i);
        e.at_index(t) = f.at(sum);
    }
    return e;
}

}  // namespace nefcert
