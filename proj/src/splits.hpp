#ifndef NEFCERT_SPLITS_HPP
#define NEFCERT_SPLITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nefcert {

/* 2-part splits I | J of [m] = {1,...,m}, canonicalized as the side
 * containing marker 1. Marker i is bit i-1 of the side mask.
 *
 * Splits are indexed 0 .. 2^(m-1)-2: index t corresponds to the side
 * mask (t << 1) | 1, i.e. t enumerates the subsets of {2,...,m} joined
 * to marker 1, excluding the full set (empty complement). */
struct TwoPartSplit {
    int m;
    std::uint64_t side;  // contains bit 0

    int side_size() const { return std::popcount(side); }
    std::uint64_t complement() const { return ((std::uint64_t{1} << m) - 1) ^ side; }
    bool is_proper() const { return side_size() >= 2 && side_size() <= m - 2; }
    std::string to_string() const;  // sorted markers of the canonical side, "1,4"
};

inline std::size_t split_count(int m) {
    return (std::size_t{1} << (m - 1)) - 1;
}

inline std::uint64_t split_mask_from_index(std::size_t t) {
    return (static_cast<std::uint64_t>(t) << 1) | 1;
}

inline std::size_t split_index_from_mask(std::uint64_t side) {
    return static_cast<std::size_t>(side >> 1);
}

/* All canonical splits of [m] in index order. m >= 3. */
std::vector<TwoPartSplit> two_part_splits(int m);

/* Materialized split tables are only used at small m; this guard keeps
 * accidental 2^(m-1) blowups out. */
inline constexpr int kMaxExpressionMarkers = 20;

inline void check_expression_m(int m) {
    if (m < 1 || m > kMaxExpressionMarkers)
        throw std::invalid_argument("boundary expression only materialized for 1 <= m <= " +
                                    std::to_string(kMaxExpressionMarkers) +
                                    ", got m = " + std::to_string(m));
}

}  // namespace nefcert

#endif
