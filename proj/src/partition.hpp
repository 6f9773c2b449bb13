#ifndef NEFCERT_PARTITION_HPP
#define NEFCERT_PARTITION_HPP

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace nefcert {

/* Integer partition, stored weakly decreasing, all parts >= 1.
 * Marker t of the associated stratum carries part t (1-based) in this
 * stored order. */
class Partition {
  public:
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }  // 0-based

    bool is_strict() const;
    int multiplicity(int v) const;

    std::string to_string() const;  // "4,3,2,1"
    static Partition from_string(const std::string& s);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // lexicographic order on part sequences
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

  private:
    std::vector<int> parts_;
    int n_;
};

std::ostream& operator<<(std::ostream&, const Partition&);

enum class PartitionFilter { All, Strict };

/* All partitions of n under the filter, in lexicographically decreasing
 * order: (n), (n-1,1), ..., (1,...,1). */
std::vector<Partition> partitions_of(int n, PartitionFilter f = PartitionFilter::All);

/* Partitions of n with exactly k parts, same order. */
std::vector<Partition> partitions_of_length(int n, int k);

/* Replace two copies of v by one part 2v. v must occur with
 * multiplicity >= 2. */
Partition merge_equal_pair(const Partition& lambda, int v);

struct ReductionStep {
    Partition from;    // partition before the merge
    int merged_value;  // the v that was merged
};

struct ReductionPath {
    std::vector<ReductionStep> steps;
    Partition endpoint;  // first strict partition reached
};

/* Iterate merge_equal_pair until strict, always merging the largest value
 * with multiplicity >= 2. Empty step list iff lambda is already strict. */
ReductionPath reduction_path(const Partition& lambda);

/* Largest k with k(k+1)/2 <= n, i.e. the longest possible strict
 * partition of n. */
int max_strict_length(long long n);

/* (k+1)(k+2)/2 - 1: the largest n for which every strict partition has
 * length <= k. */
long long conjecture_bound(int k);

/* Unordered 4-part partition {a,b,c,d} of n, stored weakly decreasing.
 * Indexes the F-curve F(a,b,c,d). */
struct FQuad {
    std::array<int, 4> q;  // weakly decreasing
    int n() const { return q[0] + q[1] + q[2] + q[3]; }
    bool operator==(const FQuad&) const = default;
    auto operator<=>(const FQuad&) const = default;
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream&, const FQuad&);

/* All quads with sum n, lexicographically decreasing; throws for n < 4. */
std::vector<FQuad> four_quads(int n);

}  // namespace nefcert

#endif
