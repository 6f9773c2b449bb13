#include "partition.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nefcert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must be nonempty");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    long long s = 0;
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
        s += p;
    }
    if (s > 1'000'000'000LL) throw std::invalid_argument("partition total too large");
    n_ = static_cast<int>(s);
}

bool Partition::is_strict() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::from_string(const std::string& s) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition literal: '" + s + "'");
        long long v = std::stoll(tok);
        if (v < 1 || v > 1'000'000'000LL)
            throw std::invalid_argument("partition part out of range in '" + s + "'");
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be decreasing: '" + s + "'");
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_string() << ')';
}

namespace {

void gen_partitions(int remaining, int max_part, bool strict,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (strict) {
            // a strict tail of parts < p sums to at most p(p-1)/2
            if (remaining - p > p * (p - 1) / 2) continue;
        }
        prefix.push_back(p);
        gen_partitions(remaining - p, strict ? p - 1 : p, strict, prefix, out);
        prefix.pop_back();
    }
}

void gen_length(int remaining, int max_part, int slots,
                std::vector<int>& prefix, std::vector<Partition>& out) {
    if (slots == 0) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (remaining - p < slots - 1) continue;     // p leaves too little behind
        if (remaining - p > (slots - 1) * p) break;  // even p copies cannot absorb the rest
        prefix.push_back(p);
        gen_length(remaining - p, p, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, PartitionFilter f) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(n, n, f == PartitionFilter::Strict, prefix, out);
    return out;
}

std::vector<Partition> partitions_of_length(int n, int k) {
    if (n < 1) throw std::invalid_argument("partitions_of_length: n must be >= 1");
    if (k < 1 || k > n) return {};
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_length(n, n, k, prefix, out);
    return out;
}

Partition merge_equal_pair(const Partition& lambda, int v) {
    if (lambda.multiplicity(v) < 2)
        throw std::invalid_argument("merge_equal_pair: value " + std::to_string(v) +
                                    " does not occur twice in " + lambda.to_string());
    std::vector<int> parts = lambda.parts();
    auto it = std::find(parts.begin(), parts.end(), v);
    it = parts.erase(it);
    it = std::find(it, parts.end(), v);
    parts.erase(it);
    parts.push_back(2 * v);
    return Partition(std::move(parts));
}

ReductionPath reduction_path(const Partition& lambda) {
    ReductionPath path{{}, lambda};
    Partition cur = lambda;
    while (!cur.is_strict()) {
        int v = 0;
        const auto& parts = cur.parts();
        for (size_t i = 1; i < parts.size(); ++i)
            if (parts[i] == parts[i - 1]) {
                v = parts[i];  // parts decreasing: first repeat is the largest
                break;
            }
        path.steps.push_back({cur, v});
        cur = merge_equal_pair(cur, v);
    }
    path.endpoint = cur;
    return path;
}

int max_strict_length(long long n) {
    if (n < 1) throw std::invalid_argument("max_strict_length: n must be >= 1");
    int k = 1;
    while (static_cast<long long>(k + 1) * (k + 2) / 2 <= n) ++k;
    return k;
}

long long conjecture_bound(int k) {
    if (k < 3) throw std::invalid_argument("conjecture_bound: k must be >= 3");
    return static_cast<long long>(k + 1) * (k + 2) / 2 - 1;
}

std::string FQuad::to_string() const {
    std::ostringstream os;
    os << '{' << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << '}';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FQuad& f) {
    return os << f.to_string();
}

std::vector<FQuad> four_quads(int n) {
    if (n < 4) throw std::invalid_argument("four_quads: n must be >= 4 (no F-curves)");
    std::vector<FQuad> out;
    for (int a = n - 3; a >= 1; --a)
        for (int b = std::min(a, n - a - 2); b >= 1; --b)
            for (int c = std::min(b, n - a - b - 1); c >= 1; --c) {
                int d = n - a - b - c;
                if (d < 1 || d > c) continue;
                out.push_back(FQuad{{a, b, c, d}});
            }
    return out;
}

}  // namespace nefcert
