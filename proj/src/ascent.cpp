#include "ascent.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <sstream>

namespace nefcert {

namespace {

constexpr std::size_t kMaxTotal = 500;  // subset-sum bitsets cover n < kMaxTotal

/* Sums of nonempty proper subsets of the given parts. */
std::bitset<kMaxTotal> proper_subset_sums(const std::vector<int>& parts) {
    std::bitset<kMaxTotal> sums;
    sums.set(0);
    int total = 0;
    for (int p : parts) {
        sums |= sums << static_cast<std::size_t>(p);
        total += p;
    }
    sums.reset(0);
    if (total < static_cast<int>(kMaxTotal)) sums.reset(static_cast<std::size_t>(total));
    return sums;
}

FQuad quad_of(int A, int B, int a) {
    std::array<int, 4> q{A, B, a, a};
    std::sort(q.begin(), q.end(), std::greater<int>());
    return FQuad{q};
}

/* The F-inequalities Case 3 of the ascent claim consumes: one quad
 * {A, B, a, a} per achievable complementary sum A of the non-merged
 * parts. Throws AscentQuadError on the first failure. */
void check_step_quads(const FFunction& f, const MergeStep& step) {
    std::vector<int> rest;
    for (int i = 0; i < step.lambda.length(); ++i)
        if (i != step.p && i != step.q) rest.push_back(step.lambda.part(i));
    if (rest.size() < 2) return;  // no proper complementary split
    auto sums = proper_subset_sums(rest);
    int total = std::accumulate(rest.begin(), rest.end(), 0);
    int a = step.merged_value;
    for (int A = 1; 2 * A <= total; ++A) {
        if (!sums.test(static_cast<std::size_t>(A))) continue;
        FQuad quad = quad_of(A, total - A, a);
        Rat value = f_inequality_value(f, quad);
        if (value < 0) throw AscentQuadError(quad, std::move(value));
    }
}

}  // namespace

AscentQuadError::AscentQuadError(FQuad q, Rat v)
    : std::runtime_error("F-inequality fails on quad " + q.to_string() + " with value " +
                         rat_to_string(v)),
      quad(q),
      value(std::move(v)) {}

StrictBaseInfeasible::StrictBaseInfeasible(Partition b)
    : std::runtime_error("strict base " + b.to_string() +
                         " has no effective-boundary certificate"),
      base(std::move(b)) {}

MergeStep make_merge_step(const Partition& lambda, int v) {
    if (lambda.multiplicity(v) < 2)
        throw std::invalid_argument("merge step: value " + std::to_string(v) +
                                    " does not occur twice in " + lambda.to_string());
    const int k = lambda.length();
    int p = -1, q = -1;
    for (int i = 0; i < k; ++i)
        if (lambda.part(i) == v) {
            if (p < 0)
                p = i;
            else {
                q = i;
                break;
            }
        }

    // stable descending sort of lambda with q removed and p doubled
    std::vector<int> order;
    for (int i = 0; i < k; ++i)
        if (i != q) order.push_back(i);
    auto value_at = [&](int i) { return i == p ? 2 * v : lambda.part(i); };
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return value_at(x) > value_at(y); });

    std::vector<int> mu_parts;
    std::vector<int> to_mu(static_cast<size_t>(k), -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        mu_parts.push_back(value_at(order[pos]));
        to_mu[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
    }
    return MergeStep{lambda, Partition(std::move(mu_parts)), v, p, q, std::move(to_mu)};
}

WeightCertificate ascend(const FFunction& f, const MergeStep& step,
                         const WeightCertificate& w_mu) {
    const int k = step.lambda.length();
    if (w_mu.m() != k - 1)
        throw std::invalid_argument("ascend: certificate is for m = " +
                                    std::to_string(w_mu.m()) + ", expected " +
                                    std::to_string(k - 1));
    check_step_quads(f, step);

    const int a = step.merged_value;
    WeightCertificate w(k);
    for (int i = 0; i < k; ++i) {
        if (i == step.p || i == step.q) continue;
        for (int j = i + 1; j < k; ++j) {
            if (j == step.p || j == step.q) continue;
            w.at(i, j) = w_mu.at(step.to_mu[static_cast<size_t>(i)],
                                 step.to_mu[static_cast<size_t>(j)]);
        }
        Rat half = w_mu.at(step.to_mu[static_cast<size_t>(step.p)],
                           step.to_mu[static_cast<size_t>(i)]) / 2;
        w.at(step.p, i) = half;
        w.at(step.q, i) = std::move(half);
    }
    w.at(step.p, step.q) = f.at(a) - f.at(2 * a) / 2;
    return w;
}

PartitionCertificate certify_partition(const FFunction& f, const Partition& lambda) {
    if (degenerate_stratum(lambda))
        return {lambda, Provenance::Degenerate, std::nullopt, {}};

    if (lambda.is_strict()) {
        auto w = find_certificate(pullback(f, lambda));
        if (!w) throw StrictBaseInfeasible(lambda);
        return {lambda, Provenance::Feasibility, std::move(w), {}};
    }

    ReductionPath path = reduction_path(lambda);
    auto w = find_certificate(pullback(f, path.endpoint));
    if (!w) throw StrictBaseInfeasible(path.endpoint);
    for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it)
        w = ascend(f, make_merge_step(it->from, it->merged_value), *w);
    return {lambda, Provenance::AscentChain, std::move(w), std::move(path.steps)};
}

std::optional<std::string> audit_ascent_certificate(const FFunction& f,
                                                    const Partition& lambda,
                                                    const std::vector<ReductionStep>& path,
                                                    const WeightCertificate& w) {
    if (lambda.is_strict() || degenerate_stratum(lambda))
        return "ascent provenance on a strict or degenerate partition";
    if (w.m() != lambda.length()) return "certificate size does not match partition length";

    ReductionPath expected = reduction_path(lambda);
    if (path.size() != expected.steps.size())
        return "merge path length differs from the deterministic reduction path";
    for (std::size_t i = 0; i < path.size(); ++i)
        if (!(path[i].from == expected.steps[i].from) ||
            path[i].merged_value != expected.steps[i].merged_value)
            return "merge path step " + std::to_string(i) +
                   " differs from the deterministic reduction path";

    WeightCertificate cur = w;
    for (const ReductionStep& s : path) {
        MergeStep step = make_merge_step(s.from, s.merged_value);
        const int k = step.lambda.length();
        const int a = step.merged_value;

        for (int x = 0; x < k; ++x) {
            if (x == step.p || x == step.q) continue;
            if (cur.at(step.p, x) != cur.at(step.q, x))
                return "merged markers of " + s.from.to_string() +
                       " carry unequal weights against marker " + std::to_string(x + 1);
        }
        if (cur.at(step.p, step.q) != f.at(a) - f.at(2 * a) / 2)
            return "internal pair weight of " + s.from.to_string() +
                   " is not f(a) - f(2a)/2 for a = " + std::to_string(a);
        try {
            check_step_quads(f, step);
        } catch (const AscentQuadError& e) {
            return std::string("step at ") + s.from.to_string() + ": " + e.what();
        }

        WeightCertificate down(k - 1);
        for (int i = 0; i < k; ++i) {
            if (i == step.q) continue;
            for (int j = i + 1; j < k; ++j) {
                if (j == step.q) continue;
                int di = step.to_mu[static_cast<size_t>(i)];
                int dj = step.to_mu[static_cast<size_t>(j)];
                Rat v = (i == step.p || j == step.p) ? Rat(2 * cur.at(i, j)) : cur.at(i, j);
                down.at(di, dj) = std::move(v);
            }
        }
        cur = std::move(down);
    }

    auto report = verify_certificate(pullback(f, expected.endpoint), cur);
    if (!report.ok) {
        std::ostringstream os;
        os << "recovered base certificate for " << expected.endpoint.to_string()
           << " violates the split ";
        os << TwoPartSplit{expected.endpoint.length(), report.violations.front().side_mask}
                  .to_string();
        return os.str();
    }
    return std::nullopt;
}

}  // namespace nefcert
