#include "certificate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nefcert {

std::vector<Partition> coverage(int n, CertifyMode mode) {
    return partitions_of(n, mode == CertifyMode::StrictOnly ? PartitionFilter::Strict
                                                            : PartitionFilter::All);
}

namespace {

/* Certificates of non-strict partitions chain one ascend step through
 * the certificate of their merge target, which in all-partitions mode is
 * itself in scope. Memoizing the per-partition result makes the whole
 * run linear in the number of entries while producing exactly the chain
 * certificate of certify_partition. */
struct CertifyContext {
    const FFunction& f;
    // partition parts -> certificate; nullopt when the strict base failed
    std::map<std::vector<int>, std::optional<WeightCertificate>> memo;
    std::map<std::vector<int>, Partition> failed_base;

    const std::optional<WeightCertificate>& weights_for(const Partition& lambda) {
        auto it = memo.find(lambda.parts());
        if (it != memo.end()) return it->second;

        std::optional<WeightCertificate> result;
        if (lambda.is_strict()) {
            result = find_certificate(pullback(f, lambda));
            if (!result) failed_base.emplace(lambda.parts(), lambda);
        } else {
            ReductionStep step = reduction_path(lambda).steps.front();
            MergeStep merge = make_merge_step(step.from, step.merged_value);
            const auto& below = weights_for(merge.mu);
            if (below)
                result = ascend(f, merge, *below);
            else
                failed_base.emplace(lambda.parts(), failed_base.at(merge.mu.parts()));
        }
        return memo.emplace(lambda.parts(), std::move(result)).first->second;
    }
};

}  // namespace

CertifyOutcome certify(const SymmetricDivisor& L, CertifyMode mode, bool exhaustive) {
    CertifyOutcome out;

    FFunction f = f_from_symmetric(L);
    for (const FQuad& q : four_quads(L.n())) {
        Rat v = f_inequality_value(f, q);
        if (v < 0) {
            out.failures.push_back(
                {CertifyFailure::Stage::Fnef, q, std::move(v), std::nullopt, std::nullopt});
            if (!exhaustive) return out;
        }
    }
    if (!out.failures.empty()) return out;

    CertifyContext ctx{f, {}, {}};
    std::vector<Partition> scope = coverage(L.n(), mode);

    // resolve in increasing length so every merge target is memoized first
    std::vector<std::size_t> order(scope.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scope[a].length() < scope[b].length();
    });

    std::vector<PartitionCertificate> entries;
    for (const Partition& lambda : scope)
        entries.push_back({lambda, Provenance::Degenerate, std::nullopt, {}});

    for (std::size_t idx : order) {
        const Partition& lambda = scope[idx];
        if (degenerate_stratum(lambda)) continue;
        const auto& w = ctx.weights_for(lambda);
        if (!w) continue;  // collected below, in enumeration order
        if (lambda.is_strict())
            entries[idx] = {lambda, Provenance::Feasibility, *w, {}};
        else
            entries[idx] = {lambda, Provenance::AscentChain, *w, reduction_path(lambda).steps};
    }

    for (const Partition& lambda : scope) {
        if (degenerate_stratum(lambda)) continue;
        auto it = ctx.memo.find(lambda.parts());
        if (it == ctx.memo.end() || it->second) continue;
        out.failures.push_back({CertifyFailure::Stage::StrictBase, std::nullopt, std::nullopt,
                                lambda, ctx.failed_base.at(lambda.parts())});
        if (!exhaustive) break;  // scope is already in enumeration order
    }
    if (!out.failures.empty()) return out;

    out.certificate = NefCertificate{L, mode, std::move(entries)};
    return out;
}

namespace {

std::string quad_detail(const FQuad& q, const Rat& v) {
    std::ostringstream os;
    os << "divisor is not F-nef: quad " << q.to_string() << " has value " << rat_to_string(v);
    return os.str();
}

}  // namespace

VerifyOutcome verify(const NefCertificate& cert) {
    const int n = cert.divisor.n();
    FFunction f = f_from_symmetric(cert.divisor);

    for (const FQuad& q : four_quads(n)) {
        Rat v = f_inequality_value(f, q);
        if (v < 0) return {false, quad_detail(q, v), std::nullopt, 0};
    }

    std::vector<Partition> expected = coverage(n, cert.mode);
    if (cert.entries.size() != expected.size())
        return {false,
                "coverage: certificate has " + std::to_string(cert.entries.size()) +
                    " entries, expected " + std::to_string(expected.size()),
                std::nullopt, 0};
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!(cert.entries[i].lambda == expected[i]))
            return {false,
                    "coverage: entry " + std::to_string(i) + " is " +
                        cert.entries[i].lambda.to_string() + ", expected " +
                        expected[i].to_string(),
                    expected[i], i};

    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        const PartitionCertificate& entry = cert.entries[i];
        const Partition& lambda = entry.lambda;
        auto fail = [&](const std::string& detail) {
            return VerifyOutcome{false, lambda.to_string() + ": " + detail, lambda, i};
        };

        switch (entry.provenance) {
            case Provenance::Degenerate:
                if (!degenerate_stratum(lambda))
                    return fail("degenerate marker on a stratum with moduli");
                if (entry.w || !entry.path.empty())
                    return fail("degenerate entry carries certificate data");
                break;
            case Provenance::Feasibility: {
                if (!lambda.is_strict() || degenerate_stratum(lambda))
                    return fail("feasibility provenance requires a strict partition of length >= 3");
                if (!entry.w) return fail("missing weight certificate");
                if (!entry.path.empty()) return fail("feasibility entry carries a merge path");
                if (entry.w->m() != lambda.length())
                    return fail("certificate dimension mismatch");
                auto report = verify_certificate(pullback(f, lambda), *entry.w);
                if (!report.ok) {
                    const auto& v = report.violations.front();
                    std::ostringstream os;
                    os << "constraint at split "
                       << TwoPartSplit{lambda.length(), v.side_mask}.to_string()
                       << (v.equality ? " misses equality: " : " violated: ") << "cut "
                       << rat_to_string(v.cut) << " vs bound " << rat_to_string(v.bound);
                    return fail(os.str());
                }
                break;
            }
            case Provenance::AscentChain: {
                if (lambda.is_strict() || degenerate_stratum(lambda))
                    return fail("ascent provenance requires a non-strict partition of length >= 3");
                if (!entry.w) return fail("missing weight certificate");
                if (auto err = audit_ascent_certificate(f, lambda, entry.path, *entry.w))
                    return fail(*err);
                break;
            }
        }
    }
    return {true, "", std::nullopt, cert.entries.size()};
}

}  // namespace nefcert
