#include "effective.hpp"

#include <algorithm>
#include <stdexcept>

#include "simplex.hpp"

namespace nefcert {

namespace {

/* Try w(i,j) = t_i + t_j with the t's solving the non-proper equalities:
 * (m-2) t_i + T = b_i, T = sum b_i / (2m-2). Covers the bulk of the
 * pullback instances (all-nonpositive proper b) without touching the
 * simplex. */
std::optional<WeightCertificate> star_certificate(const BoundaryExpression& E) {
    const int m = E.m();
    std::vector<Rat> t(static_cast<size_t>(m));
    Rat total(0);
    for (int i = 0; i < m; ++i) total += E.at_side(std::uint64_t{1} << i);
    total /= 2 * m - 2;
    for (int i = 0; i < m; ++i)
        t[static_cast<size_t>(i)] = (E.at_side(std::uint64_t{1} << i) - total) / (m - 2);

    // cut of a sum-separable w is |J| t(I) + |I| t(J)
    for (std::size_t idx = 0; idx < E.size(); ++idx) {
        std::uint64_t side = split_mask_from_index(idx);
        int sz = std::popcount(side);
        if (sz < 2 || sz > m - 2) continue;
        Rat tI(0), tJ(0);
        for (int i = 0; i < m; ++i)
            (side >> i & 1 ? tI : tJ) += t[static_cast<size_t>(i)];
        if (Rat((m - sz) * tI + sz * tJ) < E.at_index(idx)) return std::nullopt;
    }

    WeightCertificate w(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            w.at(i, j) = t[static_cast<size_t>(i)] + t[static_cast<size_t>(j)];
    return w;
}

/* One LinRow per split: coefficient of w(i,j) is 1 iff the split
 * separates i from j. */
std::vector<LinRow> constraint_rows(const BoundaryExpression& E) {
    const int m = E.m();
    const PairWeights index_helper(m);
    std::vector<LinRow> rows;
    rows.reserve(E.size());
    for (std::size_t idx = 0; idx < E.size(); ++idx) {
        std::uint64_t side = split_mask_from_index(idx);
        LinRow row;
        row.a.assign(index_helper.pair_count(), Rat(0));
        for (int i = 0; i < m; ++i) {
            if (!(side >> i & 1)) continue;
            for (int j = 0; j < m; ++j)
                if (!(side >> j & 1)) row.a[index_helper.pair_index(i, j)] = 1;
        }
        row.rhs = E.at_index(idx);
        int sz = std::popcount(side);
        row.equality = sz == 1 || sz == m - 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

WeightCertificate weights_from_flat(int m, std::vector<Rat> flat) {
    WeightCertificate w(m);
    std::size_t k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) w.at(i, j) = std::move(flat[k++]);
    return w;
}

}  // namespace

std::optional<WeightCertificate> find_certificate(const BoundaryExpression& E) {
    const int m = E.m();
    if (m == 1) return WeightCertificate(1);
    if (m == 2) {
        // single non-proper split {1}|{2}: w(1,2) = b
        WeightCertificate w(2);
        w.at(0, 1) = E.at_index(0);
        return w;
    }
    if (auto w = star_certificate(E)) return w;
    auto rows = constraint_rows(E);
    auto x = phase1_feasible_point(static_cast<int>(PairWeights(m).pair_count()), rows);
    if (!x) return std::nullopt;
    return weights_from_flat(m, std::move(*x));
}

CertificateReport verify_certificate(const BoundaryExpression& E, const WeightCertificate& w) {
    if (w.m() != E.m()) throw std::invalid_argument("certificate dimension mismatch");
    CertificateReport report{true, {}};
    const int m = E.m();
    for (std::size_t idx = 0; idx < E.size(); ++idx) {
        std::uint64_t side = split_mask_from_index(idx);
        Rat cut = cut_value(w, side);
        int sz = std::popcount(side);
        bool eq = sz == 1 || sz == m - 1;
        bool bad = eq ? cut != E.at_index(idx) : cut < E.at_index(idx);
        if (bad) {
            report.ok = false;
            report.violations.push_back({side, eq, std::move(cut), E.at_index(idx)});
        }
    }
    return report;
}

EffectiveCombination effective_combination(const BoundaryExpression& E,
                                           const WeightCertificate& w) {
    auto report = verify_certificate(E, w);
    if (!report.ok)
        throw std::invalid_argument("effective_combination: certificate does not verify");
    EffectiveCombination comb{E.m(), {}};
    const int m = E.m();
    for (std::size_t idx = 0; idx < E.size(); ++idx) {
        std::uint64_t side = split_mask_from_index(idx);
        int sz = std::popcount(side);
        if (sz < 2 || sz > m - 2) continue;
        comb.coeffs.emplace(side, cut_value(w, side) - E.at_index(idx));
    }
    return comb;
}

namespace {

/* Inequality sum a . x >= rhs with dense rational coefficients,
 * normalized to a primitive integer vector for deduplication. */
struct IneqRow {
    std::vector<Rat> a;
    Rat rhs;

    void normalize() {
        Int lcm(1);
        for (const Rat& x : a)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs.get_den().get_mpz_t());
        Int g(0);
        for (const Rat& x : a) {
            Int num = x.get_num() * (lcm / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        }
        if (g == 0) return;  // handled by the caller as 0 >= rhs
        Rat scale = Rat(lcm) / Rat(g);
        for (Rat& x : a) x *= scale;
        rhs *= scale;
    }
};

}  // namespace

Feasibility feasible_by_elimination(const BoundaryExpression& E) {
    const int m = E.m();
    if (m > 6)
        throw std::invalid_argument("feasible_by_elimination is guarded to m <= 6");
    if (m < 3) return Feasibility::Feasible;  // trivial systems, see find_certificate

    auto rows = constraint_rows(E);
    const std::size_t nvars = PairWeights(m).pair_count();

    // substitute the equalities away, one pivot per equality row
    std::vector<IneqRow> ineqs;
    std::vector<LinRow> eqs;
    for (auto& r : rows)
        if (r.equality)
            eqs.push_back(std::move(r));
        else
            ineqs.push_back({std::move(r.a), std::move(r.rhs)});

    std::vector<bool> eliminated(nvars, false);
    for (auto& eq : eqs) {
        std::size_t pivot = nvars;
        for (std::size_t j = 0; j < nvars; ++j)
            if (!eliminated[j] && eq.a[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == nvars) {
            if (eq.rhs != 0) return Feasibility::Infeasible;  // 0 == nonzero
            continue;
        }
        Rat inv = eq.a[pivot];
        for (auto& x : eq.a) x /= inv;
        eq.rhs /= inv;
        auto substitute = [&](std::vector<Rat>& a, Rat& rhs) {
            Rat factor = a[pivot];
            if (factor == 0) return;
            for (std::size_t j = 0; j < nvars; ++j) a[j] -= factor * eq.a[j];
            rhs -= factor * eq.rhs;
        };
        for (auto& other : eqs)
            if (&other != &eq) substitute(other.a, other.rhs);
        for (auto& iq : ineqs) substitute(iq.a, iq.rhs);
        eliminated[pivot] = true;
    }

    auto prune = [&](std::vector<IneqRow>& rs) -> std::optional<Feasibility> {
        // drop 0 >= nonpositive rows, detect 0 >= positive, dedupe by
        // normalized lhs keeping the largest rhs
        std::vector<IneqRow> kept;
        for (auto& r : rs) {
            bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rat& x) { return x == 0; });
            if (zero) {
                if (r.rhs > 0) return Feasibility::Infeasible;
                continue;
            }
            r.normalize();
            auto same = std::find_if(kept.begin(), kept.end(),
                                     [&](const IneqRow& k) { return k.a == r.a; });
            if (same == kept.end())
                kept.push_back(std::move(r));
            else if (r.rhs > same->rhs)
                same->rhs = std::move(r.rhs);
        }
        rs = std::move(kept);
        return std::nullopt;
    };

    if (auto verdict = prune(ineqs)) return *verdict;

    for (std::size_t v = 0; v < nvars; ++v) {
        if (eliminated[v]) continue;
        std::vector<IneqRow> pos, neg, zero;
        for (auto& r : ineqs) {
            if (r.a[v] > 0)
                pos.push_back(std::move(r));
            else if (r.a[v] < 0)
                neg.push_back(std::move(r));
            else
                zero.push_back(std::move(r));
        }
        ineqs = std::move(zero);
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // p.a[v] > 0 > q.a[v]; cancel v with positive multipliers
                IneqRow comb;
                comb.a.resize(nvars);
                Rat cp = -q.a[v], cq = p.a[v];
                for (std::size_t j = 0; j < nvars; ++j)
                    comb.a[j] = cp * p.a[j] + cq * q.a[j];
                comb.rhs = cp * p.rhs + cq * q.rhs;
                ineqs.push_back(std::move(comb));
            }
        if (auto verdict = prune(ineqs)) return *verdict;
    }
    // all variables eliminated without contradiction
    return Feasibility::Feasible;
}

}  // namespace nefcert
