#include "cone.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace nefcert {

namespace {

constexpr int kMaxConeDim = 20;
constexpr std::size_t kMaxFacetBits = 1024;

int normalized_index(int x, int n) {
    x %= n;
    if (x < 0) x += n;
    return std::min(x, n - x);
}

std::vector<Int> expand_quad(const FQuad& quad, int n) {
    std::vector<Int> form(static_cast<size_t>(n / 2 - 1), Int(0));
    auto add = [&](int x, int delta) {
        int nv = normalized_index(x, n);
        if (nv >= 2) form[static_cast<size_t>(nv - 2)] += delta;
    };
    for (int s : quad.q) add(s, -1);          // f(s) = -c_{|s|}
    add(quad.q[0] + quad.q[1], +1);           // -f(a+b)
    add(quad.q[0] + quad.q[2], +1);           // -f(a+c) = -f(b+d)
    add(quad.q[0] + quad.q[3], +1);           // -f(a+d) = -f(b+c)
    return form;
}

struct DDRay {
    std::vector<Int> vec;
    std::bitset<kMaxFacetBits> zset;  // processed constraints met with equality
};

Rat dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return Rat(std::move(s));
}

}  // namespace

Rat evaluate_form(const std::vector<Int>& form, const std::vector<Rat>& point) {
    if (form.size() != point.size()) throw std::invalid_argument("form/point size mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < form.size(); ++i) s += Rat(form[i]) * point[i];
    return s;
}

ConeDescription facet_system(int n) {
    if (n < 4) throw std::invalid_argument("facet_system: n must be >= 4");
    ConeDescription cone{n, n / 2 - 1, {}, {}};
    std::map<std::vector<Int>, std::size_t> seen;
    for (const FQuad& quad : four_quads(n)) {
        std::vector<Int> form = expand_quad(quad, n);
        auto [it, fresh] = seen.try_emplace(form, cone.facets.size());
        if (fresh)
            cone.facets.push_back({std::move(form), {quad}});
        else
            cone.facets[it->second].quads.push_back(quad);
    }
    // map keys are lexicographically sorted; store facets the same way
    std::vector<FacetForm> sorted;
    sorted.reserve(cone.facets.size());
    for (const auto& [form, idx] : seen) sorted.push_back(std::move(cone.facets[idx]));
    cone.facets = std::move(sorted);
    return cone;
}

RayBudgetExceeded::RayBudgetExceeded(int n_, std::size_t budget_)
    : std::runtime_error("extremal_rays: more than " + std::to_string(budget_) +
                         " working rays at n = " + std::to_string(n_)),
      n(n_),
      budget(budget_) {}

namespace {

ConeDescription enumerate_rays(int n, std::size_t max_rays) {
    ConeDescription cone = facet_system(n);
    const std::size_t dim = static_cast<std::size_t>(cone.dim);
    if (cone.dim > kMaxConeDim)
        throw std::invalid_argument("extremal_rays: dimension " + std::to_string(cone.dim) +
                                    " exceeds the guard of " + std::to_string(kMaxConeDim));

    // primitive normals, proportional duplicates dropped, lexicographic order
    std::vector<std::vector<Int>> normals;
    for (const FacetForm& fct : cone.facets) {
        std::vector<Int> v = fct.coeffs;
        make_primitive(v);
        normals.push_back(std::move(v));
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    if (normals.size() > kMaxFacetBits)
        throw std::invalid_argument("extremal_rays: too many facets");

    std::vector<std::vector<Int>> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Int> e(dim, Int(0));
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    for (std::size_t ci = 0; ci < normals.size(); ++ci) {
        const auto& a = normals[ci];

        std::size_t pivot = lineality.size();
        for (std::size_t li = 0; li < lineality.size(); ++li)
            if (dot(a, lineality[li]) != 0) {
                pivot = li;
                break;
            }

        if (pivot < lineality.size()) {
            std::vector<Int> l0 = std::move(lineality[pivot]);
            lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pivot));
            Rat s0 = dot(a, l0);
            if (s0 < 0) {
                for (Int& x : l0) x = -x;
                s0 = -s0;
            }
            Int s0n = s0.get_num();  // integer: integer vectors
            for (auto& l : lineality) {
                Rat sl = dot(a, l);
                if (sl == 0) continue;
                for (std::size_t i = 0; i < dim; ++i)
                    l[i] = s0n * l[i] - sl.get_num() * l0[i];
                make_primitive(l);
            }
            for (auto& r : rays) {
                Rat sr = dot(a, r.vec);
                if (sr != 0) {
                    for (std::size_t i = 0; i < dim; ++i)
                        r.vec[i] = s0n * r.vec[i] - sr.get_num() * l0[i];
                    make_primitive(r.vec);
                }
                r.zset.set(ci);
            }
            DDRay nr;
            nr.vec = std::move(l0);
            for (std::size_t i = 0; i < ci; ++i) nr.zset.set(i);
            rays.push_back(std::move(nr));
            continue;
        }

        std::vector<DDRay> keep;
        std::vector<std::pair<DDRay, Rat>> pos, neg;
        for (auto& r : rays) {
            Rat s = dot(a, r.vec);
            if (s == 0) {
                r.zset.set(ci);
                keep.push_back(std::move(r));
            } else if (s > 0) {
                pos.emplace_back(std::move(r), std::move(s));
            } else {
                neg.emplace_back(std::move(r), std::move(s));
            }
        }
        auto adjacent = [&](const DDRay& p, const DDRay& q) {
            auto zint = p.zset & q.zset;
            auto covered = [&](const DDRay& o) { return (zint & ~o.zset).none(); };
            for (const auto& [r, s] : pos)
                if (&r != &p && &r != &q && covered(r)) return false;
            for (const auto& [r, s] : neg)
                if (&r != &p && &r != &q && covered(r)) return false;
            for (const auto& r : keep)
                if (&r != &p && &r != &q && covered(r)) return false;
            return true;
        };
        std::vector<DDRay> created;
        for (const auto& [p, sp] : pos)
            for (const auto& [q, sq] : neg) {
                if (!adjacent(p, q)) continue;
                DDRay nr;
                nr.vec.resize(dim);
                for (std::size_t i = 0; i < dim; ++i)
                    nr.vec[i] = sp.get_num() * q.vec[i] - sq.get_num() * p.vec[i];
                make_primitive(nr.vec);
                nr.zset = (p.zset & q.zset);
                nr.zset.set(ci);
                created.push_back(std::move(nr));
            }
        rays = std::move(keep);
        for (auto& [p, s] : pos) rays.push_back(std::move(p));
        for (auto& nr : created) rays.push_back(std::move(nr));
        if (rays.size() > max_rays) throw RayBudgetExceeded(n, max_rays);
    }

    if (!lineality.empty())
        throw std::runtime_error("extremal_rays: facet normals do not span; the cone contains "
                                 "a line");

    std::vector<std::vector<Int>> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.vec));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());

    for (const auto& r : out)
        for (const auto& nrm : normals)
            if (dot(nrm, r) < 0)
                throw std::logic_error("extremal_rays: enumerated ray violates a facet");

    cone.rays = std::move(out);
    return cone;
}

}  // namespace

ConeDescription extremal_rays(int n) {
    return enumerate_rays(n, std::numeric_limits<std::size_t>::max());
}

ConeDescription extremal_rays(int n, std::size_t max_rays) {
    return enumerate_rays(n, max_rays);
}

SymmetricDivisor divisor_from_coordinates(int n, const std::vector<Int>& coords) {
    if (coords.size() != static_cast<size_t>(n / 2 - 1))
        throw std::invalid_argument("coordinate vector has wrong dimension");
    std::vector<Rat> c(static_cast<size_t>(n / 2) + 1, Rat(0));
    for (std::size_t i = 0; i < coords.size(); ++i) c[i + 2] = Rat(coords[i]);
    return SymmetricDivisor(n, std::move(c));
}

SymmetricDivisor sample_fnef(const ConeDescription& cone, std::uint64_t seed) {
    if (cone.rays.empty()) throw std::invalid_argument("sample_fnef: no rays available");
    // mt19937_64 output is pinned by the standard; % keeps the stream
    // identical across library implementations, unlike distributions
    std::mt19937_64 rng(seed);
    std::vector<Int> combined(static_cast<size_t>(cone.dim), Int(0));
    bool nonzero = false;
    for (const auto& ray : cone.rays) {
        int c = static_cast<int>(rng() % 10);
        if (c == 0) continue;
        nonzero = true;
        for (std::size_t i = 0; i < combined.size(); ++i) combined[i] += c * ray[i];
    }
    if (!nonzero) {
        const auto& ray = cone.rays[static_cast<size_t>(seed % cone.rays.size())];
        combined.assign(ray.begin(), ray.end());
    }
    return divisor_from_coordinates(cone.n, combined);
}

SymmetricDivisor sample_fnef(int n, std::uint64_t seed) {
    return sample_fnef(extremal_rays(n), seed);
}

}  // namespace nefcert
