#include "divisor.hpp"

#include <stdexcept>

namespace nefcert {

SymmetricDivisor::SymmetricDivisor(int n, std::vector<Rat> coeffs) : n_(n) {
    if (n < 4) throw std::invalid_argument("symmetric divisor needs n >= 4");
    c_.assign(static_cast<size_t>(n / 2) + 1, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i >= 2 && i <= static_cast<size_t>(n / 2))
            c_[i] = std::move(coeffs[i]);
        else if (coeffs[i] != 0)
            throw std::invalid_argument("coefficient index out of range: " + std::to_string(i));
    }
}

SymmetricDivisor SymmetricDivisor::zero(int n) {
    return SymmetricDivisor(n, {});
}

const Rat& SymmetricDivisor::c(int i) const {
    if (i < 2 || i > n_ / 2) throw std::out_of_range("basis index " + std::to_string(i));
    return c_[static_cast<size_t>(i)];
}

std::vector<Rat> SymmetricDivisor::coordinate_vector() const {
    return std::vector<Rat>(c_.begin() + 2, c_.end());
}

FFunction::FFunction(int n, std::vector<Rat> values) : n_(n), v_(std::move(values)) {
    if (n < 1 || v_.size() != static_cast<size_t>(n))
        throw std::invalid_argument("f-function table must have n entries");
}

const Rat& FFunction::at(long long x) const {
    long long r = x % n_;
    if (r < 0) r += n_;
    return v_[static_cast<size_t>(r)];
}

FFunction f_from_symmetric(const SymmetricDivisor& L) {
    int n = L.n();
    std::vector<Rat> v(static_cast<size_t>(n), Rat(0));
    for (int i = 2; i <= n / 2; ++i) {
        v[static_cast<size_t>(i)] = -L.c(i);
        v[static_cast<size_t>(n - i)] = -L.c(i);
    }
    return FFunction(n, std::move(v));
}

Rat f_inequality_value_ordered(const FFunction& f, int a, int b, int c, int d) {
    return f.at(a) + f.at(b) + f.at(c) + f.at(d) - f.at(a + b) - f.at(b + c) - f.at(a + c);
}

Rat f_inequality_value(const FFunction& f, const FQuad& q) {
    if (q.n() != f.n())
        throw std::invalid_argument("quad sum " + std::to_string(q.n()) +
                                    " does not match n = " + std::to_string(f.n()));
    return f_inequality_value_ordered(f, q.q[0], q.q[1], q.q[2], q.q[3]);
}

FnefResult is_fnef(const SymmetricDivisor& L) {
    FFunction f = f_from_symmetric(L);
    for (const FQuad& q : four_quads(L.n())) {
        Rat v = f_inequality_value(f, q);
        if (v < 0) return {false, q, std::move(v)};
    }
    return {true, std::nullopt, std::nullopt};
}

BoundaryExpression::BoundaryExpression(int m) : m_(m) {
    check_expression_m(m);
    b_.assign(m == 1 ? 0 : split_count(m), Rat(0));
}

const Rat& BoundaryExpression::at_side(std::uint64_t mask) const {
    if (!(mask & 1)) mask = (((std::uint64_t{1} << m_) - 1) ^ mask);
    return b_[split_index_from_mask(mask)];
}

Rat& BoundaryExpression::at_side(std::uint64_t mask) {
    if (!(mask & 1)) mask = (((std::uint64_t{1} << m_) - 1) ^ mask);
    return b_[split_index_from_mask(mask)];
}

BoundaryExpression full_boundary_expression(const SymmetricDivisor& L) {
    FFunction f = f_from_symmetric(L);
    BoundaryExpression e(L.n());
    for (std::size_t t = 0; t < e.size(); ++t)
        e.at_index(t) = f.at(std::popcount(split_mask_from_index(t)));
    return e;
}

PairWeights::PairWeights(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("pair weights need m >= 1");
    w_.assign(static_cast<size_t>(m) * (m - 1) / 2, Rat(0));
}

std::size_t PairWeights::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= m_ || i == j) throw std::out_of_range("pair index");
    // row-major over i < j
    return static_cast<size_t>(i) * (2 * m_ - i - 1) / 2 + static_cast<size_t>(j - i - 1);
}

Rat cut_value(const PairWeights& w, std::uint64_t side_mask) {
    Rat s(0);
    int m = w.m();
    for (int i = 0; i < m; ++i) {
        if (!(side_mask >> i & 1)) continue;
        for (int j = 0; j < m; ++j)
            if (!(side_mask >> j & 1)) s += w.at(i, j);
    }
    return s;
}

BoundaryExpression apply_cut_shift(const BoundaryExpression& e, const PairWeights& u) {
    if (u.m() != e.m()) throw std::invalid_argument("cut shift dimension mismatch");
    BoundaryExpression out = e;
    for (std::size_t t = 0; t < out.size(); ++t)
        out.at_index(t) += cut_value(u, split_mask_from_index(t));
    return out;
}

}  // namespace nefcert
