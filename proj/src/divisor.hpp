#ifndef NEFCERT_DIVISOR_HPP
#define NEFCERT_DIVISOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "splits.hpp"

namespace nefcert {

/* S_n-invariant divisor class L = sum_{i=2..n/2} c_i Delta_i on the
 * moduli space of stable n-pointed rational curves. */
class SymmetricDivisor {
  public:
    /* coeffs[i] is c_i for 2 <= i <= n/2; entries outside that range must
     * be absent or zero. */
    SymmetricDivisor(int n, std::vector<Rat> coeffs);

    static SymmetricDivisor zero(int n);

    int n() const { return n_; }
    int basis_size() const { return n_ / 2 - 1; }  // number of c_i
    const Rat& c(int i) const;                     // 2 <= i <= n/2

    /* (c_2, ..., c_{n/2}) as a dense vector, for cone membership. */
    std::vector<Rat> coordinate_vector() const;

    bool operator==(const SymmetricDivisor&) const = default;

  private:
    int n_;
    std::vector<Rat> c_;  // c_[i] valid for i in [2, n/2]
};

/* The symmetric coefficient function f on Z/nZ with
 * f(i) = f(n-i) = -c_i and f(0) = f(1) = f(n-1) = 0. */
class FFunction {
  public:
    FFunction(int n, std::vector<Rat> values);  // values.size() == n

    int n() const { return n_; }
    /* f at x mod n; accepts any integer. */
    const Rat& at(long long x) const;

    bool operator==(const FFunction&) const = default;

  private:
    int n_;
    std::vector<Rat> v_;
};

FFunction f_from_symmetric(const SymmetricDivisor& L);

/* L . F(a,b,c,d) = f(a)+f(b)+f(c)+f(d) - f(a+b) - f(b+c) - f(a+c).
 * The value does not depend on how the multiset is ordered. */
Rat f_inequality_value(const FFunction& f, const FQuad& q);

/* Same, for an explicit ordering; exposed so tests can sweep all 24. */
Rat f_inequality_value_ordered(const FFunction& f, int a, int b, int c, int d);

struct FnefResult {
    bool fnef;
    std::optional<FQuad> witness;  // first violating quad in enumeration order
    std::optional<Rat> value;      // its (negative) F-inequality value
};

/* Check every quad of n; n >= 4. */
FnefResult is_fnef(const SymmetricDivisor& L);

/* Divisor expression D = -sum b_{I,J} Delta_{I,J} over all canonical
 * splits of [m]; non-proper splits carry the psi-class convention
 * Delta_{{i},rest} = -psi_i. Storage is dense over split indices. */
class BoundaryExpression {
  public:
    explicit BoundaryExpression(int m);  // all-zero, 1 <= m <= kMaxExpressionMarkers

    int m() const { return m_; }
    std::size_t size() const { return b_.size(); }

    const Rat& at_index(std::size_t t) const { return b_[t]; }
    Rat& at_index(std::size_t t) { return b_[t]; }
    /* Accepts either side's mask; stores under the canonical side. */
    const Rat& at_side(std::uint64_t mask) const;
    Rat& at_side(std::uint64_t mask);

    bool operator==(const BoundaryExpression&) const = default;

  private:
    int m_;
    std::vector<Rat> b_;
};

/* The expression of L on m = n markers: b_{I,J} = f(|I|). */
BoundaryExpression full_boundary_expression(const SymmetricDivisor& L);

/* Total function on unordered pairs {i,j} of [m], i != j. Markers are
 * 0-based in code and 1-based in serialized form. Used both for weight
 * certificates w and for Keel cut-shift functions u. */
class PairWeights {
  public:
    explicit PairWeights(int m);  // all-zero

    int m() const { return m_; }
    const Rat& at(int i, int j) const { return w_[pair_index(i, j)]; }
    Rat& at(int i, int j) { return w_[pair_index(i, j)]; }

    std::size_t pair_count() const { return w_.size(); }
    std::size_t pair_index(int i, int j) const;

    bool operator==(const PairWeights&) const = default;

  private:
    int m_;
    std::vector<Rat> w_;
};

using WeightCertificate = PairWeights;

/* sum over i in side, j outside of w(i,j). */
Rat cut_value(const PairWeights& w, std::uint64_t side_mask);

/* Keel-relation shift: b'_{I,J} = b_{I,J} + sum_{i in I, j in J} u(i,j).
 * The result represents the same divisor class. */
BoundaryExpression apply_cut_shift(const BoundaryExpression& e, const PairWeights& u);

}  // namespace nefcert

#endif
