#pragma once

// Counts of pencils on a general curve: adjusted Brill-Noether numbers,
// adjusted Castelnuovo numbers, the moving-point counts n and m, the degree
// ell of a one-nodal family against a pointed Brill-Noether divisor, and the
// aggregate sums that form the right-hand sides of the test-surface relations.

#include <bn2/exactnum.hpp>

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bn2 {

/// Ramification pair (a0, a1) of a pencil at a point.
struct SchubertIndex {
  int a0 = 0;
  int a1 = 0;

  constexpr bool valid_for(int d) const { return 0 <= a0 && a0 <= a1 && a1 <= d - 1; }
  constexpr int weight() const { return a0 + a1; }

  /// Complementary index (d-1-a1, d-1-a0) seen from the other side of a node.
  constexpr SchubertIndex dual(int d) const { return {d - 1 - a1, d - 1 - a0}; }

  auto operator<=>(const SchubertIndex&) const = default;
};

inline std::string to_string(const SchubertIndex& s) {
  return "(" + std::to_string(s.a0) + "," + std::to_string(s.a1) + ")";
}

/// All Schubert indices of type 1,d in lexicographic order.
inline std::vector<SchubertIndex> schubert_indices(int d) {
  std::vector<SchubertIndex> out;
  for (int a0 = 0; a0 <= d - 1; ++a0)
    for (int a1 = a0; a1 <= d - 1; ++a1) out.push_back({a0, a1});
  return out;
}

/// Raised when a count is requested outside the regime where it is defined.
class PreconditionError : public std::invalid_argument {
 public:
  enum class Reason { InvalidIndex, WrongRho, NegativeReducedRho, BadParameters };

  PreconditionError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

constexpr int rho(int g, int r, int d) { return g - (r + 1) * (g - d + r); }

/// Adjusted Brill-Noether number for a pencil with ramification at marked points.
inline int rho(int g, int r, int d, std::span<const SchubertIndex> ramifications) {
  if (r != 1 && !ramifications.empty())
    throw PreconditionError(PreconditionError::Reason::BadParameters,
                            "ramification pairs describe pencils (r = 1), got r = " + std::to_string(r));
  int out = rho(g, r, d);
  for (const auto& s : ramifications) {
    if (!s.valid_for(d))
      throw PreconditionError(PreconditionError::Reason::InvalidIndex,
                              "Schubert index " + to_string(s) + " is not of type 1," + std::to_string(d));
    out -= s.weight();
  }
  return out;
}

inline int rho(int g, int r, int d, std::initializer_list<SchubertIndex> ramifications) {
  return rho(g, r, d, std::span<const SchubertIndex>(ramifications.begin(), ramifications.size()));
}

struct ReducedPencil {
  int d = 0;
  SchubertIndex alpha;
  SchubertIndex beta;

  bool valid() const { return alpha.valid_for(d) && beta.valid_for(d); }

  bool operator==(const ReducedPencil&) const = default;
};

/// Removes the base locus a0*p + b0*q. The reduced indices may exceed type
/// 1,d' (see ReducedPencil::valid), in which case no such pencil exists.
inline ReducedPencil reduce_base_locus(int d, SchubertIndex alpha, SchubertIndex beta) {
  if (!alpha.valid_for(d) || !beta.valid_for(d))
    throw PreconditionError(PreconditionError::Reason::InvalidIndex,
                            "indices " + to_string(alpha) + ", " + to_string(beta) + " not of type 1," +
                                std::to_string(d));
  ReducedPencil out{d - alpha.a0 - beta.a0, {0, alpha.a1 - alpha.a0}, {0, beta.a1 - beta.a0}};
  if (out.d < 1)
    throw PreconditionError(PreconditionError::Reason::InvalidIndex,
                            "base locus " + std::to_string(alpha.a0) + "p + " + std::to_string(beta.a0) +
                                "q exhausts degree " + std::to_string(d));
  return out;
}

namespace detail {

inline void check_ramification_sequence(std::span<const int> seq, int r, int d, const char* name) {
  if (seq.size() != static_cast<std::size_t>(r + 1))
    throw PreconditionError(PreconditionError::Reason::InvalidIndex,
                            std::string(name) + " must have r+1 = " + std::to_string(r + 1) + " entries");
  if (seq.front() < 0 || !std::is_sorted(seq.begin(), seq.end()) || seq.back() > d - r)
    throw PreconditionError(PreconditionError::Reason::InvalidIndex,
                            std::string(name) + " is not a Schubert index of type " + std::to_string(r) + "," +
                                std::to_string(d));
}

}  // namespace detail

/// g! * det(1/[alpha_i + i + beta_{r-j} + r - j + g - d]!)_{0<=i,j<=r}.
///
/// Evaluated for any valid indices. When rho(g,r,d,alpha,beta) = 0 the value is
/// the number of g^r_d's with the prescribed ramification at two general points
/// (a nonnegative integer); outside that regime it may be fractional.
inline BigRational castelnuovo_general(int g, int r, int d, std::span<const int> alpha, std::span<const int> beta) {
  if (g < 0 || r < 0)
    throw PreconditionError(PreconditionError::Reason::BadParameters, "castelnuovo_general needs g >= 0, r >= 0");
  detail::check_ramification_sequence(alpha, r, d, "alpha");
  detail::check_ramification_sequence(beta, r, d, "beta");

  const int n = r + 1;
  std::vector<BigRational> entry(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entry[static_cast<std::size_t>(i * n + j)] = inv_factorial_or_zero(alpha[i] + i + beta[r - j] + r - j + g - d);

  // Leibniz expansion; r is tiny in every use.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BigRational det = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    BigRational term = 1;
    for (int i = 0; i < n && term != 0; ++i) term *= entry[static_cast<std::size_t>(i * n + perm[i])];
    if (inversions % 2) det -= term;
    else det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return BigRational(factorial(g)) * det;
}

inline BigRational castelnuovo_general(int g, int r, int d, std::initializer_list<int> alpha,
                                       std::initializer_list<int> beta) {
  return castelnuovo_general(g, r, d, std::span<const int>(alpha.begin(), alpha.size()),
                             std::span<const int>(beta.begin(), beta.size()));
}

/// Adjusted Castelnuovo number N_{g,d,alpha,beta} for pencils, via the
/// two-term closed form after removing the base locus a0*p + b0*q.
///
/// The reduction is an exact identity of the determinant, so the reduced
/// indices are not re-validated against the reduced degree.
inline BigRational castelnuovo_N(int g, int d, SchubertIndex alpha, SchubertIndex beta = {0, 0}) {
  if (g < 0) throw PreconditionError(PreconditionError::Reason::BadParameters, "castelnuovo_N needs g >= 0");
  if (!alpha.valid_for(d) || !beta.valid_for(d))
    throw PreconditionError(PreconditionError::Reason::InvalidIndex,
                            "indices " + to_string(alpha) + ", " + to_string(beta) + " not of type 1," +
                                std::to_string(d));
  const int dr = d - alpha.a0 - beta.a0;
  const int a1 = alpha.a1 - alpha.a0;
  const int b1 = beta.a1 - beta.a0;
  const int gd = g - dr;
  return BigRational(factorial(g)) * (inv_factorial_or_zero(b1 + 1 + gd) * inv_factorial_or_zero(a1 + 1 + gd) -
                                      inv_factorial_or_zero(gd) * inv_factorial_or_zero(a1 + b1 + 2 + gd));
}

/// True when n_{g,d,alpha} (and m_{g,d,alpha}) is defined: alpha valid,
/// rho(g,1,d,alpha) = -1 and rho(g,1,d-a0) >= 0.
inline bool moving_point_count_defined(int g, int d, SchubertIndex alpha) {
  return g >= 0 && alpha.valid_for(d) && rho(g, 1, d) - alpha.weight() == -1 && rho(g, 1, d - alpha.a0) >= 0;
}

namespace detail {

inline void check_moving_point(int g, int d, SchubertIndex alpha, const char* what) {
  const std::string tag = std::string(what) + "_{" + std::to_string(g) + "," + std::to_string(d) + "," +
                          to_string(alpha) + "}";
  if (g < 0 || !alpha.valid_for(d))
    throw PreconditionError(PreconditionError::Reason::InvalidIndex, tag + ": index not of type 1,d");
  const int r = rho(g, 1, d) - alpha.weight();
  if (r != -1)
    throw PreconditionError(PreconditionError::Reason::WrongRho,
                            tag + ": adjusted rho is " + std::to_string(r) + ", expected -1");
  const int reduced = rho(g, 1, d - alpha.a0);
  if (reduced < 0)
    throw PreconditionError(PreconditionError::Reason::NegativeReducedRho,
                            tag + ": rho(g,1,d-a0) = " + std::to_string(reduced) + " < 0");
}

}  // namespace detail

/// Number of (point, pencil) pairs on a general genus-g curve with
/// ramification alpha at the point, when the adjusted rho is -1.
inline BigInt count_n(int g, int d, SchubertIndex alpha) {
  detail::check_moving_point(g, d, alpha, "n");
  const int dr = d - alpha.a0;
  const long x = 2L * dr - g;  // a1 - a0 = x - 1 >= 1 under the preconditions
  return BigInt((x - 1) * x * (x + 1)) * binomial(g, dr);
}

/// As count_n, with a second moving point of simple ramification.
inline BigInt count_m(int g, int d, SchubertIndex alpha) {
  detail::check_moving_point(g, d, alpha, "m");
  return count_n(g, d - alpha.a0, {0, alpha.a1 - alpha.a0}) * (3 * g - 1);
}

/// Degree of the one-nodal curve family against the pointed Brill-Noether
/// divisor of pencils of degree k in genus g = 2k-2.
inline BigInt count_ell(int g, int k) {
  if (k < 2 || g != 2 * k - 2)
    throw PreconditionError(PreconditionError::Reason::BadParameters,
                            "ell_{g,k} needs k >= 2 and g = 2k-2, got g=" + std::to_string(g) +
                                ", k=" + std::to_string(k));
  if (k == 2) return 2;
  return 2 * factorial(2 * k - 3) / (factorial(k - 2) * factorial(k - 1));
}

namespace detail {

inline BigInt require_integer(const BigRational& q, const char* what) {
  if (!is_integer(q))
    throw std::domain_error(std::string(what) + " left the counting regime (non-integral value " + to_string(q) + ")");
  return q.get_num();
}

}  // namespace detail

/// T_i = sum over alpha with rho(i,1,k,alpha) = -1 of
/// n_{i,k,alpha} * n_{g-i,k,dual(alpha)}; undefined factors contribute 0.
inline BigInt sum_T(int i, int g, int k) {
  if (i < 2 || 2 * i > g || k < 1)
    throw PreconditionError(PreconditionError::Reason::BadParameters,
                            "T_i needs 2 <= i <= floor(g/2) and k >= 1");
  BigInt total = 0;
  for (const auto& alpha : schubert_indices(k)) {
    const auto other = alpha.dual(k);
    if (!moving_point_count_defined(i, k, alpha) || !moving_point_count_defined(g - i, k, other)) continue;
    total += count_n(i, k, alpha) * count_n(g - i, k, other);
  }
  return total;
}

/// D_{ij} = sum n_{i,k,alpha} n_{j,k,beta} N_{g-i-j,k,dual(alpha),dual(beta)}.
inline BigInt sum_D(int i, int j, int g, int k) {
  if (i < 2 || i > j || j > g - 3 || i + j > g - 1 || k < 1)
    throw PreconditionError(PreconditionError::Reason::BadParameters,
                            "D_{ij} needs 2 <= i <= j <= g-3, i+j <= g-1 and k >= 1");
  BigRational total = 0;
  const auto indices = schubert_indices(k);
  for (const auto& alpha : indices) {
    if (!moving_point_count_defined(i, k, alpha)) continue;
    for (const auto& beta : indices) {
      if (!moving_point_count_defined(j, k, beta)) continue;
      total += BigRational(count_n(i, k, alpha) * count_n(j, k, beta)) *
               castelnuovo_N(g - i - j, k, alpha.dual(k), beta.dual(k));
    }
  }
  return detail::require_integer(total, "D_{ij}");
}

/// The raw (S4) right-hand side: sum 2 N_{g-i-2,k,(0,1),dual(alpha)} n_{i,k,alpha}.
inline BigInt sum_S4(int i, int g, int k) {
  if (i < 2 || i > g - 3 || k < 2)
    throw PreconditionError(PreconditionError::Reason::BadParameters, "S4 sum needs 2 <= i <= g-3 and k >= 2");
  BigRational total = 0;
  for (const auto& alpha : schubert_indices(k)) {
    if (!moving_point_count_defined(i, k, alpha)) continue;
    total += 2 * castelnuovo_N(g - i - 2, k, {0, 1}, alpha.dual(k)) * BigRational(count_n(i, k, alpha));
  }
  return detail::require_integer(total, "S4 sum");
}

/// sum over a0 + a1 = g-i-1 of m_{i,k,alpha} N_{g-i-1,k,dual(alpha)}.
inline BigInt sum_S16(int i, int g, int k) {
  if (2 * i < g - 1 || i > g - 3 || k < 1)
    throw PreconditionError(PreconditionError::Reason::BadParameters, "S16 sum needs floor(g/2) <= i <= g-3");
  BigRational total = 0;
  for (const auto& alpha : schubert_indices(k)) {
    if (alpha.weight() != g - i - 1 || !moving_point_count_defined(i, k, alpha)) continue;
    total += BigRational(count_m(i, k, alpha)) * castelnuovo_N(g - i - 1, k, alpha.dual(k));
  }
  return detail::require_integer(total, "S16 sum");
}

}  // namespace bn2
