#pragma once

// Test-surface relations: one row of the relation matrix Q_g per surface (with
// a symbolic right-hand side evaluable at a pencil degree k), and the column
// matrix T_g for which Q_g * T_g is expected to be lower-triangular.

#include <bn2/basis.hpp>
#include <bn2/enumerative.hpp>
#include <bn2/exactnum.hpp>
#include <bn2/solver.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bn2 {

struct RhsDescriptor {
  enum class Kind {
    Zero,
    TOverNorm,   // T_i / ((2i-2)(2(g-i)-2))
    DOverNorm,   // D_ij / ((2i-2)(2j-2))
    NOver,       // n_{g-2,k,(0,1)} / (g-3)
    DOver6,      // D_{2,i} / (6(i-1))
    FourN,       // 4 N_{g-4,k,(0,1),(0,1)}
    TwoEll,      // 2 ell_{g-2,k}
    S16Sum,      // S16 sum / (2i-2)
    S16Special,  // m_{g-2,k,(0,1)} / (2g-6)
  };

  Kind kind = Kind::Zero;
  int i = 0;
  int j = 0;

  bool operator==(const RhsDescriptor&) const = default;
};

/// Human-readable form of a right-hand side in genus g, with k left symbolic.
inline std::string describe(const RhsDescriptor& rhs, int g) {
  using K = RhsDescriptor::Kind;
  const auto s = [](int v) { return std::to_string(v); };
  switch (rhs.kind) {
    case K::Zero: return "0";
    case K::TOverNorm: return "T(" + s(rhs.i) + ")/" + s((2 * rhs.i - 2) * (2 * (g - rhs.i) - 2));
    case K::DOverNorm:
      return "D(" + s(rhs.i) + "," + s(rhs.j) + ")/" + s((2 * rhs.i - 2) * (2 * rhs.j - 2));
    case K::NOver: return "n(" + s(g - 2) + ",k,(0,1))/" + s(g - 3);
    case K::DOver6: return "D(2," + s(rhs.i) + ")/" + s(6 * (rhs.i - 1));
    case K::FourN: return "4*N(" + s(g - 4) + ",k,(0,1),(0,1))";
    case K::TwoEll: return "2*ell(" + s(g - 2) + ",k)";
    case K::S16Sum: return "S16(" + s(rhs.i) + ")/" + s(2 * rhs.i - 2);
    case K::S16Special: return "m(" + s(g - 2) + ",k,(0,1))/" + s(2 * g - 6);
  }
  return "?";
}

struct Relation {
  std::string source;  // surface tag with its parameters, e.g. "S2(i=2,j=3)"
  int genus = 0;
  std::map<ClassLabel, BigRational> coefficients;
  RhsDescriptor rhs;
};

/// Exact value of the relation's right-hand side for pencils of degree k.
/// Nonzero right-hand sides only make sense in genus 2k.
inline BigRational evaluate_rhs(const Relation& rel, int k) {
  using K = RhsDescriptor::Kind;
  const int g = rel.genus;
  const auto& r = rel.rhs;
  if (r.kind == K::Zero) return 0;
  if (g != 2 * k)
    throw std::invalid_argument("relation " + rel.source + " lives in genus " + std::to_string(g) +
                                ", which is not 2k for k = " + std::to_string(k));
  const auto q = [](const BigInt& num, long den) { return make_rational(num, BigInt(den)); };
  switch (r.kind) {
    case K::Zero: return 0;
    case K::TOverNorm: return q(sum_T(r.i, g, k), (2L * r.i - 2) * (2L * (g - r.i) - 2));
    case K::DOverNorm: return q(sum_D(r.i, r.j, g, k), (2L * r.i - 2) * (2L * r.j - 2));
    case K::NOver: return q(count_n(g - 2, k, {0, 1}), g - 3);
    case K::DOver6: return q(sum_D(2, r.i, g, k), 6L * (r.i - 1));
    case K::FourN: return 4 * castelnuovo_N(g - 4, k, {0, 1}, {0, 1});
    case K::TwoEll: return BigRational(2 * count_ell(g - 2, k));
    case K::S16Sum: return q(sum_S16(r.i, g, k), 2L * r.i - 2);
    case K::S16Special: return q(count_m(g - 2, k, {0, 1}), 2L * g - 6);
  }
  throw std::logic_error("unhandled right-hand side");
}

struct RelationSystem {
  int genus = 0;
  Basis basis;
  std::vector<Relation> rows;

  explicit RelationSystem(int g) : genus(g), basis(g) {}
};

namespace detail {

/// Accumulates raw template terms into canonical coefficients.
class RowBuilder {
 public:
  RowBuilder(int g, std::string source, RhsDescriptor rhs = {}) : rel_{std::move(source), g, {}, rhs} {}

  RowBuilder& add(long coeff, const ClassLabel& raw) {
    for (const auto& [label, mult] : canonicalize(raw, rel_.genus)) rel_.coefficients[label] += coeff * mult;
    return *this;
  }

  Relation finish() {
    std::erase_if(rel_.coefficients, [](const auto& kv) { return kv.second == 0; });
    return std::move(rel_);
  }

 private:
  Relation rel_;
};

inline std::string tag(const std::string& s, int i) { return s + "(i=" + std::to_string(i) + ")"; }

}  // namespace detail

/// All test-surface relations in genus g >= 5, in the fixed group order
/// S1, S2, ..., S18. The (S10) surface needs g >= 6 and is left out in genus 5.
inline RelationSystem build_relations(int g) {
  if (g < 5) throw std::invalid_argument("build_relations needs g >= 5, got " + std::to_string(g));
  using L = ClassLabel;
  using K = RhsDescriptor::Kind;
  using detail::RowBuilder;
  using detail::tag;

  const auto k1 = L::kappa1_sq();
  const auto k2 = L::kappa2();
  const auto d0sq = L::delta0_sq();
  const auto d1sq = L::delta1_sq();
  const auto ld0 = L::lambda_delta0();
  const auto ld1 = L::lambda_delta1();
  const auto ld2 = L::lambda_delta2();
  const auto om = [](int i) { return L::omega(i); };
  const auto la = [](int i) { return L::lambda(i); };
  const auto d = [](int i, int j) { return L::delta(i, j); };
  const auto th = [](int i) { return L::theta(i); };

  RelationSystem sys(g);
  auto& rows = sys.rows;

  for (int i = 2; i <= g / 2; ++i)
    rows.push_back(RowBuilder(g, tag("S1", i), {K::TOverNorm, i}).add(2, k1).add(-1, om(i)).add(-1, om(g - i)).finish());

  for (int i = 2; i <= g - 3; ++i)
    for (int j = i; j <= g - 3 && i + j <= g - 1; ++j)
      rows.push_back(RowBuilder(g, "S2(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", {K::DOverNorm, i, j})
                         .add(2, k1)
                         .add(1, d(i, j))
                         .finish());

  rows.push_back(RowBuilder(g, "S3", {K::NOver})
                     .add(4, k1)
                     .add(-1, om(2))
                     .add(-1, om(g - 2))
                     .add(-1, d(1, g - 2))
                     .add(2, d(0, g - 2))
                     .finish());

  for (int i = 2; i <= g - 3; ++i)
    rows.push_back(RowBuilder(g, tag("S4", i), {K::DOver6, i})
                       .add(4, k1)
                       .add(-1, d(1, i))
                       .add(2, d(0, i))
                       .add(1, d(2, i))
                       .finish());

  rows.push_back(RowBuilder(g, "S5").add(2, k1).add(-12, d(0, g - 1)).add(2, d1sq).add(-1, ld1).finish());

  for (int i = 3; i <= g - 3; ++i)
    rows.push_back(RowBuilder(g, tag("S6", i))
                       .add(2, k1)
                       .add(-1, la(i))
                       .add(1, d(1, g - i))
                       .add(-12, d(0, g - i))
                       .finish());
  rows.push_back(RowBuilder(g, tag("S6", g - 2)).add(2, k1).add(-1, ld2).add(1, d(1, 2)).add(-12, d(0, 2)).finish());

  rows.push_back(RowBuilder(g, "S7", {K::FourN})
                     .add(8, k1)
                     .add(1, d(2, 2))
                     .add(-2, d(1, 2))
                     .add(1, d(1, 1))
                     .add(2, d1sq)
                     .add(8, d0sq)
                     .add(4, d(0, 0))
                     .add(4, d(0, 2))
                     .add(-4, d(0, 1))
                     .finish());

  rows.push_back(RowBuilder(g, "S8")
                     .add(2, k1)
                     .add(288, d0sq)
                     .add(24, ld0)
                     .add(2, d1sq)
                     .add(-2, ld1)
                     .add(144, d(0, 0))
                     .add(1, d(1, 1))
                     .add(-24, d(0, 1))
                     .finish());

  for (int j = 2; j <= g - 3; ++j)
    rows.push_back(RowBuilder(g, "S9(j=" + std::to_string(j) + ")")
                       .add(2, k1)
                       .add(2, d(1, j))
                       .add(1, d(j, g - j - 2))
                       .add(-1, d(2, j))
                       .add(-2, d(j, g - j - 1))
                       .add(-1, om(j))
                       .add(-1, om(g - j))
                       .finish());

  if (g >= 6) {
    rows.push_back(RowBuilder(g, "S10")
                       .add(2, k1)
                       .add(g == 6 ? 18 : 12, d1sq)
                       .add(6, d(1, 1))
                       .add(3, d(1, g - 5))
                       .add(2, d(1, 3))
                       .add(1, d(3, g - 5))
                       .add(3, d(1, g - 3))
                       .add(-1, om(3))
                       .add(-1, om(g - 3))
                       .add(-3, d(2, g - 3))
                       .add(-3, d(2, g - 5))
                       .add(-6, d(1, 2))
                       .add(-6, d(1, g - 4))
                       .add(-2, d(3, g - 4))
                       .add(-3, d(1, 2))
                       .add(-1, d(2, 3))
                       .add(6, d(2, g - 4))
                       .add(3, d(2, 2))
                       .finish());
  }

  rows.push_back(RowBuilder(g, "S11")
                     .add(2, k1)
                     .add(-1, la(g - 3))
                     .add(6, d1sq)
                     .add(3, d(1, 1))
                     .add(-3, ld1)
                     .add(1, d(1, 3))
                     .add(-36, d(0, 1))
                     .add(-12, d(0, 3))
                     .add(3, ld2)
                     .add(36, d(0, 2))
                     .add(-3, d(1, 2))
                     .finish());

  rows.push_back(RowBuilder(g, "S12")
                     .add(2, k1)
                     .add(-3, ld1)
                     .add(-24, d(0, 1))
                     .add(-12, d(0, g - 3))
                     .add(-12, d(0, g - 1))
                     .add(6, d1sq)
                     .add(2, d(1, 1))
                     .add(1, d(1, g - 3))
                     .add(-1, la(3))
                     .add(2, ld2)
                     .add(24, d(0, g - 2))
                     .add(-2, d(1, g - 2))
                     .add(1, ld2)
                     .add(12, d(0, 2))
                     .add(-1, d(1, 2))
                     .finish());

  const long c13 = 2L * (g - 3);
  rows.push_back(RowBuilder(g, "S13", {K::TwoEll})
                     .add(4 * c13, k1)
                     .add(2 * c13, d(0, 0))
                     .add(4 * c13, d0sq)
                     .add(c13, d(0, 2))
                     .add(2, d(0, g - 2))
                     .add(-1, om(2))
                     .add(-1, om(g - 2))
                     .add(-c13, d(0, 1))
                     .add(-1, d(1, g - 2))
                     .add(-2, d(0, 1))
                     .add(-1, d(1, 2))
                     .add(1, d(1, 1))
                     .add(2, d1sq)
                     .finish());

  const long c14 = 2L * g - 4;
  rows.push_back(RowBuilder(g, "S14")
                     .add(2 * c14, k1)
                     .add(-c14, ld0)
                     .add(-24 * c14, d0sq)
                     .add(-12 * c14, d(0, 0))
                     .add(c14, d(0, 1))
                     .add(-12, d(0, g - 1))
                     .add(12, d(0, 1))
                     .add(-1, d(1, 1))
                     .finish());

  rows.push_back(RowBuilder(g, "S15")
                     .add(8L * g * g - 26L * g + 20, k1)
                     .add(2L * g - 4, k2)
                     .add(4L - 2L * g, d1sq)
                     .add(8L * (g - 1) * (g - 2), d0sq)
                     .finish());

  for (int i = g / 2; i <= g - 3; ++i)
    rows.push_back(RowBuilder(g, tag("S16", i), {K::S16Sum, i})
                       .add(4L * i - 1, k1)
                       .add(1, k2)
                       .add(1, om(i))
                       .add(-1, om(i + 1))
                       .add(1, d1sq)
                       .add(2L * i - 1, d(1, g - i - 1))
                       .finish());
  rows.push_back(RowBuilder(g, tag("S16", g - 2), {K::S16Special})
                     .add(4L * g - 9, k1)
                     .add(1, k2)
                     .add(1, om(g - 2))
                     .add(4L * g - 8, d1sq)
                     .add(2L * g - 5, d(1, 1))
                     .finish());

  rows.push_back(RowBuilder(g, "S17")
                     .add(3, k1)
                     .add(1, k2)
                     .add(-2, ld0)
                     .add(1, ld1)
                     .add(-44, d0sq)
                     .add(-1, d1sq)
                     .add(12, d(0, g - 1))
                     .add(-12, d(0, 0))
                     .add(1, th(1))
                     .finish());

  for (int i = 4; i <= (g + 1) / 2; ++i)
    rows.push_back(RowBuilder(g, tag("S18", i))
                       .add(3, k1)
                       .add(1, k2)
                       .add(-1, om(i))
                       .add(-1, om(g - i + 1))
                       .add(-1, d1sq)
                       .add(1, d(i - 1, g - i))
                       .add(-1, la(i))
                       .add(-1, la(g - i + 1))
                       .add(1, ld1)
                       .add(-12, d(0, i - 1))
                       .add(-12, d(0, g - i))
                       .add(12, d(0, g - 1))
                       .add(12, th(i - 1))
                       .finish());
  rows.push_back(RowBuilder(g, tag("S18", 3))
                     .add(3, k1)
                     .add(1, k2)
                     .add(-1, om(3))
                     .add(-1, om(g - 2))
                     .add(-1, d1sq)
                     .add(1, d(2, g - 3))
                     .add(-1, la(3))
                     .add(-1, ld2)
                     .add(1, ld1)
                     .add(-12, d(0, 2))
                     .add(-12, d(0, g - 3))
                     .add(12, d(0, g - 1))
                     .add(12, th(2))
                     .finish());
  rows.push_back(RowBuilder(g, tag("S18", 2))
                     .add(3, k1)
                     .add(1, k2)
                     .add(-1, om(2))
                     .add(1, d(1, g - 2))
                     .add(-1, ld2)
                     .add(-12, d(0, 1))
                     .add(-12, d(0, g - 2))
                     .add(12, d(0, g - 1))
                     .add(12, th(1))
                     .finish());

  return sys;
}

/// Rows of the system as a matrix, columns in basis order.
inline RationalMatrix build_matrix(const RelationSystem& sys) {
  RationalMatrix q(sys.rows.size(), sys.basis.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    for (const auto& [label, v] : sys.rows[r].coefficients) q(r, sys.basis.index_of(label)) = v;
  return q;
}

inline RationalMatrix build_matrix(int g) { return build_matrix(build_relations(g)); }

inline RationalVector build_rhs_vector(const RelationSystem& sys, int k) {
  RationalVector b;
  b.reserve(sys.rows.size());
  for (const auto& rel : sys.rows) b.push_back(evaluate_rhs(rel, k));
  return b;
}

/// Columns of T_g, grouped (T1)..(T18) in the same order as the relation groups.
inline RationalMatrix build_T(int g) {
  if (g < 6) throw std::invalid_argument("build_T needs g >= 6, got " + std::to_string(g));
  using L = ClassLabel;
  const Basis basis(g);
  std::vector<RationalVector> columns;

  struct Column {
    const Basis& basis;
    RationalVector v;
    explicit Column(const Basis& b) : basis(b), v(b.size()) {}
    Column& add(long coeff, const ClassLabel& raw) {
      for (const auto& [label, mult] : canonicalize(raw, basis.genus())) v[basis.index_of(label)] += coeff * mult;
      return *this;
    }
  };
  const auto unit = [&](const ClassLabel& l) { columns.push_back(Column(basis).add(1, l).v); };

  const auto om = [](int i) { return L::omega(i); };
  const auto la = [](int i) { return L::lambda(i); };
  const auto d = [](int i, int j) { return L::delta(i, j); };
  const auto th = [](int i) { return L::theta(i); };

  // sum_{2 <= s <= g/2} 12(g/2 - s)(e_{omega(g-s)} - e_{omega(s)}), times `sign`.
  const auto omega_ladder = [&](Column& c, long sign, long scale) {
    for (int s = 2; 2 * s <= g; ++s) {
      const long w = sign * scale * 6L * (g - 2L * s);
      c.add(w, om(g - s)).add(-w, om(s));
    }
  };

  for (int i = 2; i <= g / 2; ++i) unit(om(i));                                          // T1
  for (int i = 2; i <= g - 3; ++i)                                                        // T2
    for (int j = i; j <= g - 3 && i + j <= g - 1; ++j) unit(d(i, j));
  unit(d(1, g - 2));                                                                      // T3
  for (int i = 2; i <= g - 3; ++i) unit(d(1, i));                                         // T4
  unit(d(0, g - 1));                                                                      // T5
  for (int i = 3; i <= g - 3; ++i) unit(la(i));                                           // T6
  unit(L::lambda_delta2());
  unit(d(1, 1));                                                                          // T7
  unit(L::lambda_delta0());                                                               // T8

  columns.push_back(Column(basis).add(2, d(1, 2)).add(1, d(0, 2)).add(-10, L::lambda_delta2()).v);  // T9
  for (int j = 3; j <= g - 3; ++j)
    columns.push_back(Column(basis).add(2, d(1, j)).add(1, d(0, j)).add(-10, la(g - j)).v);

  columns.push_back(Column(basis)                                                         // T10
                        .add(60, L::lambda_delta1())
                        .add(12, L::delta1_sq())
                        .add(-3, d(0, g - 1))
                        .add(8, d(0, 1))
                        .add(2, d(0, 0))
                        .v);
  columns.push_back(Column(basis).add(12, L::lambda_delta1()).add(1, L::lambda_delta0()).add(-1, d(0, g - 1)).v);  // T11
  columns.push_back(Column(basis).add(1, d(0, g - 2)).add(2, d(1, g - 2)).v);            // T12
  columns.push_back(Column(basis)                                                         // T13
                        .add(12, L::lambda_delta1())
                        .add(6, L::lambda_delta0())
                        .add(-1, d(0, g - 1))
                        .add(-1, d(0, 1))
                        .add(-1, d(0, 0))
                        .v);

  {  // T14
    Column c(basis);
    c.add(6, L::kappa1_sq());
    if (g % 2 == 0) c.add(6, om(g / 2));
    for (int s = 2; 2 * s < g; ++s) c.add(12, om(s));
    c.add(72, L::lambda_delta0()).add(144, L::lambda_delta1()).add(144, L::lambda_delta2());
    for (int s = 3; s <= g - 3; ++s) c.add(144, la(s));
    for (const auto& l : basis.labels())
      if (l.kind == L::Kind::DeltaPair && l != d(0, g - 1)) c.add(-12, l);
    c.add(-11, d(0, g - 1));
    columns.push_back(c.v);
  }

  unit(L::kappa2());                                                                      // T15

  for (int i = g / 2; i <= g - 3; ++i)                                                    // T16
    columns.push_back(Column(basis).add(1, om(i + 1)).add(-1, om(g - i - 1)).v);
  {
    Column c(basis);
    omega_ladder(c, 1, g - 1);
    c.add(12L * (g - 1), L::delta1_sq()).add(-24L * (g - 1), d(1, 1)).add(2L * (g - 1), d(0, g - 1));
    c.add(3, L::delta0_sq()).add(-6, d(0, 0));
    columns.push_back(c.v);
  }

  {  // T17
    Column c(basis);
    c.add(6L * g, L::kappa2());
    omega_ladder(c, 1, 1);
    c.add(6L * (2 - g), L::delta1_sq()).add(12L * (g - 2), d(1, 1)).add(-3, L::delta0_sq());
    c.add(2L - g, d(0, g - 1)).add(6, d(0, 0));
    columns.push_back(c.v);
  }

  for (int i = 4; i <= (g + 1) / 2; ++i) unit(th(i - 1));                                 // T18
  unit(th(2));
  {
    Column c(basis);
    c.add(-6L * g, L::kappa2());
    omega_ladder(c, -1, 1);
    c.add(6L * (g - 2), L::delta1_sq()).add(12L * (2 - g), d(1, 1)).add(3, L::delta0_sq());
    c.add(g - 2L, d(0, g - 1)).add(-6, d(0, 0)).add(72, th(1));
    columns.push_back(c.v);
  }

  if (columns.size() != basis.size())
    throw std::logic_error("T_g has " + std::to_string(columns.size()) + " columns, expected " +
                           std::to_string(basis.size()));
  RationalMatrix t(basis.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < basis.size(); ++r) t(r, c) = columns[c][r];
  return t;
}

struct TriangularityReport {
  std::size_t order = 0;
  bool lower_triangular = false;
  bool nonzero_diagonal = false;
  std::vector<std::pair<std::size_t, std::size_t>> above_diagonal;  // nonzero (row, col) with col > row
  std::vector<std::size_t> zero_diagonal;

  bool ok() const { return lower_triangular && nonzero_diagonal; }
};

/// Diagnostic: is Q*T lower-triangular with nonzero diagonal?
inline TriangularityReport triangularity_report(const RationalMatrix& q, const RationalMatrix& t) {
  if (q.rows() != q.cols() || t.rows() != t.cols() || q.cols() != t.rows())
    throw DimensionMismatch("triangularity_report needs square matrices of equal order");
  const auto p = multiply(q, t);
  TriangularityReport rep;
  rep.order = p.rows();
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (p(r, r) == 0) rep.zero_diagonal.push_back(r);
    for (std::size_t c = r + 1; c < p.cols(); ++c)
      if (p(r, c) != 0) rep.above_diagonal.emplace_back(r, c);
  }
  rep.lower_triangular = rep.above_diagonal.empty();
  rep.nonzero_diagonal = rep.zero_diagonal.empty();
  return rep;
}

}  // namespace bn2
