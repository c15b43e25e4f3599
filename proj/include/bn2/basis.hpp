#pragma once

// Generators of the codimension-two tautological group of the moduli space of
// stable genus-g curves, their canonical order, and class expressions over
// them.

#include <bn2/exactnum.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bn2 {

struct ClassLabel {
  enum class Kind {
    Kappa1Sq,
    Kappa2,
    Delta0Sq,
    LambdaDelta0,
    Delta1Sq,
    LambdaDelta1,
    LambdaDelta2,
    Omega,      // omega^(i)
    Lambda,     // lambda^(i)
    DeltaPair,  // delta_{ij}
    Theta,      // theta_i
  };

  Kind kind = Kind::Kappa1Sq;
  int i = 0;
  int j = 0;

  auto operator<=>(const ClassLabel&) const = default;

  static constexpr ClassLabel kappa1_sq() { return {Kind::Kappa1Sq}; }
  static constexpr ClassLabel kappa2() { return {Kind::Kappa2}; }
  static constexpr ClassLabel delta0_sq() { return {Kind::Delta0Sq}; }
  static constexpr ClassLabel lambda_delta0() { return {Kind::LambdaDelta0}; }
  static constexpr ClassLabel delta1_sq() { return {Kind::Delta1Sq}; }
  static constexpr ClassLabel lambda_delta1() { return {Kind::LambdaDelta1}; }
  static constexpr ClassLabel lambda_delta2() { return {Kind::LambdaDelta2}; }
  static constexpr ClassLabel omega(int i) { return {Kind::Omega, i}; }
  static constexpr ClassLabel lambda(int i) { return {Kind::Lambda, i}; }
  static constexpr ClassLabel delta(int i, int j) { return {Kind::DeltaPair, i, j}; }
  static constexpr ClassLabel theta(int i) { return {Kind::Theta, i}; }
};

inline std::string to_string(const ClassLabel& l) {
  using K = ClassLabel::Kind;
  switch (l.kind) {
    case K::Kappa1Sq: return "k1^2";
    case K::Kappa2: return "k2";
    case K::Delta0Sq: return "d0^2";
    case K::LambdaDelta0: return "ld0";
    case K::Delta1Sq: return "d1^2";
    case K::LambdaDelta1: return "ld1";
    case K::LambdaDelta2: return "ld2";
    case K::Omega: return "om(" + std::to_string(l.i) + ")";
    case K::Lambda: return "la(" + std::to_string(l.i) + ")";
    case K::DeltaPair: return "d(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    case K::Theta: return "th(" + std::to_string(l.i) + ")";
  }
  return "?";
}

/// Inverse of to_string(ClassLabel).
inline ClassLabel parse_label(const std::string& text) {
  using L = ClassLabel;
  if (text == "k1^2") return L::kappa1_sq();
  if (text == "k2") return L::kappa2();
  if (text == "d0^2") return L::delta0_sq();
  if (text == "ld0") return L::lambda_delta0();
  if (text == "d1^2") return L::delta1_sq();
  if (text == "ld1") return L::lambda_delta1();
  if (text == "ld2") return L::lambda_delta2();
  auto fail = [&] { return std::invalid_argument("unknown class label '" + text + "'"); };
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw fail();
  const std::string head = text.substr(0, open);
  const std::string args = text.substr(open + 1, text.size() - open - 2);
  try {
    std::size_t used = 0;
    const int a = std::stoi(args, &used);
    if (head == "d") {
      if (used >= args.size() || args[used] != ',') throw fail();
      std::size_t used2 = 0;
      const int b = std::stoi(args.substr(used + 1), &used2);
      if (used + 1 + used2 != args.size()) throw fail();
      return L::delta(a, b);
    }
    if (used != args.size()) throw fail();
    if (head == "om") return L::omega(a);
    if (head == "la") return L::lambda(a);
    if (head == "th") return L::theta(a);
  } catch (const std::logic_error&) {
    throw fail();
  }
  throw fail();
}

/// Whether the label is a generator in genus g.
inline bool valid_for(const ClassLabel& l, int g) {
  using K = ClassLabel::Kind;
  switch (l.kind) {
    case K::Omega: return 2 <= l.i && l.i <= g - 2;
    case K::Lambda: return 3 <= l.i && l.i <= g - 3;
    case K::Theta: return 1 <= l.i && l.i <= (g - 1) / 2;
    case K::DeltaPair:
      if (l.i == 0) return 0 <= l.j && l.j <= g - 1;
      return 1 <= l.i && l.i <= l.j && l.j <= g - 2 && l.i + l.j <= g - 1;
    default: return true;
  }
}

inline int basis_dimension(int g) {
  if (g < 5) throw std::invalid_argument("basis_dimension needs g >= 5, got " + std::to_string(g));
  return (g * g - 1) / 4 + 3 * g - 1;
}

/// Generators in the frozen export order.
inline std::vector<ClassLabel> enumerate_basis(int g) {
  if (g < 5) throw std::invalid_argument("enumerate_basis needs g >= 5, got " + std::to_string(g));
  using L = ClassLabel;
  std::vector<ClassLabel> out{L::kappa1_sq(),     L::kappa2(),        L::delta0_sq(),    L::lambda_delta0(),
                              L::delta1_sq(),     L::lambda_delta1(), L::lambda_delta2()};
  for (int i = 2; i <= g - 2; ++i) out.push_back(L::omega(i));
  for (int i = 3; i <= g - 3; ++i) out.push_back(L::lambda(i));
  for (int j = 0; j <= g - 1; ++j) out.push_back(L::delta(0, j));
  for (int i = 1; i <= g - 2; ++i)
    for (int j = i; j <= g - 2 && i + j <= g - 1; ++j) out.push_back(L::delta(i, j));
  for (int i = 1; i <= (g - 1) / 2; ++i) out.push_back(L::theta(i));
  return out;
}

/// Ordered generators of one genus with an index lookup.
class Basis {
 public:
  explicit Basis(int g) : genus_(g), labels_(enumerate_basis(g)) {
    for (std::size_t n = 0; n < labels_.size(); ++n) index_.emplace(labels_[n], n);
  }

  int genus() const { return genus_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<ClassLabel>& labels() const { return labels_; }
  const ClassLabel& operator[](std::size_t n) const { return labels_[n]; }

  std::optional<std::size_t> find(const ClassLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const ClassLabel& l) const {
    if (auto n = find(l)) return *n;
    throw std::out_of_range("label " + to_string(l) + " is not a generator in genus " + std::to_string(genus_));
  }

 private:
  int genus_;
  std::vector<ClassLabel> labels_;
  std::map<ClassLabel, std::size_t> index_;
};

/// Maps a label as written in a relation template to its generator.
///
/// Sorts delta indices. In genus 5 there are no lambda^(i) generators; the
/// templates' lambda^(2) and lambda^(3) are identified with lambda*delta_2
/// there, mirroring the i = g-2 case of the elliptic-tail surfaces.
inline std::vector<std::pair<ClassLabel, BigRational>> canonicalize(ClassLabel raw, int g) {
  using K = ClassLabel::Kind;
  if (raw.kind == K::DeltaPair && raw.i > raw.j) std::swap(raw.i, raw.j);
  if (g == 5 && raw.kind == K::Lambda && (raw.i == 2 || raw.i == 3)) raw = ClassLabel::lambda_delta2();
  if (!valid_for(raw, g))
    throw std::invalid_argument("label " + to_string(raw) + " is not a generator in genus " + std::to_string(g));
  return {{raw, BigRational(1)}};
}

/// Exact rational combination of generators of one genus.
class ClassExpression {
 public:
  explicit ClassExpression(int g) : genus_(g) {}

  int genus() const { return genus_; }

  BigRational coefficient(const ClassLabel& l) const {
    auto it = coeffs_.find(l);
    return it == coeffs_.end() ? BigRational(0) : it->second;
  }

  void set(const ClassLabel& l, const BigRational& value) {
    if (!valid_for(l, genus_))
      throw std::invalid_argument("label " + to_string(l) + " is not a generator in genus " + std::to_string(genus_));
    if (value == 0) coeffs_.erase(l);
    else coeffs_[l] = value;
  }

  void add(const ClassLabel& l, const BigRational& value) { set(l, coefficient(l) + value); }

  /// Nonzero terms, ordered by label.
  const std::map<ClassLabel, BigRational>& terms() const { return coeffs_; }

  std::vector<BigRational> to_vector(const Basis& basis) const {
    if (basis.genus() != genus_) throw std::invalid_argument("basis genus mismatch");
    std::vector<BigRational> out(basis.size());
    for (const auto& [l, v] : coeffs_) out[basis.index_of(l)] = v;
    return out;
  }

  static ClassExpression from_vector(const Basis& basis, const std::vector<BigRational>& values) {
    if (values.size() != basis.size()) throw std::invalid_argument("coefficient vector has wrong length");
    ClassExpression out(basis.genus());
    for (std::size_t n = 0; n < values.size(); ++n) out.set(basis[n], values[n]);
    return out;
  }

  bool operator==(const ClassExpression&) const = default;

 private:
  int genus_;
  std::map<ClassLabel, BigRational> coeffs_;
};

}  // namespace bn2
