#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selberg/matcore/sym_matrix.hpp"

namespace selberg {

/// A point of the symmetric space: positive definite with determinant one.
class SpacePoint {
 public:
  /// Validates positive definiteness and det = 1 (exact, or within 1e-12).
  static SpacePoint from(const SymMatrix& m);
  /// Rescales a positive definite matrix to determinant one. The result stays
  /// exact when det(m) is a perfect n-th power of a rational.
  static SpacePoint normalize(const SymMatrix& m);
  static SpacePoint identity(std::size_t n);

  const SymMatrix& matrix() const noexcept { return m_; }
  const SymMatrix& inverse() const noexcept { return inv_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  bool is_exact() const { return m_.is_exact(); }

  friend bool operator==(const SpacePoint& a, const SpacePoint& b) { return a.m_ == b.m_; }

 private:
  SpacePoint(SymMatrix m, SymMatrix inv) : m_(std::move(m)), inv_(std::move(inv)) {}
  SymMatrix m_;
  SymMatrix inv_;
};

/// An element of SL(n, R) acting by g.X = g^T X g. This is a right action:
/// (gh).X = h.(g.X).
class Isometry {
 public:
  static Isometry from(const Matrix& m);
  static Isometry identity(std::size_t n);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  bool is_exact() const { return m_.is_exact(); }
  Isometry inverse() const;
  bool is_identity() const;

  friend Isometry operator*(const Isometry& a, const Isometry& b);
  friend bool operator==(const Isometry& a, const Isometry& b) { return a.m_ == b.m_; }

 private:
  explicit Isometry(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// A product g1 g2 ... gm. Acting with the product applies g1 first.
class IsometryWord {
 public:
  IsometryWord() = default;
  IsometryWord(std::vector<Isometry> letters, std::vector<std::string> labels);

  const std::vector<Isometry>& letters() const noexcept { return letters_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t length() const noexcept { return letters_.size(); }
  /// Requires at least one letter.
  const Isometry& product() const;
  IsometryWord inverse() const;
  IsometryWord power(int k) const;
  IsometryWord then(const IsometryWord& next) const;
  std::string to_string() const;

 private:
  std::vector<Isometry> letters_;
  std::vector<std::string> labels_;
  std::optional<Isometry> product_;
};

/// Label of the inverse letter: "a" <-> "a^-1".
std::string inverse_label(const std::string& label);

SpacePoint act(const Isometry& g, const SpacePoint& x);
SymMatrix act(const Isometry& g, const SymMatrix& s);
SymMatrix act(const IsometryWord& w, const SymMatrix& s);
SpacePoint act(const IsometryWord& w, const SpacePoint& x);

/// sqrt(sum log^2 lambda_i) over the eigenvalues of X^-1 Y.
double geodesic_distance(const SpacePoint& x, const SpacePoint& y, double tol = 1e-10);

}  // namespace selberg
