#pragma once

// Exact linear algebra over GF(q): dense matrices, subspaces in canonical
// (reduced row echelon) form, lattice operations, operator images and
// preimages, and guarded enumeration of all k-dimensional subspaces.

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "antinv/gfq.hpp"
#include "antinv/numeric.hpp"

namespace antinv {

class MatGF {
 public:
  MatGF(FieldPtr field, std::size_t rows, std::size_t cols);
  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FE& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FE& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<FE>& data() const { return data_; }

  static MatGF identity(FieldPtr field, std::size_t n);
  friend MatGF operator*(const MatGF& a, const MatGF& b);
  MatGF transpose() const;
  friend bool operator==(const MatGF& a, const MatGF& b);
  friend bool operator!=(const MatGF& a, const MatGF& b) { return !(a == b); }

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<FE> data_;
};

// In-place reduced row echelon form; returns the pivot column indices (the
// rank is their number).  Zero rows end up at the bottom.
std::vector<std::size_t> rref(MatGF& m);

// Right kernel {v : M v = 0} as a subspace of F^cols.
class Subspace;
Subspace kernel(const MatGF& m);

class Subspace {
 public:
  // Canonicalizes the span of the given row vectors (each of length ambient).
  static Subspace from_span(FieldPtr field, std::size_t ambient,
                            const std::vector<std::vector<FE>>& vectors);
  static Subspace from_rows(MatGF rows);  // span of the rows of a matrix
  static Subspace zero_subspace(FieldPtr field, std::size_t ambient);
  static Subspace full_space(FieldPtr field, std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const FieldPtr& field() const { return basis_.field(); }
  // dim x ambient matrix in RREF whose rows are the canonical basis.
  const MatGF& basis() const { return basis_; }

  bool contains(const std::vector<FE>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  // Total order (dimension, then basis entries) so subspaces can key a set.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(MatGF basis) : basis_(std::move(basis)) {}
  MatGF basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Annihilator under the standard dot product.
Subspace perp(const Subspace& w);
// Image T W (row vectors act as columns: each basis vector w maps to T w).
Subspace apply_operator(const MatGF& t, const Subspace& w);
// Preimage T^{-1} W = {v : T v in W}.
Subspace preimage(const MatGF& t, const Subspace& w);

// Thrown when a requested enumeration would exceed the configured guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(Int projected, Int guard);
  const Int& projected() const { return projected_; }
  const Int& guard() const { return guard_; }

 private:
  Int projected_, guard_;
};

inline constexpr long kDefaultGuard = 10000000;

// Number of k-dimensional subspaces of GF(q)^n (Gaussian binomial at q).
Int subspace_count(long q, long n, long k);

// Visits every k-dimensional subspace of F^n exactly once, pivot sets in
// colexicographic order and free entries in odometer order over the canonical
// element order; deterministic across platforms.  Throws GuardExceeded before
// visiting anything if the total exceeds the guard.
void for_each_subspace(const FieldPtr& field, std::size_t n, std::size_t k,
                       const Int& guard,
                       const std::function<void(const Subspace&)>& fn);

// Uniformly random matrix with entries drawn by rejection sampling from the
// raw generator output (reproducible across standard libraries).
MatGF random_matrix(const FieldPtr& field, std::size_t n, std::mt19937_64& rng);

long random_below(std::mt19937_64& rng, long bound);

}  // namespace antinv
