#pragma once

#include <span>
#include <variant>
#include <vector>

#include "extsq/ring.hpp"

namespace extsq {

// Dense square matrix over a Ring, row-major. The payload is stored in the
// ring's native value type (int64 residues, mpz_class, Poly), so kernels can
// run without per-entry dispatch.
class Matrix {
 public:
  using Storage = std::variant<std::vector<std::int64_t>, std::vector<mpz_class>, std::vector<Poly>>;

  Matrix() : Matrix(0, Ring::integers()) {}
  Matrix(int dim, Ring ring);  // zero matrix

  static Matrix identity(int dim, Ring ring);
  // Scalar matrix c * e.
  static Matrix scalar(int dim, const RingElem& c);
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<RingElem>>& rows);

  int dim() const noexcept { return dim_; }
  const Ring& ring() const noexcept { return ring_; }

  RingElem at(int row, int col) const;
  void set(int row, int col, const RingElem& value);

  // Left multiplication by the elementary transvection t_{dst,src}(xi):
  // row dst += xi * row src. Indices are 0-based.
  void add_row_multiple(int dst, int src, const RingElem& xi);
  // Right multiplication by t_{src,dst}(xi): column dst += xi * column src.
  void add_col_multiple(int dst, int src, const RingElem& xi);

  bool is_identity() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  // Entrywise equality; Error on dimension or ring mismatch.
  friend bool operator==(const Matrix& a, const Matrix& b);

  // f(ops, std::span<const value_type>) with the entries in row-major order.
  template <class F>
  decltype(auto) visit(F&& f) const {
    return ring_.visit([&](const auto& o) -> decltype(auto) {
      using T = typename std::decay_t<decltype(o)>::value_type;
      const auto& v = std::get<std::vector<T>>(data_);
      return f(o, std::span<const T>(v));
    });
  }

  template <class F>
  decltype(auto) visit_mut(F&& f) {
    return ring_.visit([&](const auto& o) -> decltype(auto) {
      using T = typename std::decay_t<decltype(o)>::value_type;
      auto& v = std::get<std::vector<T>>(data_);
      return f(o, std::span<T>(v));
    });
  }

 private:
  int dim_;
  Ring ring_;
  Storage data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
bool mat_eq(const Matrix& a, const Matrix& b);
void require_compatible(const Matrix& a, const Matrix& b);

// A matrix together with a certified inverse. Construction from arbitrary
// matrices checks fwd*bwd = bwd*fwd = e; composition and inversion keep the
// certificate by construction (re-checked only in debug builds).
class InvPair {
 public:
  InvPair(Matrix fwd, Matrix bwd);

  static InvPair identity(int dim, Ring ring);

  const Matrix& fwd() const noexcept { return fwd_; }
  const Matrix& bwd() const noexcept { return bwd_; }
  int dim() const noexcept { return fwd_.dim(); }
  const Ring& ring() const noexcept { return fwd_.ring(); }

  InvPair inverse() const;

  // Builds a pair without checking; callers guarantee the invariant.
  static InvPair trusted(Matrix fwd, Matrix bwd);

 private:
  struct Trusted {};
  InvPair(Trusted, Matrix fwd, Matrix bwd) : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {}

  Matrix fwd_;
  Matrix bwd_;
};

enum class Side { left, right };

InvPair pair_compose(const InvPair& a, const InvPair& b);
InvPair pair_invert(const InvPair& a);
// left: x y x^{-1};  right: x^{-1} y x.
InvPair conjugate(const InvPair& y, const InvPair& x, Side side);
// Left-normed commutator x y x^{-1} y^{-1}.
InvPair commutator(const InvPair& x, const InvPair& y);

}  // namespace extsq
