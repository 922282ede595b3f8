#include "extsq/linalg.hpp"

#include <cassert>
#include <string>

namespace extsq {

namespace {

Matrix::Storage make_storage(const Ring& ring, std::size_t count) {
  return ring.visit([&](const auto& o) -> Matrix::Storage {
    using T = typename std::decay_t<decltype(o)>::value_type;
    return std::vector<T>(count, o.zero());
  });
}

}  // namespace

Matrix::Matrix(int dim, Ring ring)
    : dim_(dim), ring_(ring), data_(make_storage(ring, static_cast<std::size_t>(dim) * dim)) {
  if (dim < 0) throw Error(ErrorKind::dimension_mismatch, "negative dimension");
}

Matrix Matrix::identity(int dim, Ring ring) { return scalar(dim, ring.one()); }

Matrix Matrix::scalar(int dim, const RingElem& c) {
  Matrix m(dim, c.ring());
  for (int i = 0; i < dim; ++i) m.set(i, i, c);
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<RingElem>>& rows) {
  int d = static_cast<int>(rows.size());
  Matrix m(d, ring);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(rows[r].size()) != d) {
      throw Error(ErrorKind::dimension_mismatch, "matrix rows must form a square");
    }
    for (int c = 0; c < d; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RingElem Matrix::at(int row, int col) const {
  return visit([&](const auto&, auto a) { return RingElem(ring_, a[static_cast<std::size_t>(row) * dim_ + col]); });
}

void Matrix::set(int row, int col, const RingElem& value) {
  require_same_ring(ring_, value.ring());
  visit_mut([&](const auto&, auto a) {
    using T = typename decltype(a)::value_type;
    a[static_cast<std::size_t>(row) * dim_ + col] = value.as<T>();
  });
}

void Matrix::add_row_multiple(int dst, int src, const RingElem& xi) {
  require_same_ring(ring_, xi.ring());
  if (xi.is_zero()) return;
  visit_mut([&](const auto& o, auto a) {
    using T = typename decltype(a)::value_type;
    const T& x = xi.as<T>();
    auto* d = &a[static_cast<std::size_t>(dst) * dim_];
    const auto* s = &a[static_cast<std::size_t>(src) * dim_];
    for (int k = 0; k < dim_; ++k) {
      if (!o.is_zero(s[k])) o.add_mul(d[k], x, s[k]);
    }
  });
}

void Matrix::add_col_multiple(int dst, int src, const RingElem& xi) {
  require_same_ring(ring_, xi.ring());
  if (xi.is_zero()) return;
  visit_mut([&](const auto& o, auto a) {
    using T = typename decltype(a)::value_type;
    const T& x = xi.as<T>();
    for (int k = 0; k < dim_; ++k) {
      const auto& s = a[static_cast<std::size_t>(k) * dim_ + src];
      if (!o.is_zero(s)) o.add_mul(a[static_cast<std::size_t>(k) * dim_ + dst], x, s);
    }
  });
}

bool Matrix::is_identity() const {
  return visit([&](const auto& o, auto a) {
    for (int r = 0; r < dim_; ++r) {
      for (int c = 0; c < dim_; ++c) {
        const auto& v = a[static_cast<std::size_t>(r) * dim_ + c];
        if (r == c ? !o.eq(v, o.one()) : !o.is_zero(v)) return false;
      }
    }
    return true;
  });
}

bool Matrix::is_zero() const {
  return visit([&](const auto& o, auto a) {
    for (const auto& v : a) {
      if (!o.is_zero(v)) return false;
    }
    return true;
  });
}

void require_compatible(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::dimension_mismatch,
                "dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  const int n = a.dim();
  Matrix out(n, a.ring());
  a.visit([&](const auto& o, auto x) {
    using Ops = std::decay_t<decltype(o)>;
    using T = typename Ops::value_type;
    const auto& y = std::get<std::vector<T>>(b.data_);
    auto& z = std::get<std::vector<T>>(out.data_);
    if constexpr (std::is_same_v<Ops, ops::Zmod>) {
      // Products of residues are < 2^124; reduce each before accumulating
      // unless the modulus is small enough to sum n of them in 128 bits.
      const bool small = o.m < (std::uint64_t{1} << 32);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          unsigned __int128 acc = 0;
          for (int k = 0; k < n; ++k) {
            auto p = static_cast<unsigned __int128>(x[i * n + k]) * static_cast<std::uint64_t>(y[k * n + j]);
            acc += small ? p : p % o.m;
          }
          z[i * n + j] = static_cast<std::int64_t>(acc % o.m);
        }
      }
    } else {
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
          const T& xik = x[i * n + k];
          if (o.is_zero(xik)) continue;
          for (int j = 0; j < n; ++j) {
            const T& ykj = y[k * n + j];
            if (!o.is_zero(ykj)) o.add_mul(z[i * n + j], xik, ykj);
          }
        }
      }
    }
  });
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  return a.visit([&](const auto& o, auto x) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    const auto& y = std::get<std::vector<T>>(b.data_);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!o.eq(x[i], y[i])) return false;
    }
    return true;
  });
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
bool mat_eq(const Matrix& a, const Matrix& b) { return a == b; }

// ---------------------------------------------------------------------------

InvPair::InvPair(Matrix fwd, Matrix bwd) : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {
  require_compatible(fwd_, bwd_);
  if (!(fwd_ * bwd_).is_identity() || !(bwd_ * fwd_).is_identity()) {
    throw Error(ErrorKind::not_inverse, "fwd * bwd is not the identity");
  }
}

InvPair InvPair::identity(int dim, Ring ring) {
  return trusted(Matrix::identity(dim, ring), Matrix::identity(dim, ring));
}

InvPair InvPair::trusted(Matrix fwd, Matrix bwd) {
#ifndef NDEBUG
  assert((fwd * bwd).is_identity());
#endif
  return InvPair(Trusted{}, std::move(fwd), std::move(bwd));
}

InvPair InvPair::inverse() const { return InvPair(Trusted{}, bwd_, fwd_); }

InvPair pair_compose(const InvPair& a, const InvPair& b) {
  return InvPair::trusted(a.fwd() * b.fwd(), b.bwd() * a.bwd());
}

InvPair pair_invert(const InvPair& a) { return a.inverse(); }

InvPair conjugate(const InvPair& y, const InvPair& x, Side side) {
  if (side == Side::left) return pair_compose(pair_compose(x, y), x.inverse());
  return pair_compose(pair_compose(x.inverse(), y), x);
}

InvPair commutator(const InvPair& x, const InvPair& y) {
  return pair_compose(pair_compose(x, y), pair_compose(x.inverse(), y.inverse()));
}

}  // namespace extsq
