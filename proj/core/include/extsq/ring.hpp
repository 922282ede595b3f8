#pragma once

// Exact commutative rings: Z, Z/mZ and Z[x_1, ..., x_k].
//
// A `Ring` is a cheap handle onto an interned `RingDescriptor`; two handles
// compare equal iff they describe the same ring. Arithmetic kernels are
// written once against the small "ops" structs below and dispatched through
// `Ring::visit`, so dense matrix code runs on raw int64 residues for Z/mZ
// without touching the variant per entry.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "extsq/error.hpp"

namespace extsq {

enum class RingKind { integer, zmod, poly_int };

struct RingDescriptor {
  RingKind kind = RingKind::integer;
  std::uint64_t modulus = 0;           // zmod only
  std::vector<std::string> variables;  // poly_int only

  bool operator==(const RingDescriptor&) const = default;
};

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// One monomial of a polynomial: coeff * prod x_i^exps[i].
struct Term {
  mpz_class coeff;
  std::vector<std::uint32_t> exps;
};

// Graded-lex comparison of exponent vectors: total degree first, then
// lexicographic. Returns <0, 0, >0.
int grlex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

// Sparse polynomial with integer coefficients. Canonical form: terms sorted
// by strictly decreasing graded-lex exponent, no zero coefficients. The zero
// polynomial has no terms.
class Poly {
 public:
  Poly() = default;

  // Sorts, merges equal exponents and drops zero coefficients.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_canonical() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
  friend struct PolyAccess;
};

using Value = std::variant<std::int64_t, mpz_class, Poly>;

namespace ops {

// Residues in [0, m), m <= 2^62.
struct Zmod {
  using value_type = std::int64_t;
  std::uint64_t m;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const {
    long long r = x % static_cast<long long>(m);
    return r < 0 ? r + static_cast<long long>(m) : r;
  }
  value_type from_integer(const mpz_class& x) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
    return static_cast<value_type>(r.get_ui());
  }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= static_cast<value_type>(m) ? s - static_cast<value_type>(m) : s;
  }
  value_type sub(value_type a, value_type b) const {
    value_type s = a - b;
    return s < 0 ? s + static_cast<value_type>(m) : s;
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : static_cast<value_type>(m) - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * static_cast<std::uint64_t>(b) % m);
  }
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool eq(value_type a, value_type b) const { return a == b; }
};

struct Integer {
  using value_type = mpz_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return mpz_class(static_cast<long>(x)); }
  value_type from_integer(const mpz_class& x) const { return x; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
};

struct Polynomial {
  using value_type = Poly;
  std::size_t nvars;

  value_type zero() const { return {}; }
  value_type one() const { return from_int(1); }
  value_type from_int(long long x) const { return from_integer(mpz_class(static_cast<long>(x))); }
  value_type from_integer(const mpz_class& x) const;
  value_type variable(std::size_t index) const;
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const;
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
};

}  // namespace ops

class RingElem;

class Ring {
 public:
  Ring();  // the integers

  static Ring integers();
  static Ring zmod(std::uint64_t modulus);
  static Ring polynomial(std::vector<std::string> variables);
  // Validates and interns; throws Error(precondition) on a malformed descriptor.
  static Ring from_descriptor(const RingDescriptor& descriptor);
  // Parses the CLI form: "int", "zmod:<m>", "poly:<v1,v2,...>".
  static Ring parse(const std::string& text);

  const RingDescriptor& descriptor() const noexcept { return *d_; }
  RingKind kind() const noexcept { return d_->kind; }
  std::uint64_t modulus() const noexcept { return d_->modulus; }
  std::size_t variable_count() const noexcept { return d_->variables.size(); }
  std::string to_string() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(long long x) const;
  RingElem from_integer(const mpz_class& x) const;
  RingElem variable(std::size_t index) const;
  RingElem variable(const std::string& name) const;
  // Canonicalizes a raw payload (reduces residues, normalizes polynomials).
  RingElem make(Value payload) const;

  template <class F>
  decltype(auto) visit(F&& f) const {
    switch (d_->kind) {
      case RingKind::zmod:
        return f(ops::Zmod{d_->modulus});
      case RingKind::poly_int:
        return f(ops::Polynomial{d_->variables.size()});
      case RingKind::integer:
        break;
    }
    return f(ops::Integer{});
  }

  friend bool operator==(const Ring& a, const Ring& b) noexcept { return a.d_ == b.d_; }

 private:
  explicit Ring(const RingDescriptor* d) : d_(d) {}
  const RingDescriptor* d_;
};

void require_same_ring(const Ring& a, const Ring& b);

class RingElem {
 public:
  RingElem();  // integer zero
  // `payload` must already be canonical for `ring`; use Ring::make otherwise.
  RingElem(Ring ring, Value payload) : ring_(ring), v_(std::move(payload)) {}

  const Ring& ring() const noexcept { return ring_; }
  const Value& value() const noexcept { return v_; }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  // Throws Error(ring_mismatch) when the rings differ.
  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  Ring ring_;
  Value v_;
};

// Multiplicative inverse in Z/mZ; Error(non_unit) when gcd(a, m) != 1.
RingElem zmod_inverse(const RingElem& a);

// The canonical integer lift of an element of Z or Z/mZ.
mpz_class lift(const RingElem& a);

// Substitutes integer values for the variables of a polynomial.
mpz_class evaluate(const RingElem& p, std::span<const mpz_class> values);

}  // namespace extsq
