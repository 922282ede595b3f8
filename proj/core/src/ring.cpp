#include "extsq/ring.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace extsq {

struct PolyAccess {
  static Poly adopt(std::vector<Term> canonical) {
    Poly p;
    p.terms_ = std::move(canonical);
    return p;
  }
};

int grlex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.exps, y.exps) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return PolyAccess::adopt(std::move(out));
}

bool Poly::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (sgn(terms_[i].coeff) == 0) return false;
    if (i > 0 && grlex_compare(terms_[i - 1].exps, terms_[i].exps) <= 0) return false;
  }
  return true;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

namespace ops {

Poly Polynomial::from_integer(const mpz_class& x) const {
  if (sgn(x) == 0) return {};
  return PolyAccess::adopt({Term{x, std::vector<std::uint32_t>(nvars, 0)}});
}

Poly Polynomial::variable(std::size_t index) const {
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(index) = 1;
  return PolyAccess::adopt({Term{1, std::move(e)}});
}

namespace {

// Merge of two canonical term lists, the second scaled by `sign`.
Poly merge(const Poly& a, const Poly& b, int sign) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c = i == x.size() ? -1 : j == y.size() ? 1 : grlex_compare(x[i].exps, y[j].exps);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class s = sign < 0 ? mpz_class(x[i].coeff - y[j].coeff) : mpz_class(x[i].coeff + y[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{std::move(s), x[i].exps});
      ++i;
      ++j;
    }
  }
  return PolyAccess::adopt(std::move(out));
}

}  // namespace

Poly Polynomial::add(const Poly& a, const Poly& b) const { return merge(a, b, +1); }
Poly Polynomial::sub(const Poly& a, const Poly& b) const { return merge(a, b, -1); }

Poly Polynomial::neg(const Poly& a) const {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = -t.coeff;
  return PolyAccess::adopt(std::move(out));
}

Poly Polynomial::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Term r{s.coeff * t.coeff, s.exps};
      for (std::size_t k = 0; k < r.exps.size(); ++k) r.exps[k] += t.exps[k];
      prod.push_back(std::move(r));
    }
  }
  return Poly::from_terms(std::move(prod));
}

void Polynomial::add_mul(Poly& acc, const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return;
  acc = add(acc, mul(a, b));
}

}  // namespace ops

// ---------------------------------------------------------------------------
// Ring handles

namespace {

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::deque<RingDescriptor>& intern_table() {
  static std::deque<RingDescriptor> table;
  return table;
}

const RingDescriptor* intern(const RingDescriptor& d) {
  std::lock_guard lock(intern_mutex());
  auto& table = intern_table();
  for (const auto& e : table) {
    if (e == d) return &e;
  }
  table.push_back(d);
  return &table.back();
}

}  // namespace

Ring::Ring() : Ring(integers()) {}

Ring Ring::integers() {
  static const RingDescriptor* d = intern(RingDescriptor{});
  return Ring(d);
}

Ring Ring::zmod(std::uint64_t modulus) {
  return from_descriptor(RingDescriptor{RingKind::zmod, modulus, {}});
}

Ring Ring::polynomial(std::vector<std::string> variables) {
  return from_descriptor(RingDescriptor{RingKind::poly_int, 0, std::move(variables)});
}

Ring Ring::from_descriptor(const RingDescriptor& d) {
  RingDescriptor clean;
  clean.kind = d.kind;
  switch (d.kind) {
    case RingKind::integer:
      break;
    case RingKind::zmod:
      if (d.modulus < 2 || d.modulus > kMaxModulus) {
        throw Error(ErrorKind::precondition, "zmod modulus must lie in [2, 2^62]");
      }
      clean.modulus = d.modulus;
      break;
    case RingKind::poly_int: {
      std::set<std::string> seen;
      for (const auto& v : d.variables) {
        if (v.empty() || !seen.insert(v).second) {
          throw Error(ErrorKind::precondition, "polynomial variables must be unique and nonempty");
        }
      }
      clean.variables = d.variables;
      break;
    }
  }
  return Ring(intern(clean));
}

Ring Ring::parse(const std::string& text) {
  if (text == "int") return integers();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (head == "zmod") {
      try {
        std::size_t used = 0;
        unsigned long long m = std::stoull(rest, &used);
        if (used == rest.size()) return zmod(m);
      } catch (const std::logic_error&) {
      }
      throw Error(ErrorKind::parse, "bad modulus in ring '" + text + "'");
    }
    if (head == "poly") {
      std::vector<std::string> vars;
      std::stringstream ss(rest);
      std::string v;
      while (std::getline(ss, v, ',')) vars.push_back(v);
      return polynomial(std::move(vars));
    }
  }
  throw Error(ErrorKind::parse, "unknown ring '" + text + "'");
}

std::string Ring::to_string() const {
  switch (d_->kind) {
    case RingKind::integer:
      return "int";
    case RingKind::zmod:
      return "zmod:" + std::to_string(d_->modulus);
    case RingKind::poly_int: {
      std::string s = "poly:";
      for (std::size_t i = 0; i < d_->variables.size(); ++i) {
        if (i) s += ',';
        s += d_->variables[i];
      }
      return s;
    }
  }
  return "?";
}

RingElem Ring::zero() const {
  return visit([&](const auto& o) { return RingElem(*this, o.zero()); });
}

RingElem Ring::one() const {
  return visit([&](const auto& o) { return RingElem(*this, o.one()); });
}

RingElem Ring::from_int(long long x) const {
  return visit([&](const auto& o) { return RingElem(*this, o.from_int(x)); });
}

RingElem Ring::from_integer(const mpz_class& x) const {
  return visit([&](const auto& o) { return RingElem(*this, o.from_integer(x)); });
}

RingElem Ring::variable(std::size_t index) const {
  if (kind() != RingKind::poly_int || index >= variable_count()) {
    throw Error(ErrorKind::precondition, "no such polynomial variable");
  }
  return RingElem(*this, ops::Polynomial{variable_count()}.variable(index));
}

RingElem Ring::variable(const std::string& name) const {
  const auto& vars = d_->variables;
  auto it = std::find(vars.begin(), vars.end(), name);
  if (kind() != RingKind::poly_int || it == vars.end()) {
    throw Error(ErrorKind::precondition, "no such polynomial variable '" + name + "'");
  }
  return variable(static_cast<std::size_t>(it - vars.begin()));
}

RingElem Ring::make(Value payload) const {
  switch (kind()) {
    case RingKind::integer:
      if (auto* z = std::get_if<mpz_class>(&payload)) return RingElem(*this, std::move(*z));
      if (auto* s = std::get_if<std::int64_t>(&payload)) return from_int(*s);
      break;
    case RingKind::zmod:
      if (auto* z = std::get_if<mpz_class>(&payload)) return from_integer(*z);
      if (auto* s = std::get_if<std::int64_t>(&payload)) return from_int(*s);
      break;
    case RingKind::poly_int:
      if (auto* p = std::get_if<Poly>(&payload)) {
        for (const auto& t : p->terms()) {
          if (t.exps.size() != variable_count()) {
            throw Error(ErrorKind::ring_mismatch, "monomial arity does not match ring");
          }
        }
        return RingElem(*this, Poly::from_terms(p->terms()));
      }
      if (auto* z = std::get_if<mpz_class>(&payload)) return from_integer(*z);
      if (auto* s = std::get_if<std::int64_t>(&payload)) return from_int(*s);
      break;
  }
  throw Error(ErrorKind::ring_mismatch, "payload does not belong to ring " + to_string());
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw Error(ErrorKind::ring_mismatch, "ring mismatch");
}

// ---------------------------------------------------------------------------
// Elements

RingElem::RingElem() : ring_(Ring::integers()), v_(mpz_class(0)) {}

bool RingElem::is_zero() const {
  return ring_.visit([&](const auto& o) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    return o.is_zero(std::get<T>(v_));
  });
}

bool RingElem::is_one() const {
  return ring_.visit([&](const auto& o) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    return o.eq(std::get<T>(v_), o.one());
  });
}

RingElem RingElem::operator-() const {
  return ring_.visit([&](const auto& o) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    return RingElem(ring_, o.neg(std::get<T>(v_)));
  });
}

RingElem& RingElem::operator+=(const RingElem& other) {
  require_same_ring(ring_, other.ring_);
  ring_.visit([&](const auto& o) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    v_ = o.add(std::get<T>(v_), std::get<T>(other.v_));
  });
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  require_same_ring(ring_, other.ring_);
  ring_.visit([&](const auto& o) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    v_ = o.sub(std::get<T>(v_), std::get<T>(other.v_));
  });
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  require_same_ring(ring_, other.ring_);
  ring_.visit([&](const auto& o) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    v_ = o.mul(std::get<T>(v_), std::get<T>(other.v_));
  });
  return *this;
}

bool operator==(const RingElem& a, const RingElem& b) {
  require_same_ring(a.ring_, b.ring_);
  return a.ring_.visit([&](const auto& o) {
    using T = typename std::decay_t<decltype(o)>::value_type;
    return o.eq(std::get<T>(a.v_), std::get<T>(b.v_));
  });
}

namespace {

void print_poly(std::ostream& os, const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) {
    os << '0';
    return;
  }
  bool first = true;
  for (const auto& t : p.terms()) {
    mpz_class c = t.coeff;
    bool constant = std::all_of(t.exps.begin(), t.exps.end(), [](auto e) { return e == 0; });
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool need_star = false;
    if (c != 1 || constant) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (need_star) os << '*';
      os << vars[i];
      if (t.exps[i] > 1) os << '^' << t.exps[i];
      need_star = true;
    }
    first = false;
  }
}

}  // namespace

std::string RingElem::to_string() const {
  std::ostringstream os;
  switch (ring_.kind()) {
    case RingKind::integer:
      os << as<mpz_class>().get_str();
      break;
    case RingKind::zmod:
      os << as<std::int64_t>();
      break;
    case RingKind::poly_int:
      print_poly(os, as<Poly>(), ring_.descriptor().variables);
      break;
  }
  return os.str();
}

RingElem zmod_inverse(const RingElem& a) {
  if (a.ring().kind() != RingKind::zmod) {
    throw Error(ErrorKind::precondition, "zmod_inverse needs a zmod element");
  }
  mpz_class m(std::to_string(a.ring().modulus()));
  mpz_class v(std::to_string(a.as<std::int64_t>()));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorKind::non_unit, "non-unit");
  }
  return a.ring().from_integer(inv);
}

mpz_class lift(const RingElem& a) {
  switch (a.ring().kind()) {
    case RingKind::integer:
      return a.as<mpz_class>();
    case RingKind::zmod:
      return mpz_class(std::to_string(a.as<std::int64_t>()));
    case RingKind::poly_int:
      break;
  }
  throw Error(ErrorKind::precondition, "polynomials have no integer lift");
}

mpz_class evaluate(const RingElem& p, std::span<const mpz_class> values) {
  if (p.ring().kind() != RingKind::poly_int) return lift(p);
  if (values.size() != p.ring().variable_count()) {
    throw Error(ErrorKind::precondition, "wrong number of substitution values");
  }
  mpz_class total = 0;
  for (const auto& t : p.as<Poly>().terms()) {
    mpz_class m = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), values[i].get_mpz_t(), t.exps[i]);
      m *= pw;
    }
    total += m;
  }
  return total;
}

}  // namespace extsq
