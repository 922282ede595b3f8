#include "extsq/serialize.hpp"

#include <istream>
#include <ostream>

namespace extsq {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse, "parse error: " + what); }

// Runs f, turning nlohmann type/key errors into Error(parse).
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
  return v;
}

mpz_class integer_from_json(const Json& j) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = j.dump();
  } else {
    fail("expected a decimal integer");
  }
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) fail("bad integer '" + text + "'");
  return z;
}

}  // namespace

Json to_json(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::zmod:
      return {{"type", "zmod"}, {"modulus", ring.modulus()}};
    case RingKind::poly_int:
      return {{"type", "poly_int"}, {"vars", ring.descriptor().variables}};
    case RingKind::integer:
      break;
  }
  return {{"type", "int"}};
}

Ring ring_from_json(const Json& j) {
  return guarded([&] {
    const Json& type = field(j, "type");
    if (!type.is_string()) fail("ring type must be a string");
    RingDescriptor d;
    const auto t = type.get<std::string>();
    if (t == "int") {
      d.kind = RingKind::integer;
    } else if (t == "zmod") {
      d.kind = RingKind::zmod;
      d.modulus = field(j, "modulus").get<std::uint64_t>();
    } else if (t == "poly_int") {
      d.kind = RingKind::poly_int;
      d.variables = array_field(j, "vars").get<std::vector<std::string>>();
    } else {
      fail("unknown ring type '" + t + "'");
    }
    try {
      return Ring::from_descriptor(d);
    } catch (const Error& e) {
      fail(e.what());
    }
  });
}

Json to_json(const RingElem& x) {
  if (x.ring().kind() != RingKind::poly_int) return lift(x).get_str();
  Json terms = Json::array();
  for (const auto& t : x.as<Poly>().terms()) terms.push_back({{"coeff", t.coeff.get_str()}, {"exps", t.exps}});
  return terms;
}

RingElem elem_from_json(const Json& j, const Ring& ring) {
  return guarded([&] {
    if (ring.kind() != RingKind::poly_int) return ring.from_integer(integer_from_json(j));
    if (!j.is_array()) fail("polynomial must be an array of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
      Term term{integer_from_json(field(t, "coeff")), array_field(t, "exps").get<std::vector<std::uint32_t>>()};
      if (term.exps.size() != ring.variable_count()) fail("exponent vector has the wrong length");
      terms.push_back(std::move(term));
    }
    return ring.make(Poly::from_terms(std::move(terms)));
  });
}

Json to_json(const Matrix& m, MatrixLabel label) {
  Json out = Json::object();
  int n = 0;
  if (label == MatrixLabel::exterior) {
    try {
      n = ambient_rank(m.dim());
    } catch (const Error&) {
      n = 0;
    }
  }
  if (n > 0) {
    out["n"] = n;
  } else {
    out["dim"] = m.dim();
  }
  out["ring"] = to_json(m.ring());
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  return guarded([&] {
    const Ring ring = ring_from_json(field(j, "ring"));
    int dim = 0;
    if (j.contains("n")) {
      const int n = int_field(j, "n");
      if (n < 2 || n > 64) fail("n out of range");
      dim = pair_count(n);
    } else {
      dim = int_field(j, "dim");
      if (dim < 0) fail("negative dimension");
    }
    const Json& rows = array_field(j, "rows");
    if (static_cast<int>(rows.size()) != dim) fail("row count does not match the dimension");
    Matrix m(dim, ring);
    for (int r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim) fail("row length does not match");
      for (int c = 0; c < dim; ++c) m.set(r, c, elem_from_json(rows[r][c], ring));
    }
    return m;
  });
}

Json to_json(const InvPair& p, MatrixLabel label) {
  return {{"fwd", to_json(p.fwd(), label)}, {"bwd", to_json(p.bwd(), label)}};
}

InvPair pair_from_json(const Json& j) {
  return guarded([&] { return InvPair(matrix_from_json(field(j, "fwd")), matrix_from_json(field(j, "bwd"))); });
}

Json to_json(Index2 I) { return Json::array({I.i1, I.i2}); }

Json to_json(const Index4& H) { return Json(H.v); }

Index2 index2_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array() || j.size() != 2) fail("pair index must have two entries");
    Index2 I{j[0].get<int>(), j[1].get<int>()};
    if (I.i1 < 1 || I.i1 >= I.i2) fail("pair index must be increasing and positive");
    return I;
  });
}

Index4 index4_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array() || j.size() != 4) fail("4-index must have four entries");
    try {
      return make_index4(j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>());
    } catch (const Error& e) {
      fail(e.what());
    }
  });
}

Json to_json(const ElemWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters) letters.push_back({{"i", l.i}, {"j", l.j}, {"xi", to_json(l.xi)}});
  return {{"n", w.n}, {"letters", std::move(letters)}};
}

ElemWord elem_word_from_json(const Json& j, const Ring& ring) {
  return guarded([&] {
    ElemWord w{int_field(j, "n"), {}};
    for (const auto& l : array_field(j, "letters")) {
      w.letters.push_back({int_field(l, "i"), int_field(l, "j"), elem_from_json(field(l, "xi"), ring)});
    }
    try {
      validate(w);
    } catch (const Error& e) {
      fail(e.what());
    }
    return w;
  });
}

Json to_json(const ConjWord& w) {
  Json terms = Json::array();
  for (const auto& t : w.terms) terms.push_back({{"eps", t.eps}, {"h", to_json(t.h)}});
  return {{"n", w.n}, {"terms", std::move(terms)}};
}

ConjWord conj_word_from_json(const Json& j, const Ring& ring) {
  return guarded([&] {
    ConjWord w{int_field(j, "n"), {}};
    for (const auto& t : array_field(j, "terms")) {
      const int eps = int_field(t, "eps");
      if (eps != 1 && eps != -1) fail("eps must be 1 or -1");
      ElemWord h = elem_word_from_json(field(t, "h"), ring);
      if (h.n != w.n) fail("conjugator rank does not match the word");
      w.terms.push_back({eps, std::move(h)});
    }
    return w;
  });
}

namespace {

template <class Role>
Json coords_to_json(const Coords<Role>& w) {
  Json entries = Json::array();
  for (const auto& e : w.entries) entries.push_back(to_json(e));
  return {{"n", w.n}, {"entries", std::move(entries)}};
}

template <class Role>
Coords<Role> coords_from_json(const Json& j, const Ring& ring) {
  return guarded([&] {
    Coords<Role> w{int_field(j, "n"), {}};
    if (w.n < 2 || w.n > 64) fail("n out of range");
    const Json& entries = array_field(j, "entries");
    if (static_cast<int>(entries.size()) != pair_count(w.n)) fail("entry count must be C(n,2)");
    for (const auto& e : entries) w.entries.push_back(elem_from_json(e, ring));
    return w;
  });
}

}  // namespace

Json to_json(const ColumnVector& w) { return coords_to_json(w); }
Json to_json(const RowVector& z) { return coords_to_json(z); }
ColumnVector column_from_json(const Json& j, const Ring& ring) { return coords_from_json<ColumnTag>(j, ring); }
RowVector row_from_json(const Json& j, const Ring& ring) { return coords_from_json<RowTag>(j, ring); }

Json to_json(const LevelGenerator& gen) {
  if (gen.kind == LevelKind::entry) {
    return {{"kind", "entry"}, {"I", to_json(gen.I)}, {"J", to_json(gen.J)}, {"value", to_json(gen.value)}};
  }
  return {{"kind", "diagdiff"}, {"I", to_json(gen.I)}, {"value", to_json(gen.value)}};
}

LevelGenerator level_generator_from_json(const Json& j, const Ring& ring, int n) {
  return guarded([&] {
    const auto kind = field(j, "kind").get<std::string>();
    LevelGenerator gen;
    gen.I = index2_from_json(field(j, "I"));
    gen.value = elem_from_json(field(j, "value"), ring);
    if (!valid(gen.I, n)) fail("pair index out of range");
    if (kind == "entry") {
      gen.kind = LevelKind::entry;
      gen.J = index2_from_json(field(j, "J"));
      if (!valid(gen.J, n) || gen.J == gen.I) fail("bad entry column");
    } else if (kind == "diagdiff") {
      gen.kind = LevelKind::diagdiff;
      const int r = rank(gen.I, n);
      if (r + 1 >= pair_count(n)) fail("last pair has no successor");
      gen.J = unrank(r + 1, n);
    } else {
      fail("unknown generator kind '" + kind + "'");
    }
    return gen;
  });
}

Json to_json(const Certificate& c) { return {{"name", c.name}, {"ok", c.ok}}; }

Json to_json(const DecompositionResult& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return {{"case", to_string(r.tag)}, {"word", to_json(r.word)}, {"param", to_json(r.param)},
          {"k", r.k},                 {"l", r.l},                {"certificates", std::move(certs)}};
}

DecompositionResult decomposition_from_json(const Json& j, const Ring& ring) {
  return guarded([&] {
    DecompositionResult r;
    const Json& tag = field(j, "case");
    if (!tag.is_string()) fail("case must be a string");
    r.tag = case_tag_from_string(tag.get<std::string>());
    r.word = conj_word_from_json(field(j, "word"), ring);
    r.param = elem_from_json(field(j, "param"), ring);
    r.k = j.contains("k") ? int_field(j, "k") : 2;
    r.l = j.contains("l") ? int_field(j, "l") : 3;
    for (const auto& c : array_field(j, "certificates")) {
      r.certificates.push_back({field(c, "name").get<std::string>(), field(c, "ok").get<bool>()});
    }
    return r;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

void write_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace extsq
