#pragma once

// JSON forms of every artifact the CLI reads or writes. Element payloads are
// decimal strings (Z, Z/mZ) or term arrays (polynomials); forms that do not
// carry a ring take it from the caller. Malformed input raises Error(parse).

#include <iosfwd>
#include <string>

#if defined(EXTSQ_SYSTEM_JSON)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "extsq/level.hpp"
#include "extsq/pluecker.hpp"
#include "extsq/rdu.hpp"
#include "extsq/words.hpp"

namespace extsq {

using Json = nlohmann::json;

Json to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

Json to_json(const RingElem& x);
RingElem elem_from_json(const Json& j, const Ring& ring);

// Matrices of exterior size C(n,2) are labelled with "n"; GL_n matrices
// (and anything else) with "dim".
enum class MatrixLabel { exterior, plain };
Json to_json(const Matrix& m, MatrixLabel label = MatrixLabel::exterior);
Matrix matrix_from_json(const Json& j);

Json to_json(const InvPair& p, MatrixLabel label = MatrixLabel::exterior);
// Checks fwd * bwd = bwd * fwd = e.
InvPair pair_from_json(const Json& j);

Json to_json(Index2 I);
Json to_json(const Index4& H);
Index2 index2_from_json(const Json& j);
Index4 index4_from_json(const Json& j);

Json to_json(const ElemWord& w);
ElemWord elem_word_from_json(const Json& j, const Ring& ring);
Json to_json(const ConjWord& w);
ConjWord conj_word_from_json(const Json& j, const Ring& ring);

Json to_json(const ColumnVector& w);
Json to_json(const RowVector& z);
ColumnVector column_from_json(const Json& j, const Ring& ring);
RowVector row_from_json(const Json& j, const Ring& ring);

Json to_json(const LevelGenerator& gen);
// The diagdiff form omits its successor, so the rank n is needed.
LevelGenerator level_generator_from_json(const Json& j, const Ring& ring, int n);

Json to_json(const Certificate& c);
Json to_json(const DecompositionResult& r);
DecompositionResult decomposition_from_json(const Json& j, const Ring& ring);

Json parse_json(const std::string& text);
Json read_json(std::istream& in);
// Compact form followed by a newline.
void write_json(std::ostream& out, const Json& j);

}  // namespace extsq
