#pragma once

// Symbolic self-certification over Z[...]: each suite checks an identity of
// the library for generic inputs, so a pass holds for every commutative ring.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "extsq/pluecker.hpp"

namespace extsq {

enum class Fault { none, expansion, shuffle };

enum class Status { pass, fail, skipped };
const char* to_string(Status s);

struct IdentityReport {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

// Expansion of wedge2 t_{i,j}(xi) against the matrix of minors, over Z[xi].
// `flip` negates one factor of the expansion (mutation testing).
bool expansion_holds(int n, int i, int j, std::optional<std::size_t> flip = std::nullopt);

bool chevalley_holds(int n);
bool additivity_holds(int n);
bool monomial_conjugation_holds(int n);
bool column_stabilizer_holds(int n);  // T_{*,j} w = w for generic w, all j
bool row_stabilizer_holds(int n);     // z T_{i,*} = z for generic z, all i
bool t_one_residual_holds(int n);     // T_1 w - w = f_{i,345}(w) at {2,i}, n >= 5
bool z_term_vanishes(int n);
// Both criterion families on cauchy_binet of a generic n x n source.
bool criterion_generic(int n, ShuffleSignFn sign_fn = shuffle_sign);
bool pluecker_generic(int n);  // columns of cauchy_binet(generic x)

// All suites for 3 <= n <= max_n (max_n in [3, 6]).
std::vector<IdentityReport> run_identities(int max_n, Fault fault = Fault::none);

// shuffle_sign with the sign of the splitting ({1,2},{3,4}) flipped.
int faulty_shuffle_sign(Index2 b, Index2 d);

}  // namespace extsq
