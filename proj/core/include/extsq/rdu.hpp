#pragma once

// Reverse decomposition: for g in the exterior square of GL_n (n >= 4) and a
// generator xi of its upper level, words of exactly 8, 16, 24 or 48
// elementary conjugates of g^{+-1} whose product is wedge2 t_{k,l}(xi).
//
// Every intermediate step is checked by exact multiplication; a failed check
// throws Error(proof_step). Results are verified before they are returned.

#include <string>
#include <vector>

#include "extsq/level.hpp"
#include "extsq/words.hpp"

namespace extsq {

enum class TargetKind { entry, diagdiff };

struct GeneratorTarget {
  TargetKind kind = TargetKind::entry;
  Index2 I;
  Index2 J;
  int k = 2;
  int l = 3;
};

enum class CaseTag { h1_entry, h0_entry, h1_diag, h0_diag };
const char* to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& text);
std::size_t expected_length(CaseTag tag);

struct Certificate {
  std::string name;
  bool ok = true;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct DecompositionResult {
  CaseTag tag = CaseTag::h1_entry;
  ConjWord word;
  RingElem param;
  int k = 2;
  int l = 3;
  std::vector<Certificate> certificates;
};

DecompositionResult decompose_entry_h1(const InvPair& g, Index2 I, Index2 J, int k, int l);
DecompositionResult decompose_entry_h0(const InvPair& g, Index2 A, Index2 B, int k, int l);
DecompositionResult decompose_diag_h1(const InvPair& g, Index2 I, Index2 J, int k, int l);
DecompositionResult decompose_diag_h0(const InvPair& g, Index2 I, Index2 J, int k, int l);
DecompositionResult decompose(const InvPair& g, const GeneratorTarget& target);

// One decomposition per level generator of g (N^2 - 1 of them), in the
// order of level_generators; membership is checked once.
std::vector<DecompositionResult> decompose_level(const InvPair& g, int k, int l);

// conj_eval(word, g) == eval(wedge2 t_{k,l}(xi)).
bool verify(const ConjWord& word, const InvPair& g, int k, int l, const RingElem& xi);

}  // namespace extsq
