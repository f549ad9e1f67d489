#pragma once

#include <utility>
#include <vector>

#include "framelab/relations.hpp"

namespace framelab {

// The order-bounded type frontier used by certification commands: bool,
// bool->bool, bool->bool->bool and (bool->bool)->bool, filtered by order.
std::vector<TypeRef> default_frontier(int max_order = 2);

// Ground pairs of the C/E bijection (bot<->top, tt<->tt, ff<->ff) and of the
// totality relation (tt<->tt, ff<->ff), in canonical indices.
const std::vector<std::pair<int32_t, int32_t>>& e_bool_pairs();
const std::vector<std::pair<int32_t, int32_t>>& totality_pairs();

// The six collapse arrows, certification order.
const std::vector<std::pair<Family, Family>>& collapse_arrows();

// Evidence relation for one arrow: corpus plus synthesized witnesses for
// C->S and E->S, the lifted ground bijection for C<->E, corpus plus
// saturation witnesses for L->C, and compositions through C for L->E and
// L->S.  Errors Usage for any other pair.
Relation arrow_relation(FrameStore& store, Family src, Family tgt,
                        const std::vector<TypeRef>& types, int corpus_depth);

// Certifies one arrow over the frontier.  Sources other than L require
// surjectivity at every frontier type; for L the requirement is bool and
// bool->bool, with the remaining frontier types reported as extended
// evidence (undecided-at-budget allowed).
CollapseCertificate certify_arrow(FrameStore& store, Family src, Family tgt, int max_order,
                                  int corpus_depth);

// Certificate for src->tgt assembled by composing the evidence relations
// through `via`.
CollapseCertificate certify_composed(FrameStore& store, Family src, Family via, Family tgt,
                                     int max_order, int corpus_depth);

}  // namespace framelab
