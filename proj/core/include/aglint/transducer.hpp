// Copyright 2026 The aglint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGLINT_TRANSDUCER_HPP_
#define AGLINT_TRANSDUCER_HPP_

#include <map>
#include <string>
#include <vector>

#include "aglint/annotation.hpp"
#include "aglint/grammar.hpp"

namespace aglint {

/// One fired rule match. span covers every consumed annotation;
/// bound_spans maps each label that consumed input to its sub-span;
/// created lists the annotations the rule's actions added to the
/// document, in action order.
struct MatchResult {
  std::string rule_name;
  Span span;
  std::map<std::string, Span> bound_spans;
  std::vector<AnnotationId> created;
};

/// True iff the annotation has the constraint's type and satisfies its
/// predicate: exists needs nothing more; equals needs the feature present
/// with exactly the given value; regex needs the compiled pattern to be
/// found anywhere in the feature value ('^' anchors to the value start).
bool eval_constraint(const Constraint& c, const Annotation& a);

/// Finite-state transduction over the annotations of g.input_types that
/// lie fully inside region, walked in annotation_order. Matching is
/// greedy with no backtracking across elements. Under appelt control the
/// longest match at each start wins (ties: priority, then declaration
/// order) and matching resumes after it; under all control every rule
/// match at every position fires. Fired actions append annotations to
/// the document. Returns matches in firing order.
///
/// Throws RangeError if region exceeds the document bounds.
std::vector<MatchResult> run_transducer(const Grammar& g, Document& doc,
                                        Span region);

/// Whole-document convenience overload.
std::vector<MatchResult> run_transducer(const Grammar& g, Document& doc);

}  // namespace aglint

#endif  // AGLINT_TRANSDUCER_HPP_
