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

#ifndef AGLINT_TAGSET_HPP_
#define AGLINT_TAGSET_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace aglint {

// BTB-TS positional tags, the slice of them agreement checking needs.
//
// Adjectives:  A <gender> <number> <definiteness>
//              gender m/f/n, '-' for the genderless plural forms;
//              number s/p; definiteness i, or d/h/f which all mean definite
//              (h and f are the short and full masculine article).
// Nouns:       N <c|p> <gender> <number> <definiteness>
//              the 2nd letter (common/proper) is kept only in raw;
//              number s/p, or t for the count form; definiteness i/d
//              (h/f accepted as definite here too).
//
// Missing trailing positions and unknown letters decode to unspecified.
// Tags starting with anything but A or N are PosClass::other.

enum class PosClass { adjective, noun, other };
enum class Gender { masculine, feminine, neuter, unspecified };
enum class Number { singular, plural, count, unspecified };
enum class Definiteness { indefinite, definite, unspecified };

/// A decoded tag. pos_class == other implies every other field is
/// unspecified; raw always holds the original tag string.
struct MorphFeatures {
  PosClass pos_class = PosClass::other;
  Gender gender = Gender::unspecified;
  Number number = Number::unspecified;
  Definiteness definiteness = Definiteness::unspecified;
  std::string raw;

  bool operator==(const MorphFeatures&) const = default;
};

/// One way an adjective fails to agree with the noun it modifies.
enum class Disagreement {
  number_mismatch,
  gender_mismatch,
  definiteness_placement,
};

std::string_view to_string(Disagreement d);

inline std::ostream& operator<<(std::ostream& os, Disagreement d) {
  return os << to_string(d);
}

/// Decodes a BTB-TS tag. Total on non-empty strings: unknown letters and
/// short tags fall back to unspecified, never fail.
///
/// Throws ValidationError on an empty tag.
MorphFeatures decode_tag(std::string_view tag);

/// Emits the canonical tag for an adjective or noun feature bundle.
/// Unspecified gender prints as '-', trailing unspecified positions are
/// dropped, nouns always encode as common ('c'). Inverse of decode_tag on
/// canonical tags.
///
/// Throws UnsupportedError for PosClass::other.
std::string encode_tag(const MorphFeatures& f);

/// Disagreements between an attributive adjective and the noun it
/// precedes, in the fixed order number, gender, definiteness:
///
///  - number_mismatch when both numbers are specified and differ (the
///    count form behaves like a plural);
///  - gender_mismatch only between singular forms with specified,
///    different genders (plural adjectives are genderless);
///  - definiteness_placement whenever the noun is definite, because the
///    article belongs on the attributive adjective.
///
/// Unspecified features never mismatch: false negatives are preferred to
/// false positives on incomplete tags.
///
/// Throws ValidationError unless adj is an adjective and noun a noun.
std::vector<Disagreement> agreement_check(const MorphFeatures& adj,
                                          const MorphFeatures& noun);

}  // namespace aglint

#endif  // AGLINT_TAGSET_HPP_
