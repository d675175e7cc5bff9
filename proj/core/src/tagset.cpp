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

#include "aglint/tagset.hpp"

#include "aglint/errors.hpp"

namespace aglint {

namespace {

char at(std::string_view tag, std::size_t pos) {
  return pos < tag.size() ? tag[pos] : '\0';
}

Gender decode_gender(char c) {
  switch (c) {
    case 'm':
      return Gender::masculine;
    case 'f':
      return Gender::feminine;
    case 'n':
      return Gender::neuter;
    default:
      return Gender::unspecified;
  }
}

Number decode_number(char c, bool allow_count) {
  switch (c) {
    case 's':
      return Number::singular;
    case 'p':
      return Number::plural;
    case 't':
      return allow_count ? Number::count : Number::unspecified;
    default:
      return Number::unspecified;
  }
}

Definiteness decode_definiteness(char c) {
  switch (c) {
    case 'i':
      return Definiteness::indefinite;
    case 'd':
    case 'h':  // short masculine article
    case 'f':  // full masculine article
      return Definiteness::definite;
    default:
      return Definiteness::unspecified;
  }
}

char gender_char(Gender g) {
  switch (g) {
    case Gender::masculine:
      return 'm';
    case Gender::feminine:
      return 'f';
    case Gender::neuter:
      return 'n';
    default:
      return '-';
  }
}

char number_char(Number n) {
  switch (n) {
    case Number::singular:
      return 's';
    case Number::plural:
      return 'p';
    case Number::count:
      return 't';
    default:
      return '-';
  }
}

char definiteness_char(Definiteness d) {
  switch (d) {
    case Definiteness::indefinite:
      return 'i';
    case Definiteness::definite:
      return 'd';
    default:
      return '-';
  }
}

// Effective number for the mismatch test: the count form follows
// numerals and behaves like a plural for attributive agreement.
Number fold_count(Number n) {
  return n == Number::count ? Number::plural : n;
}

}  // namespace

std::string_view to_string(Disagreement d) {
  switch (d) {
    case Disagreement::number_mismatch:
      return "NumberMismatch";
    case Disagreement::gender_mismatch:
      return "GenderMismatch";
    case Disagreement::definiteness_placement:
      return "DefinitenessPlacement";
  }
  return "NumberMismatch";
}

MorphFeatures decode_tag(std::string_view tag) {
  if (tag.empty()) {
    throw ValidationError("decode_tag: empty tag");
  }

  MorphFeatures f;
  f.raw.assign(tag);

  switch (tag[0]) {
    case 'A':
      f.pos_class = PosClass::adjective;
      f.gender = decode_gender(at(tag, 1));
      f.number = decode_number(at(tag, 2), /*allow_count=*/false);
      f.definiteness = decode_definiteness(at(tag, 3));
      break;
    case 'N':
      f.pos_class = PosClass::noun;
      // position 1 (common/proper) is retained only in raw
      f.gender = decode_gender(at(tag, 2));
      f.number = decode_number(at(tag, 3), /*allow_count=*/true);
      f.definiteness = decode_definiteness(at(tag, 4));
      break;
    default:
      f.pos_class = PosClass::other;
      break;
  }
  return f;
}

std::string encode_tag(const MorphFeatures& f) {
  if (f.pos_class == PosClass::other) {
    throw UnsupportedError("encode_tag: no canonical tag for PosClass other");
  }

  std::string tag;
  if (f.pos_class == PosClass::adjective) {
    tag = "A";
  } else {
    tag = "Nc";  // proper nouns have no canonical encoding
  }
  tag += gender_char(f.gender);
  tag += number_char(f.number);
  tag += definiteness_char(f.definiteness);

  // trailing unspecified positions are dropped; '-' survives only as a
  // gender placeholder in the middle of a tag
  while (!tag.empty() && tag.back() == '-') tag.pop_back();
  return tag;
}

std::vector<Disagreement> agreement_check(const MorphFeatures& adj,
                                          const MorphFeatures& noun) {
  if (adj.pos_class != PosClass::adjective) {
    throw ValidationError("agreement_check: first argument is not an adjective");
  }
  if (noun.pos_class != PosClass::noun) {
    throw ValidationError("agreement_check: second argument is not a noun");
  }

  std::vector<Disagreement> out;

  const Number an = fold_count(adj.number);
  const Number nn = fold_count(noun.number);
  if (an != Number::unspecified && nn != Number::unspecified && an != nn) {
    out.push_back(Disagreement::number_mismatch);
  }

  // Gender is checked only between singular forms; plural adjectives are
  // genderless and never gender-mismatch.
  const bool singular_pair =
      noun.number == Number::singular &&
      (adj.number == Number::singular || adj.number == Number::unspecified);
  if (singular_pair && adj.gender != Gender::unspecified &&
      noun.gender != Gender::unspecified && adj.gender != noun.gender) {
    out.push_back(Disagreement::gender_mismatch);
  }

  // In a correct adjective+noun phrase the definite article sits on the
  // adjective only, so any definite noun here is misbuilt.
  if (noun.definiteness == Definiteness::definite) {
    out.push_back(Disagreement::definiteness_placement);
  }

  return out;
}

}  // namespace aglint
