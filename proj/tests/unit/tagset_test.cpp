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

#include <random>

#include <doctest.h>

#include "aglint/errors.hpp"
#include "aglint/tagger.hpp"

using namespace aglint;

TEST_CASE("decode_tag reads the positional layout") {
  const MorphFeatures ansi = decode_tag("Ansi");
  CHECK(ansi.pos_class == PosClass::adjective);
  CHECK(ansi.gender == Gender::neuter);
  CHECK(ansi.number == Number::singular);
  CHECK(ansi.definiteness == Definiteness::indefinite);
  CHECK(ansi.raw == "Ansi");

  const MorphFeatures ncnpi = decode_tag("Ncnpi");
  CHECK(ncnpi.pos_class == PosClass::noun);
  CHECK(ncnpi.gender == Gender::neuter);
  CHECK(ncnpi.number == Number::plural);
  CHECK(ncnpi.definiteness == Definiteness::indefinite);

  // plural adjectives carry '-' in the gender slot
  const MorphFeatures apd = decode_tag("A-pd");
  CHECK(apd.pos_class == PosClass::adjective);
  CHECK(apd.gender == Gender::unspecified);
  CHECK(apd.number == Number::plural);
  CHECK(apd.definiteness == Definiteness::definite);

  const MorphFeatures verb = decode_tag("Vpitf");
  CHECK(verb.pos_class == PosClass::other);
  CHECK(verb.gender == Gender::unspecified);
  CHECK(verb.number == Number::unspecified);
  CHECK(verb.definiteness == Definiteness::unspecified);
  CHECK(verb.raw == "Vpitf");
}

TEST_CASE("decode_tag fills missing and unknown positions with unspecified") {
  CHECK(decode_tag("A").number == Number::unspecified);
  CHECK(decode_tag("Nc").gender == Gender::unspecified);
  CHECK(decode_tag("Axsz").gender == Gender::unspecified);
  CHECK(decode_tag("Ncmt").number == Number::count);
  // masculine article letters decode as definite
  CHECK(decode_tag("Amsh").definiteness == Definiteness::definite);
  CHECK(decode_tag("Amsf").definiteness == Definiteness::definite);
  CHECK_THROWS_AS(decode_tag(""), ValidationError);
}

TEST_CASE("decode_tag never fails on random ASCII") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> ch(32, 126);
  std::uniform_int_distribution<int> len(1, 8);
  for (int i = 0; i < 10000; ++i) {
    std::string tag;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) tag.push_back(static_cast<char>(ch(rng)));
    CHECK_NOTHROW(decode_tag(tag));
  }
}

TEST_CASE("encode_tag emits canonical tags") {
  MorphFeatures f;
  f.pos_class = PosClass::adjective;
  f.gender = Gender::neuter;
  f.number = Number::singular;
  f.definiteness = Definiteness::indefinite;
  CHECK(encode_tag(f) == "Ansi");

  MorphFeatures n;
  n.pos_class = PosClass::noun;
  n.gender = Gender::masculine;
  n.number = Number::singular;
  n.definiteness = Definiteness::definite;
  CHECK(encode_tag(n) == "Ncmsd");

  MorphFeatures other;
  CHECK_THROWS_AS(encode_tag(other), UnsupportedError);

  // unspecified gender is a '-' placeholder, trailing unspecified drops
  MorphFeatures plural;
  plural.pos_class = PosClass::adjective;
  plural.number = Number::plural;
  plural.definiteness = Definiteness::indefinite;
  CHECK(encode_tag(plural) == "A-pi");
  plural.definiteness = Definiteness::unspecified;
  CHECK(encode_tag(plural) == "A-p");
}

TEST_CASE("round-trip over the bundled lexicon inventory") {
  const Lexicon lex = load_lexicon(AGLINT_REPO_DIR "/lexicons/bulgarian.lex");
  REQUIRE(lex.size() > 0);
  // the article letters normalize to 'd' in the definiteness slot only
  auto normalize = [](std::string tag) {
    const std::size_t def_pos = tag.starts_with("A") ? 3 : 4;
    if (def_pos < tag.size() && (tag[def_pos] == 'h' || tag[def_pos] == 'f')) {
      tag[def_pos] = 'd';
    }
    return tag;
  };
  for (const std::string& tag : lex.tag_inventory()) {
    if (tag.starts_with("Np")) continue;  // proper nouns have no canonical form
    CHECK(encode_tag(decode_tag(tag)) == normalize(tag));
  }
}

TEST_CASE("agreement_check flags the documented mismatches") {
  // plural adjective + singular noun
  CHECK(agreement_check(decode_tag("Ansi"), decode_tag("Ncnpi")) ==
        std::vector{Disagreement::number_mismatch});
  // masculine adjective + neuter noun
  CHECK(agreement_check(decode_tag("Amsi"), decode_tag("Ncnsi")) ==
        std::vector{Disagreement::gender_mismatch});
  // full agreement
  CHECK(agreement_check(decode_tag("Ansi"), decode_tag("Ncnsi")).empty());
  // number and article placement at once
  CHECK(agreement_check(decode_tag("A-pi"), decode_tag("Ncmsd")) ==
        (std::vector{Disagreement::number_mismatch,
                     Disagreement::definiteness_placement}));
}

TEST_CASE("agreement_check argument validation") {
  CHECK_THROWS_AS(agreement_check(decode_tag("Ncnsi"), decode_tag("Ncnsi")),
                  ValidationError);
  CHECK_THROWS_AS(agreement_check(decode_tag("Ansi"), decode_tag("Ansi")),
                  ValidationError);
}

TEST_CASE("agreement_check properties") {
  const std::vector<std::string> adjectives = {"Amsi", "Afsi", "Ansi", "A-pi",
                                               "A-pd", "Amsd"};
  const std::vector<std::string> nouns = {"Ncmsi", "Ncfsi", "Ncnsi", "Ncmpi",
                                          "Ncmsd", "Ncfsd", "Ncmt"};
  for (const std::string& a : adjectives) {
    for (const std::string& n : nouns) {
      const auto result = agreement_check(decode_tag(a), decode_tag(n));
      // duplicate-free and sorted in the fixed order
      for (std::size_t i = 1; i < result.size(); ++i) {
        CHECK(static_cast<int>(result[i - 1]) < static_cast<int>(result[i]));
      }
      // plural adjectives never gender-mismatch
      if (decode_tag(a).number == Number::plural) {
        for (Disagreement d : result) {
          CHECK(d != Disagreement::gender_mismatch);
        }
      }
    }
  }

  // reflexive agreement: identical specified features, indefinite noun
  for (const char* suffix : {"msi", "fsi", "nsi"}) {
    const MorphFeatures adj = decode_tag(std::string("A") + suffix);
    const MorphFeatures noun = decode_tag(std::string("Nc") + suffix);
    CHECK(agreement_check(adj, noun).empty());
  }

  // count form behaves like a plural
  CHECK(agreement_check(decode_tag("Ansi"), decode_tag("Ncmt")) ==
        std::vector{Disagreement::number_mismatch});
  CHECK(agreement_check(decode_tag("A-pi"), decode_tag("Ncmt")).empty());
}
