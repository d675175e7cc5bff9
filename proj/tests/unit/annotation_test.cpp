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

#include "aglint/annotation.hpp"

#include <algorithm>
#include <random>

#include <doctest.h>

#include "aglint/errors.hpp"

using namespace aglint;

TEST_CASE("add_annotation issues fresh ids and validates spans") {
  Document doc("щастливо дете.");
  REQUIRE(doc.length() == 14);  // code points, not bytes

  const AnnotationId id =
      doc.add_annotation("Token", 0, 8, {{"string", "щастливо"}});
  CHECK(id == 0);
  CHECK(doc.annotation_count() == 1);

  // zero-width spans are allowed
  CHECK_NOTHROW(doc.add_annotation("X", 5, 5));

  CHECK_THROWS_AS(doc.add_annotation("Token", 3, 20), RangeError);
  CHECK_THROWS_AS(doc.add_annotation("Token", 9, 3), RangeError);
  CHECK_THROWS_AS(doc.add_annotation("", 0, 1), ValidationError);

  // ids are strictly increasing even after failed inserts
  const AnnotationId next = doc.add_annotation("Token", 9, 13);
  CHECK(next > id);
}

TEST_CASE("annotations_of_type returns offset order with longer-first ties") {
  Document doc("щастливо дете.");
  doc.add_annotation("Token", 9, 13);
  doc.add_annotation("Token", 0, 8);
  auto tokens = doc.annotations_of_type("Token");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].span() == Span{0, 8});
  CHECK(tokens[1].span() == Span{9, 13});

  CHECK(doc.annotations_of_type("Sentence").empty());

  // equal start: the longer annotation comes first
  Document d2("0123456789");
  d2.add_annotation("X", 0, 5);
  d2.add_annotation("X", 0, 8);
  auto xs = d2.annotations_of_type("X");
  CHECK(xs[0].span() == Span{0, 8});
  CHECK(xs[1].span() == Span{0, 5});
}

TEST_CASE("annotation order is deterministic for any insertion order") {
  std::mt19937 rng(7);
  std::vector<Span> spans = {{0, 5}, {0, 8}, {0, 5}, {2, 3}, {2, 9},
                             {5, 5}, {5, 7}, {9, 9}, {1, 8}, {0, 0}};
  std::vector<std::vector<Span>> runs;
  for (int run = 0; run < 10; ++run) {
    std::shuffle(spans.begin(), spans.end(), rng);
    Document doc("0123456789");
    for (const Span& s : spans) doc.add_annotation("X", s.start, s.end);
    std::vector<Span> got;
    for (const Annotation& a : doc.annotations_of_type("X")) {
      got.push_back(a.span());
    }
    runs.push_back(std::move(got));
  }
  for (std::size_t i = 1; i < runs.size(); ++i) CHECK(runs[i] == runs[0]);
}

TEST_CASE("every added annotation is retrievable exactly once") {
  Document doc("0123456789");
  std::vector<AnnotationId> ids;
  for (std::size_t i = 0; i < 10; ++i) {
    ids.push_back(doc.add_annotation("T", i / 2, 5 + i / 2));
  }
  auto all = doc.annotations_of_type("T");
  CHECK(all.size() == ids.size());
  for (AnnotationId id : ids) {
    CHECK(std::count_if(all.begin(), all.end(),
                        [&](const Annotation& a) { return a.id == id; }) == 1);
  }
}

TEST_CASE("covered_text slices by code points") {
  Document doc("щастливо дете.");
  CHECK(doc.covered_text(9, 13) == "дете");
  CHECK(doc.covered_text(0, 0) == "");
  CHECK(doc.covered_text(0, 14) == "щастливо дете.");
  CHECK(doc.covered_text(0, doc.length()) == doc.text_utf8());
  CHECK_THROWS_AS(doc.covered_text(0, 15), RangeError);
  CHECK_THROWS_AS(doc.covered_text(10, 9), RangeError);
}

TEST_CASE("covered_text of the full span equals the original text") {
  for (const char* text : {"", "a", "щастливо дете.", "12.5 лв."}) {
    Document doc(text);
    CHECK(doc.covered_text(0, doc.length()) == text);
  }
}

TEST_CASE("invalid UTF-8 decodes to replacement characters") {
  const std::string bad = "a\xFF\xFE" "b";
  Document doc(bad);
  CHECK(doc.length() == 4);
  CHECK(doc.covered_text(0, 1) == "a");
  CHECK(doc.covered_text(3, 4) == "b");

  // truncated multi-byte sequence at the end of input
  Document truncated("\xD1");
  CHECK(truncated.length() == 1);
}
