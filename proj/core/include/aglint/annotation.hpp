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

#ifndef AGLINT_ANNOTATION_HPP_
#define AGLINT_ANNOTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace aglint {

using AnnotationId = std::uint64_t;
using FeatureMap = std::map<std::string, std::string>;

/// Half-open span [start, end) in code points.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  auto operator<=>(const Span&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Span& s) {
    return os << '(' << s.start << ',' << s.end << ')';
  }
};

/// A typed stand-off span over a document with string-to-string features.
/// Analysers communicate exclusively through these: the tokenizer emits
/// "Token", the splitter "Sentence", the transducer whatever its rules say.
struct Annotation {
  AnnotationId id = 0;
  std::string type;
  std::size_t start = 0;
  std::size_t end = 0;
  FeatureMap features;

  Span span() const { return {start, end}; }

  /// Feature value or nullptr when absent.
  const std::string* feature(const std::string& key) const {
    auto it = features.find(key);
    return it == features.end() ? nullptr : &it->second;
  }

  bool operator==(const Annotation&) const = default;
};

/// Traversal order shared by every consumer: start ascending, then end
/// descending (longer first), then id ascending. A total order, so any
/// insertion order yields the same walk.
bool annotation_order(const Annotation& a, const Annotation& b);

/// Immutable text plus an append-only stand-off annotation set. Offsets
/// count Unicode code points; the text is decoded once on construction.
class Document {
 public:
  Document() = default;
  explicit Document(std::string_view utf8_text, std::string source_name = "-");
  explicit Document(std::u32string text, std::string source_name = "-");

  const std::u32string& text() const { return text_; }
  std::string text_utf8() const;
  std::size_t length() const { return text_.size(); }
  const std::string& source_name() const { return source_name_; }

  /// Stores an annotation and returns a fresh id (strictly greater than
  /// every id issued before for this document).
  AnnotationId add_annotation(std::string type, std::size_t start,
                              std::size_t end, FeatureMap features = {});

  /// Adds or replaces one feature on an existing annotation. Spans are
  /// append-only; features may be enriched by later analysers.
  void set_feature(AnnotationId id, const std::string& key, std::string value);

  /// All annotations of the given type in annotation_order.
  std::vector<Annotation> annotations_of_type(std::string_view type) const;

  /// Pointers to the annotations of the given type fully inside region,
  /// in annotation_order. Annotations live in stable storage: appending
  /// more never invalidates them.
  std::vector<const Annotation*> annotations_in(std::string_view type,
                                                Span region) const;

  std::vector<Annotation> all_annotations() const;

  const Annotation* find(AnnotationId id) const;

  bool has_type(std::string_view type) const;
  std::size_t annotation_count() const { return annotations_.size(); }

  /// UTF-8 substring of the text in code points [start, end).
  std::string covered_text(std::size_t start, std::size_t end) const;
  std::string covered_text(Span s) const { return covered_text(s.start, s.end); }

 private:
  std::u32string text_;
  std::string source_name_ = "-";
  std::deque<Annotation> annotations_;  // insertion order, stable references
  std::map<AnnotationId, std::size_t> index_;
  AnnotationId next_id_ = 0;
};

/// An ordered collection of documents; order is preserved across
/// pipeline runs.
struct Corpus {
  std::vector<Document> documents;
};

}  // namespace aglint

#endif  // AGLINT_ANNOTATION_HPP_
