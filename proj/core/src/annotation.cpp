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

#include "aglint/errors.hpp"
#include "aglint/utf8.hpp"

namespace aglint {

bool annotation_order(const Annotation& a, const Annotation& b) {
  if (a.start != b.start) return a.start < b.start;
  if (a.end != b.end) return a.end > b.end;  // longer first
  return a.id < b.id;
}

Document::Document(std::string_view utf8_text, std::string source_name)
    : text_(utf8::decode(utf8_text)), source_name_(std::move(source_name)) {}

Document::Document(std::u32string text, std::string source_name)
    : text_(std::move(text)), source_name_(std::move(source_name)) {}

std::string Document::text_utf8() const { return utf8::encode(text_); }

AnnotationId Document::add_annotation(std::string type, std::size_t start,
                                      std::size_t end, FeatureMap features) {
  if (type.empty()) {
    throw ValidationError("annotation type must be non-empty");
  }
  if (start > end || end > text_.size()) {
    throw RangeError("annotation span (" + std::to_string(start) + "," +
                     std::to_string(end) + ") out of bounds for document of " +
                     std::to_string(text_.size()) + " code points");
  }
  const AnnotationId id = next_id_++;
  index_.emplace(id, annotations_.size());
  annotations_.push_back(
      Annotation{id, std::move(type), start, end, std::move(features)});
  return id;
}

void Document::set_feature(AnnotationId id, const std::string& key,
                           std::string value) {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw ValidationError("no annotation with id " + std::to_string(id));
  }
  annotations_[it->second].features[key] = std::move(value);
}

std::vector<Annotation> Document::annotations_of_type(
    std::string_view type) const {
  std::vector<Annotation> out;
  for (const Annotation& a : annotations_) {
    if (a.type == type) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), annotation_order);
  return out;
}

std::vector<const Annotation*> Document::annotations_in(std::string_view type,
                                                        Span region) const {
  std::vector<const Annotation*> out;
  for (const Annotation& a : annotations_) {
    if (a.type == type && a.start >= region.start && a.end <= region.end) {
      out.push_back(&a);
    }
  }
  std::sort(out.begin(), out.end(), [](const Annotation* a, const Annotation* b) {
    return annotation_order(*a, *b);
  });
  return out;
}

std::vector<Annotation> Document::all_annotations() const {
  std::vector<Annotation> out(annotations_.begin(), annotations_.end());
  std::sort(out.begin(), out.end(), annotation_order);
  return out;
}

const Annotation* Document::find(AnnotationId id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &annotations_[it->second];
}

bool Document::has_type(std::string_view type) const {
  return std::any_of(annotations_.begin(), annotations_.end(),
                     [&](const Annotation& a) { return a.type == type; });
}

std::string Document::covered_text(std::size_t start, std::size_t end) const {
  if (start > end || end > text_.size()) {
    throw RangeError("covered_text span (" + std::to_string(start) + "," +
                     std::to_string(end) + ") out of bounds");
  }
  return utf8::encode(
      std::u32string_view(text_).substr(start, end - start));
}

}  // namespace aglint
