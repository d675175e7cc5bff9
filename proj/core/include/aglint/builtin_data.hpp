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

#ifndef AGLINT_BUILTIN_DATA_HPP_
#define AGLINT_BUILTIN_DATA_HPP_

#include <string_view>

namespace aglint {

// The bundled Bulgarian lexicon and agreement grammar, embedded at build
// time from lexicons/bulgarian.lex and grammars/agreement.jape. These are
// the defaults the CLI falls back to when no file is supplied.

std::string_view builtin_lexicon();
std::string_view builtin_grammar();

}  // namespace aglint

#endif  // AGLINT_BUILTIN_DATA_HPP_
