/*
 * Copyright 2026 The secretpi authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SECRETPI_PARSER_HPP_
#define SECRETPI_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "secretpi/process.hpp"

namespace secretpi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, std::string found,
             std::vector<std::string> expected);

  int line() const { return line_; }
  int col() const { return col_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int col_;
  std::vector<std::string> expected_;
};

// Concrete syntax:
//   proc    := seq ("|" proc)?
//   seq     := prefix ("." seq)? | atom
//   prefix  := ident "(" ident ("/" nameset)? ")"    input
//            | ident "[" ident ":" nameset "]"       trusted input
//            | ident "!" "<" ident ">"               output
//            | "spy" (":" ident)?
//   atom    := "0" | "!" atom
//            | "(" "new" ident ")" seq | "(" "hide" ident ")" seq
//            | "(" proc ")"
//   nameset := "{" (ident ("," ident)*)? "}" | ident
//   ident   := [a-zA-Z_][a-zA-Z0-9_']*  except new/hide/spy/nu
// Line comments start with "--".
ProcessPtr parse(const std::string& text);

}  // namespace secretpi

#endif  // SECRETPI_PARSER_HPP_
