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

#ifndef SECRETPI_PRINTER_HPP_
#define SECRETPI_PRINTER_HPP_

#include <string>

#include "secretpi/process.hpp"

namespace secretpi {

// Deterministic minimal-parenthesis concrete syntax. Binder names that
// the grammar cannot express (canonical "#<n>" suffixes) are re-spelled
// on output, so parse(pretty(p)) is alpha-equivalent to p whenever the
// free names of p are grammar-valid identifiers.
std::string pretty(const ProcessPtr& p);

// Name spelling for actions and barbs; the reserved restriction marker
// prints as "nu".
std::string prettyName(const Name& n);

}  // namespace secretpi

#endif  // SECRETPI_PRINTER_HPP_
