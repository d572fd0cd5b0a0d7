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

#ifndef SECRETPI_BINDING_HPP_
#define SECRETPI_BINDING_HPP_

#include <string>

#include "secretpi/process.hpp"

namespace secretpi {

// Free names. Blocked and accepted sets count as free positions, and the
// spied set of a spy prefix is free as well.
NameSet freeNames(const ProcessPtr& p);

// Bound names: input parameters and new/hide binders.
NameSet boundNames(const ProcessPtr& p);

// Capture-free substitution of `withName` for free occurrences of
// `forName`, including occurrences inside blocked/accepted/spied sets.
// Binders are renamed on the way down when they would capture `withName`.
ProcessPtr substitute(const ProcessPtr& p, const Name& withName,
                      const Name& forName);

// The blocking operation: adds `b` to the blocked set of every input
// prefix, leaves accepted sets alone, and distributes through everything
// else. A binder equal to `b` is alpha-renamed first.
ProcessPtr blockName(const ProcessPtr& p, const Name& b);

// Renames every binder to a fresh base#n name, numbering in traversal
// order and skipping names free in the term. Idempotent up to structural
// equality.
ProcessPtr alphaCanonicalize(const ProcessPtr& p);

// Variant that freshens against extra outside names, for unfolding
// replication copies next to existing threads.
ProcessPtr alphaFreshen(const ProcessPtr& p, FreshPool& pool);

// Equality up to consistent renaming of bound names.
bool alphaEq(const ProcessPtr& a, const ProcessPtr& b);

// Structural print with positional binder names; equal strings iff
// alpha-equivalent. Free names are printed verbatim.
std::string structKey(const ProcessPtr& p);

// Like structKey, but names found in `rendering` print as the given
// token instead of verbatim. Used to sort threads independently of the
// spelling of enclosing binders.
std::string structKeyWith(const ProcessPtr& p,
                          const std::map<Name, std::string>& rendering);

}  // namespace secretpi

#endif  // SECRETPI_BINDING_HPP_
