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

#ifndef SECRETPI_PROCESS_HPP_
#define SECRETPI_PROCESS_HPP_

#include <memory>
#include <optional>
#include <stdexcept>

#include "secretpi/name.hpp"

namespace secretpi {

enum class ProcKind {
  Nil,
  Input,         // subject(param / blocked).body
  TrustedInput,  // subject[param : accepted].body
  Output,        // subject!<object>.body
  Par,           // left | right
  New,           // (new binder) body
  Hide,          // (hide binder) body
  Repl,          // !body
  Spy,           // spy[:subject].body
};

class Process;
using ProcessPtr = std::shared_ptr<const Process>;

// Immutable process term. Field roles per kind:
//   Input/TrustedInput: subject, object = parameter, names = blocked/accepted
//   Output:             subject, object
//   New/Hide:           subject = binder
//   Spy:                spySome ? spied set {subject} : empty spied set
//   left:               body / continuation / left of Par
//   right:              right of Par
class Process {
 public:
  ProcKind kind = ProcKind::Nil;
  Name subject;
  Name object;
  NameSet names;
  bool spySome = false;
  ProcessPtr left;
  ProcessPtr right;

  Process() = default;
};

ProcessPtr mkNil();
ProcessPtr mkInput(const Name& subject, const Name& param, NameSet blocked,
                   ProcessPtr body);
ProcessPtr mkTrusted(const Name& subject, const Name& param, NameSet accepted,
                     ProcessPtr body);
ProcessPtr mkOutput(const Name& subject, const Name& object, ProcessPtr body);
ProcessPtr mkPar(ProcessPtr left, ProcessPtr right);
ProcessPtr mkNew(const Name& binder, ProcessPtr body);
ProcessPtr mkHide(const Name& binder, ProcessPtr body);
ProcessPtr mkRepl(ProcessPtr body);
ProcessPtr mkSpy(std::optional<Name> spied, ProcessPtr body);

bool isNil(const ProcessPtr& p);

// Deep equality including all names (not up to alpha).
bool structEq(const ProcessPtr& a, const ProcessPtr& b);

bool containsSpy(const ProcessPtr& p);
bool containsRepl(const ProcessPtr& p);

// Number of AST nodes; used to size test corpora.
int nodeCount(const ProcessPtr& p);

}  // namespace secretpi

#endif  // SECRETPI_PROCESS_HPP_
