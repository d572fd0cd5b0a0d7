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

#include "secretpi/process.hpp"

namespace secretpi {

namespace {

void requireNotNu(const Name& n) {
  if (n.isNu())
    throw std::invalid_argument("the reserved name nu cannot occur in a term");
}

void requireSetNoNu(const NameSet& s) {
  for (const auto& n : s) requireNotNu(n);
}

ProcessPtr make(Process node) {
  return std::make_shared<const Process>(std::move(node));
}

}  // namespace

ProcessPtr mkNil() {
  static const ProcessPtr nil = make(Process{});
  return nil;
}

ProcessPtr mkInput(const Name& subject, const Name& param, NameSet blocked,
                   ProcessPtr body) {
  requireNotNu(subject);
  requireNotNu(param);
  requireSetNoNu(blocked);
  Process n;
  n.kind = ProcKind::Input;
  n.subject = subject;
  n.object = param;
  n.names = std::move(blocked);
  n.left = std::move(body);
  return make(std::move(n));
}

ProcessPtr mkTrusted(const Name& subject, const Name& param, NameSet accepted,
                     ProcessPtr body) {
  requireNotNu(subject);
  requireNotNu(param);
  requireSetNoNu(accepted);
  Process n;
  n.kind = ProcKind::TrustedInput;
  n.subject = subject;
  n.object = param;
  n.names = std::move(accepted);
  n.left = std::move(body);
  return make(std::move(n));
}

ProcessPtr mkOutput(const Name& subject, const Name& object, ProcessPtr body) {
  requireNotNu(subject);
  requireNotNu(object);
  Process n;
  n.kind = ProcKind::Output;
  n.subject = subject;
  n.object = object;
  n.left = std::move(body);
  return make(std::move(n));
}

ProcessPtr mkPar(ProcessPtr left, ProcessPtr right) {
  Process n;
  n.kind = ProcKind::Par;
  n.left = std::move(left);
  n.right = std::move(right);
  return make(std::move(n));
}

ProcessPtr mkNew(const Name& binder, ProcessPtr body) {
  requireNotNu(binder);
  Process n;
  n.kind = ProcKind::New;
  n.subject = binder;
  n.left = std::move(body);
  return make(std::move(n));
}

ProcessPtr mkHide(const Name& binder, ProcessPtr body) {
  requireNotNu(binder);
  Process n;
  n.kind = ProcKind::Hide;
  n.subject = binder;
  n.left = std::move(body);
  return make(std::move(n));
}

ProcessPtr mkRepl(ProcessPtr body) {
  Process n;
  n.kind = ProcKind::Repl;
  n.left = std::move(body);
  return make(std::move(n));
}

ProcessPtr mkSpy(std::optional<Name> spied, ProcessPtr body) {
  Process n;
  n.kind = ProcKind::Spy;
  if (spied) {
    requireNotNu(*spied);
    n.subject = *spied;
    n.spySome = true;
  }
  n.left = std::move(body);
  return make(std::move(n));
}

bool isNil(const ProcessPtr& p) { return p->kind == ProcKind::Nil; }

bool structEq(const ProcessPtr& a, const ProcessPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ProcKind::Nil:
      return true;
    case ProcKind::Input:
    case ProcKind::TrustedInput:
      return a->subject == b->subject && a->object == b->object &&
             a->names == b->names && structEq(a->left, b->left);
    case ProcKind::Output:
      return a->subject == b->subject && a->object == b->object &&
             structEq(a->left, b->left);
    case ProcKind::Par:
      return structEq(a->left, b->left) && structEq(a->right, b->right);
    case ProcKind::New:
    case ProcKind::Hide:
      return a->subject == b->subject && structEq(a->left, b->left);
    case ProcKind::Repl:
      return structEq(a->left, b->left);
    case ProcKind::Spy:
      return a->spySome == b->spySome &&
             (!a->spySome || a->subject == b->subject) &&
             structEq(a->left, b->left);
  }
  return false;
}

bool containsSpy(const ProcessPtr& p) {
  if (p->kind == ProcKind::Spy) return true;
  if (p->left && containsSpy(p->left)) return true;
  if (p->right && containsSpy(p->right)) return true;
  return false;
}

bool containsRepl(const ProcessPtr& p) {
  if (p->kind == ProcKind::Repl) return true;
  if (p->left && containsRepl(p->left)) return true;
  if (p->right && containsRepl(p->right)) return true;
  return false;
}

int nodeCount(const ProcessPtr& p) {
  int n = 1;
  if (p->left) n += nodeCount(p->left);
  if (p->right) n += nodeCount(p->right);
  return n;
}

}  // namespace secretpi
