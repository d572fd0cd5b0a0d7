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

#include "secretpi/printer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "secretpi/binding.hpp"

namespace secretpi {

namespace {

bool isReservedWord(const std::string& s) {
  return s == "new" || s == "hide" || s == "spy" || s == "nu";
}

bool isValidIdent(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
      return false;
  return !isReservedWord(s);
}

class Printer {
 public:
  std::string run(const ProcessPtr& p) {
    std::ostringstream out;
    par(p, out);
    return out.str();
  }

 private:
  std::map<Name, std::string> env_;

  std::string spell(const Name& n) const {
    auto it = env_.find(n);
    return it == env_.end() ? n.id : it->second;
  }

  // Picks an output spelling for a binder that the grammar accepts and
  // that captures no name free in `body`.
  std::string chooseBinderSpelling(const Name& binder,
                                   const ProcessPtr& body) {
    std::string base = binder.base();
    if (!isValidIdent(base)) base = "v";
    NameSet fv = setMinus(freeNames(body), binder);
    std::set<std::string> avoid;
    for (const auto& n : fv) avoid.insert(spell(n));
    if (isValidIdent(binder.id) && !avoid.count(binder.id)) return binder.id;
    if (!avoid.count(base)) return base;
    for (int k = 1;; ++k) {
      std::string cand = base + "_" + std::to_string(k);
      if (!avoid.count(cand)) return cand;
    }
  }

  void withBinder(const Name& binder, const std::string& spelling, auto&& k) {
    auto it = env_.find(binder);
    std::optional<std::string> old;
    if (it != env_.end()) old = it->second;
    env_[binder] = spelling;
    k();
    if (old)
      env_[binder] = *old;
    else
      env_.erase(binder);
  }

  void nameSet(const NameSet& s, std::ostringstream& out) {
    std::vector<std::string> parts;
    for (const auto& n : s) parts.push_back(spell(n));
    std::sort(parts.begin(), parts.end());
    if (parts.size() == 1) {
      out << parts[0];
      return;
    }
    out << '{';
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out << ',';
      out << parts[i];
    }
    out << '}';
  }

  void par(const ProcessPtr& p, std::ostringstream& out) {
    if (p->kind == ProcKind::Par) {
      seqOrParen(p->left, out);
      out << " | ";
      par(p->right, out);
      return;
    }
    seq(p, out);
  }

  void seqOrParen(const ProcessPtr& p, std::ostringstream& out) {
    if (p->kind == ProcKind::Par) {
      out << '(';
      par(p, out);
      out << ')';
      return;
    }
    seq(p, out);
  }

  void continuation(const ProcessPtr& p, std::ostringstream& out) {
    if (isNil(p)) return;
    out << '.';
    seqOrParen(p, out);
  }

  void seq(const ProcessPtr& p, std::ostringstream& out) {
    switch (p->kind) {
      case ProcKind::Input: {
        out << spell(p->subject) << '(';
        std::string param = chooseBinderSpelling(p->object, p->left);
        out << param;
        if (!p->names.empty()) {
          out << '/';
          nameSet(p->names, out);
        }
        out << ')';
        withBinder(p->object, param, [&] { continuation(p->left, out); });
        return;
      }
      case ProcKind::TrustedInput: {
        out << spell(p->subject) << '[';
        std::string param = chooseBinderSpelling(p->object, p->left);
        out << param << ':';
        if (p->names.empty())
          out << "{}";
        else
          nameSet(p->names, out);
        out << ']';
        withBinder(p->object, param, [&] { continuation(p->left, out); });
        return;
      }
      case ProcKind::Output:
        out << spell(p->subject) << "!<" << spell(p->object) << '>';
        continuation(p->left, out);
        return;
      case ProcKind::Spy:
        out << "spy";
        if (p->spySome) out << ':' << spell(p->subject);
        continuation(p->left, out);
        return;
      default:
        atom(p, out);
        return;
    }
  }

  void atom(const ProcessPtr& p, std::ostringstream& out) {
    switch (p->kind) {
      case ProcKind::Nil:
        out << '0';
        return;
      case ProcKind::Repl:
        out << '!';
        atomOrParen(p->left, out);
        return;
      case ProcKind::New:
      case ProcKind::Hide: {
        std::string binder = chooseBinderSpelling(p->subject, p->left);
        out << (p->kind == ProcKind::New ? "(new " : "(hide ") << binder
            << ") ";
        withBinder(p->subject, binder, [&] { seqOrParen(p->left, out); });
        return;
      }
      default:
        out << '(';
        par(p, out);
        out << ')';
        return;
    }
  }

  void atomOrParen(const ProcessPtr& p, std::ostringstream& out) {
    switch (p->kind) {
      case ProcKind::Nil:
      case ProcKind::Repl:
      case ProcKind::New:
      case ProcKind::Hide:
        atom(p, out);
        return;
      default:
        out << '(';
        par(p, out);
        out << ')';
        return;
    }
  }
};

}  // namespace

std::string pretty(const ProcessPtr& p) { return Printer{}.run(p); }

std::string prettyName(const Name& n) { return n.isNu() ? "nu" : n.id; }

}  // namespace secretpi
