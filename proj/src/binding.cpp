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

#include "secretpi/binding.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace secretpi {

NameSet freeNames(const ProcessPtr& p) {
  switch (p->kind) {
    case ProcKind::Nil:
      return {};
    case ProcKind::Input:
    case ProcKind::TrustedInput: {
      NameSet fv = setMinus(freeNames(p->left), p->object);
      fv.insert(p->subject);
      return setUnion(std::move(fv), p->names);
    }
    case ProcKind::Output: {
      NameSet fv = freeNames(p->left);
      fv.insert(p->subject);
      fv.insert(p->object);
      return fv;
    }
    case ProcKind::Par:
      return setUnion(freeNames(p->left), freeNames(p->right));
    case ProcKind::New:
    case ProcKind::Hide:
      return setMinus(freeNames(p->left), p->subject);
    case ProcKind::Repl:
      return freeNames(p->left);
    case ProcKind::Spy: {
      NameSet fv = freeNames(p->left);
      if (p->spySome) fv.insert(p->subject);
      return fv;
    }
  }
  return {};
}

NameSet boundNames(const ProcessPtr& p) {
  switch (p->kind) {
    case ProcKind::Nil:
      return {};
    case ProcKind::Input:
    case ProcKind::TrustedInput: {
      NameSet bv = boundNames(p->left);
      bv.insert(p->object);
      return bv;
    }
    case ProcKind::Output:
    case ProcKind::Repl:
    case ProcKind::Spy:
      return boundNames(p->left);
    case ProcKind::Par:
      return setUnion(boundNames(p->left), boundNames(p->right));
    case ProcKind::New:
    case ProcKind::Hide: {
      NameSet bv = boundNames(p->left);
      bv.insert(p->subject);
      return bv;
    }
  }
  return {};
}

namespace {

NameSet substSet(const NameSet& s, const Name& withName, const Name& forName) {
  NameSet out;
  for (const auto& n : s) out.insert(n == forName ? withName : n);
  return out;
}

// Renames the binder of an Input/TrustedInput/New/Hide node body so the
// binder avoids `avoid`. Returns the new binder name and body.
std::pair<Name, ProcessPtr> renameBinder(const Name& binder,
                                         const ProcessPtr& body,
                                         const NameSet& avoid) {
  FreshPool pool;
  pool.reserveAll(avoid);
  pool.reserveAll(freeNames(body));
  pool.reserveAll(boundNames(body));
  pool.reserve(binder);
  Name fresh = pool.fresh(binder.base());
  return {fresh, substitute(body, fresh, binder)};
}

}  // namespace

ProcessPtr substitute(const ProcessPtr& p, const Name& withName,
                      const Name& forName) {
  if (withName == forName) return p;
  auto sub = [&](const Name& n) { return n == forName ? withName : n; };
  switch (p->kind) {
    case ProcKind::Nil:
      return p;
    case ProcKind::Input:
    case ProcKind::TrustedInput: {
      Name subj = sub(p->subject);
      NameSet set = substSet(p->names, withName, forName);
      Name param = p->object;
      ProcessPtr body = p->left;
      if (param != forName) {
        if (param == withName && freeNames(body).count(forName)) {
          auto [fresh, renamed] = renameBinder(param, body, {withName, forName});
          param = fresh;
          body = renamed;
        }
        body = substitute(body, withName, forName);
      }
      return p->kind == ProcKind::Input
                 ? mkInput(subj, param, std::move(set), std::move(body))
                 : mkTrusted(subj, param, std::move(set), std::move(body));
    }
    case ProcKind::Output:
      return mkOutput(sub(p->subject), sub(p->object),
                      substitute(p->left, withName, forName));
    case ProcKind::Par:
      return mkPar(substitute(p->left, withName, forName),
                   substitute(p->right, withName, forName));
    case ProcKind::New:
    case ProcKind::Hide: {
      Name binder = p->subject;
      ProcessPtr body = p->left;
      if (binder == forName) return p;
      if (binder == withName && freeNames(body).count(forName)) {
        auto [fresh, renamed] = renameBinder(binder, body, {withName, forName});
        binder = fresh;
        body = renamed;
      }
      body = substitute(body, withName, forName);
      return p->kind == ProcKind::New ? mkNew(binder, std::move(body))
                                      : mkHide(binder, std::move(body));
    }
    case ProcKind::Repl:
      return mkRepl(substitute(p->left, withName, forName));
    case ProcKind::Spy: {
      std::optional<Name> spied;
      if (p->spySome) spied = sub(p->subject);
      return mkSpy(spied, substitute(p->left, withName, forName));
    }
  }
  return p;
}

ProcessPtr blockName(const ProcessPtr& p, const Name& b) {
  switch (p->kind) {
    case ProcKind::Nil:
      return p;
    case ProcKind::Input: {
      NameSet blocked = p->names;
      blocked.insert(b);
      return mkInput(p->subject, p->object, std::move(blocked),
                     blockName(p->left, b));
    }
    case ProcKind::TrustedInput:
      return mkTrusted(p->subject, p->object, p->names, blockName(p->left, b));
    case ProcKind::Output:
      return mkOutput(p->subject, p->object, blockName(p->left, b));
    case ProcKind::Par:
      return mkPar(blockName(p->left, b), blockName(p->right, b));
    case ProcKind::New:
    case ProcKind::Hide: {
      Name binder = p->subject;
      ProcessPtr body = p->left;
      if (binder == b) {
        auto [fresh, renamed] = renameBinder(binder, body, {b});
        binder = fresh;
        body = renamed;
      }
      body = blockName(body, b);
      return p->kind == ProcKind::New ? mkNew(binder, std::move(body))
                                      : mkHide(binder, std::move(body));
    }
    case ProcKind::Repl:
      return mkRepl(blockName(p->left, b));
    case ProcKind::Spy: {
      std::optional<Name> spied;
      if (p->spySome) spied = p->subject;
      return mkSpy(spied, blockName(p->left, b));
    }
  }
  return p;
}

namespace {

// Shared renaming walk for canonicalization and freshening. `env` maps
// bound names in scope to their new spellings.
ProcessPtr renameBinders(const ProcessPtr& p, std::map<Name, Name>& env,
                         FreshPool& pool) {
  auto look = [&](const Name& n) {
    auto it = env.find(n);
    return it == env.end() ? n : it->second;
  };
  auto lookSet = [&](const NameSet& s) {
    NameSet out;
    for (const auto& n : s) out.insert(look(n));
    return out;
  };
  switch (p->kind) {
    case ProcKind::Nil:
      return p;
    case ProcKind::Input:
    case ProcKind::TrustedInput: {
      Name subj = look(p->subject);
      NameSet set = lookSet(p->names);
      Name fresh = pool.fresh(p->object.base());
      auto saved = env.find(p->object);
      std::optional<Name> old;
      if (saved != env.end()) old = saved->second;
      env[p->object] = fresh;
      ProcessPtr body = renameBinders(p->left, env, pool);
      if (old)
        env[p->object] = *old;
      else
        env.erase(p->object);
      return p->kind == ProcKind::Input
                 ? mkInput(subj, fresh, std::move(set), std::move(body))
                 : mkTrusted(subj, fresh, std::move(set), std::move(body));
    }
    case ProcKind::Output:
      return mkOutput(look(p->subject), look(p->object),
                      renameBinders(p->left, env, pool));
    case ProcKind::Par: {
      ProcessPtr l = renameBinders(p->left, env, pool);
      ProcessPtr r = renameBinders(p->right, env, pool);
      return mkPar(std::move(l), std::move(r));
    }
    case ProcKind::New:
    case ProcKind::Hide: {
      Name fresh = pool.fresh(p->subject.base());
      auto saved = env.find(p->subject);
      std::optional<Name> old;
      if (saved != env.end()) old = saved->second;
      env[p->subject] = fresh;
      ProcessPtr body = renameBinders(p->left, env, pool);
      if (old)
        env[p->subject] = *old;
      else
        env.erase(p->subject);
      return p->kind == ProcKind::New ? mkNew(fresh, std::move(body))
                                      : mkHide(fresh, std::move(body));
    }
    case ProcKind::Repl:
      return mkRepl(renameBinders(p->left, env, pool));
    case ProcKind::Spy: {
      std::optional<Name> spied;
      if (p->spySome) spied = look(p->subject);
      return mkSpy(spied, renameBinders(p->left, env, pool));
    }
  }
  return p;
}

}  // namespace

ProcessPtr alphaCanonicalize(const ProcessPtr& p) {
  FreshPool pool;
  pool.reserveAll(freeNames(p));
  std::map<Name, Name> env;
  return renameBinders(p, env, pool);
}

ProcessPtr alphaFreshen(const ProcessPtr& p, FreshPool& pool) {
  pool.reserveAll(freeNames(p));
  std::map<Name, Name> env;
  return renameBinders(p, env, pool);
}

namespace {

bool alphaEqRec(const ProcessPtr& a, const ProcessPtr& b,
                std::map<Name, Name>& ab, std::map<Name, Name>& ba) {
  if (a->kind != b->kind) return false;
  // Names match when mapped to each other, or both unmapped and equal.
  auto nameEq = [&](const Name& x, const Name& y) {
    auto itab = ab.find(x);
    auto itba = ba.find(y);
    if (itab != ab.end() || itba != ba.end())
      return itab != ab.end() && itba != ba.end() && itab->second == y &&
             itba->second == x;
    return x == y;
  };
  auto setEq = [&](const NameSet& s, const NameSet& t) {
    if (s.size() != t.size()) return false;
    // Both directions must agree so a free name on one side cannot pose
    // as a bound name on the other.
    NameSet sMapped, tMapped;
    for (const auto& n : s) {
      auto it = ab.find(n);
      sMapped.insert(it == ab.end() ? n : it->second);
    }
    for (const auto& n : t) {
      auto it = ba.find(n);
      tMapped.insert(it == ba.end() ? n : it->second);
    }
    return sMapped == t && tMapped == s;
  };
  auto underBinder = [&](const Name& x, const Name& y, auto&& k) {
    auto savedAb = ab.find(x) == ab.end() ? std::optional<Name>{}
                                          : std::optional<Name>{ab[x]};
    auto savedBa = ba.find(y) == ba.end() ? std::optional<Name>{}
                                          : std::optional<Name>{ba[y]};
    ab[x] = y;
    ba[y] = x;
    bool ok = k();
    if (savedAb)
      ab[x] = *savedAb;
    else
      ab.erase(x);
    if (savedBa)
      ba[y] = *savedBa;
    else
      ba.erase(y);
    return ok;
  };
  switch (a->kind) {
    case ProcKind::Nil:
      return true;
    case ProcKind::Input:
    case ProcKind::TrustedInput:
      return nameEq(a->subject, b->subject) && setEq(a->names, b->names) &&
             underBinder(a->object, b->object, [&] {
               return alphaEqRec(a->left, b->left, ab, ba);
             });
    case ProcKind::Output:
      return nameEq(a->subject, b->subject) && nameEq(a->object, b->object) &&
             alphaEqRec(a->left, b->left, ab, ba);
    case ProcKind::Par:
      return alphaEqRec(a->left, b->left, ab, ba) &&
             alphaEqRec(a->right, b->right, ab, ba);
    case ProcKind::New:
    case ProcKind::Hide:
      return underBinder(a->subject, b->subject, [&] {
        return alphaEqRec(a->left, b->left, ab, ba);
      });
    case ProcKind::Repl:
      return alphaEqRec(a->left, b->left, ab, ba);
    case ProcKind::Spy:
      if (a->spySome != b->spySome) return false;
      if (a->spySome && !nameEq(a->subject, b->subject)) return false;
      return alphaEqRec(a->left, b->left, ab, ba);
  }
  return false;
}

void structKeyRec(const ProcessPtr& p, std::map<Name, int>& bound, int& next,
                  std::ostringstream& out) {
  auto emit = [&](const Name& n) {
    auto it = bound.find(n);
    if (it != bound.end())
      out << '%' << it->second;
    else
      out << n.id;
  };
  auto emitSet = [&](const NameSet& s) {
    std::vector<std::string> parts;
    for (const auto& n : s) {
      auto it = bound.find(n);
      parts.push_back(it != bound.end() ? "%" + std::to_string(it->second)
                                        : n.id);
    }
    std::sort(parts.begin(), parts.end());
    out << '{';
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out << ',';
      out << parts[i];
    }
    out << '}';
  };
  auto underBinder = [&](const Name& n, auto&& k) {
    auto it = bound.find(n);
    std::optional<int> old;
    if (it != bound.end()) old = it->second;
    bound[n] = next++;
    k();
    if (old)
      bound[n] = *old;
    else
      bound.erase(n);
  };
  switch (p->kind) {
    case ProcKind::Nil:
      out << '0';
      return;
    case ProcKind::Input:
    case ProcKind::TrustedInput:
      emit(p->subject);
      out << (p->kind == ProcKind::Input ? '(' : '[');
      {
        int mine = next;
        underBinder(p->object, [&] {
          out << '%' << mine;
          out << (p->kind == ProcKind::Input ? '/' : ':');
          emitSet(p->names);
          out << (p->kind == ProcKind::Input ? ')' : ']');
          out << '.';
          structKeyRec(p->left, bound, next, out);
        });
      }
      return;
    case ProcKind::Output:
      emit(p->subject);
      out << "!<";
      emit(p->object);
      out << ">.";
      structKeyRec(p->left, bound, next, out);
      return;
    case ProcKind::Par:
      out << '(';
      structKeyRec(p->left, bound, next, out);
      out << " | ";
      structKeyRec(p->right, bound, next, out);
      out << ')';
      return;
    case ProcKind::New:
    case ProcKind::Hide: {
      out << (p->kind == ProcKind::New ? "(new %" : "(hide %") << next << ')';
      underBinder(p->subject,
                  [&] { structKeyRec(p->left, bound, next, out); });
      return;
    }
    case ProcKind::Repl:
      out << '!';
      structKeyRec(p->left, bound, next, out);
      return;
    case ProcKind::Spy:
      out << "spy";
      if (p->spySome) {
        out << ':';
        emit(p->subject);
      }
      out << '.';
      structKeyRec(p->left, bound, next, out);
      return;
  }
}

}  // namespace

bool alphaEq(const ProcessPtr& a, const ProcessPtr& b) {
  std::map<Name, Name> ab, ba;
  return alphaEqRec(a, b, ab, ba);
}

std::string structKey(const ProcessPtr& p) {
  std::ostringstream out;
  std::map<Name, int> bound;
  int next = 1;
  structKeyRec(p, bound, next, out);
  return out.str();
}

}  // namespace secretpi
