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

#ifndef SECRETPI_NAME_HPP_
#define SECRETPI_NAME_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>

namespace secretpi {

// Channel/parameter identifier. Canonically renamed binders carry a
// "#<n>" suffix, which the concrete syntax cannot produce, so canonical
// binder names never collide with parsed identifiers.
struct Name {
  std::string id;

  Name() = default;
  explicit Name(std::string s) : id(std::move(s)) {}

  // The reserved action-only name; never occurs in process terms.
  static Name nu() { return Name{"#nu"}; }
  bool isNu() const { return id == "#nu"; }

  // Strips a canonical "#<n>" suffix; used to keep renaming stable.
  std::string base() const {
    auto pos = id.find('#');
    if (pos == std::string::npos || pos == 0) return id;
    return id.substr(0, pos);
  }

  auto operator<=>(const Name&) const = default;
};

using NameSet = std::set<Name>;

inline NameSet setUnion(NameSet a, const NameSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline NameSet setMinus(NameSet a, const Name& x) {
  a.erase(x);
  return a;
}

// Deterministic supply of names that avoid a growing "used" set.
// Suffix counters are per base so repeated canonicalization is stable.
class FreshPool {
 public:
  void reserve(const Name& n) { used_.insert(n.id); }
  void reserveAll(const NameSet& ns) {
    for (const auto& n : ns) used_.insert(n.id);
  }

  Name fresh(const std::string& baseIn) {
    std::string base = baseIn.empty() ? std::string("v") : baseIn;
    int& k = counters_[base];
    for (;;) {
      ++k;
      std::string cand = base + "#" + std::to_string(k);
      if (used_.insert(cand).second) return Name{cand};
    }
  }

 private:
  std::set<std::string> used_;
  std::map<std::string, int> counters_;
};

}  // namespace secretpi

#endif  // SECRETPI_NAME_HPP_
