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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "secretpi/binding.hpp"
#include "secretpi/process.hpp"
#include "support/gen.hpp"

using namespace secretpi;

namespace {
const Name a{"a"}, b{"b"}, v{"v"}, w{"w"}, x{"x"}, y{"y"}, z{"z"};
}

TEST_CASE("free names follow the definition clause by clause") {
  CHECK(freeNames(mkNil()).empty());

  // x(y/{b}).y!<z>
  auto p = mkInput(x, y, {b}, mkOutput(y, z, mkNil()));
  CHECK(freeNames(p) == NameSet{x, b, z});

  auto hidden = mkHide(z, mkOutput(x, v, mkNil()));
  CHECK(freeNames(hidden) == NameSet{x, v});

  auto trusted = mkTrusted(x, y, {a, b}, mkOutput(y, y, mkNil()));
  CHECK(freeNames(trusted) == NameSet{x, a, b});

  auto spied = mkSpy(x, mkOutput(a, b, mkNil()));
  CHECK(freeNames(spied) == NameSet{x, a, b});
  auto bare = mkSpy(std::nullopt, mkOutput(a, b, mkNil()));
  CHECK(freeNames(bare) == NameSet{a, b});

  CHECK(freeNames(mkNew(x, mkOutput(x, a, mkNil()))) == NameSet{a});
  CHECK(freeNames(mkRepl(mkOutput(x, a, mkNil()))) == NameSet{x, a});
}

TEST_CASE("bound names follow the definition clause by clause") {
  CHECK(boundNames(mkNil()).empty());
  CHECK(boundNames(mkHide(z, mkOutput(x, v, mkNil()))) == NameSet{z});
  CHECK(boundNames(mkNew(x, mkInput(x, y, {}, mkNil()))) == NameSet{x, y});
  CHECK(boundNames(mkTrusted(x, y, {a}, mkNil())) == NameSet{y});
  CHECK(boundNames(mkSpy(x, mkNew(w, mkNil()))) == NameSet{w});
}

TEST_CASE("substitution replaces free occurrences") {
  auto p = mkOutput(x, y, mkNil());
  CHECK(structEq(substitute(p, z, y), mkOutput(x, z, mkNil())));
}

TEST_CASE("substitution renames binders to avoid capture") {
  // (new y) x!<y>, substituting y for the free x
  auto p = mkNew(y, mkOutput(x, y, mkNil()));
  auto q = substitute(p, y, x);
  CHECK(q->kind == ProcKind::New);
  CHECK(q->subject != y);  // binder renamed away
  // The new subject is the substituted name, the object the fresh binder.
  CHECK(q->left->subject == y);
  CHECK(q->left->object == q->subject);
  CHECK(alphaEq(q, mkNew(w, mkOutput(y, w, mkNil()))));
  CHECK_FALSE(alphaEq(q, mkNew(w, mkOutput(w, w, mkNil()))));
}

TEST_CASE("substitution reaches blocked sets") {
  // x(w/{y}), substituting z for y; oracle: y must vanish from fv
  auto p = mkInput(x, w, {y}, mkNil());
  auto q = substitute(p, z, y);
  CHECK(structEq(q, mkInput(x, w, {z}, mkNil())));
  CHECK_FALSE(freeNames(q).count(y));
}

TEST_CASE("substitution reaches accepted and spied sets") {
  auto t = substitute(mkTrusted(x, w, {y, a}, mkNil()), z, y);
  CHECK(structEq(t, mkTrusted(x, w, {z, a}, mkNil())));
  auto s = substitute(mkSpy(y, mkNil()), z, y);
  CHECK(structEq(s, mkSpy(z, mkNil())));
}

TEST_CASE("blocking adds to every input prefix") {
  auto p = mkInput(x, y, {a}, mkNil());
  auto blocked = blockName(p, b);
  CHECK(structEq(blocked, mkInput(x, y, {a, b}, mkNil())));

  CHECK(structEq(blockName(mkNil(), b), mkNil()));

  // x[y:A].x(w) gains the block only on the inner plain input
  auto q = mkTrusted(x, y, {a}, mkInput(x, w, {}, mkNil()));
  auto qb = blockName(q, b);
  CHECK(structEq(qb, mkTrusted(x, y, {a}, mkInput(x, w, {b}, mkNil()))));
}

TEST_CASE("blocking renames a colliding binder") {
  auto p = mkNew(b, mkInput(x, y, {}, mkOutput(b, b, mkNil())));
  auto q = blockName(p, b);
  CHECK(q->subject != b);
  // The inner input is blocked on the outer b, not the renamed binder.
  CHECK(q->left->names == NameSet{b});
  CHECK(freeNames(q).count(b));
}

TEST_CASE("blocking distributes through spy, set untouched") {
  auto p = mkSpy(x, mkInput(a, y, {}, mkNil()));
  auto q = blockName(p, b);
  CHECK(q->kind == ProcKind::Spy);
  CHECK(q->subject == x);
  CHECK(q->left->names == NameSet{b});
}

TEST_CASE("alpha canonicalization renames binders deterministically") {
  auto p = mkNew(x, mkOutput(x, a, mkNil()));
  auto c = alphaCanonicalize(p);
  CHECK(c->subject.id == "x#1");
  CHECK(c->left->subject.id == "x#1");
  CHECK(c->left->object == a);

  CHECK(structEq(alphaCanonicalize(c), c));  // idempotent

  auto two = alphaCanonicalize(mkPar(mkNew(x, mkOutput(x, x, mkNil())),
                                     mkNew(x, mkOutput(x, x, mkNil()))));
  CHECK(two->left->subject != two->right->subject);
}

TEST_CASE("canonical binders avoid names free elsewhere in the term") {
  // Free occurrence of the spelled name x#1 must not be captured.
  auto p = mkNew(x, mkOutput(x, a, mkNil()));
  auto c1 = alphaCanonicalize(p);
  auto withFree = mkPar(c1, mkOutput(c1->subject, c1->subject, mkNil()));
  auto c2 = alphaCanonicalize(withFree);
  CHECK(c2->left->subject != c1->subject);
  CHECK(freeNames(c2) == freeNames(withFree));
}

TEST_CASE("alpha equivalence examples") {
  CHECK(alphaEq(mkNew(x, mkOutput(x, a, mkNil())),
                mkNew(y, mkOutput(y, a, mkNil()))));
  CHECK_FALSE(alphaEq(mkOutput(x, a, mkNil()), mkOutput(x, b, mkNil())));
  CHECK(alphaEq(mkHide(z, mkOutput(x, z, mkNil())),
                mkHide(w, mkOutput(x, w, mkNil()))));
  // A free name is not interchangeable with a bound one.
  CHECK_FALSE(alphaEq(mkNew(x, mkOutput(x, a, mkNil())),
                      mkNew(y, mkOutput(a, a, mkNil()))));
  // Blocked sets compare through the binder map.
  CHECK(alphaEq(mkNew(x, mkInput(a, y, {x}, mkNil())),
                mkNew(z, mkInput(a, y, {z}, mkNil()))));
  CHECK_FALSE(alphaEq(mkNew(x, mkInput(a, y, {x}, mkNil())),
                      mkNew(z, mkInput(a, y, {b}, mkNil()))));
}

TEST_CASE("struct keys agree with alpha equivalence on a corpus") {
  testgen::GenOpts opts;
  opts.allowSpy = true;
  auto corpus = testgen::genCorpus(testgen::seedFromEnv(), opts, 300);
  for (size_t i = 0; i < corpus.size(); ++i) {
    auto c = alphaCanonicalize(corpus[i]);
    CHECK(alphaEq(corpus[i], c));
    CHECK(structKey(corpus[i]) == structKey(c));
    if (i + 1 < corpus.size()) {
      bool eq = alphaEq(corpus[i], corpus[i + 1]);
      bool keyEq = structKey(corpus[i]) == structKey(corpus[i + 1]);
      CHECK(eq == keyEq);
    }
  }
}

TEST_CASE("alpha equivalence is an equivalence relation on a corpus") {
  testgen::GenOpts opts;
  opts.allowSpy = true;
  auto corpus = testgen::genCorpus(testgen::seedFromEnv() + 1, opts, 120);
  for (const auto& p : corpus) {
    CHECK(alphaEq(p, p));
    auto c = alphaCanonicalize(p);
    CHECK(alphaEq(p, c));
    CHECK(alphaEq(c, p));  // symmetry
    auto cc = alphaCanonicalize(c);
    // transitivity across the chain p ~ c ~ cc
    CHECK(alphaEq(p, cc));
  }
}

TEST_CASE("blocking properties over a corpus") {
  testgen::GenOpts opts;
  opts.allowSpy = true;
  auto corpus = testgen::genCorpus(testgen::seedFromEnv() + 2, opts, 200);
  for (const auto& p : corpus) {
    auto once = blockName(p, b);
    // fv(p + b) stays within fv(p) + {b}
    auto fv = freeNames(once);
    auto bound = setUnion(freeNames(p), NameSet{b});
    for (const auto& n : fv) CHECK(bound.count(n));
    // idempotent per name
    CHECK(structEq(blockName(once, b), once));
  }
}

TEST_CASE("identity substitution is the identity") {
  testgen::GenOpts opts;
  auto corpus = testgen::genCorpus(testgen::seedFromEnv() + 3, opts, 100);
  for (const auto& p : corpus) {
    auto c = alphaCanonicalize(p);
    CHECK(structEq(substitute(c, y, y), c));
  }
}

TEST_CASE("substitution removes the target name") {
  testgen::GenOpts opts;
  auto corpus = testgen::genCorpus(testgen::seedFromEnv() + 4, opts, 200);
  for (const auto& p : corpus) {
    auto q = substitute(alphaCanonicalize(p), z, y);
    CHECK_FALSE(freeNames(q).count(y));
  }
}

TEST_CASE("the reserved name is rejected in terms") {
  CHECK_THROWS_AS(mkOutput(Name::nu(), a, mkNil()), std::invalid_argument);
  CHECK_THROWS_AS(mkInput(x, y, {Name::nu()}, mkNil()), std::invalid_argument);
  CHECK_THROWS_AS(mkSpy(Name::nu(), mkNil()), std::invalid_argument);
}
