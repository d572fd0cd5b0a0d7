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

#include "secretpi/parser.hpp"

#include <cctype>
#include <sstream>

namespace secretpi {

namespace {

enum class Tok {
  Ident,
  KwNew,
  KwHide,
  KwSpy,
  KwNu,
  Zero,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Lt,
  Gt,
  Bang,
  Dot,
  Pipe,
  Slash,
  Colon,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipSpace();
      int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < text_.size()) {
          char d = text_[pos_];
          if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
              d == '\'') {
            word += d;
            advance();
          } else {
            break;
          }
        }
        Tok k = Tok::Ident;
        if (word == "new")
          k = Tok::KwNew;
        else if (word == "hide")
          k = Tok::KwHide;
        else if (word == "spy")
          k = Tok::KwSpy;
        else if (word == "nu")
          k = Tok::KwNu;
        out.push_back({k, word, line, col});
        continue;
      }
      if (c == '0') {
        advance();
        out.push_back({Tok::Zero, "0", line, col});
        continue;
      }
      auto single = [&](Tok k) {
        advance();
        out.push_back({k, std::string(1, c), line, col});
      };
      switch (c) {
        case '(': single(Tok::LParen); break;
        case ')': single(Tok::RParen); break;
        case '[': single(Tok::LBracket); break;
        case ']': single(Tok::RBracket); break;
        case '{': single(Tok::LBrace); break;
        case '}': single(Tok::RBrace); break;
        case '<': single(Tok::Lt); break;
        case '>': single(Tok::Gt); break;
        case '!': single(Tok::Bang); break;
        case '.': single(Tok::Dot); break;
        case '|': single(Tok::Pipe); break;
        case '/': single(Tok::Slash); break;
        case ':': single(Tok::Colon); break;
        case ',': single(Tok::Comma); break;
        default:
          throw ParseError(line, col, "'" + std::string(1, c) + "'",
                           {"a token"});
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ProcessPtr run() {
    ProcessPtr p = proc();
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(size_t n = 1) const {
    size_t i = pos_ + n;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(cur().line, cur().col, describe(cur()),
                     std::move(expected));
  }

  Token expect(Tok k, const std::string& what) {
    if (cur().kind != k) fail({what});
    return toks_[pos_++];
  }

  bool accept(Tok k) {
    if (cur().kind != k) return false;
    ++pos_;
    return true;
  }

  Name ident() {
    if (cur().kind == Tok::KwNu)
      fail({"an identifier ('nu' is reserved)"});
    Token t = expect(Tok::Ident, "an identifier");
    return Name{t.text};
  }

  NameSet nameset() {
    NameSet out;
    if (accept(Tok::LBrace)) {
      if (cur().kind != Tok::RBrace) {
        out.insert(ident());
        while (accept(Tok::Comma)) out.insert(ident());
      }
      expect(Tok::RBrace, "'}'");
      return out;
    }
    out.insert(ident());
    return out;
  }

  ProcessPtr proc() {
    ProcessPtr left = seq();
    if (accept(Tok::Pipe)) return mkPar(std::move(left), proc());
    return left;
  }

  ProcessPtr continuation() {
    if (accept(Tok::Dot)) return seq();
    return mkNil();
  }

  ProcessPtr seq() {
    switch (cur().kind) {
      case Tok::Ident: {
        Name subj = ident();
        if (accept(Tok::LParen)) {
          Name param = ident();
          NameSet blocked;
          if (accept(Tok::Slash)) blocked = nameset();
          expect(Tok::RParen, "')'");
          return mkInput(subj, param, std::move(blocked), continuation());
        }
        if (accept(Tok::LBracket)) {
          Name param = ident();
          expect(Tok::Colon, "':'");
          NameSet accepted = nameset();
          expect(Tok::RBracket, "']'");
          return mkTrusted(subj, param, std::move(accepted), continuation());
        }
        if (accept(Tok::Bang)) {
          expect(Tok::Lt, "'<'");
          Name obj = ident();
          expect(Tok::Gt, "'>'");
          return mkOutput(subj, obj, continuation());
        }
        fail({"'('", "'['", "'!<'"});
      }
      case Tok::KwSpy: {
        ++pos_;
        std::optional<Name> spied;
        if (accept(Tok::Colon)) spied = ident();
        return mkSpy(spied, continuation());
      }
      default:
        return atom();
    }
  }

  ProcessPtr atom() {
    switch (cur().kind) {
      case Tok::Zero:
        ++pos_;
        return mkNil();
      case Tok::Bang:
        ++pos_;
        return mkRepl(atom());
      case Tok::LParen: {
        if (peek().kind == Tok::KwNew || peek().kind == Tok::KwHide) {
          ++pos_;
          bool isNew = cur().kind == Tok::KwNew;
          ++pos_;
          Name binder = ident();
          expect(Tok::RParen, "')'");
          ProcessPtr body = seq();
          return isNew ? mkNew(binder, std::move(body))
                       : mkHide(binder, std::move(body));
        }
        ++pos_;
        ProcessPtr p = proc();
        expect(Tok::RParen, "')'");
        return p;
      }
      default:
        fail({"'0'", "'!'", "'('", "an identifier", "'spy'"});
    }
  }
};

}  // namespace

ParseError::ParseError(int line, int col, std::string found,
                       std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "parse error at " << line << ":" << col << ": found " << found
            << ", expected ";
        for (size_t i = 0; i < expected.size(); ++i) {
          if (i) msg << " or ";
          msg << expected[i];
        }
        return msg.str();
      }()),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

ProcessPtr parse(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace secretpi
