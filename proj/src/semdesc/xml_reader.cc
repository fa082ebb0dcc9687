// Copyright 2026 The PDM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdm/semdesc/xml_reader.h"

#include <cstdint>

#include "pdm/common/error.h"

namespace pdm::semdesc {

std::optional<std::string_view> XmlElement::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const XmlElement* XmlElement::child(std::string_view child_name) const {
  for (const auto& c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

std::string normalize_space(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' ||
         u >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view doc) : doc_(doc) {}

  XmlElement document() {
    if (doc_.substr(0, 3) == "\xEF\xBB\xBF") advance(3);
    skip_misc();
    if (eof() || peek() != '<') fail("expected root element");
    XmlElement root = element();
    skip_misc();
    if (!eof()) fail("unexpected content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_, pos_);
  }

  bool eof() const { return pos_ >= doc_.size(); }
  char peek() const { return doc_[pos_]; }
  bool starts_with(std::string_view s) const { return doc_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < doc_.size(); ++i) {
      if (doc_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    advance(s.size());
  }

  void skip_space() {
    while (!eof() && is_space(peek())) advance();
  }

  // Skips to just past `terminator`; fails at end of input.
  void skip_until(std::string_view terminator, const char* what) {
    while (!eof() && !starts_with(terminator)) advance();
    if (eof()) fail(std::string("unterminated ") + what);
    advance(terminator.size());
  }

  // Whitespace, comments, processing instructions and doctype outside the
  // root element.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<!--")) {
        advance(4);
        skip_until("-->", "comment");
      } else if (starts_with("<?")) {
        advance(2);
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!DOCTYPE")) {
        advance(9);
        skip_until(">", "doctype");
      } else {
        return;
      }
    }
  }

  std::string name() {
    if (eof() || !is_name_start(peek())) fail("expected a name");
    std::size_t start = pos_;
    while (!eof() && is_name_char(peek())) advance();
    return std::string(doc_.substr(start, pos_ - start));
  }

  // Decodes character data up to `stop` (exclusive), resolving entities.
  std::string char_data(char stop) {
    std::string out;
    while (!eof() && peek() != stop) {
      if (stop != '<' && peek() == '<') fail("'<' not allowed in attribute value");
      if (peek() == '&') {
        out += entity();
      } else {
        out.push_back(peek());
        advance();
      }
    }
    return out;
  }

  std::string entity() {
    advance();  // '&'
    std::size_t start = pos_;
    while (!eof() && peek() != ';' && pos_ - start < 12) advance();
    if (eof() || peek() != ';') fail("malformed entity reference");
    std::string_view ref = doc_.substr(start, pos_ - start);
    advance();
    if (ref == "lt") return "<";
    if (ref == "gt") return ">";
    if (ref == "amp") return "&";
    if (ref == "quot") return "\"";
    if (ref == "apos") return "'";
    if (ref.size() > 1 && ref[0] == '#') {
      std::uint32_t cp = 0;
      bool hex = ref[1] == 'x' || ref[1] == 'X';
      std::string_view digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) fail("empty character reference");
      for (char c : digits) {
        int d;
        if (c >= '0' && c <= '9') {
          d = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          d = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
          d = c - 'A' + 10;
        } else {
          fail("bad character reference");
        }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
        if (cp > 0x10ffff) fail("character reference out of range");
      }
      std::string out;
      append_utf8(out, cp);
      return out;
    }
    fail("unknown entity '&" + std::string(ref) + ";'");
  }

  XmlElement element() {
    XmlElement el;
    el.line = line_;
    el.column = column_;
    expect("<");
    el.name = name();
    for (;;) {
      bool had_space = !eof() && is_space(peek());
      skip_space();
      if (eof()) fail("unterminated start tag");
      if (starts_with("/>")) {
        advance(2);
        return el;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      if (!had_space) fail("expected whitespace before attribute");
      std::string key = name();
      skip_space();
      expect("=");
      skip_space();
      if (eof() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
      char quote = peek();
      advance();
      std::string value = char_data(quote);
      if (eof()) fail("unterminated attribute value");
      advance();
      if (el.attribute(key)) fail("duplicate attribute '" + key + "'");
      el.attributes.emplace_back(std::move(key), std::move(value));
    }
    content(el);
    return el;
  }

  void content(XmlElement& el) {
    for (;;) {
      if (eof()) fail("missing end tag for <" + el.name + ">");
      if (starts_with("</")) {
        advance(2);
        std::string closing = name();
        if (closing != el.name) {
          fail("mismatched end tag </" + closing + ">, expected </" + el.name + ">");
        }
        skip_space();
        expect(">");
        return;
      }
      if (starts_with("<!--")) {
        advance(4);
        skip_until("-->", "comment");
      } else if (starts_with("<![CDATA[")) {
        advance(9);
        std::size_t start = pos_;
        skip_until("]]>", "CDATA section");
        el.text.append(doc_.substr(start, pos_ - 3 - start));
      } else if (starts_with("<?")) {
        advance(2);
        skip_until("?>", "processing instruction");
      } else if (peek() == '<') {
        el.children.push_back(element());
      } else {
        el.text += char_data('<');
      }
    }
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

XmlElement parse_xml(std::string_view document) { return Parser(document).document(); }

}  // namespace pdm::semdesc
