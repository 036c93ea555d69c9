// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "xml.hpp"

#include <cstdint>
#include <map>

#include "judge/error.hpp"

namespace judge::xml {

const Attribute* Element::attribute(std::string_view ns_iri,
                                    std::string_view name) const {
  for (const auto& a : attributes)
    if (a.ns == ns_iri && a.local == name) return &a;
  return nullptr;
}

namespace {

struct RawAttribute {
  std::string qname;
  std::string value;
  std::size_t offset;
};

using Scope = std::map<std::string, std::string>;  // prefix -> IRI

class Parser {
 public:
  explicit Parser(std::string_view doc) : doc_(doc) {}

  std::unique_ptr<Element> run() {
    skip_prolog();
    if (eof() || peek() != '<') fail("expected root element");
    Scope scope{{"xml", std::string(kXmlNamespace)}};
    auto root = element(scope);
    skip_misc();
    if (!eof()) fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < doc_.size(); ++i) {
      if (doc_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ")",
                     at);
  }

  bool eof() const { return pos_ >= doc_.size(); }
  char peek() const { return doc_[pos_]; }
  bool starts_with(std::string_view s) const { return doc_.substr(pos_).starts_with(s); }

  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  static bool is_name_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' || c == ':';
  }

  void skip_space() {
    while (!eof() && is_space(peek())) ++pos_;
  }

  void skip_until(std::string_view terminator, std::string_view what) {
    auto end = doc_.find(terminator, pos_);
    if (end == std::string_view::npos) fail("unterminated " + std::string(what));
    pos_ = end + terminator.size();
  }

  void skip_doctype() {
    expect("<!DOCTYPE");
    int depth = 0;
    while (!eof()) {
      char c = peek();
      ++pos_;
      if (c == '[') ++depth;
      else if (c == ']') --depth;
      else if (c == '>' && depth <= 0) return;
    }
    fail("unterminated DOCTYPE");
  }

  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else {
        return;
      }
    }
  }

  void skip_prolog() {
    if (starts_with("\xEF\xBB\xBF")) pos_ += 3;
    for (;;) {
      skip_misc();
      if (starts_with("<!DOCTYPE")) skip_doctype();
      else return;
    }
  }

  std::string name() {
    std::size_t start = pos_;
    while (!eof() && is_name_char(peek())) ++pos_;
    if (pos_ == start) fail("expected name");
    return std::string(doc_.substr(start, pos_ - start));
  }

  static void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  // At '&'. Appends the decoded reference.
  void reference(std::string& out) {
    std::size_t start = pos_;
    auto end = doc_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 12)
      fail_at("malformed entity reference", start);
    auto body = doc_.substr(pos_ + 1, end - pos_ - 1);
    pos_ = end + 1;
    if (body == "amp") out += '&';
    else if (body == "lt") out += '<';
    else if (body == "gt") out += '>';
    else if (body == "quot") out += '"';
    else if (body == "apos") out += '\'';
    else if (body.size() > 1 && body[0] == '#') {
      std::uint32_t cp = 0;
      bool hex = body[1] == 'x';
      auto digits = body.substr(hex ? 2 : 1);
      if (digits.empty()) fail_at("malformed character reference", start);
      for (char c : digits) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else fail_at("malformed character reference", start);
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
        if (cp > 0x10FFFF) fail_at("character reference out of range", start);
      }
      append_utf8(out, cp);
    } else {
      fail_at("unknown entity '&" + std::string(body) + ";'", start);
    }
  }

  std::string attribute_value() {
    if (eof() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
    char quote = peek();
    ++pos_;
    std::string value;
    while (!eof() && peek() != quote) {
      if (peek() == '<') fail("'<' in attribute value");
      if (peek() == '&') reference(value);
      else value += doc_[pos_++];
    }
    if (eof()) fail("unterminated attribute value");
    ++pos_;
    return value;
  }

  std::pair<std::string, std::string> resolve(const std::string& qname,
                                              const Scope& scope, bool is_attribute,
                                              std::size_t at) const {
    auto colon = qname.find(':');
    if (colon == std::string::npos) {
      if (is_attribute) return {"", qname};
      auto it = scope.find("");
      return {it == scope.end() ? "" : it->second, qname};
    }
    auto prefix = qname.substr(0, colon);
    auto it = scope.find(prefix);
    if (it == scope.end()) fail_at("unbound namespace prefix '" + prefix + "'", at);
    return {it->second, qname.substr(colon + 1)};
  }

  std::unique_ptr<Element> element(const Scope& parent_scope) {
    std::size_t start = pos_;
    expect("<");
    std::string qname = name();
    std::vector<RawAttribute> raw;
    for (;;) {
      bool had_space = !eof() && is_space(peek());
      skip_space();
      if (eof()) fail("unterminated start tag");
      if (peek() == '/' || peek() == '>') break;
      if (!had_space) fail("expected whitespace before attribute");
      std::size_t attr_at = pos_;
      auto attr_name = name();
      skip_space();
      expect("=");
      skip_space();
      auto value = attribute_value();
      for (const auto& r : raw)
        if (r.qname == attr_name) fail_at("duplicate attribute '" + attr_name + "'", attr_at);
      raw.push_back({std::move(attr_name), std::move(value), attr_at});
    }

    Scope scope = parent_scope;
    for (const auto& r : raw) {
      if (r.qname == "xmlns") scope[""] = r.value;
      else if (r.qname.starts_with("xmlns:")) scope[r.qname.substr(6)] = r.value;
    }

    auto el = std::make_unique<Element>();
    el->offset = start;
    std::tie(el->ns, el->local) = resolve(qname, scope, false, start);
    for (auto& r : raw) {
      if (r.qname == "xmlns" || r.qname.starts_with("xmlns:")) continue;
      auto [ns, local] = resolve(r.qname, scope, true, r.offset);
      el->attributes.push_back({std::move(ns), std::move(local), std::move(r.value)});
    }

    if (starts_with("/>")) {
      pos_ += 2;
      return el;
    }
    expect(">");

    for (;;) {
      if (eof()) fail_at("unclosed element <" + qname + ">", start);
      if (starts_with("</")) {
        std::size_t close_at = pos_;
        pos_ += 2;
        auto closing = name();
        skip_space();
        expect(">");
        if (closing != qname)
          fail_at("mismatched closing tag </" + closing + ">, expected </" + qname + ">",
                  close_at);
        return el;
      }
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<![CDATA[")) {
        pos_ += 9;
        auto end = doc_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        el->text += doc_.substr(pos_, end - pos_);
        pos_ = end + 3;
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (peek() == '<') {
        el->children.push_back(element(scope));
      } else if (peek() == '&') {
        reference(el->text);
      } else {
        el->text += doc_[pos_++];
      }
    }
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Element> parse(std::string_view document) {
  return Parser(document).run();
}

}  // namespace judge::xml
