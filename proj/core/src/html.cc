// Copyright 2026 The footprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "footprint/html.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>

#include "footprint/text.h"

namespace footprint::html {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_raw_text_element(std::string_view name) {
  return name == "script" || name == "style" || name == "noscript" ||
         name == "template" || name == "textarea" || name == "title" ||
         name == "xmp";
}

bool is_hidden_container(std::string_view name) {
  return name == "nav" || name == "head";
}

bool is_block_element(std::string_view name) {
  static constexpr std::array<std::string_view, 36> kBlocks = {
      "address", "article", "aside",   "blockquote", "body",   "br",
      "dd",      "div",     "dl",      "dt",         "figcaption", "figure",
      "footer",  "form",    "h1",      "h2",         "h3",     "h4",
      "h5",      "h6",      "header",  "hr",         "li",     "main",
      "ol",      "option",  "p",       "pre",        "section", "table",
      "td",      "th",      "tr",      "ul",         "caption", "html"};
  for (std::string_view b : kBlocks) {
    if (b == name) return true;
  }
  return false;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

struct NamedEntity {
  std::string_view name;
  std::uint32_t code_point;
};

constexpr std::array<NamedEntity, 18> kEntities = {{
    {"amp", '&'},      {"lt", '<'},        {"gt", '>'},
    {"quot", '"'},     {"apos", '\''},     {"nbsp", ' '},
    {"copy", 0xA9},    {"reg", 0xAE},      {"trade", 0x2122},
    {"hellip", 0x2026}, {"mdash", 0x2014}, {"ndash", 0x2013},
    {"lsquo", 0x2018}, {"rsquo", 0x2019},  {"ldquo", 0x201C},
    {"rdquo", 0x201D}, {"laquo", 0xAB},    {"raquo", 0xBB},
}};

// Collapses whitespace: runs containing a newline become '\n', other runs a
// single space. Leading and trailing whitespace is dropped.
std::string collapse_whitespace(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      bool newline = false;
      while (i < s.size() && is_space(s[i])) {
        newline = newline || s[i] == '\n';
        ++i;
      }
      if (!out.empty() && i < s.size()) out.push_back(newline ? '\n' : ' ');
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

}  // namespace

const std::string* Tag::attribute(std::string_view attr) const {
  for (const auto& [key, value] : attributes) {
    if (key == attr) return &value;
  }
  return nullptr;
}

Scanner::Token Scanner::next() {
  while (pos_ < html_.size()) {
    if (html_[pos_] != '<') {
      const auto lt = html_.find('<', pos_);
      const std::size_t end = lt == std::string_view::npos ? html_.size() : lt;
      Token tok;
      tok.kind = Kind::kText;
      tok.text = html_.substr(pos_, end - pos_);
      pos_ = end;
      return tok;
    }
    const std::string_view rest = html_.substr(pos_);
    if (rest.starts_with("<!--")) {
      const auto close = html_.find("-->", pos_ + 4);
      pos_ = close == std::string_view::npos ? html_.size() : close + 3;
      continue;
    }
    if (rest.starts_with("<!") || rest.starts_with("<?")) {
      const auto close = html_.find('>', pos_);
      pos_ = close == std::string_view::npos ? html_.size() : close + 1;
      continue;
    }
    const bool closing = rest.size() > 1 && rest[1] == '/';
    const std::size_t name_start = pos_ + (closing ? 2 : 1);
    if (name_start >= html_.size() || !is_alpha(html_[name_start])) {
      Token tok;
      tok.kind = Kind::kText;
      tok.text = html_.substr(pos_, 1);
      ++pos_;
      return tok;
    }

    Token tok;
    tok.kind = Kind::kTag;
    tok.tag.closing = closing;
    std::size_t i = name_start;
    while (i < html_.size() && !is_space(html_[i]) && html_[i] != '>' && html_[i] != '/') ++i;
    tok.tag.name = text::to_lower(html_.substr(name_start, i - name_start));

    // Attributes.
    while (i < html_.size()) {
      while (i < html_.size() && (is_space(html_[i]) || html_[i] == '/')) {
        if (html_[i] == '/' && i + 1 < html_.size() && html_[i + 1] == '>') {
          tok.tag.self_closing = true;
        }
        ++i;
      }
      if (i >= html_.size() || html_[i] == '>') break;
      const std::size_t key_start = i;
      while (i < html_.size() && !is_space(html_[i]) && html_[i] != '=' &&
             html_[i] != '>' && html_[i] != '/') {
        ++i;
      }
      std::string key = text::to_lower(html_.substr(key_start, i - key_start));
      while (i < html_.size() && is_space(html_[i])) ++i;
      std::string value;
      if (i < html_.size() && html_[i] == '=') {
        ++i;
        while (i < html_.size() && is_space(html_[i])) ++i;
        if (i < html_.size() && (html_[i] == '"' || html_[i] == '\'')) {
          const char quote = html_[i++];
          const auto close = html_.find(quote, i);
          const std::size_t end = close == std::string_view::npos ? html_.size() : close;
          value = decode_entities(html_.substr(i, end - i));
          i = end == html_.size() ? end : end + 1;
        } else {
          const std::size_t v_start = i;
          while (i < html_.size() && !is_space(html_[i]) && html_[i] != '>') ++i;
          value = decode_entities(html_.substr(v_start, i - v_start));
        }
      }
      if (!key.empty()) tok.tag.attributes.emplace_back(std::move(key), std::move(value));
    }
    pos_ = i < html_.size() ? i + 1 : html_.size();
    return tok;
  }
  return Token{};
}

std::string_view Scanner::skip_raw_text(std::string_view name) {
  const std::size_t start = pos_;
  std::size_t search = pos_;
  while (true) {
    const auto lt = html_.find("</", search);
    if (lt == std::string_view::npos) {
      pos_ = html_.size();
      return html_.substr(start);
    }
    const std::string_view candidate = html_.substr(lt + 2, name.size());
    const std::size_t after = lt + 2 + name.size();
    if (text::iequals(candidate, name) &&
        (after >= html_.size() || is_space(html_[after]) || html_[after] == '>' ||
         html_[after] == '/')) {
      const auto close = html_.find('>', after);
      pos_ = close == std::string_view::npos ? html_.size() : close + 1;
      return html_.substr(start, lt - start);
    }
    search = lt + 2;
  }
}

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    const auto semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    const std::string_view body = s.substr(i + 1, semi - i - 1);
    bool decoded = false;
    if (body.size() > 1 && body[0] == '#') {
      std::uint32_t cp = 0;
      const bool hex = body[1] == 'x' || body[1] == 'X';
      const std::string_view digits = body.substr(hex ? 2 : 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                             cp, hex ? 16 : 10);
      if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) {
        append_utf8(out, cp);
        decoded = true;
      }
    } else {
      for (const auto& e : kEntities) {
        if (e.name == body) {
          append_utf8(out, e.code_point);
          decoded = true;
          break;
        }
      }
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

PageMeta extract_meta(std::string_view html) {
  PageMeta meta;
  bool have_title = false;
  Scanner scanner(html);
  for (auto tok = scanner.next(); tok.kind != Scanner::Kind::kEnd; tok = scanner.next()) {
    if (tok.kind != Scanner::Kind::kTag || tok.tag.closing) continue;
    const std::string& name = tok.tag.name;
    if (name == "title") {
      const std::string_view raw = scanner.skip_raw_text("title");
      if (!have_title) {
        meta.title = collapse_whitespace(decode_entities(raw));
        have_title = true;
      }
    } else if (name == "meta") {
      const std::string* meta_name = tok.tag.attribute("name");
      const std::string* content = tok.tag.attribute("content");
      if (!meta_name || !content) continue;
      const std::string key = text::to_lower(text::trim(*meta_name));
      if (key == "keywords") {
        meta.keywords_content.push_back(*content);
      } else if (key == "description") {
        meta.description_content.push_back(*content);
      }
    } else if (name == "base") {
      if (const std::string* href = tok.tag.attribute("href"); href && meta.base_href.empty()) {
        meta.base_href = std::string(text::trim(*href));
      }
    } else if (is_raw_text_element(name)) {
      scanner.skip_raw_text(name);
    }
  }
  return meta;
}

std::string visible_text(std::string_view html) {
  std::string raw;
  bool in_head = false;
  int nav_depth = 0;
  Scanner scanner(html);
  for (auto tok = scanner.next(); tok.kind != Scanner::Kind::kEnd; tok = scanner.next()) {
    if (tok.kind == Scanner::Kind::kText) {
      if (!in_head && nav_depth == 0) raw += decode_entities(tok.text);
      continue;
    }
    const std::string& name = tok.tag.name;
    const bool opening = !tok.tag.closing;
    if (opening && name != "textarea" && is_raw_text_element(name)) {
      scanner.skip_raw_text(name);
      raw.push_back('\n');
      continue;
    }
    if (name == "head") {
      in_head = opening && !tok.tag.self_closing;
    } else if (name == "body" && opening) {
      in_head = false;  // <body> implicitly closes an unterminated head
    } else if (name == "nav" && !tok.tag.self_closing) {
      nav_depth = opening ? nav_depth + 1 : std::max(0, nav_depth - 1);
    }
    if (is_hidden_container(name) || is_block_element(name)) raw.push_back('\n');
  }
  return collapse_whitespace(raw);
}

std::vector<std::string> subresource_references(std::string_view html) {
  std::vector<std::string> refs;
  Scanner scanner(html);
  for (auto tok = scanner.next(); tok.kind != Scanner::Kind::kEnd; tok = scanner.next()) {
    if (tok.kind != Scanner::Kind::kTag || tok.tag.closing) continue;
    const std::string& name = tok.tag.name;
    const std::string* ref = nullptr;
    if (name == "img" || name == "script" || name == "iframe") {
      ref = tok.tag.attribute("src");
    } else if (name == "link") {
      ref = tok.tag.attribute("href");
    }
    if (ref) {
      const std::string_view trimmed = text::trim(*ref);
      if (!trimmed.empty()) refs.emplace_back(trimmed);
    }
    if (name != "textarea" && is_raw_text_element(name)) scanner.skip_raw_text(name);
  }
  return refs;
}

}  // namespace footprint::html
