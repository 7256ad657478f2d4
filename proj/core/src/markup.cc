// Copyright 2026 The focusres Authors.
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

#include "focusres/markup.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "focusres/errors.h"

namespace focusres {
namespace {

std::string Escape(std::string_view s, bool attribute) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        out += attribute ? "&quot;" : "\"";
        break;
      default: out += c;
    }
  }
  return out;
}

std::string EscapeText(std::string_view s) { return Escape(s, false); }
std::string EscapeAttribute(std::string_view s) { return Escape(s, true); }

std::string Unescape(std::string_view s) {
  static constexpr std::pair<std::string_view, char> kEntities[] = {
      {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}};
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    bool replaced = false;
    if (s[i] == '&') {
      for (const auto& [entity, c] : kEntities) {
        if (s.substr(i, entity.size()) == entity) {
          out += c;
          i += entity.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out += s[i++];
  }
  return out;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

struct Tag {
  std::string name;  // upper case
  bool closing = false;
  std::unordered_map<std::string, std::string> attributes;  // upper-case keys
};

// Parses the inside of <...>. Returns nullopt on malformed attributes.
std::optional<Tag> ParseTag(std::string_view body) {
  Tag tag;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  skip_ws();
  if (i < body.size() && body[i] == '/') {
    tag.closing = true;
    ++i;
  }
  std::size_t start = i;
  while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  tag.name = Upper(body.substr(start, i - start));
  if (tag.name.empty()) return std::nullopt;
  while (true) {
    skip_ws();
    if (i >= body.size()) break;
    start = i;
    while (i < body.size() && body[i] != '=' &&
           !std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    }
    std::string key = Upper(body.substr(start, i - start));
    skip_ws();
    if (i >= body.size() || body[i] != '=' || key.empty()) return std::nullopt;
    ++i;
    skip_ws();
    std::string value;
    if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
      char quote = body[i++];
      std::size_t end = body.find(quote, i);
      if (end == std::string_view::npos) return std::nullopt;
      value = Unescape(body.substr(i, end - i));
      i = end + 1;
    } else {
      start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      value = Unescape(body.substr(start, i - start));
    }
    tag.attributes[key] = value;
  }
  return tag;
}

}  // namespace

std::string DocumentText(const Document& doc) {
  return EmitCorefMarkup(doc, ChainSet{doc.doc_id, {}});
}

std::string EmitCorefMarkup(const Document& doc, const ChainSet& chains) {
  ValidateChainSet(chains);
  const DocumentIndex index(doc);
  std::unordered_map<std::string_view, std::size_t> chain_of;
  for (std::size_t c = 0; c < chains.chains.size(); ++c) {
    for (const MentionId& id : chains.chains[c]) {
      index.Get(id);
      chain_of.emplace(id, c);
    }
  }

  std::vector<std::string> tokens;
  std::vector<int> sentence_of_token;
  for (const ElementaryEvent& ee : doc.events) {
    for (std::string& t : Tokenize(ee.text)) {
      tokens.push_back(EscapeText(t));
      sentence_of_token.push_back(ee.sentence_index);
    }
  }

  std::vector<std::string> open(tokens.size());
  std::vector<std::string> close(tokens.size());
  std::vector<const Mention*> last_in_chain(chains.chains.size(), nullptr);
  for (const ElementaryEvent& ee : doc.events) {
    for (const Mention& m : ee.mentions) {
      auto it = chain_of.find(m.id);
      if (it == chain_of.end()) continue;
      if (m.surface.empty()) {
        throw EmissionError("document '" + doc.doc_id + "': mention '" + m.id +
                            "' has no surface text to mark up");
      }
      std::string tag = "<COREF ID=\"" + EscapeAttribute(m.id) + "\"";
      if (const Mention* prev = last_in_chain[it->second]) {
        tag += " REF=\"" + EscapeAttribute(prev->id) + "\"";
      }
      tag += ">";
      last_in_chain[it->second] = &m;
      const std::size_t first = static_cast<std::size_t>(m.position);
      const std::size_t last = first + Tokenize(m.surface).size() - 1;
      open[first] += tag;
      close[last] = "</COREF>" + close[last];
    }
  }

  std::string out;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const bool starts_line = t == 0 || sentence_of_token[t] != sentence_of_token[t - 1];
    if (t > 0) out += starts_line ? "\n" : " ";
    out += open[t] + tokens[t] + close[t];
  }
  if (!tokens.empty()) out += "\n";
  return out;
}

std::string EmitCorefDocument(const Document& doc, const ChainSet& chains) {
  return "<DOC ID=\"" + EscapeAttribute(doc.doc_id) + "\">\n" +
         EmitCorefMarkup(doc, chains) + "</DOC>\n";
}

std::vector<ChainSet> ParseCorefMarkup(std::string_view text,
                                       std::string_view source) {
  std::vector<ChainSet> out;
  int line = 1;
  auto fail = [&](const std::string& what) {
    throw SyntaxError(std::string(source) + ":" + std::to_string(line) + ": " +
                      what);
  };

  struct OpenDoc {
    std::string id;
    std::vector<std::string> mention_order;
    std::unordered_set<std::string> known;
    std::vector<std::pair<std::string, std::string>> links;
    std::vector<int> link_lines;
    int open_corefs = 0;
  };
  std::optional<OpenDoc> doc;

  for (std::size_t i = 0; i < text.size();) {
    if (text[i] != '<') {
      if (text[i] == '\n') ++line;
      ++i;
      continue;
    }
    std::size_t end = text.find('>', i);
    if (end == std::string_view::npos) fail("unterminated tag");
    std::string_view body = text.substr(i + 1, end - i - 1);
    const int tag_line = line;
    std::optional<Tag> tag = ParseTag(body);
    if (!tag) fail("malformed tag <" + std::string(body) + ">");
    line += static_cast<int>(std::count(body.begin(), body.end(), '\n'));
    i = end + 1;

    if (tag->name == "DOC") {
      if (!tag->closing) {
        if (doc) fail("nested <DOC>");
        auto id = tag->attributes.find("ID");
        if (id == tag->attributes.end() || id->second.empty()) {
          fail("<DOC> without ID");
        }
        doc = OpenDoc{};
        doc->id = id->second;
        continue;
      }
      if (!doc) fail("</DOC> without <DOC>");
      if (doc->open_corefs != 0) fail("unclosed <COREF> in document '" + doc->id + "'");

      CorefClasses classes;
      for (std::size_t k = 0; k < doc->links.size(); ++k) {
        const auto& [id, ref] = doc->links[k];
        if (!doc->known.contains(ref)) {
          throw IntegrityError(std::string(source) + ":" +
                               std::to_string(doc->link_lines[k]) +
                               ": REF to unknown id '" + ref + "'");
        }
        classes.Link(id, ref);
      }
      ChainSet cs;
      cs.doc_id = doc->id;
      std::unordered_map<std::size_t, std::size_t> chain_of_class;
      for (const std::string& id : doc->mention_order) {
        std::optional<std::size_t> cls = classes.ClassOf(id);
        if (!cls) {
          cs.chains.push_back({id});
          continue;
        }
        auto [it, inserted] = chain_of_class.emplace(*cls, cs.chains.size());
        if (inserted) cs.chains.emplace_back();
        cs.chains[it->second].push_back(id);
      }
      if (std::any_of(out.begin(), out.end(),
                      [&](const ChainSet& x) { return x.doc_id == cs.doc_id; })) {
        fail("duplicate document '" + cs.doc_id + "'");
      }
      out.push_back(std::move(cs));
      doc.reset();
      continue;
    }

    if (tag->name == "COREF") {
      if (!doc) fail("<COREF> outside <DOC>");
      if (tag->closing) {
        if (doc->open_corefs == 0) fail("</COREF> without <COREF>");
        --doc->open_corefs;
        continue;
      }
      ++doc->open_corefs;
      auto id = tag->attributes.find("ID");
      if (id == tag->attributes.end() || id->second.empty()) {
        fail("<COREF> without ID");
      }
      if (!doc->known.insert(id->second).second) {
        fail("duplicate COREF ID '" + id->second + "'");
      }
      doc->mention_order.push_back(id->second);
      if (auto ref = tag->attributes.find("REF"); ref != tag->attributes.end()) {
        doc->links.emplace_back(id->second, ref->second);
        doc->link_lines.push_back(tag_line);
      }
    }
    // Other tags (TEXT, P, ...) carry no coreference information.
  }
  if (doc) fail("unterminated <DOC> '" + doc->id + "'");
  return out;
}

}  // namespace focusres
