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

#include "focusres/corpus_io.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "focusres/errors.h"
#include "focusres/markup.h"

namespace focusres {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Typed access to JSON fields with pointer-bearing diagnostics.
class FieldReader {
 public:
  FieldReader(std::string_view source, const Json& obj, std::string pointer)
      : source_(source), obj_(obj), pointer_(std::move(pointer)) {
    if (!obj_.is_object()) Fail(pointer_, "expected an object");
  }

  void AllowOnly(std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, unused] : obj_.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        Fail(pointer_ + "/" + key, "unknown field");
      }
    }
  }

  bool Has(std::string_view key) const { return obj_.contains(key); }

  const Json& Get(std::string_view key) const {
    auto it = obj_.find(key);
    if (it == obj_.end()) {
      Fail(pointer_, "missing field '" + std::string(key) + "'");
    }
    return *it;
  }

  std::string String(std::string_view key) const {
    const Json& v = Get(key);
    if (!v.is_string()) Fail(Path(key), "expected a string");
    return v.get<std::string>();
  }

  int Int(std::string_view key) const {
    const Json& v = Get(key);
    if (!v.is_number_integer()) Fail(Path(key), "expected an integer");
    auto n = v.get<std::int64_t>();
    if (n < 0 || n > std::numeric_limits<int>::max()) {
      Fail(Path(key), "expected a non-negative integer");
    }
    return static_cast<int>(n);
  }

  bool Bool(std::string_view key) const {
    const Json& v = Get(key);
    if (!v.is_boolean()) Fail(Path(key), "expected true or false");
    return v.get<bool>();
  }

  template <typename E>
  E Enum(std::string_view key, std::optional<E> (*parse)(std::string_view)) const {
    std::string s = String(key);
    std::optional<E> v = parse(s);
    if (!v) Fail(Path(key), "unknown value '" + s + "'");
    return *v;
  }

  const Json& Array(std::string_view key) const {
    const Json& v = Get(key);
    if (!v.is_array()) Fail(Path(key), "expected an array");
    return v;
  }

  std::string Path(std::string_view key) const {
    return pointer_ + "/" + std::string(key);
  }

  [[noreturn]] void Fail(const std::string& pointer,
                         const std::string& what) const {
    throw ValidationError(std::string(source_) + ": " + pointer + ": " + what);
  }

 private:
  std::string_view source_;
  const Json& obj_;
  std::string pointer_;
};

Mention ParseMention(std::string_view source, const Json& j,
                     const std::string& pointer) {
  FieldReader r(source, j, pointer);
  r.AllowOnly({"id", "surface", "kind", "pronoun_class", "gram_role", "number",
               "gender", "animate", "sem_type", "sentence_index", "ee_index",
               "position"});
  Mention m;
  m.id = r.String("id");
  m.surface = r.String("surface");
  m.kind = r.Enum<MentionKind>("kind", ParseMentionKind);
  if (r.Has("pronoun_class")) {
    m.pronoun_class = r.Enum<PronounClass>("pronoun_class", ParsePronounClass);
  }
  m.gram_role = r.Enum<GramRole>("gram_role", ParseGramRole);
  m.number = r.Enum<Number>("number", ParseNumber);
  m.gender = r.Enum<Gender>("gender", ParseGender);
  m.animate = r.Enum<Animacy>("animate", ParseAnimacy);
  m.sem_type = r.String("sem_type");
  m.sentence_index = r.Int("sentence_index");
  m.ee_index = r.Int("ee_index");
  m.position = r.Int("position");
  return m;
}

ElementaryEvent ParseEvent(std::string_view source, const Json& j,
                           const std::string& pointer) {
  FieldReader r(source, j, pointer);
  r.AllowOnly({"ee_index", "sentence_index", "paragraph_index", "verb",
               "verb_kind", "ends_sentence", "text", "mentions"});
  ElementaryEvent ee;
  ee.ee_index = r.Int("ee_index");
  ee.sentence_index = r.Int("sentence_index");
  if (r.Has("paragraph_index")) ee.paragraph_index = r.Int("paragraph_index");
  ee.verb = r.String("verb");
  ee.verb_kind = r.Enum<VerbKind>("verb_kind", ParseVerbKind);
  ee.ends_sentence = r.Bool("ends_sentence");
  ee.text = r.String("text");
  const Json& mentions = r.Array("mentions");
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    ee.mentions.push_back(ParseMention(
        source, mentions[i], r.Path("mentions") + "/" + std::to_string(i)));
  }
  return ee;
}

Document ParseDocument(std::string_view source, const Json& j,
                       const std::string& pointer) {
  FieldReader r(source, j, pointer);
  r.AllowOnly({"doc_id", "pre_links", "events"});
  Document doc;
  doc.doc_id = r.String("doc_id");
  if (r.Has("pre_links")) {
    const Json& links = r.Array("pre_links");
    for (std::size_t i = 0; i < links.size(); ++i) {
      const Json& l = links[i];
      if (!l.is_array() || l.size() != 2 || !l[0].is_string() ||
          !l[1].is_string()) {
        r.Fail(r.Path("pre_links") + "/" + std::to_string(i),
               "expected a pair of mention ids");
      }
      doc.pre_links.emplace_back(l[0].get<std::string>(),
                                 l[1].get<std::string>());
    }
  }
  const Json& events = r.Array("events");
  for (std::size_t i = 0; i < events.size(); ++i) {
    doc.events.push_back(ParseEvent(source, events[i],
                                    r.Path("events") + "/" + std::to_string(i)));
  }
  return doc;
}

OrderedJson ToJson(const Mention& m) {
  OrderedJson j;
  j["id"] = m.id;
  j["surface"] = m.surface;
  j["kind"] = ToString(m.kind);
  if (m.pronoun_class) j["pronoun_class"] = ToString(*m.pronoun_class);
  j["gram_role"] = ToString(m.gram_role);
  j["number"] = ToString(m.number);
  j["gender"] = ToString(m.gender);
  j["animate"] = ToString(m.animate);
  j["sem_type"] = m.sem_type;
  j["sentence_index"] = m.sentence_index;
  j["ee_index"] = m.ee_index;
  j["position"] = m.position;
  return j;
}

OrderedJson ToJson(const ElementaryEvent& ee) {
  OrderedJson j;
  j["ee_index"] = ee.ee_index;
  j["sentence_index"] = ee.sentence_index;
  if (ee.paragraph_index) j["paragraph_index"] = *ee.paragraph_index;
  j["verb"] = ee.verb;
  j["verb_kind"] = ToString(ee.verb_kind);
  j["ends_sentence"] = ee.ends_sentence;
  j["text"] = ee.text;
  j["mentions"] = OrderedJson::array();
  for (const Mention& m : ee.mentions) j["mentions"].push_back(ToJson(m));
  return j;
}

OrderedJson ToJson(const Document& doc) {
  OrderedJson j;
  j["doc_id"] = doc.doc_id;
  j["pre_links"] = OrderedJson::array();
  for (const auto& [a, b] : doc.pre_links) {
    j["pre_links"].push_back(OrderedJson::array({a, b}));
  }
  j["events"] = OrderedJson::array();
  for (const ElementaryEvent& ee : doc.events) j["events"].push_back(ToJson(ee));
  return j;
}

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string JoinIds(const std::vector<MentionId>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ',';
    out += ids[i];
  }
  return out + "]";
}

}  // namespace

CorpusFile ParseCorpus(std::string_view text, std::string_view source) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (std::size_t colon = what.rfind(": "); colon != std::string::npos) {
      what = what.substr(colon + 2);
    }
    throw SyntaxError(std::string(source) + ":" + std::to_string(line) + ":" +
                      std::to_string(column) + ": " + what);
  }

  FieldReader r(source, root, "");
  r.AllowOnly({"ontology", "documents"});
  CorpusFile corpus;
  if (r.Has("ontology")) corpus.ontology_ref = r.String("ontology");
  const Json& docs = r.Array("documents");
  for (std::size_t i = 0; i < docs.size(); ++i) {
    corpus.documents.push_back(
        ParseDocument(source, docs[i], "/documents/" + std::to_string(i)));
  }
  return corpus;
}

void ValidateCorpus(const CorpusFile& corpus, const Ontology* ont,
                    std::string_view source) {
  std::set<std::string_view> ids;
  try {
    for (const Document& doc : corpus.documents) {
      if (!ids.insert(doc.doc_id).second) {
        throw ValidationError("duplicate doc_id '" + doc.doc_id + "'");
      }
      ValidateDocument(doc);
      if (ont != nullptr) ValidateAgainstOntology(doc, *ont);
    }
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
}

CorpusFile LoadCorpus(const std::filesystem::path& path, const Ontology* ont) {
  const std::string source = path.string();
  CorpusFile corpus = ParseCorpus(ReadFile(path), source);
  ValidateCorpus(corpus, ont, source);
  return corpus;
}

std::string SerializeCorpus(const CorpusFile& corpus) {
  OrderedJson j;
  if (corpus.ontology_ref) j["ontology"] = *corpus.ontology_ref;
  j["documents"] = OrderedJson::array();
  for (const Document& doc : corpus.documents) {
    j["documents"].push_back(ToJson(doc));
  }
  return j.dump(2) + "\n";
}

std::vector<ChainSet> ParseChainFile(std::string_view text,
                                     std::string_view source) {
  std::vector<ChainSet> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    std::string doc_id(Trim(line.substr(0, colon)));
    if (colon == std::string_view::npos || doc_id.empty()) {
      throw SyntaxError(std::string(source) + ":" + std::to_string(line_no) +
                        ": expected 'doc_id: mention ...'");
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const ChainSet& cs) {
      return cs.doc_id == doc_id;
    });
    if (it == out.end()) {
      out.push_back(ChainSet{doc_id, {}});
      it = std::prev(out.end());
    }
    std::istringstream ids{std::string(line.substr(colon + 1))};
    std::vector<MentionId> chain;
    for (std::string id; ids >> id;) chain.push_back(id);
    if (!chain.empty()) it->chains.push_back(std::move(chain));
  }
  for (const ChainSet& cs : out) ValidateChainSet(cs);
  return out;
}

std::string SerializeChainFile(std::span<const ChainSet> chain_sets) {
  std::string out;
  for (const ChainSet& cs : chain_sets) {
    if (cs.chains.empty()) out += cs.doc_id + ":\n";
    for (const auto& chain : cs.chains) {
      out += cs.doc_id + ":";
      for (const MentionId& id : chain) out += " " + id;
      out += "\n";
    }
  }
  return out;
}

std::vector<ChainSet> LoadChainSets(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '<') {
    return ParseCorefMarkup(text, path.string());
  }
  return ParseChainFile(text, path.string());
}

std::string FormatTraceRecord(std::string_view doc_id,
                              const TraceRecord& record) {
  const FocusState& s = record.state;
  std::string out(doc_id);
  out += " " + std::to_string(record.ee_index);
  out += " CF=" + s.cf.value_or("-");
  out += " AF=" + s.af.value_or("-");
  out += " AFL=" + JoinIds(s.afl);
  out += " FS=" + JoinIds(s.fs);
  out += " AFS=" + JoinIds(s.afs);
  out += " IntraAFL=" + JoinIds(s.intra_afl);
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace focusres
