// Copyright 2026 The sqlaug Authors.
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

#include "sqlaug/template_translator.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sqlaug/error.h"

#ifndef SQLAUG_DATA_DIR
#define SQLAUG_DATA_DIR "data"
#endif

namespace sqlaug {

namespace {

using json = nlohmann::json;
using Slots = std::map<std::string, std::string>;

std::string Fill(const std::string& tmpl, const Slots& slots) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    std::size_t open = tmpl.find('{', i);
    if (open == std::string::npos) {
      out.append(tmpl, i, std::string::npos);
      break;
    }
    std::size_t close = tmpl.find('}', open);
    if (close == std::string::npos) {
      throw Error(ErrorCode::kTranslationFailed, "unterminated slot in \"" + tmpl + "\"");
    }
    out.append(tmpl, i, open - i);
    std::string name = tmpl.substr(open + 1, close - open - 1);
    auto it = slots.find(name);
    if (it == slots.end()) {
      throw Error(ErrorCode::kTranslationFailed,
                  "no value for slot {" + name + "} in \"" + tmpl + "\"");
    }
    out += it->second;
    i = close + 1;
  }
  return out;
}

// Renders the parts of a clause with the phrase tables of a pack.
class Renderer {
 public:
  Renderer(const TranslationRequest& request,
           const std::function<const std::string&(const std::string&)>& phrase)
      : req_(request), clause_(*request.clause), phrase_(phrase) {}

  Slots Build() {
    Slots s;
    s["tables"] = Tables();
    s["items"] = Items();
    s["group"] = Group();
    if (clause_.predicate) {
      s["subject"] = Subject();
      s["conditions"] = PredText(*clause_.predicate);
    }
    if (!clause_.order_by.empty()) {
      s["orders"] = Orders("order.");
      s["order_pairs"] = Orders("order_pair.");
      s["top"] = Top();
    }
    if (clause_.limit) s["limit"] = std::to_string(*clause_.limit);
    return s;
  }

  std::string Limit() const {
    return Fill(phrase_("words.limit"), {{"limit", std::to_string(*clause_.limit)}});
  }

 private:
  std::string Column(const ColumnRef& ref) const {
    if (ref.is_star()) return phrase_("words.star");
    return NaturalColumnName(ref, req_.schema);
  }

  std::string Expr(const ColumnExpr& e) const {
    if (!e.is_calc()) return Column(e.left);
    return Fill(phrase_("arith." + std::string(ArithSymbol(*e.op))),
                {{"a", Column(e.left)}, {"b", Column(e.right)}});
  }

  std::string FirstTable() const {
    if (clause_.from.empty()) return "";
    return NaturalTableName(clause_.from[0], req_.schema);
  }

  std::string Agg(const AggExpr& e) const {
    if (!e.is_aggregate()) return Expr(e.expr);
    std::string inner;
    if (e.agg == AggFunc::kCount && e.expr.left.is_star()) {
      return Fill(phrase_("words.count_star"), {{"table", FirstTable()}});
    }
    inner = Expr(e.expr);
    if (e.distinct) inner = Fill(phrase_("words.distinct"), {{"x", inner}});
    return Fill(phrase_("aggregates." + std::string(AggName(e.agg))), {{"x", inner}});
  }

  std::string List(const std::vector<std::string>& parts) const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += i + 1 == parts.size() ? " " + phrase_("words.and") + " " : ", ";
      out += parts[i];
    }
    return out;
  }

  std::string Tables() const {
    std::vector<std::string> parts;
    for (const std::string& t : clause_.from) parts.push_back(NaturalTableName(t, req_.schema));
    return List(parts);
  }

  std::string Items() const {
    std::vector<std::string> parts;
    for (const SelectItem& item : clause_.select) parts.push_back(Agg(item));
    std::string out = List(parts);
    if (clause_.distinct) out = Fill(phrase_("words.distinct"), {{"x", out}});
    return out;
  }

  std::string Group() const {
    std::vector<std::string> parts;
    for (const ColumnRef& c : clause_.group_by) parts.push_back(Column(c));
    return List(parts);
  }

  std::string Subject() const {
    std::string table;
    ForEachCondition(*clause_.predicate, [&](const Condition& c) {
      if (table.empty() && !c.lhs.expr.left.table.empty()) table = c.lhs.expr.left.table;
    });
    if (table.empty()) return FirstTable();
    return NaturalTableName(table, req_.schema);
  }

  std::string CondText(const Condition& c) {
    Slots s;
    if (auto* lit = std::get_if<Literal>(&c.rhs)) {
      std::string v = lit->ToString();
      if (c.op == CompareOp::kLike) v.erase(std::remove(v.begin(), v.end(), '%'), v.end());
      s["rhs"] = v;
      s["low"] = v;
      s["high"] = c.upper ? c.upper->ToString() : "";
    } else if (auto* col = std::get_if<ColumnExpr>(&c.rhs)) {
      s["rhs"] = Fill(phrase_("words.column_rhs"), {{"x", Expr(*col)}});
    } else {
      if (next_nested_ >= req_.nested_texts.size()) {
        throw Error(ErrorCode::kTranslationFailed, "missing subquery translation");
      }
      s["rhs"] = req_.nested_texts[next_nested_++];
    }
    return Agg(c.lhs) + " " + Fill(phrase_("ops." + std::string(CompareSymbol(c.op))), s);
  }

  std::string PredText(const Predicate& p) {
    if (p.is_leaf()) return CondText(*p.leaf);
    std::string word = " " + phrase_(p.op == Connective::kAnd ? "words.and" : "words.or") + " ";
    std::string out;
    for (std::size_t i = 0; i < p.children.size(); ++i) {
      if (i > 0) out += word;
      out += PredText(p.children[i]);
    }
    return out;
  }

  std::string Orders(const std::string& table) const {
    std::vector<std::string> parts;
    for (const OrderItem& o : clause_.order_by) {
      parts.push_back(Fill(phrase_(table + std::string(SortDirName(o.dir))),
                           {{"key", Agg(o.key)}}));
    }
    return List(parts);
  }

  std::string Top() const {
    if (!clause_.limit) return Orders("order.");
    if (clause_.order_by.size() != 1) return Orders("order.") + ", " + Limit();
    const OrderItem& o = clause_.order_by[0];
    std::string table = *clause_.limit == 1 ? "top_one." : "top_n.";
    return Fill(phrase_(table + std::string(SortDirName(o.dir))),
                {{"key", Agg(o.key)}, {"limit", std::to_string(*clause_.limit)}});
  }

  const TranslationRequest& req_;
  const Clause& clause_;
  const std::function<const std::string&(const std::string&)>& phrase_;
  std::size_t next_nested_ = 0;
};

}  // namespace

TemplateTranslator TemplateTranslator::FromJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("template pack: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kFormat, "template pack must be an object");
  TemplateTranslator t;
  auto read_templates = [&](const json& obj, const std::string& prefix) {
    for (const auto& [kind, list] : obj.items()) {
      if (!ParseClauseKind(kind)) {
        throw Error(ErrorCode::kFormat, "template pack: unknown clause kind " + kind);
      }
      if (!list.is_array() || list.empty()) {
        throw Error(ErrorCode::kFormat, "template pack: " + kind + " needs a template list");
      }
      t.templates_[prefix + kind] = list.get<std::vector<std::string>>();
    }
  };
  for (const auto& [name, value] : doc.items()) {
    if (name == "language") {
      t.language_ = value.get<std::string>();
    } else if (name == "templates") {
      read_templates(value, "");
    } else if (name == "embedded") {
      read_templates(value, "embedded.");
    } else if (value.is_object()) {
      for (const auto& [key, phrase] : value.items()) {
        if (phrase.is_array()) {
          t.phrase_lists_[name + "." + key] = phrase.get<std::vector<std::string>>();
        } else {
          t.phrases_[name + "." + key] = phrase.get<std::string>();
        }
      }
    }
  }
  return t;
}

TemplateTranslator TemplateTranslator::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

std::filesystem::path DefaultTemplatePath() {
  return std::filesystem::path(SQLAUG_DATA_DIR) / "templates" / "en.json";
}

bool TemplateTranslator::Supports(ClauseKind kind) const {
  return templates_.count(std::string(ClauseKindName(kind))) > 0;
}

const std::vector<std::string>* TemplateTranslator::Templates(ClauseKind kind,
                                                              bool embedded) const {
  std::string name(ClauseKindName(kind));
  if (embedded) {
    auto it = templates_.find("embedded." + name);
    if (it != templates_.end()) return &it->second;
  }
  auto it = templates_.find(name);
  return it == templates_.end() ? nullptr : &it->second;
}

const std::string& TemplateTranslator::Phrase(const std::string& key) const {
  auto it = phrases_.find(key);
  if (it == phrases_.end()) {
    throw Error(ErrorCode::kTranslationFailed, "template pack has no phrase " + key);
  }
  return it->second;
}

const std::vector<std::string>& TemplateTranslator::PhraseList(const std::string& key) const {
  auto it = phrase_lists_.find(key);
  if (it == phrase_lists_.end() || it->second.empty()) {
    throw Error(ErrorCode::kTranslationFailed, "template pack has no phrase list " + key);
  }
  return it->second;
}

int TemplateTranslator::VariantCount(const TranslationRequest& request) const {
  const std::vector<std::string>* list = Templates(request.clause->kind, request.embedded);
  int count = list ? static_cast<int>(list->size()) : 0;
  if (!request.embedded) {
    auto it = paraphrases_.find(request.clause->Key());
    if (it != paraphrases_.end()) count += static_cast<int>(it->second.size());
  }
  return count;
}

std::string TemplateTranslator::Translate(const TranslationRequest& request) {
  const Clause& clause = *request.clause;
  const std::vector<std::string>* list = Templates(clause.kind, request.embedded);
  if (!list) {
    throw Error(ErrorCode::kUnsupportedClauseKind,
                std::string(ClauseKindName(clause.kind)) + " has no templates");
  }
  const std::vector<std::string>* para = nullptr;
  if (!request.embedded) {
    auto it = paraphrases_.find(clause.Key());
    if (it != paraphrases_.end()) para = &it->second;
  }
  const int n_para = para ? static_cast<int>(para->size()) : 0;
  const int count = static_cast<int>(list->size()) + n_para;
  int v = ((request.variant % count) + count) % count;

  if (v >= 1 && v <= n_para) {
    Slots slots;
    std::vector<ClauseElement> elements = ClauseElements(clause, request.schema);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      slots[std::to_string(i)] = elements[i].natural;
    }
    return Fill((*para)[v - 1], slots);
  }
  const std::string& tmpl = (*list)[v == 0 ? 0 : v - n_para];

  std::function<const std::string&(const std::string&)> phrase =
      [this](const std::string& key) -> const std::string& { return Phrase(key); };
  Renderer r(request, phrase);
  Slots slots = r.Build();
  if (clause.kind == ClauseKind::kSetOp) {
    const auto& words = PhraseList("connectives." + std::string(SetOpName(*clause.set_op)));
    slots["connective"] = words[0];
    slots["connective_alt"] = words[words.size() > 1 ? 1 : 0];
  }
  std::string text = Fill(tmpl, slots);
  // A LIMIT without ORDER BY rides on the SELECT clause.
  bool limit_unrendered = clause.limit && clause.order_by.empty();
  if (limit_unrendered) text += ", " + r.Limit();
  if (clause.kind == ClauseKind::kOrderByGroupBy && clause.limit) text += ", " + r.Limit();
  return text;
}

void TemplateTranslator::AddParaphrase(const std::string& key, const std::string& slotted_text) {
  std::vector<std::string>& list = paraphrases_[key];
  if (std::find(list.begin(), list.end(), slotted_text) == list.end()) {
    list.push_back(slotted_text);
  }
}

int TemplateTranslator::LoadParaphrases(const std::filesystem::path& corpus_path) {
  std::ifstream in(corpus_path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + corpus_path.string());
  int added = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kFormat,
                  corpus_path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!rec.contains("key") || !rec.contains("template")) continue;
    std::string key = rec["key"].get<std::string>();
    std::size_t before = paraphrases_[key].size();
    AddParaphrase(key, rec["template"].get<std::string>());
    added += static_cast<int>(paraphrases_[key].size() - before);
  }
  return added;
}

}  // namespace sqlaug
