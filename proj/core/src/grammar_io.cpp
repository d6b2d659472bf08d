#include "creogen/grammar_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "creogen/harmony.hpp"

namespace creogen::gio {

namespace {

struct Token {
  enum class Type { word, str, var, punct };
  Type type = Type::word;
  std::string text;
  int line = 0;
};

bool is_punct_char(char c) {
  return c == '(' || c == ')' || c == '{' || c == '}' || c == '/' ||
         c == '=' || c == ':';
}

bool is_word_break(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || is_punct_char(c) ||
         c == '"' || c == '#' || c == '$';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"')
        throw ParseError(line, "unterminated string");
      out.push_back({Token::Type::str, text.substr(i + 1, j - i - 1), line});
      i = j + 1;
    } else if (c == '$') {
      std::size_t j = i + 1;
      while (j < text.size() && !is_word_break(text[j])) ++j;
      if (j == i + 1) throw ParseError(line, "empty variable after '$'");
      out.push_back({Token::Type::var, text.substr(i + 1, j - i - 1), line});
      i = j;
    } else if (is_punct_char(c)) {
      out.push_back({Token::Type::punct, std::string(1, c), line});
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !is_word_break(text[j])) ++j;
      out.push_back({Token::Type::word, text.substr(i, j - i), line});
      i = j;
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool at_end() const { return pos_ >= toks_.size(); }
  int line() const {
    if (pos_ < toks_.size()) return toks_[pos_].line;
    return toks_.empty() ? 1 : toks_.back().line;
  }

  const Token* peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? &toks_[i] : nullptr;
  }

  Token next() {
    if (at_end()) throw ParseError(line(), "unexpected end of input");
    return toks_[pos_++];
  }

  bool try_punct(char c) {
    const Token* t = peek();
    if (t && t->type == Token::Type::punct && t->text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_punct(char c) {
    if (!try_punct(c))
      throw ParseError(line(), std::string("expected '") + c + "'");
  }

  std::string expect_word(const char* what) {
    Token t = next();
    if (t.type != Token::Type::word)
      throw ParseError(t.line, std::string("expected ") + what);
    return t.text;
  }

  bool word_is(const std::string& w, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->type == Token::Type::word && t->text == w;
  }

  bool punct_is(char c, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->type == Token::Type::punct && t->text[0] == c;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const std::set<std::string> kSections = {"FEATURES", "LEXICON", "TREES",
                                         "FRAMES"};
const std::set<std::string> kEntryProps = {
    "cat",   "type", "harm",     "harm!",   "det",  "frames",
    "keys",  "gloss", "elide",   "epithete", "pronoun"};

bool starts_section(const Cursor& c) {
  const Token* t = c.peek();
  return t && t->type == Token::Type::word && kSections.count(t->text);
}

fs::FeatureValue make_value(const std::string& word) {
  if (!word.empty() && std::isupper(static_cast<unsigned char>(word[0])))
    return fs::FeatureValue::var(word);
  return fs::FeatureValue::atom(word);
}

fs::FeatureStructure parse_fs(Cursor& c) {
  fs::FeatureStructure out;
  c.expect_punct('{');
  while (!c.try_punct('}')) {
    std::string feat = c.expect_word("feature name");
    c.expect_punct('=');
    out[feat] = make_value(c.expect_word("feature value"));
  }
  return out;
}

tag::Attach parse_join(Cursor& c, int line) {
  std::string v = c.expect_word("join direction");
  if (v == "left") return tag::Attach::hyphen_left;
  if (v == "right") return tag::Attach::hyphen_right;
  if (v == "clitic") return tag::Attach::clitic_left;
  throw ParseError(line, "unknown join '" + v + "'");
}

tag::TreeNode parse_node(Cursor& c);

tag::TreeNode parse_leaf_form(Cursor& c) {
  // after "(lex": token plus optional join=, then ')'
  tag::TreeNode leaf;
  leaf.kind = tag::NodeKind::lex;
  Token t = c.next();
  if (t.type == Token::Type::str)
    leaf.token = t.text;
  else if (t.type == Token::Type::var)
    leaf.token_var = t.text;
  else
    throw ParseError(t.line, "lex leaf needs a quoted token or $Variable");
  while (c.word_is("join") && c.punct_is('=', 1)) {
    int line = c.line();
    c.next();
    c.expect_punct('=');
    leaf.attach = parse_join(c, line);
  }
  c.expect_punct(')');
  return leaf;
}

tag::TreeNode parse_node(Cursor& c) {
  c.expect_punct('(');
  if (c.word_is("lex")) {
    c.next();
    return parse_leaf_form(c);
  }
  Token head = c.next();
  if (head.type != Token::Type::word)
    throw ParseError(head.line, "expected a category");
  tag::TreeNode node;
  node.category = head.text;
  if (node.category.ends_with("↓")) {  // ↓
    node.kind = tag::NodeKind::substitution;
    node.category.resize(node.category.size() - std::string("↓").size());
  } else if (node.category.ends_with("*")) {
    node.kind = tag::NodeKind::foot;
    node.category.pop_back();
  } else if (node.category.ends_with("@")) {
    node.kind = tag::NodeKind::anchor;
    node.category.pop_back();
  }
  if (node.category.empty())
    throw ParseError(head.line, "empty category");
  if (c.punct_is('{')) node.top = parse_fs(c);
  if (c.try_punct('/')) node.bottom = parse_fs(c);
  for (;;) {
    if (c.word_is("slot") && c.punct_is('=', 1)) {
      c.next();
      c.expect_punct('=');
      node.slot = c.expect_word("slot label");
      continue;
    }
    const Token* t = c.peek();
    if (!t) throw ParseError(c.line(), "unterminated node");
    if (t->type == Token::Type::punct && t->text[0] == ')') {
      c.next();
      break;
    }
    if (t->type == Token::Type::punct && t->text[0] == '(') {
      node.children.push_back(parse_node(c));
    } else if (t->type == Token::Type::str) {
      tag::TreeNode leaf;
      leaf.kind = tag::NodeKind::lex;
      leaf.token = t->text;
      node.children.push_back(std::move(leaf));
      c.next();
    } else if (t->type == Token::Type::var) {
      tag::TreeNode leaf;
      leaf.kind = tag::NodeKind::lex;
      leaf.token_var = t->text;
      node.children.push_back(std::move(leaf));
      c.next();
    } else {
      throw ParseError(t->line, "unexpected token '" + t->text + "' in tree");
    }
  }
  bool leafish = node.kind != tag::NodeKind::internal;
  if (leafish && !node.children.empty())
    throw ParseError(head.line, "slot, foot and anchor nodes take no children");
  return node;
}

grammar::LexicalEntry parse_entry(Cursor& c) {
  grammar::LexicalEntry e;
  Token name = c.next();
  if (name.type != Token::Type::word && name.type != Token::Type::str)
    throw ParseError(name.line, "expected a lemma after 'entry'");
  e.lemma = name.text;
  while (!c.at_end() && !starts_section(c) && !c.word_is("entry")) {
    Token prop = c.next();
    if (prop.type != Token::Type::word || !kEntryProps.count(prop.text))
      throw ParseError(prop.line, "unknown entry property '" + prop.text + "'");
    auto list_done = [&]() {
      if (c.at_end() || starts_section(c)) return true;
      const Token* t = c.peek();
      return t->type == Token::Type::word &&
             (kEntryProps.count(t->text) || t->text == "entry");
    };
    if (prop.text == "cat") {
      e.category = c.expect_word("category");
    } else if (prop.text == "type") {
      e.features["type"] = fs::FeatureValue::atom(c.expect_word("type"));
    } else if (prop.text == "harm" || prop.text == "harm!") {
      e.features["harm"] = fs::FeatureValue::atom(c.expect_word("class"));
      e.harm_override = prop.text == "harm!";
    } else if (prop.text == "det") {
      e.features["det"] = fs::FeatureValue::atom(c.expect_word("value"));
    } else if (prop.text == "frames") {
      while (!list_done()) e.frames.push_back(c.expect_word("frame name"));
    } else if (prop.text == "keys") {
      while (!list_done()) e.keys.push_back(c.expect_word("concept key"));
    } else if (prop.text == "gloss") {
      Token g = c.next();
      if (g.type != Token::Type::str)
        throw ParseError(g.line, "gloss takes a quoted string");
      e.gloss = g.text;
    } else if (prop.text == "elide") {
      e.elidable = true;
    } else if (prop.text == "epithete") {
      e.features["epithete"] = fs::FeatureValue::atom("plus");
    } else if (prop.text == "pronoun") {
      e.features["pron"] = fs::FeatureValue::atom("plus");
    }
  }
  return e;
}

}  // namespace

grammar::Grammar load_grammar(const std::string& text,
                              const std::string& source_label) {
  Cursor c(tokenize(text));
  grammar::Grammar g;
  g.source = source_label;
  std::string section;
  grammar::FrameSpec* open_frame = nullptr;

  while (!c.at_end()) {
    if (starts_section(c)) {
      section = c.next().text;
      open_frame = nullptr;
      continue;
    }
    int line = c.line();
    if (section == "FEATURES") {
      std::string name = c.expect_word("feature name");
      c.expect_punct(':');
      auto& values = g.features[name];
      while (!c.at_end() && !starts_section(c) &&
             !(c.peek()->type == Token::Type::word && c.punct_is(':', 1)))
        values.push_back(c.expect_word("feature value"));
      if (values.empty())
        throw ParseError(line, "feature '" + name + "' declares no values");
    } else if (section == "LEXICON") {
      if (!c.word_is("entry"))
        throw ParseError(line, "expected 'entry' in LEXICON");
      c.next();
      g.lexicon.push_back(parse_entry(c));
    } else if (section == "TREES") {
      if (!c.word_is("tree"))
        throw ParseError(line, "expected 'tree' in TREES");
      c.next();
      tag::ElementaryTree t;
      t.name = c.expect_word("tree name");
      std::string fam = c.expect_word("tree family");
      if (fam == "initial")
        t.family = tag::Family::initial;
      else if (fam == "auxiliary")
        t.family = tag::Family::auxiliary;
      else if (fam == "schema")
        t.family = tag::Family::schema;
      else
        throw ParseError(line, "unknown tree family '" + fam + "'");
      t.root = parse_node(c);
      if (g.trees.count(t.name))
        throw ParseError(line, "duplicate tree '" + t.name + "'");
      g.tree_order.push_back(t.name);
      g.trees.emplace(t.name, std::move(t));
    } else if (section == "FRAMES") {
      std::string kw = c.expect_word("frame declaration");
      if (kw == "frame") {
        grammar::FrameSpec f;
        f.name = c.expect_word("frame name");
        std::string kind = c.expect_word("frame kind");
        if (kind == "complete")
          f.kind = grammar::FrameKind::complete;
        else if (kind == "restricted")
          f.kind = grammar::FrameKind::restricted;
        else
          throw ParseError(line, "unknown frame kind '" + kind + "'");
        if (g.frame(f.name))
          throw ParseError(line, "duplicate frame '" + f.name + "'");
        g.frames.push_back(std::move(f));
        open_frame = &g.frames.back();
      } else if (kw == "schema") {
        if (!open_frame) throw ParseError(line, "'schema' outside a frame");
        open_frame->schema = c.expect_word("schema tree name");
      } else if (kw == "slot") {
        if (!open_frame) throw ParseError(line, "'slot' outside a frame");
        std::string slot = c.expect_word("slot label");
        c.try_punct('=');
        open_frame->slots.emplace_back(slot, c.expect_word("role name"));
      } else if (kw == "circumstant") {
        grammar::CircumstantSpec spec;
        spec.role = c.expect_word("role name");
        std::string how = c.expect_word("'verb' or 'tree'");
        if (how == "verb") {
          spec.verb = c.expect_word("verb lemma");
          if (c.expect_word("'frame'") != "frame")
            throw ParseError(line, "expected 'frame' after the verb lemma");
          spec.frame = c.expect_word("frame name");
        } else if (how == "tree") {
          spec.tree = c.expect_word("tree name");
        } else {
          throw ParseError(line, "expected 'verb' or 'tree'");
        }
        g.circumstants.push_back(std::move(spec));
        open_frame = nullptr;
      } else if (kw == "nominal") {
        grammar::NominalSpec spec;
        spec.role = c.expect_word("role name");
        if (c.expect_word("'tree'") != "tree")
          throw ParseError(line, "expected 'tree' after the role");
        spec.tree = c.expect_word("tree name");
        g.nominal_complements.push_back(std::move(spec));
        open_frame = nullptr;
      } else {
        throw ParseError(line, "unknown FRAMES declaration '" + kw + "'");
      }
    } else {
      throw ParseError(line, "content before the first section header");
    }
  }

  std::vector<std::string> issues = validate(g);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return g;
}

grammar::Grammar load_grammar_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read grammar file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_grammar(buf.str(), path);
}

namespace {

void check_fs(const grammar::Grammar& g, const std::string& where,
              const fs::FeatureStructure& fsr,
              std::vector<std::string>& issues) {
  for (const auto& [feat, v] : fsr) {
    auto it = g.features.find(feat);
    if (it == g.features.end()) {
      issues.push_back(where + ": unknown feature '" + feat + "'");
      continue;
    }
    if (v.is_atom() &&
        std::find(it->second.begin(), it->second.end(), v.text) ==
            it->second.end())
      issues.push_back(where + ": value '" + v.text +
                       "' not declared for feature '" + feat + "'");
  }
}

void check_tree_nodes(const grammar::Grammar& g, const std::string& where,
                      const tag::TreeNode& n,
                      std::vector<std::string>& issues) {
  check_fs(g, where, n.top, issues);
  check_fs(g, where, n.bottom, issues);
  if (n.top.count("temps") && n.category != "Predbarbar")
    issues.push_back(where + ": 'temps' outside a Predbarbar node");
  for (const auto& c : n.children) check_tree_nodes(g, where, c, issues);
}

}  // namespace

std::vector<std::string> validate(const grammar::Grammar& g) {
  std::vector<std::string> issues;

  for (const auto& name : g.tree_order) {
    const tag::ElementaryTree& t = g.trees.at(name);
    std::string where = "tree " + name;
    check_tree_nodes(g, where, t.root, issues);
    auto feet = tag::collect_kind(t.root, tag::NodeKind::foot);
    auto anchors = tag::collect_kind(t.root, tag::NodeKind::anchor);
    if (t.family == tag::Family::auxiliary) {
      if (feet.size() != 1) {
        issues.push_back(where + ": auxiliary trees need exactly one foot");
      } else {
        const tag::TreeNode* foot = tag::node_at(t.root, feet[0]);
        if (foot->category != t.root.category)
          issues.push_back(where + ": foot category '" + foot->category +
                           "' differs from root '" + t.root.category + "'");
      }
    } else if (!feet.empty()) {
      issues.push_back(where + ": only auxiliary trees may carry a foot");
    }
    if (t.family == tag::Family::schema && anchors.empty())
      issues.push_back(where + ": schema trees need an anchor");
    if (t.family == tag::Family::initial && !anchors.empty())
      issues.push_back(where + ": initial trees take no anchor");
  }

  for (const auto& e : g.lexicon) {
    std::string where = "entry " + e.lemma;
    check_fs(g, where, e.features, issues);
    if (e.category != "N" && e.category != "Pred" && e.category != "Qnt") {
      issues.push_back(where + ": unknown category '" + e.category + "'");
      continue;
    }
    const std::string* det = e.feature("det");
    if (det && e.category != "N")
      issues.push_back(where + ": 'det' only applies to N entries");
    if (det && *det != "def")
      issues.push_back(where + ": lexical det must be 'def'");
    if (e.feature("pron") && !e.predetermined())
      issues.push_back(where + ": pronouns must carry det def");
    if (e.category == "N") {
      const std::string* stated = e.feature("harm");
      if (!stated) {
        issues.push_back(where + ": N entries must state their harm class");
      } else if (!e.harm_override) {
        auto computed = grammar::harmony_class(e.lemma);
        if (!computed.ok())
          issues.push_back(where + ": " + computed.error().detail +
                           " (use harm! to override)");
        else if (computed.value() != *stated)
          issues.push_back(where + ": stated class '" + *stated +
                           "' but the ending rule yields '" +
                           computed.value() + "'");
      }
      if (!e.frames.empty())
        issues.push_back(where + ": N entries take no frames");
    }
    if (e.category == "Pred") {
      const std::string* type = e.feature("type");
      if (!type)
        issues.push_back(where + ": Pred entries must state their type");
      for (const auto& f : e.frames)
        if (!g.frame(f))
          issues.push_back(where + ": unknown frame '" + f + "'");
    } else if (e.feature("epithete")) {
      issues.push_back(where + ": 'epithete' only applies to Pred entries");
    }
    if (e.category == "Qnt" && !e.frames.empty())
      issues.push_back(where + ": Qnt entries take no frames");
  }

  for (const auto& f : g.frames) {
    std::string where = "frame " + f.name;
    const tag::ElementaryTree* schema = g.tree(f.schema);
    if (f.schema.empty()) {
      issues.push_back(where + ": no schema tree");
      continue;
    }
    if (!schema) {
      issues.push_back(where + ": unknown schema tree '" + f.schema + "'");
      continue;
    }
    if (f.kind == grammar::FrameKind::complete &&
        schema->family != tag::Family::schema)
      issues.push_back(where + ": complete frames need a schema-family tree");
    for (const auto& [slot, role] : f.slots) {
      if (!tag::find_slot(schema->root, slot))
        issues.push_back(where + ": schema has no slot '" + slot + "'");
      if (role.empty()) issues.push_back(where + ": empty role");
    }
  }

  for (const auto& cspec : g.circumstants) {
    std::string where = "circumstant " + cspec.role;
    if (!cspec.verb.empty()) {
      const grammar::LexicalEntry* e = g.entry_by_lemma(cspec.verb);
      const grammar::FrameSpec* f = g.frame(cspec.frame);
      if (!e || e->category != "Pred")
        issues.push_back(where + ": verb '" + cspec.verb +
                         "' is not a Pred entry");
      if (!f)
        issues.push_back(where + ": unknown frame '" + cspec.frame + "'");
      else if (f->kind != grammar::FrameKind::restricted)
        issues.push_back(where + ": frame '" + cspec.frame +
                         "' is not restricted");
      if (e && f &&
          std::find(e->frames.begin(), e->frames.end(), cspec.frame) ==
              e->frames.end())
        issues.push_back(where + ": entry '" + cspec.verb +
                         "' does not list frame '" + cspec.frame + "'");
    } else {
      const tag::ElementaryTree* t = g.tree(cspec.tree);
      if (!t)
        issues.push_back(where + ": unknown tree '" + cspec.tree + "'");
      else if (t->family != tag::Family::auxiliary)
        issues.push_back(where + ": tree '" + cspec.tree +
                         "' is not auxiliary");
    }
  }

  for (const auto& nspec : g.nominal_complements) {
    std::string where = "nominal " + nspec.role;
    const tag::ElementaryTree* t = g.tree(nspec.tree);
    if (!t)
      issues.push_back(where + ": unknown tree '" + nspec.tree + "'");
    else if (t->family != tag::Family::auxiliary)
      issues.push_back(where + ": tree '" + nspec.tree + "' is not auxiliary");
  }

  return issues;
}

}  // namespace creogen::gio
