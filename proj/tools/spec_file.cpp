#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cli.hpp"

namespace wbalg::cli {

namespace {

const std::set<std::string, std::less<>> kinds{"quiver",   "groupoid",   "group",  "wba",    "hopf", "separable",
                                               "action",   "comodule",   "bicomodule", "bundle", "qtg"};

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) return false;
  return true;
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s, std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back({std::string(s.substr(start, i - start)), column + start});
  }
  return out;
}

std::vector<std::string> split_bar(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find('|', start);
    out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) return out;
    start = p + 1;
  }
}

struct LabelIndex {
  const Space* space;
  std::unordered_map<std::string, std::size_t> index;

  explicit LabelIndex(const Space& s) : space(&s) {
    auto labels = s.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  }
  std::optional<std::size_t> find(const std::string& l) const {
    auto it = index.find(l);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

using Components = std::vector<const LabelIndex*>;

}  // namespace

const Field* Block::find(std::string_view key) const {
  for (const auto& f : fields)
    if (f.key == key) return &f;
  return nullptr;
}

std::vector<const Field*> Block::all(std::string_view key) const {
  std::vector<const Field*> out;
  for (const auto& f : fields)
    if (f.key == key) out.push_back(&f);
  return out;
}

std::vector<Block> parse_text(std::string_view text, const std::string& source) {
  std::vector<Block> out;
  std::optional<Block> open;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t indent = raw.find_first_not_of(" \t") + 1;
    if (!open) {
      auto toks = tokenize(raw, 1);
      if (kinds.find(toks[0].text) == kinds.end())
        throw ParseError(source, line_no, toks[0].column, "unknown declaration kind '" + toks[0].text + "'");
      if (toks.size() != 3 || toks[2].text != "{")
        throw ParseError(source, line_no, toks.back().column + toks.back().text.size(),
                         "expected '<kind> <name> {'");
      if (!valid_name(toks[1].text))
        throw ParseError(source, line_no, toks[1].column, "invalid name '" + toks[1].text + "'");
      open = Block{toks[0].text, toks[1].text, source, line_no, {}};
    } else if (line == "}") {
      out.push_back(std::move(*open));
      open.reset();
    } else {
      std::size_t colon = raw.find(':');
      if (colon == std::string_view::npos) throw ParseError(source, line_no, indent, "expected '<key>: <value>'");
      auto head = tokenize(raw.substr(0, colon), 1);
      if (head.empty() || head.size() > 2) throw ParseError(source, line_no, indent, "expected '<key>: <value>'");
      Field f;
      f.key = head[0].text;
      if (head.size() == 2) f.name = head[1].text;
      std::string_view rest = raw.substr(colon + 1);
      std::size_t skip = rest.find_first_not_of(" \t");
      f.column = colon + 2 + (skip == std::string_view::npos ? rest.size() : skip);
      f.value = trim(rest);
      f.line = line_no;
      open->fields.push_back(std::move(f));
    }
    if (end == text.size()) break;
  }
  if (open) throw ParseError(source, open->line, 1, "block '" + open->name + "' is not closed");
  return out;
}

// Field-level parsing and per-kind construction.
struct Resolver {
  Structures& owner;
  const Block& block;

  [[noreturn]] void parse_fail(const Field& f, std::size_t column, const std::string& what) const {
    throw ParseError(block.source, f.line, column, what);
  }
  [[noreturn]] void block_fail(const std::string& what) const {
    throw ParseError(block.source, block.line, 1, what + " in " + block.kind + " '" + block.name + "'");
  }

  const Field& required(std::string_view key) const {
    const Field* f = block.find(key);
    if (!f) block_fail("missing field '" + std::string(key) + "'");
    return *f;
  }

  std::string where(const Field& f) const {
    return block.source + ":" + std::to_string(f.line) + ":" + std::to_string(f.column);
  }

  const Structure& ref(std::string_view key) const {
    const Field& f = required(key);
    auto toks = tokenize(f.value, f.column);
    if (toks.size() != 1) parse_fail(f, f.column, "expected one name");
    if (owner.blocks_.find(toks[0].text) == owner.blocks_.end())
      throw ResolutionError(where(f) + ": '" + toks[0].text + "' is not declared");
    return owner.resolve(toks[0].text);
  }

  std::vector<std::string> list(const Field& f) const {
    std::vector<std::string> out;
    for (auto& t : tokenize(f.value, f.column)) out.push_back(std::move(t.text));
    return out;
  }

  bool flag(std::string_view key) const {
    const Field* f = block.find(key);
    if (!f) return false;
    if (f->value == "true") return true;
    if (f->value == "false") return false;
    parse_fail(*f, f->column, "expected true or false");
  }

  std::string word(std::string_view key, const std::string& fallback = {}) const {
    const Field* f = block.find(key);
    if (!f) return fallback;
    auto toks = tokenize(f->value, f->column);
    if (toks.size() != 1) parse_fail(*f, f->column, "expected one word");
    return toks[0].text;
  }

  Scalar scalar(const Field& f, const Token& t) const {
    try {
      return parse_scalar(t.text);
    } catch (const std::invalid_argument& e) {
      parse_fail(f, t.column, e.what());
    }
  }

  std::size_t lookup(const Field& f, const Token& t, const Components& comps) const {
    auto parts = split_bar(t.text);
    if (parts.size() != comps.size())
      parse_fail(f, t.column, "'" + t.text + "' needs " + std::to_string(comps.size()) + " tensor factors");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto i = comps[k]->find(parts[k]);
      if (!i) throw ResolutionError(where(f) + ": unknown basis label '" + parts[k] + "'");
      idx = idx * comps[k]->space->dim() + *i;
    }
    return idx;
  }

  SparseVector vector(const Field& f, const std::vector<Token>& toks, const Components& comps) const {
    if (toks.empty()) parse_fail(f, f.column, "expected a vector");
    if (toks.size() == 1 && toks[0].text == "0" && (comps.empty() || !lookup_quiet(toks[0].text, comps)))
      return {};
    VectorBuilder b;
    std::size_t i = 0;
    Scalar sign = 1;
    bool expect_term = true;
    while (i < toks.size()) {
      const Token& t = toks[i];
      if (expect_term && (t.text == "+" || t.text == "-") && i == 0) {
        sign = t.text == "-" ? -1 : 1;
        ++i;
        continue;
      }
      if (!expect_term) {
        if (t.text != "+" && t.text != "-") parse_fail(f, t.column, "expected '+' or '-'");
        sign = t.text == "-" ? -1 : 1;
        expect_term = true;
        ++i;
        continue;
      }
      if (t.text == "+" || t.text == "-" || t.text == "*") parse_fail(f, t.column, "expected a term");
      Scalar c = 1;
      if (i + 1 < toks.size() && toks[i + 1].text == "*") {
        c = scalar(f, t);
        i += 2;
        if (i >= toks.size()) parse_fail(f, toks[i - 1].column + 1, "expected a basis label after '*'");
      } else if (comps.empty()) {
        b.add(0, sign * scalar(f, t));
        ++i;
        expect_term = false;
        continue;
      }
      if (comps.empty()) parse_fail(f, toks[i].column, "a scalar value takes no basis label");
      b.add(lookup(f, toks[i], comps), sign * c);
      ++i;
      expect_term = false;
    }
    if (expect_term) parse_fail(f, toks.back().column, "dangling operator");
    return b.build();
  }

  bool lookup_quiet(const std::string& label, const Components& comps) const {
    auto parts = split_bar(label);
    if (parts.size() != comps.size()) return false;
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (!comps[k]->find(parts[k])) return false;
    return true;
  }

  SparseVector vector_field(const Field& f, const Components& comps) const {
    return vector(f, tokenize(f.value, f.column), comps);
  }

  // "<label> -> <vector>" entries collected into columns of a map.
  LinearMap entries(std::string_view key, const Space& domain, const Components& dom, const Space& codomain,
                    const Components& cod) const {
    LinearMap m(domain, codomain);
    std::vector<VectorBuilder> cols(domain.dim());
    for (const Field* f : block.all(key)) {
      auto toks = tokenize(f->value, f->column);
      std::size_t arrow = 0;
      while (arrow < toks.size() && toks[arrow].text != "->") ++arrow;
      if (arrow != 1 || arrow + 1 >= toks.size()) parse_fail(*f, f->column, "expected '<basis label> -> <vector>'");
      std::size_t j = lookup(*f, toks[0], dom);
      std::vector<Token> rhs(toks.begin() + 2, toks.end());
      cols[j].add(vector(*f, rhs, cod));
    }
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j].build());
    return m;
  }

  Space basis_space() const {
    const Field& f = required("basis");
    auto labels = list(f);
    if (labels.empty()) parse_fail(f, f.column, "empty basis");
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) parse_fail(f, f.column, "repeated basis label '" + l + "'");
    return Space(labels);
  }

  std::string endpoint_pair(const Field& f, std::string& to) const {
    auto toks = tokenize(f.value, f.column);
    if (toks.size() != 3 || toks[1].text != "->") parse_fail(f, f.column, "expected '<from> -> <to>'");
    to = toks[2].text;
    return toks[0].text;
  }

  std::size_t index_in(const Field& f, const std::vector<std::string>& names, const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    throw ResolutionError(where(f) + ": unknown name '" + n + "'");
  }
};

namespace {

std::shared_ptr<const WeakBialgebra> wba_of(const Structure& s) {
  if (s.qtg) return s.qtg->hopf.wba;
  return s.wba;
}

std::shared_ptr<const SeparableAlgebraData> separable_of(const Structure& s) {
  if (s.separable) return s.separable;
  if (s.group) return std::make_shared<const SeparableAlgebraData>(group_separable(*s.group, s.name));
  return nullptr;
}

}  // namespace

Structures::Structures(std::vector<Block> blocks, CheckOptions opt) : opt_(std::move(opt)) {
  for (auto& b : blocks) {
    if (blocks_.count(b.name))
      throw ParseError(b.source, b.line, 1, "'" + b.name + "' is declared twice");
    order_.push_back(b.name);
    blocks_.emplace(b.name, std::move(b));
  }
  for (const auto& n : order_) resolve(n);
}

const Structure& Structures::get(const std::string& name) const {
  auto it = done_.find(name);
  if (it == done_.end()) throw ResolutionError("'" + name + "' is not declared");
  return *it->second;
}

const Structure& Structures::resolve(const std::string& name) {
  if (auto it = done_.find(name); it != done_.end()) return *it->second;
  for (const auto& s : stack_)
    if (s == name) throw ResolutionError("cyclic reference through '" + name + "'");
  stack_.push_back(name);
  const Block& b = blocks_.at(name);
  Structure s;
  try {
    s = build(b);
  } catch (const ParseError&) {
    throw;
  } catch (const ResolutionError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const InvalidStructure& e) {
    throw ValidationError(b.source + ":" + std::to_string(b.line) + ": " + b.kind + " '" + b.name + "': " + e.what(),
                          e.report());
  } catch (const ActionDataInvalid& e) {
    throw ValidationError(b.source + ":" + std::to_string(b.line) + ": " + b.kind + " '" + b.name + "': " + e.what(),
                          e.report());
  } catch (const Error& e) {
    throw ValidationError(b.source + ":" + std::to_string(b.line) + ": " + b.kind + " '" + b.name + "': " + e.what(),
                          {});
  }
  stack_.pop_back();
  auto [it, ok] = done_.emplace(name, std::make_unique<Structure>(std::move(s)));
  return *it->second;
}

Structure Structures::build(const Block& b) {
  Resolver r{*this, b};
  Structure s;
  s.kind = b.kind;
  s.name = b.name;
  s.unchecked = r.flag("unchecked");
  Construction mode = s.unchecked ? Construction::unchecked : Construction::checked;

  if (b.kind == "quiver") {
    auto vertices = r.list(r.required("vertices"));
    std::vector<Arrow> arrows;
    for (const Field* f : b.all("arrow")) {
      if (f->name.empty()) r.parse_fail(*f, f->column, "arrow needs a name: 'arrow <name>: <from> -> <to>'");
      std::string to;
      std::string from = r.endpoint_pair(*f, to);
      arrows.push_back({f->name, r.index_in(*f, vertices, from), r.index_in(*f, vertices, to)});
    }
    s.quiver = std::make_shared<const Quiver>(vertices, arrows);
    std::string algebra = r.word("algebra", "face");
    std::optional<unsigned> trunc;
    if (const Field* f = b.find("truncation")) {
      auto toks = tokenize(f->value, f->column);
      if (toks.size() != 1 || toks[0].text.find_first_not_of("0123456789") != std::string::npos)
        r.parse_fail(*f, f->column, "expected a non-negative integer");
      trunc = static_cast<unsigned>(std::stoul(toks[0].text));
    }
    s.refs["algebra"] = algebra;
    if (algebra == "face") {
      s.face = face_algebra(*s.quiver, trunc ? FaceMode::truncated(*trunc) : FaceMode::full(), b.name);
      s.wba = s.face->wba;
    } else if (algebra == "path") {
      s.wba = path_algebra_wba(*s.quiver, b.name);
    } else if (algebra != "none") {
      r.parse_fail(r.required("algebra"), r.required("algebra").column, "expected face, path or none");
    }
  } else if (b.kind == "group") {
    auto elements = r.list(r.required("elements"));
    auto rows = b.all("row");
    if (rows.size() != elements.size()) r.block_fail("expected one row per element");
    GroupTable g{elements, {}};
    for (const Field* f : rows) {
      std::vector<std::size_t> row;
      for (const auto& t : tokenize(f->value, f->column)) row.push_back(r.index_in(*f, elements, t.text));
      if (row.size() != elements.size()) r.parse_fail(*f, f->column, "row has the wrong length");
      g.table.push_back(std::move(row));
    }
    validate(g);
    s.group = g;
    s.hopf = std::make_shared<const HopfAlgebraData>(group_hopf(g, b.name));
    auto w = group_algebra(g, b.name);
    s.wba = w.wba;
    s.antipode = w.antipode;
  } else if (b.kind == "groupoid") {
    auto objects = r.list(r.required("objects"));
    std::vector<Groupoid::Morphism> morphisms;
    std::vector<std::string> names;
    for (const Field* f : b.all("morphism")) {
      if (f->name.empty()) r.parse_fail(*f, f->column, "morphism needs a name: 'morphism <name>: <from> -> <to>'");
      std::string to;
      std::string from = r.endpoint_pair(*f, to);
      morphisms.push_back({f->name, r.index_in(*f, objects, from), r.index_in(*f, objects, to)});
      names.push_back(f->name);
    }
    std::size_t n = morphisms.size();
    std::vector<std::vector<std::optional<std::size_t>>> compose(n, std::vector<std::optional<std::size_t>>(n));
    for (const Field* f : b.all("compose")) {
      std::string to;
      std::string from = r.endpoint_pair(*f, to);
      auto parts = split_bar(from);
      if (parts.size() != 2) r.parse_fail(*f, f->column, "expected '<f>|<g> -> <h>'");
      compose[r.index_in(*f, names, parts[0])][r.index_in(*f, names, parts[1])] = r.index_in(*f, names, to);
    }
    std::vector<std::size_t> identities(objects.size(), n), inverses(n, n);
    for (const Field* f : b.all("identity")) {
      std::string to;
      std::string from = r.endpoint_pair(*f, to);
      identities[r.index_in(*f, objects, from)] = r.index_in(*f, names, to);
    }
    for (const Field* f : b.all("inverse")) {
      std::string to;
      std::string from = r.endpoint_pair(*f, to);
      inverses[r.index_in(*f, names, from)] = r.index_in(*f, names, to);
    }
    for (std::size_t i : identities)
      if (i == n) r.block_fail("every object needs an identity");
    for (std::size_t i : inverses)
      if (i == n) r.block_fail("every morphism needs an inverse");
    s.groupoid = std::make_shared<const Groupoid>(objects, morphisms, compose, identities, inverses);
    auto w = groupoid_algebra(*s.groupoid, b.name);
    s.wba = w.wba;
    s.antipode = w.antipode;
  } else if (b.kind == "wba" || b.kind == "hopf") {
    Space H = r.basis_space();
    LabelIndex h(H);
    Components one{&h}, two{&h, &h}, none{};
    if (const Field* f = b.find("dim")) {
      if (f->value != std::to_string(H.dim())) r.parse_fail(*f, f->column, "dim does not match the basis");
    }
    AlgebraData alg{H, r.entries("mult", tensor(H, H), two, H, one), r.vector_field(r.required("unit"), one), nullptr};
    CoalgebraData co{H, r.entries("comult", H, one, tensor(H, H), two), r.entries("counit", H, one, Space::ground(), none)};
    if (b.kind == "hopf" || b.find("antipode")) s.antipode = r.entries("antipode", H, one, H, one);
    if (b.kind == "hopf") {
      r.required("antipode");
      s.hopf = std::make_shared<const HopfAlgebraData>(make_hopf(b.name, alg, co, *s.antipode));
      if (!s.unchecked) {
        CheckReport r = check_hopf(*s.hopf, opt_);
        if (!r.passed()) throw InvalidStructure("not a Hopf algebra", r);
      }
    }
    s.wba = std::make_shared<const WeakBialgebra>(b.name, std::move(alg), std::move(co), mode);
  } else if (b.kind == "separable") {
    const Structure& a = r.ref("algebra");
    s.refs["algebra"] = a.name;
    if (a.group && !b.find("idempotent")) {
      s.separable = separable_of(a);
    } else {
      AlgebraData alg;
      if (a.hopf)
        alg = a.hopf->algebra;
      else if (auto w = wba_of(a))
        alg = w->algebra();
      else
        throw ResolutionError(r.where(r.required("algebra")) + ": '" + a.name + "' has no algebra");
      if (alg.truncation) throw ResolutionError(r.where(r.required("algebra")) + ": '" + a.name + "' is truncated");
      LabelIndex bi(alg.space);
      Components one{&bi}, two{&bi, &bi}, none{};
      SparseVector e = r.vector_field(r.required("idempotent"), two);
      std::optional<LinearMap> omega;
      if (b.find("omega")) omega = r.entries("omega", alg.space, one, Space::ground(), none);
      s.separable = std::make_shared<const SeparableAlgebraData>(make_separable(alg, e, omega));
    }
  } else if (b.kind == "action") {
    const Structure& l = r.ref("L");
    const Structure& bs = r.ref("B");
    s.refs["L"] = l.name;
    s.refs["B"] = bs.name;
    if (!l.hopf) throw ResolutionError(r.where(r.required("L")) + ": '" + l.name + "' is not a Hopf algebra");
    auto sep = separable_of(bs);
    if (!sep) throw ResolutionError(r.where(r.required("B")) + ": '" + bs.name + "' is not a separable algebra");
    std::string preset = r.word("preset");
    if (preset == "adjoint") {
      if (!(sep->space() == l.hopf->space()) || !(sep->algebra.mult == l.hopf->algebra.mult))
        throw ValidationError(r.where(r.required("preset")) + ": the adjoint action needs B = L as algebras", {});
      s.action = std::make_shared<const ModuleAlgebraAction>(adjoint_action(*l.hopf));
    } else if (preset == "trivial") {
      s.action = std::make_shared<const ModuleAlgebraAction>(trivial_action(*l.hopf, *sep));
    } else if (preset.empty()) {
      LabelIndex bi(sep->space()), li(l.hopf->space());
      Components dom{&bi, &li}, cod{&bi};
      s.action = std::make_shared<const ModuleAlgebraAction>(
          make_action(*l.hopf, r.entries("act", tensor(sep->space(), l.hopf->space()), dom, sep->space(), cod)));
    } else {
      r.parse_fail(r.required("preset"), r.required("preset").column, "expected adjoint or trivial");
    }
    s.hopf = l.hopf;
    s.separable = sep;
  } else if (b.kind == "comodule") {
    const Structure& hs = r.ref("H");
    s.refs["H"] = hs.name;
    auto h = wba_of(hs);
    if (!h) throw ResolutionError(r.where(r.required("H")) + ": '" + hs.name + "' has no weak bialgebra");
    std::string preset = r.word("preset");
    if (preset == "regular") {
      s.comodule = Comodule::regular(h);
    } else if (preset == "unit") {
      s.comodule = Comodule::unit_object(h);
    } else if (preset == "path") {
      if (!hs.face) throw ResolutionError(r.where(r.required("H")) + ": the path preset needs a face algebra");
      s.comodule = path_comodule(*hs.face);
    } else if (preset.empty()) {
      Space m = r.basis_space();
      LabelIndex mi(m), hi(h->space());
      s.comodule = Comodule(b.name, h, m, r.entries("coaction", m, {&mi}, tensor(m, h->space()), {&mi, &hi}));
    } else {
      r.parse_fail(r.required("preset"), r.required("preset").column, "expected regular, unit or path");
    }
  } else if (b.kind == "bicomodule") {
    const Structure& l = r.ref("L");
    s.refs["L"] = l.name;
    if (!l.hopf) throw ResolutionError(r.where(r.required("L")) + ": '" + l.name + "' is not a Hopf algebra");
    std::string preset = r.word("preset");
    if (preset == "regular") {
      s.bicomodule = regular_bicomodule(l.hopf);
    } else if (preset == "trivial") {
      s.bicomodule = trivial_bicomodule(l.hopf);
    } else if (preset == "graded") {
      auto labels = r.list(r.required("basis"));
      LabelIndex li(l.hopf->space());
      std::vector<std::size_t> degrees;
      const Field& f = r.required("degrees");
      for (const auto& t : tokenize(f.value, f.column)) degrees.push_back(r.lookup(f, t, {&li}));
      s.bicomodule = graded_bicomodule(b.name, l.hopf, labels, degrees);
    } else if (preset.empty()) {
      Space x = r.basis_space();
      LabelIndex xi(x), li(l.hopf->space());
      LinearMap left = r.entries("left", x, {&xi}, tensor(l.hopf->space(), x), {&li, &xi});
      LinearMap right = r.entries("right", x, {&xi}, tensor(x, l.hopf->space()), {&xi, &li});
      s.bicomodule = make_bicomodule(b.name, l.hopf, x, left, right);
    } else {
      r.parse_fail(r.required("preset"), r.required("preset").column, "expected regular, trivial or graded");
    }
    s.bicomodule->name = b.name;
  } else if (b.kind == "bundle") {
    s.bundle_kind = r.word("kind");
    bool want_alg = s.bundle_kind == "comodule-algebra" || s.bundle_kind == "comodule-frobenius";
    bool want_coalg = s.bundle_kind == "comodule-coalgebra" || s.bundle_kind == "comodule-frobenius";
    if (!want_alg && !want_coalg) {
      const Field& f = r.required("kind");
      r.parse_fail(f, f.column, "expected comodule-algebra, comodule-coalgebra or comodule-frobenius");
    }
    std::string preset = r.word("preset");
    if (preset == "path") {
      const Structure& hs = r.ref("H");
      s.refs["H"] = hs.name;
      if (!hs.face) throw ResolutionError(r.where(r.required("H")) + ": the path preset needs a face algebra");
      auto [a, c] = kq_comodule_instances(*hs.face);
      if (want_alg) s.algebra = a;
      if (want_coalg) s.coalgebra = c;
    } else if (preset == "unit-object" || preset == "matrix") {
      ComoduleFrobenius fr = [&] {
        if (preset == "matrix") return matrix_frobenius_example().frobenius;
        const Structure& hs = r.ref("H");
        s.refs["H"] = hs.name;
        auto h = wba_of(hs);
        if (!h) throw ResolutionError(r.where(r.required("H")) + ": '" + hs.name + "' has no weak bialgebra");
        return unit_object_instance(h);
      }();
      if (want_alg) s.algebra = fr.algebra;
      if (want_coalg) s.coalgebra = fr.coalgebra;
    } else if (preset.empty()) {
      const Structure& cs = r.ref("comodule");
      if (!cs.comodule) throw ResolutionError(r.where(r.required("comodule")) + ": '" + cs.name + "' is not a comodule");
      s.refs["comodule"] = cs.name;
      if (auto it = cs.refs.find("H"); it != cs.refs.end()) s.refs["H"] = it->second;
      const Comodule& m = *cs.comodule;
      const Space& A = m.space();
      LabelIndex ai(A);
      Components one{&ai}, two{&ai, &ai}, none{};
      if (want_alg)
        s.algebra = ComoduleAlgebra{m, r.entries("mult", tensor(A, A), two, A, one),
                                    r.vector_field(r.required("unit"), one)};
      if (want_coalg)
        s.coalgebra = ComoduleCoalgebra{m, r.entries("comult", A, one, tensor(A, A), two),
                                        r.entries("counit", A, one, Space::ground(), none)};
    } else {
      r.parse_fail(r.required("preset"), r.required("preset").column, "expected path, unit-object or matrix");
    }
  } else if (b.kind == "qtg") {
    if (b.find("group")) {
      const Structure& g = r.ref("group");
      if (!g.group) throw ResolutionError(r.where(r.required("group")) + ": '" + g.name + "' is not a group");
      s.refs["L"] = g.name;
      s.refs["B"] = g.name;
      s.qtg = std::make_shared<const QTG>(group_qtg(*g.group, opt_));
    } else {
      const Structure& l = r.ref("L");
      const Structure& bs = r.ref("B");
      const Structure& act = r.ref("action");
      s.refs["L"] = l.name;
      s.refs["B"] = bs.name;
      s.refs["action"] = act.name;
      if (!l.hopf) throw ResolutionError(r.where(r.required("L")) + ": '" + l.name + "' is not a Hopf algebra");
      auto sep = separable_of(bs);
      if (!sep) throw ResolutionError(r.where(r.required("B")) + ": '" + bs.name + "' is not a separable algebra");
      if (!act.action) throw ResolutionError(r.where(r.required("action")) + ": '" + act.name + "' is not an action");
      s.qtg = std::make_shared<const QTG>(build_qtg(*l.hopf, *sep, *act.action, opt_, b.name));
    }
    s.hopf = s.qtg->l;
    s.antipode = s.qtg->hopf.antipode;
  }
  return s;
}

Structures parse_spec_text(std::string_view text, const std::string& source, const CheckOptions& opt) {
  return Structures(parse_text(text, source), opt);
}

Structures parse_spec(const std::vector<std::string>& paths, const CheckOptions& opt) {
  std::vector<Block> all;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw ParseError(p, 0, 0, "cannot read file");
    std::stringstream ss;
    ss << in.rdbuf();
    auto blocks = parse_text(ss.str(), p);
    for (auto& b : blocks) all.push_back(std::move(b));
  }
  return Structures(std::move(all), opt);
}

}  // namespace wbalg::cli
