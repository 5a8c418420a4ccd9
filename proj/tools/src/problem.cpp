#include "problem.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include "koszulcat/errors.hpp"

namespace koszulcat::cli {

namespace {

[[noreturn]] void fail(const YAML::Node& n, const std::string& msg) {
  const YAML::Mark m = n.IsDefined() ? n.Mark() : YAML::Mark::null_mark();
  if (m.line >= 0) throw ParseError(msg, static_cast<std::size_t>(m.line) + 1, static_cast<std::size_t>(m.column) + 1);
  throw ParseError(msg);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string scalar(const YAML::Node& n, const std::string& what) {
  if (!n || !n.IsScalar()) fail(n, what + " must be a single value");
  return n.Scalar();
}

int integer(const YAML::Node& n, const std::string& what) {
  const std::string s = scalar(n, what);
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(n, what + " must be an integer, got '" + s + "'");
}

std::vector<std::string> string_list(const YAML::Node& n, const std::string& what) {
  std::vector<std::string> out;
  if (!n) return out;
  if (n.IsScalar()) return {n.Scalar()};
  if (!n.IsSequence()) fail(n, what + " must be a list");
  for (const auto& e : n) out.push_back(scalar(e, what));
  return out;
}

void check_keys(const YAML::Node& n, const std::set<std::string>& allowed, const std::string& what) {
  if (!n.IsMap()) fail(n, what + " must be a mapping");
  for (const auto& kv : n) {
    const std::string k = kv.first.Scalar();
    if (!allowed.count(k)) fail(kv.first, "unknown key '" + k + "' in " + what);
  }
}

/// "a,b" -> {"a", "b"}.
std::pair<std::string, std::string> split_pair(const YAML::Node& key, const std::string& text,
                                               const std::vector<std::string>& seps) {
  for (const auto& sep : seps) {
    const auto pos = text.find(sep);
    if (pos != std::string::npos) return {trim(text.substr(0, pos)), trim(text.substr(pos + sep.size()))};
  }
  fail(key, "expected two names separated by '" + seps.front() + "' in '" + text + "'");
}

struct Factor {
  std::string name;
  int exp = 1;
};
struct Term {
  mpq_class coef = 1;
  std::vector<Factor> factors;
};

/// Sums of products: terms split at + and -, factors at blanks and '*'.
std::vector<Term> parse_terms(const std::string& text, const std::function<bool(const std::string&)>& is_name) {
  static const std::regex number(R"(^[0-9]+(/[0-9]+)?$)");
  std::vector<std::pair<int, std::string>> pieces;
  int sign = 1;
  std::string cur;
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      if (!trim(cur).empty()) {
        pieces.push_back({sign, cur});
        sign = 1;
        cur.clear();
      }
      if (ch == '-') sign = -sign;
      continue;
    }
    cur += ch;
  }
  if (trim(cur).empty()) throw ParseError("incomplete expression '" + text + "'");
  pieces.push_back({sign, cur});

  std::vector<Term> out;
  for (const auto& [s, body] : pieces) {
    Term t;
    t.coef = s;
    std::string tok;
    std::vector<std::string> toks;
    for (char ch : body + " ") {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
        if (!tok.empty()) toks.push_back(tok);
        tok.clear();
      } else {
        tok += ch;
      }
    }
    for (const auto& k : toks) {
      if (is_name(k)) {
        t.factors.push_back({k, 1});
        continue;
      }
      const auto caret = k.find('^');
      if (caret != std::string::npos && is_name(k.substr(0, caret))) {
        const std::string e = k.substr(caret + 1);
        if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos) {
          throw ParseError("bad exponent in '" + k + "'");
        }
        t.factors.push_back({k.substr(0, caret), std::stoi(e)});
        continue;
      }
      if (std::regex_match(k, number)) {
        t.coef *= mpq_class(k);
        t.coef.canonicalize();
        continue;
      }
      throw ParseError("unknown name '" + k + "' in '" + text + "'");
    }
    out.push_back(std::move(t));
  }
  return out;
}

/// Basis names of a representation, unique across objects.
class NameIndex {
 public:
  NameIndex() = default;
  NameIndex(const std::vector<std::vector<std::string>>& names, const std::string& what) {
    for (std::size_t x = 0; x < names.size(); ++x) {
      for (std::size_t i = 0; i < names[x].size(); ++i) {
        if (!at_.emplace(names[x][i], std::make_pair(x, i)).second) {
          throw ParseError("basis name '" + names[x][i] + "' is used twice in " + what);
        }
      }
    }
  }
  bool has(const std::string& n) const { return at_.count(n) > 0; }
  std::pair<std::size_t, std::size_t> find(const YAML::Node& where, const std::string& n) const {
    const auto it = at_.find(n);
    if (it == at_.end()) fail(where, "unknown basis element '" + n + "'");
    return it->second;
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::size_t>> at_;
};

/// A linear combination of basis vectors of one space, as a column.
Matrix combination(const Field& f, const NameIndex& idx, std::size_t object, std::size_t dim, const YAML::Node& node,
                   const std::string& text, const std::string& where) {
  MatrixBuilder b(f, dim, 1);
  std::vector<Term> terms;
  try {
    terms = parse_terms(text, [&](const std::string& n) { return idx.has(n); });
  } catch (const ParseError& e) {
    fail(node, e.what());
  }
  for (const auto& t : terms) {
    const mpq_class c = f.from_rational(t.coef);
    if (t.factors.empty()) {
      if (sgn(c) != 0) fail(node, "a scalar needs a basis element in '" + text + "'");
      continue;
    }
    if (t.factors.size() != 1 || t.factors[0].exp != 1) fail(node, "expected a linear combination in '" + text + "'");
    const auto [x, i] = idx.find(node, t.factors[0].name);
    if (x != object) fail(node, "'" + t.factors[0].name + "' does not lie in " + where);
    b.add(i, 0, c);
  }
  return b.build();
}

struct Morphism {
  std::size_t from, to, k;
};

CategoryPtr parse_category(const YAML::Node& n, const Field& f) {
  check_keys(n, {"objects", "unit", "tensor", "hom", "identity", "compose", "tensor_morphisms", "symmetry"},
             "category");
  auto c = std::make_shared<CategoryPresentation>();
  c->backend = Backend::FiniteStrict;
  c->field = f;
  c->objects = string_list(n["objects"], "objects");
  if (c->objects.empty()) fail(n, "a category needs objects");
  const std::size_t no = c->objects.size();
  auto object = [&](const YAML::Node& where, const std::string& name) {
    for (std::size_t i = 0; i < no; ++i) {
      if (c->objects[i] == name) return i;
    }
    fail(where, "unknown object '" + name + "'");
  };
  c->unit = object(n["unit"], scalar(n["unit"], "unit"));

  c->diamond_obj.assign(no * no, no);
  if (!n["tensor"] || !n["tensor"].IsMap()) fail(n, "category needs a 'tensor' table on objects");
  for (const auto& kv : n["tensor"]) {
    const auto [a, b] = split_pair(kv.first, kv.first.Scalar(), {","});
    c->diamond_obj[c->pair(object(kv.first, a), object(kv.first, b))] = object(kv.second, scalar(kv.second, "object"));
  }
  for (std::size_t i = 0; i < no * no; ++i) {
    if (c->diamond_obj[i] == no) {
      fail(n["tensor"], "tensor of " + c->objects[i / no] + " and " + c->objects[i % no] + " is missing");
    }
  }

  c->hom_basis.assign(no * no, {});
  std::map<std::string, Morphism> mor;
  if (n["hom"]) {
    if (!n["hom"].IsMap()) fail(n["hom"], "'hom' must map \"x,y\" to basis lists");
    for (const auto& kv : n["hom"]) {
      const auto [a, b] = split_pair(kv.first, kv.first.Scalar(), {","});
      const std::size_t x = object(kv.first, a), y = object(kv.first, b);
      c->hom_basis[c->pair(x, y)] = string_list(kv.second, "hom basis");
      for (std::size_t k = 0; k < c->hom_basis[c->pair(x, y)].size(); ++k) {
        const std::string& name = c->hom_basis[c->pair(x, y)][k];
        if (!mor.emplace(name, Morphism{x, y, k}).second) fail(kv.second, "morphism name '" + name + "' is used twice");
      }
    }
  }
  NameIndex by_hom;  // morphisms indexed by (pair, k) through names per hom space
  {
    std::vector<std::vector<std::string>> flat(no * no);
    for (std::size_t p = 0; p < no * no; ++p) flat[p] = c->hom_basis[p];
    by_hom = NameIndex(flat, "the category");
  }
  auto find_mor = [&](const YAML::Node& where, const std::string& name) {
    const auto it = mor.find(name);
    if (it == mor.end()) fail(where, "unknown morphism '" + name + "'");
    return it->second;
  };
  auto hom_combination = [&](const YAML::Node& where, std::size_t x, std::size_t y, const std::string& text) {
    return combination(f, by_hom, c->pair(x, y), c->hom_dim(x, y), where, text,
                       "hom(" + c->objects[x] + ", " + c->objects[y] + ")");
  };

  std::vector<std::optional<std::size_t>> id_index(no);
  c->identity.resize(no);
  for (std::size_t x = 0; x < no; ++x) {
    const YAML::Node in = n["identity"] ? n["identity"][c->objects[x]] : YAML::Node();
    if (!in) fail(n, "identity of " + c->objects[x] + " is missing");
    const Morphism m = find_mor(in, scalar(in, "identity"));
    if (m.from != x || m.to != x) fail(in, "identity of " + c->objects[x] + " must be an endomorphism of it");
    id_index[x] = m.k;
    c->identity[x] = c->basis_morphism(x, x, m.k);
  }
  auto is_id = [&](const Morphism& m) { return m.from == m.to && id_index[m.from] == m.k; };

  // g∘f rules; identities compose trivially unless overridden.
  std::map<std::pair<std::string, std::string>, std::pair<YAML::Node, std::string>> comp_rules;
  if (n["compose"]) {
    for (const auto& kv : n["compose"]) {
      const auto [g, fn] = split_pair(kv.first, kv.first.Scalar(), {"∘", " . "});
      const Morphism mg = find_mor(kv.first, g), mf = find_mor(kv.first, fn);
      if (mf.to != mg.from) fail(kv.first, "'" + g + "' and '" + fn + "' are not composable");
      comp_rules[{g, fn}] = {kv.second, scalar(kv.second, "composite")};
    }
  }
  c->composition.resize(no * no * no);
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t y = 0; y < no; ++y) {
      for (std::size_t z = 0; z < no; ++z) {
        const std::size_t dxy = c->hom_dim(x, y), dyz = c->hom_dim(y, z), dxz = c->hom_dim(x, z);
        MatrixBuilder b(f, dxz, dyz * dxy);
        for (std::size_t gi = 0; gi < dyz; ++gi) {
          for (std::size_t fi = 0; fi < dxy; ++fi) {
            const std::string& gn = c->hom_basis[c->pair(y, z)][gi];
            const std::string& fn = c->hom_basis[c->pair(x, y)][fi];
            const std::size_t col = gi * dxy + fi;
            const auto rule = comp_rules.find({gn, fn});
            if (rule != comp_rules.end()) {
              b.add_block(0, col, hom_combination(rule->second.first, x, z, rule->second.second));
            } else if (is_id({x, y, fi})) {
              b.add(gi, col, 1);
            } else if (is_id({y, z, gi})) {
              b.add(fi, col, 1);
            }
          }
        }
        c->composition[(x * no + y) * no + z] = b.build();
      }
    }
  }

  std::map<std::pair<std::string, std::string>, std::pair<YAML::Node, std::string>> tensor_rules;
  if (n["tensor_morphisms"]) {
    for (const auto& kv : n["tensor_morphisms"]) {
      const auto [a, b] = split_pair(kv.first, kv.first.Scalar(), {"◇", " # "});
      find_mor(kv.first, a);
      find_mor(kv.first, b);
      tensor_rules[{a, b}] = {kv.second, scalar(kv.second, "tensor of morphisms")};
    }
  }
  c->diamond_mor.resize(no * no * no * no);
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t y = 0; y < no; ++y) {
      for (std::size_t x2 = 0; x2 < no; ++x2) {
        for (std::size_t y2 = 0; y2 < no; ++y2) {
          const std::size_t src = c->diamond(x, y), dst = c->diamond(x2, y2);
          const std::size_t d1 = c->hom_dim(x, x2), d2 = c->hom_dim(y, y2);
          MatrixBuilder b(f, c->hom_dim(src, dst), d1 * d2);
          for (std::size_t i = 0; i < d1; ++i) {
            for (std::size_t j = 0; j < d2; ++j) {
              const std::string& an = c->hom_basis[c->pair(x, x2)][i];
              const std::string& bn = c->hom_basis[c->pair(y, y2)][j];
              const auto rule = tensor_rules.find({an, bn});
              if (rule != tensor_rules.end()) {
                b.add_block(0, i * d2 + j, hom_combination(rule->second.first, src, dst, rule->second.second));
              } else if (is_id({x, x2, i}) && is_id({y, y2, j})) {
                b.add(*id_index[src], i * d2 + j, 1);
              }
            }
          }
          c->diamond_mor[((x * no + y) * no + x2) * no + y2] = b.build();
        }
      }
    }
  }

  c->symmetry.resize(no * no);
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t y = 0; y < no; ++y) {
      const std::size_t xy = c->diamond(x, y), yx = c->diamond(y, x);
      const std::string key = c->objects[x] + "," + c->objects[y];
      const YAML::Node s = n["symmetry"] ? n["symmetry"][key] : YAML::Node();
      if (s) {
        c->symmetry[c->pair(x, y)] = hom_combination(s, xy, yx, scalar(s, "symmetry"));
      } else if (xy == yx) {
        c->symmetry[c->pair(x, y)] = c->identity[xy];
      } else {
        fail(n, "symmetry for " + key + " is missing");
      }
    }
  }
  c->check_shapes();
  return c;
}

/// Per-object lists from either a flat list (one object) or an object map.
template <class T, class Read>
std::vector<std::vector<T>> per_object(const CategoryPresentation& c, const YAML::Node& n, const std::string& what,
                                       Read read) {
  std::vector<std::vector<T>> out(c.num_objects());
  if (!n) return out;
  if (n.IsSequence()) {
    if (c.num_objects() != 1) fail(n, what + " must map objects to lists");
    for (const auto& e : n) out[0].push_back(read(e));
    return out;
  }
  if (!n.IsMap()) fail(n, what + " must be a list or a mapping of objects to lists");
  for (const auto& kv : n) {
    std::size_t x = c.num_objects();
    for (std::size_t i = 0; i < c.num_objects(); ++i) {
      if (c.objects[i] == kv.first.Scalar()) x = i;
    }
    if (x == c.num_objects()) fail(kv.first, "unknown object '" + kv.first.Scalar() + "'");
    if (!kv.second.IsSequence()) fail(kv.second, what + " must be a list");
    for (const auto& e : kv.second) out[x].push_back(read(e));
  }
  return out;
}

Representation parse_carrier(const CategoryPtr& c, const YAML::Node& n, const std::string& what, NameIndex& idx) {
  const Field& f = c->field;
  Representation r;
  r.cat = c;
  r.names = per_object<std::string>(*c, n["basis"], "basis", [](const YAML::Node& e) { return scalar(e, "basis name"); });
  for (const auto& names : r.names) {
    for (const auto& nm : names) {
      if (nm.find_first_of(" \t*+-^") != std::string::npos) {
        fail(n["basis"], "basis name '" + nm + "' may not contain blanks or any of * + - ^");
      }
    }
  }
  idx = NameIndex(r.names, what);
  const std::size_t no = c->num_objects();
  r.dims.resize(no);
  for (std::size_t x = 0; x < no; ++x) r.dims[x] = r.names[x].size();
  r.degrees = per_object<int>(*c, n["degrees"], "degrees", [](const YAML::Node& e) { return integer(e, "degree"); });
  for (std::size_t x = 0; x < no; ++x) {
    if (r.degrees[x].empty()) r.degrees[x].assign(r.dims[x], 0);
    if (r.degrees[x].size() != r.dims[x]) fail(n["degrees"], "one degree per basis element expected");
  }
  r.cap = n["cap"] ? integer(n["cap"], "cap") : kUncapped;

  // Actions of basis morphisms: identities act trivially, others as listed (zero otherwise).
  std::map<std::string, YAML::Node> rules;
  if (n["actions"]) {
    if (!n["actions"].IsMap()) fail(n["actions"], "'actions' must map morphism names to rules");
    for (const auto& kv : n["actions"]) rules[kv.first.Scalar()] = kv.second;
  }
  std::set<std::string> used;
  r.actions.resize(no * no);
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t y = 0; y < no; ++y) {
      for (std::size_t k = 0; k < c->hom_dim(x, y); ++k) {
        const std::string& mn = c->hom_basis[c->pair(x, y)][k];
        const auto it = rules.find(mn);
        if (it == rules.end()) {
          const bool identity = x == y && c->identity[x] == c->basis_morphism(x, x, k);
          r.actions[c->pair(x, y)].push_back(identity ? Matrix::identity(f, r.dims[x]) : Matrix(f, r.dims[y], r.dims[x]));
          continue;
        }
        used.insert(mn);
        MatrixBuilder b(f, r.dims[y], r.dims[x]);
        if (!it->second.IsMap()) fail(it->second, "action of " + mn + " must map basis names to combinations");
        for (const auto& kv : it->second) {
          const auto [ox, i] = idx.find(kv.first, kv.first.Scalar());
          if (ox != x) fail(kv.first, "'" + kv.first.Scalar() + "' is not in the source of " + mn);
          b.add_block(0, i, combination(f, idx, y, r.dims[y], kv.second, scalar(kv.second, "image"), c->objects[y]));
        }
        r.actions[c->pair(x, y)].push_back(b.build());
      }
    }
  }
  for (const auto& [name, node] : rules) {
    if (!used.count(name)) fail(node, "unknown morphism '" + name + "'");
  }
  return r;
}

/// Bilinear rules "a*b": combination, as matrices T(x◇y) x (F(x)·G(y)).
std::vector<Matrix> parse_bilinear(const CategoryPresentation& c, const YAML::Node& n, const Representation& left,
                                   const NameIndex& li, const Representation& right, const NameIndex& ri,
                                   const Representation& target, const NameIndex& ti, const std::string& what) {
  const std::size_t no = c.num_objects();
  std::vector<MatrixBuilder> builders;
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t y = 0; y < no; ++y) {
      builders.emplace_back(c.field, target.dims[c.diamond(x, y)], left.dims[x] * right.dims[y]);
    }
  }
  if (n) {
    if (!n.IsMap()) fail(n, what + " must map \"a*b\" to combinations");
    for (const auto& kv : n) {
      const auto [a, b] = split_pair(kv.first, kv.first.Scalar(), {"*"});
      const auto [x, i] = li.find(kv.first, a);
      const auto [y, j] = ri.find(kv.first, b);
      const std::size_t xy = c.diamond(x, y);
      builders[c.pair(x, y)].add_block(
          0, i * right.dims[y] + j,
          combination(c.field, ti, xy, target.dims[xy], kv.second, scalar(kv.second, what), c.objects[xy]));
    }
  }
  std::vector<Matrix> out;
  for (auto& b : builders) out.push_back(b.build());
  return out;
}

MonoidPtr parse_monoid(const Problem& p, const std::string& name, const YAML::Node& n, const LoadOptions&) {
  const CategoryPtr& c = p.category;
  if (n["identity"]) {
    check_keys(n, {"identity"}, "monoid " + name);
    auto m = identity_monoid(c);
    m.name = name;
    return std::make_shared<const MonoidData>(std::move(m));
  }
  check_keys(n, {"basis", "degrees", "cap", "actions", "unit", "product"}, "monoid " + name);
  NameIndex idx;
  MonoidData m;
  m.name = name;
  m.carrier = parse_carrier(c, n, "monoid " + name, idx);
  m.truncated = m.carrier.cap >= 0;
  m.pairing = parse_bilinear(*c, n["product"], m.carrier, idx, m.carrier, idx, m.carrier, idx, "product");
  if (!n["unit"]) fail(n, "monoid " + name + " needs a unit");
  m.unit = combination(c->field, idx, c->unit, m.carrier.dims[c->unit], n["unit"], scalar(n["unit"], "unit"),
                       c->objects[c->unit]);
  return std::make_shared<const MonoidData>(std::move(m));
}

}  // namespace

const MonoidPtr& Problem::monoid(const std::string& name) const {
  const auto it = monoids.find(name);
  if (it == monoids.end()) throw ParseError("no monoid named '" + name + "'");
  return it->second;
}

const ModuleSpec& Problem::module(const std::string& name) const {
  for (const auto& m : modules) {
    if (m.name == name) return m;
  }
  throw ParseError("no module named '" + name + "'");
}

Problem load_problem(const std::string& text, const std::string& path, const LoadOptions& opts) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1, static_cast<std::size_t>(e.mark.column) + 1);
  }
  if (!root.IsMap()) throw ParseError("a problem file is a mapping with keys field, backend, monoids, ...");
  check_keys(root, {"field", "backend", "category", "monoids", "modules", "task"}, "the problem file");

  Problem p;
  p.path = path;
  p.text = text;
  try {
    p.field = opts.field ? *opts.field : root["field"] ? Field::parse(scalar(root["field"], "field")) : Field::rationals();
  } catch (const RangeError& e) {
    fail(root["field"], e.what());
  }
  const std::string backend = root["backend"] ? scalar(root["backend"], "backend") : "trivial";
  if (backend == "trivial") {
    if (root["category"]) fail(root["category"], "the trivial backend takes no category");
    p.category = CategoryPresentation::trivial(p.field);
  } else if (backend == "finite") {
    if (!root["category"]) fail(root, "the finite backend needs a category");
    p.category = parse_category(root["category"], p.field);
  } else {
    fail(root["backend"], "backend must be 'trivial' or 'finite'");
  }

  const YAML::Node task = root["task"];
  if (task) {
    check_keys(task, {"command", "monoid", "alpha", "max-degree", "n", "p", "modules", "module", "check-resolution"},
               "task");
    if (task["command"]) p.task.command = scalar(task["command"], "command");
    if (task["monoid"]) p.task.monoid = scalar(task["monoid"], "monoid");
    p.task.alpha = string_list(task["alpha"], "alpha");
    if (task["max-degree"]) p.task.max_degree = integer(task["max-degree"], "max-degree");
    if (task["n"]) {
      const int n = integer(task["n"], "n");
      if (n < 0) fail(task["n"], "n must be nonnegative");
      p.task.n = static_cast<std::size_t>(n);
    }
    if (task["p"]) p.task.p = integer(task["p"], "p");
    p.task.modules = string_list(task["modules"], "modules");
    for (const auto& m : string_list(task["module"], "module")) p.task.modules.push_back(m);
    if (task["check-resolution"]) p.task.check_resolution = task["check-resolution"].as<bool>();
  }
  const std::optional<int> default_cap = opts.max_degree ? opts.max_degree : p.task.max_degree;

  if (root["monoids"]) {
    if (!root["monoids"].IsMap()) fail(root["monoids"], "'monoids' must map names to definitions");
    for (const auto& kv : root["monoids"]) {
      const std::string name = kv.first.Scalar();
      if (p.monoids.count(name)) fail(kv.first, "monoid '" + name + "' is defined twice");
      const YAML::Node& n = kv.second;
      if (n["polynomial"]) {
        check_keys(n, {"polynomial"}, "monoid " + name);
        const YAML::Node pn = n["polynomial"];
        check_keys(pn, {"over", "variables", "cap"}, "polynomial");
        const std::string over = scalar(pn["over"], "over");
        if (!p.monoids.count(over)) fail(pn["over"], "monoid '" + over + "' must be defined before " + name);
        const auto vars = string_list(pn["variables"], "variables");
        if (vars.empty()) fail(pn, "a polynomial monoid needs variables");
        std::optional<int> cap = pn["cap"] ? std::optional<int>(integer(pn["cap"], "cap")) : default_cap;
        if (!cap) fail(pn, "polynomial monoid " + name + " needs a cap or --max-degree");
        if (*cap < 1) fail(pn, "the cap must be at least 1");
        PolynomialMonoid g = polynomial_monoid(p.monoids.at(over), vars.size(), *cap, vars);
        p.monoids[name] = g.monoid;
        p.polynomials.emplace(name, std::move(g));
      } else {
        p.monoids[name] = parse_monoid(p, name, n, opts);
      }
      p.monoid_order.push_back(name);
    }
  }
  if (root["modules"]) {
    if (!root["modules"].IsMap()) fail(root["modules"], "'modules' must map names to definitions");
    for (const auto& kv : root["modules"]) {
      const std::string name = kv.first.Scalar();
      const YAML::Node& n = kv.second;
      check_keys(n, {"over", "side", "regular", "quotient", "basis", "degrees", "cap", "actions", "left_action",
                     "right_action"},
                 "module " + name);
      const std::string over = scalar(n["over"], "over");
      if (over != "A_n" && !p.monoids.count(over)) fail(n["over"], "unknown monoid '" + over + "'");
      p.modules.push_back({name, over, n});
    }
  }
  return p;
}

Problem load_problem_file(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_problem(ss.str(), path, opts);
}

ElementRef parse_element(const MonoidData& a, const PolynomialMonoid* poly, const std::string& text) {
  const auto& c = a.cat();
  const std::size_t u = c.unit;
  const auto& names = a.carrier.names[u];
  std::map<std::string, ElementRef> known;
  for (std::size_t i = 0; i < names.size(); ++i) known.emplace(names[i], a.basis_element(u, i));
  if (poly) {
    for (std::size_t i = 0; i < poly->num_variables(); ++i) known.emplace(poly->variables[i], variable_element(*poly, i));
    const MonoidMorphism incl = base_inclusion(*poly);
    const auto& base = *poly->base;
    for (std::size_t i = 0; i < base.carrier.dims[u]; ++i) {
      known.emplace(base.carrier.basis_name(u, i), ElementRef{u, incl.maps[u] * base.basis_element(u, i).coords});
    }
  }
  const auto terms = parse_terms(text, [&](const std::string& n) { return known.count(n) > 0; });
  Matrix sum(a.field(), a.carrier.dims[u], 1);
  for (const auto& t : terms) {
    ElementRef e = a.unit_element();
    for (const auto& fac : t.factors) {
      for (int k = 0; k < fac.exp; ++k) e = a.multiply(e, known.at(fac.name));
    }
    sum = sum + e.coords.scaled(a.field().from_rational(t.coef));
  }
  return {u, sum};
}

ModuleData build_module(const Problem& p, const ModuleSpec& spec, const MonoidPtr& over, const PolynomialMonoid* poly) {
  const YAML::Node& n = spec.node;
  std::string side = n["side"] ? scalar(n["side"], "side") : "";
  if (!side.empty() && side != "left" && side != "right" && side != "bimodule") {
    fail(n["side"], "side must be left, right or bimodule");
  }
  ModuleData m;
  if (n["regular"] || n["quotient"]) {
    const ModuleData reg = regular_module(over);
    if (n["quotient"]) {
      std::vector<ElementRef> gens;
      for (const auto& e : string_list(n["quotient"], "quotient")) {
        try {
          gens.push_back(parse_element(*over, poly, e));
        } catch (const ParseError& err) {
          fail(n["quotient"], err.what());
        }
      }
      m = quotient_module(reg, generated_submodule(*over, gens)).module;
    } else {
      m = reg;
    }
    if (side.empty()) side = "bimodule";
  } else {
    NameIndex idx;
    m.carrier = parse_carrier(p.category, n, "module " + spec.name, idx);
    NameIndex ai(over->carrier.names, "monoid " + over->name);
    if (n["left_action"]) {
      m.left = over;
      m.left_action = parse_bilinear(*p.category, n["left_action"], over->carrier, ai, m.carrier, idx, m.carrier, idx,
                                     "left action");
    }
    if (n["right_action"]) {
      m.right = over;
      m.right_action = parse_bilinear(*p.category, n["right_action"], m.carrier, idx, over->carrier, ai, m.carrier, idx,
                                      "right action");
    }
    if (!m.left && !m.right) fail(n, "module " + spec.name + " needs left_action or right_action");
    if (side.empty()) side = m.left && m.right ? "bimodule" : m.left ? "left" : "right";
    if ((side != "right" && !m.left) || (side != "left" && !m.right)) {
      fail(n, "module " + spec.name + " lacks the action its side requires");
    }
  }
  if (side == "left") m = forget_right(m);
  if (side == "right") m = forget_left(m);
  m.name = spec.name;
  return m;
}

}  // namespace koszulcat::cli
