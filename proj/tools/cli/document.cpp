#include "document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mcdeform/errors.hpp"

namespace mcdeform::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, column = 1;
  const std::size_t stop = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "scalars are written as strings \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(path, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Combination as_combination(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object label -> \"p/q\"");
  Combination out;
  for (const auto& [label, q] : j.items()) out.emplace_back(label, as_rational(q, path + "/" + label));
  return out;
}

std::vector<ProductEntry> as_products(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<ProductEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!j[i].is_object()) fail(p, "expected an object");
    out.push_back({as_string(member(j[i], "left", p), p + "/left"), as_string(member(j[i], "right", p), p + "/right"),
                   as_combination(member(j[i], "value", p), p + "/value")});
  }
  return out;
}

void parse_generators(const json& root, Document& doc) {
  const json& gens = member(root, "generators", "");
  if (!gens.is_array()) fail("/generators", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "/generators/" + std::to_string(i);
    if (!gens[i].is_object()) fail(p, "expected an object");
    Generator g{as_string(member(gens[i], "name", p), p + "/name"), as_int(member(gens[i], "degree", p), p + "/degree")};
    if (!seen.insert(g.label).second) fail(p, "duplicate generator \"" + g.label + "\"");
    doc.generators.push_back(std::move(g));
  }
  if (auto it = root.find("differential"); it != root.end()) {
    if (!it->is_object()) fail("/differential", "expected an object");
    for (const auto& [label, value] : it->items())
      doc.differential.emplace_back(label, as_combination(value, "/differential/" + label));
  }
}

void parse_terms(const json& root, Document& doc) {
  const json& terms = member(root, "terms", "");
  if (!terms.is_array()) fail("/terms", "expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "/terms/" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_object()) fail(p, "expected an object");
    ElementTerm term{as_rational(member(t, "coefficient", p), p + "/coefficient"),
                     as_string(member(t, "base", p), p + "/base"), as_string(member(t, "fiber", p), p + "/fiber"),
                     FormMonomial{}};
    if (doc.kind == DocumentKind::Simplex) {
      term.form.exponents.assign(static_cast<std::size_t>(doc.simplex_dim), 0);
      if (auto e = t.find("t"); e != t.end()) {
        if (!e->is_array() || e->size() != term.form.exponents.size())
          fail(p + "/t", "expected " + std::to_string(doc.simplex_dim) + " exponents");
        for (std::size_t k = 0; k < e->size(); ++k) {
          const int x = as_int((*e)[k], p + "/t");
          if (x < 0) fail(p + "/t", "negative exponent");
          term.form.exponents[k] = x;
        }
      }
      if (auto e = t.find("dt"); e != t.end()) {
        if (!e->is_array()) fail(p + "/dt", "expected an array");
        int last = 0;
        for (const auto& v : *e) {
          const int j = as_int(v, p + "/dt");
          if (j <= last || j > doc.simplex_dim) fail(p + "/dt", "indices must increase within 1..n");
          term.form.dt_mask |= 1u << (j - 1);
          last = j;
        }
      }
    } else if (t.contains("t") || t.contains("dt")) {
      fail(p, "form data is only allowed in simplex documents");
    }
    doc.terms.push_back(std::move(term));
  }
}

std::map<std::string, std::size_t> label_index(const std::vector<Generator>& gens) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) out[gens[i].label] = i;
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& idx, const std::string& label, const std::string& where) {
  auto it = idx.find(label);
  if (it == idx.end()) fail(where, "undeclared label \"" + label + "\"");
  return it->second;
}

SparseVector resolve(const std::map<std::string, std::size_t>& idx, const Combination& c, const std::string& where) {
  SparseVector v;
  for (const auto& [label, q] : c) v.add(lookup(idx, label, where), q);
  return v;
}

std::vector<SparseVector> resolve_differential(const Document& doc, const std::map<std::string, std::size_t>& idx) {
  std::vector<SparseVector> d(doc.generators.size());
  for (const auto& [label, c] : doc.differential)
    d[lookup(idx, label, "/differential")] = resolve(idx, c, "/differential/" + label);
  return d;
}

void expect_kind(const Document& doc, DocumentKind k) {
  if (doc.kind != k) throw ParseError("expected a " + kind_name(k) + " document, found " + kind_name(doc.kind));
}

}  // namespace

std::string kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::Dgla: return "dgla";
    case DocumentKind::Complex: return "complex";
    case DocumentKind::Artinian: return "artinian";
    case DocumentKind::Element: return "element";
    case DocumentKind::Simplex: return "simplex";
  }
  return "unknown";
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column), line,
                     column);
  }
  if (!root.is_object()) fail("", "top level must be an object");
  if (auto s = root.find("schema"); s != root.end() && as_string(*s, "/schema") != kSchema)
    fail("/schema", "unsupported schema \"" + s->get<std::string>() + "\"");

  static const std::map<std::string, DocumentKind> kinds = {{"dgla", DocumentKind::Dgla},
                                                            {"complex", DocumentKind::Complex},
                                                            {"artinian", DocumentKind::Artinian},
                                                            {"element", DocumentKind::Element},
                                                            {"simplex", DocumentKind::Simplex}};
  const std::string kind = as_string(member(root, "kind", ""), "/kind");
  auto k = kinds.find(kind);
  if (k == kinds.end()) fail("/kind", "unknown document kind \"" + kind + "\"");

  Document doc;
  doc.kind = k->second;
  switch (doc.kind) {
    case DocumentKind::Element:
      parse_terms(root, doc);
      return doc;
    case DocumentKind::Simplex:
      doc.simplex_dim = as_int(member(root, "n", ""), "/n");
      if (doc.simplex_dim < 0 || doc.simplex_dim > 16) fail("/n", "simplex dimension out of range");
      if (auto b = root.find("bound"); b != root.end()) doc.bound = as_int(*b, "/bound");
      parse_terms(root, doc);
      return doc;
    default:
      break;
  }

  if (as_string(member(root, "field", ""), "/field") != "Q") fail("/field", "only the field \"Q\" is supported");
  parse_generators(root, doc);
  if (doc.kind == DocumentKind::Dgla) {
    if (auto b = root.find("bracket"); b != root.end()) doc.brackets = as_products(*b, "/bracket");
  } else if (doc.kind == DocumentKind::Artinian) {
    const json& alg = member(root, "algebra", "");
    if (!alg.is_object()) fail("/algebra", "expected an object");
    doc.unit = as_string(member(alg, "unit", "/algebra"), "/algebra/unit");
    const json& m = member(alg, "m_basis", "/algebra");
    if (!m.is_array()) fail("/algebra/m_basis", "expected an array");
    for (const auto& x : m) doc.m_basis.push_back(as_string(x, "/algebra/m_basis"));
    if (auto p = alg.find("products"); p != alg.end()) doc.products = as_products(*p, "/algebra/products");
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_document(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

DGLA to_dgla(const Document& doc) {
  expect_kind(doc, DocumentKind::Dgla);
  const auto idx = label_index(doc.generators);
  BracketDeclarations brackets;
  for (const auto& b : doc.brackets) {
    const std::pair key{lookup(idx, b.left, "/bracket"), lookup(idx, b.right, "/bracket")};
    if (brackets.count(key)) fail("/bracket", "bracket [" + b.left + ", " + b.right + "] declared twice");
    brackets[key] = resolve(idx, b.value, "/bracket");
  }
  return DGLA(doc.generators, resolve_differential(doc, idx), std::move(brackets));
}

ChainComplex to_complex(const Document& doc) {
  expect_kind(doc, DocumentKind::Complex);
  const auto idx = label_index(doc.generators);
  std::map<int, std::vector<std::string>> components;
  std::vector<std::size_t> position(doc.generators.size());
  for (std::size_t i = 0; i < doc.generators.size(); ++i) {
    auto& labels = components[doc.generators[i].degree];
    position[i] = labels.size();
    labels.push_back(doc.generators[i].label);
  }
  GradedVectorSpace space(components);
  std::map<int, QMatrix> blocks;
  const auto d = resolve_differential(doc, idx);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int k = doc.generators[i].degree;
    for (const auto& [j, q] : d[i]) {
      if (doc.generators[j].degree != k + 1)
        throw InvalidDocument(ValidationReport::fail("degree", {doc.generators[i].label, doc.generators[j].label},
                                                     "d(" + doc.generators[i].label + ") has a term in degree " +
                                                         std::to_string(doc.generators[j].degree)));
      auto [it, fresh] = blocks.try_emplace(k, space.dim(k + 1), space.dim(k));
      it->second(position[j], position[i]) = q;
    }
  }
  return ChainComplex(space, blocks);
}

ArtinianLocalDGA to_artinian(const Document& doc) {
  expect_kind(doc, DocumentKind::Artinian);
  const auto idx = label_index(doc.generators);
  CommutativeDGA alg;
  alg.basis = doc.generators;
  const std::size_t n = alg.dim();
  alg.product.assign(n * n, SparseVector{});
  alg.differential = resolve_differential(doc, idx);
  const std::size_t unit = lookup(idx, doc.unit, "/algebra/unit");

  // Declared products win; undeclared reversed pairs follow graded
  // commutativity and products with the unit default to the identity.
  std::set<std::pair<std::size_t, std::size_t>> declared;
  for (const auto& p : doc.products) {
    const std::pair key{lookup(idx, p.left, "/algebra/products"), lookup(idx, p.right, "/algebra/products")};
    if (!declared.insert(key).second) fail("/algebra/products", "product " + p.left + "*" + p.right + " declared twice");
    alg.product[key.first * n + key.second] = resolve(idx, p.value, "/algebra/products");
  }
  for (const auto& [a, b] : declared) {
    if (declared.count({b, a})) continue;
    alg.product[b * n + a] = alg.product[a * n + b].scaled(Rational(koszul_sign(alg.basis[a].degree, alg.basis[b].degree)));
    declared.insert({b, a});
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!declared.count({unit, a})) alg.product[unit * n + a] = SparseVector{{a, Rational(1)}};
    if (!declared.count({a, unit})) alg.product[a * n + unit] = SparseVector{{a, Rational(1)}};
  }

  std::vector<std::size_t> m;
  std::set<std::size_t> in_m;
  for (const auto& label : doc.m_basis) {
    const std::size_t i = lookup(idx, label, "/algebra/m_basis");
    if (!in_m.insert(i).second) fail("/algebra/m_basis", "duplicate label \"" + label + "\"");
    m.push_back(i);
  }
  return ArtinianLocalDGA(std::move(alg), unit, std::move(m));
}

Vec to_host_element(const Document& doc, const ArtinHost& h) {
  expect_kind(doc, DocumentKind::Element);
  Vec v = h.host().zero();
  for (std::size_t i = 0; i < doc.terms.size(); ++i) {
    const auto& t = doc.terms[i];
    const std::string where = "/terms/" + std::to_string(i);
    auto r = h.base().index_of(t.base);
    auto x = h.fiber().index_of(t.fiber);
    if (!r) fail(where, "undeclared base label \"" + t.base + "\"");
    if (!x) fail(where, "undeclared fiber label \"" + t.fiber + "\"");
    auto mp = h.base().m_position(*r);
    if (!mp) fail(where, "\"" + t.base + "\" is not in the maximal ideal");
    v[h.index(*mp, *x)] += t.coefficient;
  }
  return v;
}

FormElement to_form_element(const Document& doc, const ArtinHost& h) {
  expect_kind(doc, DocumentKind::Simplex);
  FormElement z(doc.simplex_dim, h.host().dim(), doc.bound);
  for (std::size_t i = 0; i < doc.terms.size(); ++i) {
    const auto& t = doc.terms[i];
    const std::string where = "/terms/" + std::to_string(i);
    auto r = h.base().index_of(t.base);
    auto x = h.fiber().index_of(t.fiber);
    if (!r) fail(where, "undeclared base label \"" + t.base + "\"");
    if (!x) fail(where, "undeclared fiber label \"" + t.fiber + "\"");
    auto mp = h.base().m_position(*r);
    if (!mp) fail(where, "\"" + t.base + "\" is not in the maximal ideal");
    z.component(h.index(*mp, *x)).add_term(t.form, t.coefficient);
  }
  return z;
}

}  // namespace mcdeform::cli
