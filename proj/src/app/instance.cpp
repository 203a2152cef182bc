#include "ringlat/app/instance.hpp"

#include <json.hpp>

#include "ringlat/errors.hpp"

namespace ringlat::app {

using json = nlohmann::ordered_json;

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& member(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) throw ParseError(ptr.empty() ? "/" : ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ptr.empty() ? "/" : ptr, std::string("missing member \"") + key + "\"");
  return *it;
}

unsigned to_uint(const json& j, const std::string& ptr) {
  if (!j.is_number_unsigned()) throw ParseError(ptr, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > 1u << 20) throw ParseError(ptr, "integer out of range");
  return static_cast<unsigned>(v);
}

std::vector<unsigned> to_uint_list(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw ParseError(ptr, "expected an array of integers");
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_uint(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

void check_keys(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError(ptr + "/" + it.key(), "unknown member");
  }
}

AlgebraDoc parse_algebra(const json& j, const std::string& ptr) {
  if (!j.is_object() || j.size() != 1) {
    throw ParseError(ptr, "algebra must be an object with exactly one of poly_quotient, table, product");
  }
  AlgebraDoc doc;
  const std::string key = j.begin().key();
  const json& body = j.begin().value();
  const std::string sub = ptr + "/" + key;
  if (key == "poly_quotient") {
    doc.kind = AlgebraDoc::Kind::PolyQuotient;
    doc.poly = to_uint_list(body, sub);
  } else if (key == "table") {
    doc.kind = AlgebraDoc::Kind::Table;
    if (!body.is_object()) throw ParseError(sub, "expected an object");
    check_keys(body, sub, {"dim", "mul", "one"});
    doc.dim = to_uint(member(body, sub, "dim"), sub + "/dim");
    doc.mul = to_uint_list(member(body, sub, "mul"), sub + "/mul");
    doc.one = to_uint_list(member(body, sub, "one"), sub + "/one");
    if (doc.mul.size() != doc.dim * doc.dim * doc.dim) throw ParseError(sub + "/mul", "expected dim^3 entries");
    if (doc.one.size() != doc.dim) throw ParseError(sub + "/one", "expected dim entries");
  } else if (key == "product") {
    doc.kind = AlgebraDoc::Kind::Product;
    if (!body.is_array() || body.empty()) throw ParseError(sub, "expected a non-empty array of algebras");
    for (std::size_t i = 0; i < body.size(); ++i) doc.factors.push_back(parse_algebra(body[i], sub + "/" + std::to_string(i)));
  } else {
    throw ParseError(sub, "unknown algebra kind");
  }
  return doc;
}

json algebra_json(const AlgebraDoc& doc) {
  json j = json::object();
  switch (doc.kind) {
    case AlgebraDoc::Kind::PolyQuotient: j["poly_quotient"] = doc.poly; break;
    case AlgebraDoc::Kind::Table: {
      json t = json::object();
      t["dim"] = doc.dim;
      t["mul"] = doc.mul;
      t["one"] = doc.one;
      j["table"] = t;
      break;
    }
    case AlgebraDoc::Kind::Product: {
      json arr = json::array();
      for (const auto& f : doc.factors) arr.push_back(algebra_json(f));
      j["product"] = arr;
      break;
    }
  }
  return j;
}

void check_scalars(const std::vector<unsigned>& v, unsigned q, const char* what) {
  for (auto x : v) {
    if (x >= q) throw AlgebraError(std::string(what) + " has an entry outside 0..q-1");
  }
}

Algebra build_algebra(const FieldPtr& field, const AlgebraDoc& doc) {
  const unsigned q = field->order();
  switch (doc.kind) {
    case AlgebraDoc::Kind::PolyQuotient: {
      check_scalars(doc.poly, q, "poly_quotient");
      if (doc.poly.size() < 2) throw AlgebraError("poly_quotient needs degree at least 1");
      if (doc.poly.back() != 1) throw AlgebraError("poly_quotient polynomial must be monic");
      return make_poly_quotient(field, Poly(doc.poly.begin(), doc.poly.end()));
    }
    case AlgebraDoc::Kind::Table: {
      check_scalars(doc.mul, q, "mul");
      check_scalars(doc.one, q, "one");
      if (doc.dim == 0) throw AlgebraError("table algebra needs dim >= 1");
      return Algebra(field, doc.dim, std::vector<Scalar>(doc.mul.begin(), doc.mul.end()),
                     Vec(doc.one.begin(), doc.one.end()));
    }
    case AlgebraDoc::Kind::Product: {
      Algebra acc = build_algebra(field, doc.factors.front());
      for (std::size_t i = 1; i < doc.factors.size(); ++i) acc = make_product(acc, build_algebra(field, doc.factors[i]));
      return acc;
    }
  }
  throw AlgebraError("unknown algebra kind");
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(line_column(text, e.byte), msg);
  }
  if (!j.is_object()) throw ParseError("/", "instance must be a JSON object");
  check_keys(j, "", {"field", "algebra", "base_subring"});
  InstanceDocument doc;
  const json& f = member(j, "", "field");
  if (!f.is_object()) throw ParseError("/field", "expected an object");
  check_keys(f, "/field", {"p", "e", "modulus"});
  doc.field.p = to_uint(member(f, "/field", "p"), "/field/p");
  doc.field.e = to_uint(member(f, "/field", "e"), "/field/e");
  if (f.contains("modulus")) doc.field.modulus = to_uint_list(f["modulus"], "/field/modulus");
  doc.algebra = parse_algebra(member(j, "", "algebra"), "/algebra");
  if (j.contains("base_subring")) {
    const json& b = j["base_subring"];
    if (!b.is_object()) throw ParseError("/base_subring", "expected an object");
    check_keys(b, "/base_subring", {"generators"});
    const json& g = member(b, "/base_subring", "generators");
    if (!g.is_array()) throw ParseError("/base_subring/generators", "expected an array of vectors");
    std::vector<std::vector<unsigned>> gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
      gens.push_back(to_uint_list(g[i], "/base_subring/generators/" + std::to_string(i)));
    }
    doc.generators = std::move(gens);
  }
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc, bool pretty) {
  json j = json::object();
  json f = json::object();
  f["p"] = doc.field.p;
  f["e"] = doc.field.e;
  if (doc.field.modulus) f["modulus"] = *doc.field.modulus;
  j["field"] = f;
  j["algebra"] = algebra_json(doc.algebra);
  if (doc.generators) {
    json b = json::object();
    b["generators"] = *doc.generators;
    j["base_subring"] = b;
  }
  return pretty ? j.dump(2) + "\n" : j.dump();
}

Extension build_extension(const InstanceDocument& doc) {
  if (!is_prime(doc.field.p)) throw AlgebraError("field characteristic p must be prime");
  if (doc.field.e == 0) throw AlgebraError("field degree e must be at least 1");
  FieldPtr field = FiniteField::make(doc.field.p, doc.field.e, doc.field.modulus.value_or(std::vector<unsigned>{}));
  Algebra s = build_algebra(field, doc.algebra);
  std::vector<Vec> gens;
  if (doc.generators) {
    for (std::size_t i = 0; i < doc.generators->size(); ++i) {
      const auto& g = (*doc.generators)[i];
      if (g.size() != s.dim()) {
        throw AlgebraError("generator " + std::to_string(i) + " has " + std::to_string(g.size()) +
                           " coordinates, expected " + std::to_string(s.dim()));
      }
      check_scalars(g, field->order(), "generator");
      gens.emplace_back(g.begin(), g.end());
    }
  }
  return make_extension_generated(std::move(s), gens);
}

InstanceDocument document_from_extension(const Extension& ext) {
  const Algebra& a = ext.algebra;
  InstanceDocument doc;
  doc.field.p = a.field().characteristic();
  doc.field.e = a.field().degree();
  if (doc.field.e > 1) doc.field.modulus = a.field().modulus();
  doc.algebra.kind = AlgebraDoc::Kind::Table;
  doc.algebra.dim = a.dim();
  doc.algebra.mul.assign(a.table().begin(), a.table().end());
  doc.algebra.one.assign(a.one().begin(), a.one().end());
  std::vector<std::vector<unsigned>> gens;
  for (const auto& v : ext.r().basis()) gens.emplace_back(v.begin(), v.end());
  doc.generators = std::move(gens);
  return doc;
}

}  // namespace ringlat::app
