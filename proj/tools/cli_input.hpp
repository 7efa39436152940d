#pragma once

// Input handling for the command-line tool: field selection, JSON documents
// for presentations and superpotentials, and the built-in presets.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "splitgen/splitgen.hpp"

namespace cli {

using json = nlohmann::ordered_json;
using splitgen::EngineError;
using splitgen::ParseError;

struct Options {
  std::optional<std::uint64_t> p;
  std::optional<unsigned> ext_degree;
  bool allow_extension = false;
  unsigned cap = splitgen::kDefaultExtensionCap;
  unsigned length_bound = 4;
  std::string format = "text";
  std::string input;
  std::string preset;
  unsigned n = 1;
  std::vector<std::string> edges;
  std::vector<std::int64_t> shifts;
  std::string group;
  unsigned r = 2, N = 4;
  std::uint64_t search_bound = splitgen::kDefaultSearchBound;
  std::string example;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline const json& require(const json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
  return doc.at(key);
}

template <class T>
T get_as(const json& v, const std::string& where) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": wrong type");
  }
}

/// The field (p, d): command-line flags win over the input document.
struct FieldChoice {
  std::uint64_t p = 0;
  unsigned d = 1;
};

inline FieldChoice choose_field(const Options& o, const std::optional<json>& doc) {
  FieldChoice f;
  if (doc && doc->contains("field")) {
    const json& fd = doc->at("field");
    f.p = get_as<std::uint64_t>(require(fd, "p", "field"), "field.p");
    if (fd.contains("d")) f.d = get_as<unsigned>(fd.at("d"), "field.d");
  }
  if (o.p) f.p = *o.p;
  if (o.ext_degree) f.d = *o.ext_degree;
  return f;
}

/// Calls fn with the field object for (p, d); p = 0 selects the rationals.
template <class Fn>
auto with_field(const FieldChoice& f, unsigned cap, Fn&& fn) {
  if (f.p == 0) {
    if (f.d != 1) throw EngineError("the rationals have no extensions here");
    return fn(splitgen::Rationals());
  }
  return fn(splitgen::FiniteField(splitgen::field_make(f.p, f.d, std::max(cap, f.d))));
}

template <class K>
splitgen::Presentation<K> presentation_from_json(const json& doc, const K& F) {
  std::int64_t modulus = 2;
  if (doc.contains("grading_modulus")) modulus = get_as<std::int64_t>(doc.at("grading_modulus"), "grading_modulus");
  std::vector<splitgen::Generator> gens;
  const json& g = require(doc, "generators", "presentation");
  if (!g.is_array()) throw ParseError("generators: expected an array");
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::string at = "generators[" + std::to_string(i) + "]";
    gens.push_back({get_as<std::string>(require(g[i], "name", at), at + ".name"),
                    g[i].contains("degree") ? get_as<std::int64_t>(g[i].at("degree"), at + ".degree") : 0});
  }
  std::vector<std::pair<std::string, std::string>> rels;
  const json& r = require(doc, "relations", "presentation");
  if (!r.is_array()) throw ParseError("relations: expected an array");
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::string at = "relations[" + std::to_string(i) + "]";
    rels.emplace_back(get_as<std::string>(require(r[i], "lhs", at), at + ".lhs"),
                      get_as<std::string>(require(r[i], "rhs", at), at + ".rhs"));
  }
  // parse relation by relation to point at the offending one
  for (std::size_t i = 0; i < rels.size(); ++i) {
    try {
      splitgen::make_presentation(F, modulus, gens, {rels[i]});
    } catch (const ParseError& e) {
      throw ParseError("relations[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return splitgen::make_presentation(F, modulus, gens, rels);
}

template <class K>
splitgen::PresentedAlgebra<K> load_algebra(const Options& o, const std::optional<json>& doc, const K& F) {
  if (doc) return splitgen::PresentedAlgebra<K>(presentation_from_json(*doc, F));
  if (o.preset == "quadric") return splitgen::qh_quadric3(F);
  if (o.preset == "cpn") return splitgen::qh_cpn(o.n, F);
  if (o.preset.empty()) throw ParseError("no algebra given (use --input FILE or --preset quadric|cpn)");
  throw ParseError("unknown preset \"" + o.preset + "\" (expected quadric or cpn)");
}

inline std::optional<json> load_document(const Options& o) {
  if (o.input.empty()) return std::nullopt;
  return read_json_file(o.input);
}

/// "a", "-a", "a/b" as an element of F.
template <class K>
typename K::Element parse_scalar(const K& F, const std::string& s, const std::string& where) {
  auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash)), den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    return F.from_fraction(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError(where + ": not a number: \"" + s + "\"");
  }
}

template <class K>
splitgen::Superpotential<K> superpotential_from_json(const json& doc, const K& F) {
  auto n = get_as<std::size_t>(require(doc, "vars", "superpotential"), "vars");
  const json& t = require(doc, "terms", "superpotential");
  if (!t.is_array()) throw ParseError("terms: expected an array");
  std::vector<splitgen::SuperpotentialTerm<K>> terms;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string at = "terms[" + std::to_string(i) + "]";
    const json& c = require(t[i], "coeff", at);
    std::string cs = c.is_string() ? c.get<std::string>() : c.dump();
    terms.push_back({parse_scalar(F, cs, at + ".coeff"),
                     get_as<std::vector<std::int64_t>>(require(t[i], "exps", at), at + ".exps")});
  }
  return splitgen::make_superpotential(F, n, std::move(terms));
}

inline json preset_superpotential(const std::string& name) {
  if (name == "cp1") return json::parse(R"({"vars":1,"terms":[{"coeff":"1","exps":[1]},{"coeff":"1","exps":[-1]}]})");
  if (name == "quadric")
    return json::parse(R"({"vars":3,"terms":[{"coeff":"1","exps":[1,0,0]},{"coeff":"1","exps":[0,1,0]},)"
                       R"({"coeff":"1","exps":[0,0,1]},{"coeff":"1","exps":[-1,-1,0]},{"coeff":"1","exps":[-1,0,-1]}]})");
  throw ParseError("unknown superpotential preset \"" + name + "\" (expected cp1 or quadric)");
}

}  // namespace cli
