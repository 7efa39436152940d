// splitgen command-line tool.
//
// Exit codes: 0 success, 1 engine error, 2 parse or usage error,
// 3 an example disagreed with its bundled expected values.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "cli_input.hpp"
#include "cli_reports.hpp"

namespace cli {
namespace {

constexpr int kExitEngine = 1, kExitParse = 2, kExitMismatch = 3;

// ---- text rendering -------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
  return true;
}

std::string flat_text(const json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + flat_text(v[i]);
  return s + "]";
}

void render(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (is_flat(x)) {
        os << pad << k << ": " << flat_text(x) << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, x, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_flat(v[i])) {
        os << pad << "- " << flat_text(v[i]) << "\n";
      } else {
        os << pad << "[" << i << "]\n";
        render(os, v[i], indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

void emit(const json& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.dump(2) << "\n";
  } else {
    render(std::cout, r, 0);
  }
}

// ---- examples -------------------------------------------------------------

struct Checks {
  json rows = json::array();
  bool ok = true;
  void add(const std::string& name, const json& expected, const json& got) {
    bool pass = expected == got;
    ok = ok && pass;
    rows.push_back({{"check", name}, {"expected", expected}, {"got", got}, {"status", pass ? "PASS" : "FAIL"}});
  }
};

json finish(const std::string& name, json detail, Checks& c) {
  json r;
  r["command"] = "example";
  r["example"] = name;
  r["detail"] = std::move(detail);
  r["checks"] = c.rows;
  r["status"] = c.ok ? "PASS" : "FAIL";
  return r;
}

std::vector<std::size_t> sorted_dims(const json& blocks) {
  std::vector<std::size_t> d;
  for (const auto& b : blocks) d.push_back(b.at("dim").get<std::size_t>());
  std::sort(d.begin(), d.end());
  return d;
}

json example_quadric_table(const Options& base) {
  Checks c;
  json detail = json::array();
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    Options o = base;
    o.allow_extension = true;
    splitgen::FiniteField F = splitgen::FiniteField::prime(p);
    json r = decompose_report(splitgen::qh_quadric3(F), o);
    std::string tag = "p=" + std::to_string(p);
    auto dims = sorted_dims(r["blocks"]);
    std::size_t fields = 0;
    for (const auto& b : r["blocks"]) fields += b["is_field"].get<bool>();
    if (p == 2) {
      c.add(tag + " block dims", std::vector<std::size_t>{4}, dims);
      c.add(tag + " semisimple", false, r["semisimple"]);
    } else if (p == 3) {
      c.add(tag + " block dims", std::vector<std::size_t>{1, 3}, dims);
      bool small_is_field = false;
      for (const auto& b : r["blocks"])
        if (b["dim"] == 1) small_is_field = b["is_field"].get<bool>();
      c.add(tag + " dim-1 block is a field", true, small_is_field);
    } else {
      c.add(tag + " block dims", std::vector<std::size_t>{1, 1, 1, 1}, dims);
      c.add(tag + " field blocks", 4, fields);
    }
    detail.push_back({{"p", p}, {"field_used", r["field_used"]}, {"block_dims", dims}, {"field_blocks", fields},
                      {"semisimple", r["semisimple"]}});
  }
  return finish("quadric-table", {{"rows", detail}, {"provenance", {{"rows", "finalg.block_decompose"}}}}, c);
}

json example_cpn(const Options& o, bool n_given, bool p_given) {
  unsigned n = n_given ? o.n : 5;
  std::uint64_t p = p_given ? *o.p : 2;
  if (p == 0) throw EngineError("the cpn example needs a prime --p");
  Checks c;
  auto I = splitgen::cpn_idempotents(n, splitgen::FiniteField::prime(p), true, o.cap);
  auto D = splitgen::block_decompose(I.algebra);
  auto [s, q] = splitgen::cpn_split(n, p);
  std::uint64_t ps = 1;
  for (unsigned i = 0; i < s; ++i) ps *= p;
  std::set<std::vector<std::uint64_t>> engine, formula(I.idempotents.begin(), I.idempotents.end());
  std::vector<std::size_t> dims;
  for (const auto& b : D.blocks) {
    engine.insert(b.idempotent);
    dims.push_back(b.dim());
  }
  c.add("block count", q, D.blocks.size());
  c.add("block dims", std::vector<std::size_t>(q, ps), dims);
  c.add("idempotent formula matches blocks", true, engine == formula);
  json idems = json::array();
  for (const auto& e : I.idempotents) idems.push_back(I.algebra.format(e));
  json detail{{"n", n},
              {"p", p},
              {"field_used", I.algebra.field().name()},
              {"p_power", ps},
              {"q", q},
              {"formula_idempotents", idems},
              {"blocks", block_table(D)},
              {"provenance",
               {{"formula_idempotents", "qhmodels.cpn_idempotents"}, {"blocks", "finalg.block_decompose"}}}};
  return finish("cpn", detail, c);
}

json example_gepner(const Options& o) {
  Checks c;
  json detail = json::array();
  for (unsigned s = 1; s <= 3; ++s) {
    unsigned r = 1u << s, N = 2u << s;
    auto g = splitgen::gepner_critical_images(r, N, 2, 1, true, o.cap);
    std::vector<std::string> top(r, "0");
    top.back() = "1";
    std::string tag = "s=" + std::to_string(s);
    c.add(tag + " critical images", std::vector<std::vector<std::string>>{top}, g.images);
    c.add(tag + " binomial column", true, splitgen::binomial_column_test(s));
    detail.push_back({{"r", r}, {"N", N}, {"field", g.field}, {"images", g.images}});
  }
  auto g0 = splitgen::gepner_critical_images(2, 4, 0);
  c.add("(r,N)=(2,4) char 0 distinct-coordinate images", 6, g0.distinct_coordinate_images.size());
  detail.push_back({{"r", 2}, {"N", 4}, {"field", g0.field}, {"distinct_coordinate_images", g0.distinct_coordinate_images}});
  return finish("gepner",
                {{"rows", detail},
                 {"provenance", {{"rows", "qhmodels.gepner_critical_images"}, {"binomial", "qhmodels.binomial_column_test"}}}},
                c);
}

json example_toric(const Options& o) {
  Checks c;
  Options q = o;
  splitgen::FiniteField F = splitgen::FiniteField::prime(3);
  json r = toric_report(F, preset_superpotential("cp1"), q);
  std::size_t nondeg = 0;
  for (const auto& pt : r["points"]) nondeg += pt["nondegenerate"].get<bool>();
  c.add("CP1 potential over F3: critical points", 2, r["points"].size());
  c.add("CP1 potential over F3: nondegenerate", 2, nondeg);
  c.add("search complete", true, r["complete"]);
  return finish("toric", r, c);
}

json example_nonformality_cp1(const Options& o) {
  Checks c;
  Options q = o;
  q.length_bound = 6;
  auto P = splitgen::qh_cpn(1, splitgen::FiniteField::prime(2));
  json r = hh_report(P, q);
  r["nonformality"]["steps"].push_back(
      {{"statement", "the first nonvanishing higher product is mu^4(H,H,H,H) = 1"}, {"source", "cited"}});
  bool all_nonzero = true;
  for (const auto& d : r["dims"]) all_nonzero = all_nonzero && d.get<std::size_t>() != 0;
  std::size_t computed = 0, cited = 0;
  for (const auto& s : r["nonformality"]["steps"]) (s["source"] == "computed" ? computed : cited) += 1;
  c.add("HH^r nonzero for r <= 6", true, all_nonzero);
  c.add("radical dimension", 1, r["radical_dim"]);
  c.add("parity check", "ConsistentNonSemisimple", r["parity_check"]);
  c.add("conclusion", "not formal", r["nonformality"]["conclusion"]);
  c.add("has computed and cited steps", true, computed > 0 && cited > 0);
  return finish("nonformality-cp1", r, c);
}

const std::vector<std::string> kExamples{"quadric-table", "cpn", "gepner", "toric", "nonformality-cp1"};

// ---- commands -------------------------------------------------------------

template <class Build>
json on_algebra(const Options& o, Build&& build) {
  auto doc = load_document(o);
  return with_field(choose_field(o, doc), o.cap,
                    [&](const auto& F) -> json { return build(load_algebra(o, doc, F)); });
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) {
  using namespace cli;
  Options o;
  CLI::App app{"Block decompositions, Koszul generation verdicts and homological checks for small algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--p", o.p, "characteristic (0 for the rationals)");
  app.add_option("--ext-degree", o.ext_degree, "degree d of the ground field F_{p^d}")->check(CLI::PositiveNumber);
  app.add_flag("--allow-extension", o.allow_extension, "extend scalars until the needed roots exist");
  app.add_option("--cap", o.cap, "largest extension degree allowed")->check(CLI::PositiveNumber);
  app.add_option("--length-bound", o.length_bound, "Hochschild length bound R")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input", o.input, "JSON input document");
  app.add_option("--preset", o.preset, "built-in input (quadric, cpn; cp1, quadric for toric)");
  app.add_option("--n", o.n, "n for the cpn preset")->check(CLI::PositiveNumber);
  app.add_option("--edge", o.edges, "edge element (repeatable)");
  app.add_option("--shift", o.shifts, "edge shift (repeatable)")->allow_extra_args(false);
  app.add_option("--group", o.group, "compact Lie group giving the shifts, e.g. SU(2)");
  app.add_option("--r", o.r, "Gepner r")->check(CLI::PositiveNumber);
  app.add_option("--N", o.N, "Gepner N")->check(CLI::PositiveNumber);
  app.add_option("--search-bound", o.search_bound, "toric search limit")->check(CLI::PositiveNumber);

  std::map<std::string, std::function<json()>> commands;
  auto sub = [&](const std::string& name, const std::string& help, std::function<json()> fn) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    commands[name] = std::move(fn);
    return s;
  };

  sub("decompose", "block decomposition of an algebra",
      [&] { return on_algebra(o, [&](const auto& P) { return decompose_report(P, o); }); });
  sub("verdict", "split-generation verdict for Koszul edges",
      [&] { return on_algebra(o, [&](const auto& P) { return verdict_report(P, o); }); });
  sub("hh", "Hochschild profile, parity check and nonformality report",
      [&] { return on_algebra(o, [&](const auto& P) { return hh_report(P, o); }); });
  sub("ext", "Ext over a polynomial ring with even generators", [&] {
    return with_field(choose_field(o, std::nullopt), o.cap, [&](const auto& F) { return ext_report(F, o); });
  });
  sub("gepner", "critical images of the lifted Gepner potential",
      [&] { return gepner_report(choose_field(o, std::nullopt), o); });
  sub("toric", "critical points of a Laurent superpotential over a finite field", [&] {
    std::optional<json> doc = load_document(o);
    if (!doc) {
      if (o.preset.empty()) throw ParseError("no superpotential given (use --input FILE or --preset cp1|quadric)");
      doc = preset_superpotential(o.preset);
    }
    auto f = choose_field(o, doc);
    if (f.p == 0) throw EngineError("toric search needs a finite field (--p)");
    splitgen::FiniteField F(splitgen::field_make(f.p, f.d, std::max(o.cap, f.d)));
    return toric_report(F, *doc, o);
  });
  auto* ex = sub("example", "run a bundled example against its expected values", [&]() -> json {
    if (o.example == "quadric-table") return example_quadric_table(o);
    if (o.example == "cpn") return example_cpn(o, app.count("--n") > 0, o.p.has_value());
    if (o.example == "gepner") return example_gepner(o);
    if (o.example == "toric") return example_toric(o);
    if (o.example == "nonformality-cp1") return example_nonformality_cp1(o);
    std::string names;
    for (const auto& e : kExamples) names += (names.empty() ? "" : ", ") + e;
    throw ParseError("unknown example \"" + o.example + "\"; available: " + names);
  });
  ex->add_option("name", o.example, "example name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    json r = commands.at(name)();
    emit(r, o.format);
    if (name == "example" && r["status"] != "PASS") return kExitMismatch;
    return 0;
  } catch (const splitgen::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const splitgen::EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEngine;
  }
}
