#pragma once

// Report builders.  Every report is an ordered JSON object; "provenance" maps
// each section to the library operation that produced it.

#include <string>
#include <vector>

#include "cli_input.hpp"

namespace cli {

template <class K>
std::string format_poly(const K& F, const splitgen::UniPoly<K>& g) {
  return splitgen::PolyRing<K>(F).format(g, "x");
}

template <class K>
json coords(const K& F, const std::vector<typename K::Element>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(F.format(x));
  return a;
}

template <class K>
json block_table(const splitgen::BlockDecomposition<K>& D) {
  const auto& A = D.algebra;
  const K& F = A.field();
  json blocks = json::array();
  for (std::size_t i = 0; i < D.blocks.size(); ++i) {
    const auto& b = D.blocks[i];
    json residues = json::array();
    for (const auto& [idx, g] : b.residues) {
      json r{{"basis", A.label(idx)}, {"polynomial", format_poly(F, g)}};
      if (auto ev = b.eigenvalue(F, idx)) r["eigenvalue"] = F.format(*ev);
      residues.push_back(r);
    }
    blocks.push_back({{"index", i},
                      {"dim", b.dim()},
                      {"idempotent", A.format(b.idempotent)},
                      {"idempotent_coords", coords(F, b.idempotent)},
                      {"residue_degree", b.residue_degree},
                      {"residues", residues},
                      {"radical_dim", b.radical_dim},
                      {"is_field", b.is_field}});
  }
  return blocks;
}

template <class K>
json decompose_report(const splitgen::PresentedAlgebra<K>& P, const Options& o) {
  const auto& A = P.algebra();
  auto D = splitgen::block_decompose(A, o.allow_extension, o.cap);
  json r;
  r["command"] = "decompose";
  r["field"] = A.field().name();
  r["field_used"] = D.algebra.field().name();
  r["extended"] = D.extended;
  r["algebra"] = {{"dim", A.dim()}, {"grading_modulus", A.modulus()}, {"basis", A.labels()}};
  r["blocks"] = block_table(D);
  r["radical_dim"] = D.radical_dim();
  bool semisimple = D.radical_dim() == 0;
  r["semisimple"] = semisimple;
  r["provenance"] = {{"algebra", "finalg.algebra_from_presentation"},
                     {"blocks", "finalg.block_decompose"},
                     {"radical_dim", "finalg.block_decompose"}};
  return r;
}

/// Shifts for the edges: explicit, from a group, or read off the edge degrees.
template <class K>
std::vector<std::int64_t> edge_shifts(const Options& o, const splitgen::Algebra<K>& A,
                                      const std::vector<typename splitgen::Algebra<K>::Element>& edges) {
  std::vector<std::int64_t> s = o.shifts;
  if (!o.group.empty()) {
    if (!s.empty()) throw ParseError("give either --shift or --group, not both");
    s = splitgen::loop_group_shifts(o.group);
  }
  if (s.empty()) {
    for (const auto& e : edges) {
      auto d = A.homogeneous_degree(e);
      if (!d) throw EngineError("edge " + A.format(e) + " is not homogeneous");
      s.push_back(splitgen::mod_floor(-*d, A.modulus()));
    }
  }
  if (s.size() != edges.size())
    throw ParseError(std::to_string(edges.size()) + " edges but " + std::to_string(s.size()) + " shifts");
  return s;
}

template <class K>
json verdict_report(const splitgen::PresentedAlgebra<K>& P, const Options& o) {
  const auto& A = P.algebra();
  if (o.edges.empty()) throw ParseError("verdict needs at least one --edge");
  std::vector<typename splitgen::Algebra<K>::Element> elems;
  for (std::size_t i = 0; i < o.edges.size(); ++i) {
    try {
      elems.push_back(P.element(o.edges[i]));
    } catch (const ParseError& e) {
      throw ParseError("edge " + std::to_string(i) + ": " + e.what());
    }
  }
  auto shifts = edge_shifts(o, A, elems);
  std::vector<splitgen::KoszulEdge<K>> edges;
  json ej = json::array();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    edges.push_back({elems[i], shifts[i]});
    ej.push_back({{"element", A.format(elems[i])}, {"shift", shifts[i]}});
  }
  auto v = splitgen::split_generation_verdict(A, edges, o.allow_extension, o.cap);
  json blocks = json::array();
  unsigned generating = 0, zero = 0;
  for (const auto& b : v.blocks) {
    const auto& blk = v.decomposition.blocks[b.block];
    json nil = json::array();
    for (auto m : b.nilpotency) nil.push_back(m == 0 ? json(nullptr) : json(m));
    json row{{"index", b.block},
             {"dim", blk.dim()},
             {"idempotent", v.decomposition.algebra.format(blk.idempotent)},
             {"multiplicity", b.multiplicity},
             {"verdict", b.split_generates ? "SplitGenerates" : "Zero"},
             {"nilpotency", nil},
             {"invertible_edge", b.invertible_edge ? json(*b.invertible_edge) : json(nullptr)},
             {"hom_rank", b.hom.total()},
             {"hom_table", b.hom.dims}};
    (b.split_generates ? generating : zero) += b.multiplicity;
    blocks.push_back(row);
  }
  json r;
  r["command"] = "verdict";
  r["field"] = A.field().name();
  r["field_used"] = v.decomposition.algebra.field().name();
  r["extended"] = v.decomposition.extended;
  r["edges"] = ej;
  r["blocks"] = blocks;
  r["geometric_blocks"] = {{"SplitGenerates", generating}, {"Zero", zero}};
  r["hom_rank"] = v.global.total();
  r["rank_bound"] = v.rank_bound;
  r["rank_bound_holds"] = v.global.total() <= v.rank_bound;
  r["provenance"] = {{"blocks", "finalg.block_decompose"},
                     {"verdict", "finalg.classify_element"},
                     {"hom_rank", "twcalc.hom_cohomology"},
                     {"rank_bound", "twcalc.rank_bound_check"}};
  return r;
}

inline json steps_json(const std::vector<splitgen::ReportStep>& steps) {
  json a = json::array();
  for (const auto& s : steps) a.push_back({{"statement", s.statement}, {"source", s.computed ? "computed" : "cited"}});
  return a;
}

template <class K>
json hh_report(const splitgen::PresentedAlgebra<K>& P, const Options& o) {
  const auto& A = P.algebra();
  auto nf = splitgen::nonformality_report(A, o.length_bound);
  const auto& prof = nf.parity.profile;
  json r;
  r["command"] = "hh";
  r["field"] = A.field().name();
  r["length_bound"] = o.length_bound;
  r["dims"] = prof.dims;
  r["truncated"] = prof.truncated;
  r["parity_split"] = prof.parity_split;
  r["radical_dim"] = nf.parity.radical_dim;
  r["parity_check"] = splitgen::to_string(nf.parity.verdict);
  r["nonformality"] = {{"conclusion", nf.conclusion}, {"steps", steps_json(nf.steps)}};
  r["provenance"] = {{"dims", "homalg.hochschild_cohomology"},
                     {"radical_dim", "finalg.radical"},
                     {"parity_check", "homalg.parity_semisimplicity_check"},
                     {"nonformality", "homalg.nonformality_report"}};
  return r;
}

template <class K>
json ext_report(const K& F, const Options& o) {
  std::vector<std::int64_t> shifts = o.shifts;
  if (!o.group.empty()) {
    if (!shifts.empty()) throw ParseError("give either --shift or --group, not both");
    shifts = splitgen::loop_group_shifts(o.group);
  }
  std::vector<std::int64_t> degrees;
  for (auto s : shifts) degrees.push_back(-s);
  auto e = splitgen::ext_over_polynomial(degrees, F);
  json r;
  r["command"] = "ext";
  r["field"] = F.name();
  r["generator_degrees"] = e.generator_degrees;
  r["ext_generator_degrees"] = e.ext_generator_degrees;
  r["dims"] = e.dims;
  r["provenance"] = {{"dims", "homalg.ext_over_polynomial"}};
  return r;
}

inline json gepner_report(const FieldChoice& f, const Options& o) {
  auto g = splitgen::gepner_critical_images(o.r, o.N, f.p, f.d, o.allow_extension, o.cap);
  json r;
  r["command"] = "gepner";
  r["r"] = g.r;
  r["N"] = g.N;
  r["field"] = g.field;
  r["roots"] = g.roots;
  r["tuples"] = g.tuples;
  r["images"] = g.images;
  r["distinct_coordinate_images"] = g.distinct_coordinate_images;
  r["provenance"] = {{"images", "qhmodels.gepner_critical_images"}};
  return r;
}

inline json toric_report(const splitgen::FiniteField& F, const json& doc, const Options& o) {
  auto W = superpotential_from_json(doc, F);
  auto c = splitgen::toric_critical_points(F, W, o.search_bound);
  json pts = json::array();
  for (const auto& pt : c.points) {
    json row{{"coords", coords(F, pt.coords)}, {"nondegenerate", pt.nondegenerate}};
    if (pt.multiplicity) row["multiplicity"] = *pt.multiplicity;
    pts.push_back(row);
  }
  json r;
  r["command"] = "toric";
  r["field"] = F.name();
  r["vars"] = W.num_vars;
  r["points"] = pts;
  r["complete"] = c.complete;
  r["searched"] = c.searched;
  r["provenance"] = {{"points", "qhmodels.toric_critical_points"}};
  return r;
}

}  // namespace cli
