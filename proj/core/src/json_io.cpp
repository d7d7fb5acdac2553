#include "hhl/json_io.hpp"

#include <sstream>

namespace hhl {
namespace {

template <class V>
Json degree_map(const std::map<int, V>& m) {
  Json j = Json::object();
  for (const auto& [r, v] : m) j[std::to_string(r)] = v;
  return j;
}

std::string type_name(CoxeterType t) { return t == CoxeterType::B ? "B" : "A"; }

}  // namespace

Json to_json(const HeckeElement& x) {
  Json j = Json::array();
  for (const auto& [g, c] : x.sorted_terms()) j.push_back({g.to_string(), c.to_string()});
  return j;
}

Json to_json(const ComplexInfo& info) {
  Json j;
  j["complex"] = info.kind;
  j["n"] = info.n;
  j["field"] = info.field.to_string();
  j["q"] = info.q ? Json(info.q->to_string()) : Json(nullptr);
  j["params"] = Json(info.params);
  return j;
}

Json to_json(const LabeledComplex& c) {
  Json j = to_json(c.info);
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  Json degrees = Json::object();
  for (int r = c.lo; r <= c.hi; ++r) {
    Json d;
    d["dim"] = c.dim(r);
    if (c.labelled()) {
      Json labels = Json::array();
      for (const auto& l : c.basis(r)) labels.push_back(label_to_string(l));
      d["basis"] = std::move(labels);
    }
    const auto& m = c.boundary(r);
    Json triplets = Json::array();
    for (const auto& e : m.entries()) triplets.push_back({e.row, e.col, e.value.to_string()});
    d["boundary"] = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(triplets)}};
    degrees[std::to_string(r)] = std::move(d);
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json to_json(const HomologyReport& rep) {
  Json j = to_json(rep.info);
  j["lo"] = rep.lo;
  j["hi"] = rep.hi;
  j["dims"] = degree_map(rep.dims);
  j["ranks"] = degree_map(rep.ranks);
  j["betti"] = degree_map(rep.betti);
  j["rank_methods"] = degree_map(rep.rank_methods);
  j["prepass_deficits"] = degree_map(rep.prepass_deficits);
  j["euler_characteristic"] = {{"dims", rep.euler_dims}, {"betti", rep.euler_betti}};
  j["elapsed_ms"] = rep.elapsed_ms ? Json(*rep.elapsed_ms) : Json(nullptr);
  return j;
}

Json to_json(const IdentityReport& rep) {
  Json j;
  j["n_max"] = rep.n_max;
  j["field"] = rep.scalars.field.to_string();
  j["q"] = rep.scalars.q.to_string();
  j["all_passed"] = rep.all_passed();
  j["total_checked"] = rep.total_checked();
  Json fams = Json::array();
  for (const auto& f : rep.families) {
    Json fj;
    fj["family"] = f.family;
    fj["checked"] = f.checked;
    fj["failed"] = f.failed;
    Json fails = Json::array();
    for (const auto& x : f.failures) {
      fails.push_back({{"n", x.n}, {"params", Json(x.params)}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    }
    fj["counterexamples"] = std::move(fails);
    fams.push_back(std::move(fj));
  }
  j["families"] = std::move(fams);
  return j;
}

Json to_json(const StructureReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["field"] = rep.scalars.field.to_string();
  j["q"] = rep.scalars.q.to_string();
  j["all_passed"] = rep.all_passed();
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  Json dims = Json::array();
  for (const auto& d : rep.quotient_dims) {
    dims.push_back({{"p", d.p}, {"r", d.r}, {"dim", d.dim}, {"expected", d.expected}});
  }
  j["quotient_dims"] = std::move(dims);
  return j;
}

Json to_json(const StabilizationReport& rep) {
  Json j;
  j["type"] = type_name(rep.type);
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["dim_source"] = rep.dim_source;
  j["dim_target"] = rep.dim_target;
  j["rank"] = rep.rank;
  j["injective"] = rep.injective;
  j["surjective"] = rep.surjective;
  j["isomorphism"] = rep.isomorphism();
  Json m = Json::array();
  for (const auto& row : rep.matrix) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(v.to_string());
    m.push_back(std::move(jr));
  }
  j["matrix"] = std::move(m);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string betti_csv(const HomologyReport& rep) {
  std::ostringstream os;
  os << "degree,dim,rank,betti\n";
  for (const auto& [r, b] : rep.betti) {
    os << r << ',' << rep.dims.at(r) << ',' << rep.ranks.at(r) << ',' << b << '\n';
  }
  return os.str();
}

}  // namespace hhl
