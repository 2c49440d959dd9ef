#include "srk/json_io.hpp"

namespace srk {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw invalid_input(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json elem_to_json(const AbelianGroup& G, Elem x) {
  return json(G.decode(x));
}

Elem elem_from_json(const AbelianGroup& G, const json& j) {
  if (!j.is_array()) throw invalid_input("element must be an array of residues");
  std::vector<int> res;
  for (const auto& v : j) res.push_back(v.get<int>());
  return G.encode(res);
}

json subset_to_json(const AbelianGroup& G, const Subset& s) {
  json out = json::array();
  for (Elem x : s) out.push_back(elem_to_json(G, x));
  return out;
}

Subset subset_from_json(const AbelianGroup& G, const json& j) {
  if (!j.is_array()) throw invalid_input("subset must be an array of elements");
  Subset s;
  for (const auto& e : j) s.push_back(elem_from_json(G, e));
  std::sort(s.begin(), s.end());
  return s;
}

json group_to_json(const AbelianGroup& G) {
  return json{{"cyclic_factors", G.factors}};
}

AbelianGroup group_from_json(const json& j) {
  const json& f = require(j, "cyclic_factors");
  if (!f.is_array()) throw invalid_input("cyclic_factors must be an array");
  std::vector<int> factors;
  for (const auto& v : f) factors.push_back(v.get<int>());
  return make_group(factors);
}

json sring_to_json(const SRing& A) {
  json sets = json::array();
  for (const Subset& X : A.basic_sets) sets.push_back(subset_to_json(A.group, X));
  return json{{"group", group_to_json(A.group)}, {"basic_sets", sets}};
}

SRing sring_from_json(const json& j) {
  AbelianGroup G = group_from_json(require(j, "group"));
  const json& sets = require(j, "basic_sets");
  if (!sets.is_array()) throw invalid_input("basic_sets must be an array");
  std::vector<Subset> parts;
  for (const auto& s : sets) parts.push_back(subset_from_json(G, s));
  return validate_sring(G, parts);
}

PermutationSet perms_from_json(const json& j) {
  PermutationSet ps;
  ps.degree = require(j, "degree").get<int>();
  for (const auto& g : require(j, "generators")) {
    std::vector<int> t;
    for (const auto& v : g) t.push_back(v.get<int>());
    ps.generators.push_back(std::move(t));
  }
  return ps;
}

CommRing ring_from_json(const json& j) {
  std::string kind = require(j, "kind").get<std::string>();
  if (kind == "zn") return make_zn(require(j, "n").get<int>());
  if (kind == "gf") return make_gf(require(j, "p").get<int>(), require(j, "k").get<int>());
  if (kind == "dual") return make_dual_numbers(require(j, "p").get<int>());
  if (kind == "product") {
    const json& fs = require(j, "factors");
    if (!fs.is_array() || fs.empty()) throw invalid_input("product needs at least one factor");
    CommRing R = ring_from_json(fs[0]);
    for (size_t i = 1; i < fs.size(); ++i) R = make_product(R, ring_from_json(fs[i]));
    return R;
  }
  if (kind == "tables") {
    std::vector<int> factors;
    for (const auto& v : require(j, "cyclic_factors")) factors.push_back(v.get<int>());
    AbelianGroup G = make_group(factors);
    std::vector<int> mul;
    for (const auto& v : require(j, "mul")) mul.push_back(v.get<int>());
    return ring_from_tables(G, mul, require(j, "one").get<int>());
  }
  if (kind == "local_pair") return ring_from_local_pair(local_pair_from_json(j));
  throw invalid_input("unknown ring kind \"" + kind + "\"");
}

json ring_to_json(const CommRing& R) {
  return json{{"kind", "tables"},
              {"cyclic_factors", R.add.factors},
              {"one", R.one},
              {"mul", R.mul}};
}

json local_pair_to_json(const LocalPair& pair) {
  json gens = json::array();
  for (const Endo& g : pair.K.gens) gens.push_back(g);
  return json{{"kind", "local_pair"},
              {"group", group_to_json(pair.P)},
              {"generators", gens},
              {"e", elem_to_json(pair.P, pair.e)},
              {"orbit", subset_to_json(pair.P, pair.orbit)},
              {"complement", subset_to_json(pair.P, pair.complement)}};
}

LocalPair local_pair_from_json(const json& j) {
  AbelianGroup P = group_from_json(require(j, "group"));
  std::vector<Endo> gens;
  for (const auto& g : require(j, "generators")) {
    Endo t;
    for (const auto& v : g) t.push_back(v.get<int>());
    gens.push_back(std::move(t));
  }
  AutGroup K = AutGroup::from_generators(P, gens);
  Elem e = elem_from_json(P, require(j, "e"));
  auto pair = is_local_pair(P, K, e);
  if (!pair) throw invalid_input("the data does not describe a local pair");
  return *pair;
}

json report_to_json(const VerificationReport& rep) {
  return json{{"statement_id", rep.statement_id},
              {"instances_checked", rep.instances_checked},
              {"violations", rep.violations},
              {"vacuous", rep.vacuous},
              {"notes", rep.notes},
              {"pass", rep.pass()}};
}

json separation_report_to_json(const AbelianGroup& G, const SeparationReport& rep) {
  json ws = json::array();
  for (const SeparationWitness& w : rep.witnesses)
    ws.push_back(json{{"H", subset_to_json(G, w.H)},
                      {"X", subset_to_json(G, w.X)},
                      {"span", subset_to_json(G, w.span)},
                      {"radical", subset_to_json(G, w.radical)}});
  return json{{"checked", rep.checked}, {"witnesses", ws}, {"violations", rep.violations}};
}

json duality_report_to_json(const DualityReport& rep) {
  return json{{"checked", rep.checked},
              {"violations", rep.violations},
              {"notes", rep.notes},
              {"pass", rep.pass}};
}

json check_report_to_json(const CheckReport& rep) {
  return json{{"checked", rep.checked},
              {"violations", rep.violations},
              {"vacuous", rep.vacuous},
              {"pass", rep.pass}};
}

}  // namespace srk
