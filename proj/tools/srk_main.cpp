// srk: Schur rings over finite abelian groups and finite commutative rings.
//
// One binary, subcommand style. All output is deterministic; --json switches
// from the human summary to the stable JSON schemas.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "srk/json_io.hpp"

using namespace srk;

namespace {

struct Ctx {
  bool as_json = false;
  Caps caps;
};

json parse_instance(const std::string& raw) {
  if (raw.empty()) throw invalid_input("missing --instance payload");
  std::string text = raw;
  if (raw == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (raw[0] == '@') {
    std::ifstream f(raw.substr(1));
    if (!f) throw invalid_input("cannot open instance file " + raw.substr(1));
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("instance is not valid JSON: ") + e.what());
  }
}

void emit(const Ctx& ctx, const json& j, const std::string& text) {
  if (ctx.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string show_subset(const AbelianGroup& G, const Subset& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    auto r = G.decode(s[i]);
    out += i ? " " : "";
    out += "(";
    for (size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + std::to_string(r[k]);
    out += ")";
  }
  return out + "}";
}

int report_exit(const VerificationReport& rep) { return rep.pass() ? 0 : 1; }

std::string report_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << "statement " << rep.statement_id << ": "
      << (rep.pass() ? (rep.vacuous ? "VACUOUS" : "PASS") : "FAIL") << "\n";
  out << "  instances checked: " << rep.instances_checked << "\n";
  for (const std::string& n : rep.notes) out << "  note: " << n << "\n";
  for (const std::string& v : rep.violations) out << "  violation: " << v << "\n";
  out << "  elapsed: " << (long)(rep.elapsed_sec * 1000) << " ms\n";
  return out.str();
}

int run_group(const Ctx& ctx, const std::string& action, const json& inst) {
  AbelianGroup G = group_from_json(inst);
  if (action == "info") {
    json j{{"order", G.order},
           {"exponent", G.exponent},
           {"cyclic_factors", G.factors},
           {"canonical_form", G.canonical_form()}};
    std::ostringstream out;
    out << "group of order " << G.order << ", exponent " << G.exponent << "\n";
    emit(ctx, j, out.str());
    return 0;
  }
  if (action == "subgroups") {
    auto subs = all_subgroups(G, ctx.caps);
    json arr = json::array();
    for (const Subset& S : subs) arr.push_back(subset_to_json(G, S));
    std::ostringstream out;
    out << subs.size() << " subgroups\n";
    for (const Subset& S : subs) out << "  " << show_subset(G, S) << "\n";
    emit(ctx, json{{"count", subs.size()}, {"subgroups", arr}}, out.str());
    return 0;
  }
  if (action == "aut") {
    AutGroup A = automorphism_group(G, ctx.caps);
    json arr = json::array();
    for (const Endo& t : A.elems) arr.push_back(t);
    std::ostringstream out;
    out << "automorphism group of order " << A.order() << "\n";
    emit(ctx, json{{"order", A.order()}, {"elements", arr}}, out.str());
    return 0;
  }
  throw invalid_input("unknown group action");
}

int run_sring(const Ctx& ctx, const std::string& action, const json& inst) {
  if (action == "validate") {
    try {
      SRing A = sring_from_json(inst);
      json j = sring_to_json(A);
      j["valid"] = true;
      j["rank"] = A.rank();
      std::ostringstream out;
      out << "valid S-ring of rank " << A.rank() << "\n";
      emit(ctx, j, out.str());
      return 0;
    } catch (const sring_invalid& e) {
      json j{{"valid", false}, {"kind", e.kind}, {"witness", e.witness}, {"detail", e.what()}};
      std::ostringstream out;
      out << "invalid: " << e.kind << " (" << e.what() << ")\n";
      emit(ctx, j, out.str());
      return 2;
    }
  }
  if (action == "dual") {
    SRing A = sring_from_json(inst);
    SRing D = dual_sring(A);
    json j = sring_to_json(D);
    j["dual_of"] = sring_to_json(A)["basic_sets"];
    std::ostringstream out;
    out << "dual S-ring of rank " << D.rank() << "\n";
    for (const Subset& X : D.basic_sets) out << "  " << show_subset(D.group, X) << "\n";
    emit(ctx, j, out.str());
    return 0;
  }
  if (action == "radical") {
    AbelianGroup G = group_from_json(inst.contains("group") ? inst.at("group") : inst);
    Subset X = subset_from_json(G, inst.at("subset"));
    Subset rad = subset_radical(G, X);
    Subset span = generated_subgroup(G, X);
    std::ostringstream out;
    out << "radical " << show_subset(G, rad) << "\nspan " << show_subset(G, span) << "\n";
    emit(ctx, json{{"radical", subset_to_json(G, rad)}, {"span", subset_to_json(G, span)}},
         out.str());
    return 0;
  }
  if (action == "power-map") {
    SRing A = sring_from_json(inst);
    Subset X = subset_from_json(A.group, inst.at("set"));
    int p = inst.at("p").get<int>();
    Subset Xp = power_map(A, X, p);
    std::ostringstream out;
    out << "power set " << show_subset(A.group, Xp) << "\n";
    emit(ctx,
         json{{"power_set", subset_to_json(A.group, Xp)}, {"in_star", in_star(A, Xp)}},
         out.str());
    return 0;
  }
  if (action == "enumerate") {
    AbelianGroup G = group_from_json(inst.contains("group") ? inst.at("group") : inst);
    std::vector<SRing> rings;
    if (inst.contains("generators")) {
      std::vector<Endo> gens;
      for (const auto& g : inst.at("generators")) {
        Endo t;
        for (const auto& v : g) t.push_back(v.get<int>());
        gens.push_back(std::move(t));
      }
      rings = enumerate_k_invariant_srings(G, AutGroup::from_generators(G, gens, ctx.caps.closure),
                                           ctx.caps);
    } else {
      rings = enumerate_all_srings(G, ctx.caps);
    }
    json arr = json::array();
    for (const SRing& A : rings) arr.push_back(sring_to_json(A)["basic_sets"]);
    std::ostringstream out;
    out << rings.size() << " S-rings\n";
    for (const SRing& A : rings) {
      out << "  rank " << A.rank() << ":";
      for (const Subset& X : A.basic_sets) out << " " << show_subset(G, X);
      out << "\n";
    }
    emit(ctx, json{{"group", group_to_json(G)}, {"count", rings.size()}, {"basic_sets", arr}},
         out.str());
    return 0;
  }
  throw invalid_input("unknown sring action");
}

int run_ring(const Ctx& ctx, const std::string& action, const json& inst) {
  if (action == "make") {
    CommRing R = ring_from_json(inst);
    json j = ring_to_json(R);
    j["order"] = R.order();
    j["is_local"] = is_local(R);
    j["is_field"] = is_field(R);
    j["unit_count"] = units(R).units.size();
    std::ostringstream out;
    out << "ring of order " << R.order() << (is_field(R) ? " (field)" : "")
        << (is_local(R) && !is_field(R) ? " (local)" : "") << ", " << units(R).units.size()
        << " units\n";
    emit(ctx, j, out.str());
    return 0;
  }
  if (action == "units") {
    CommRing R = ring_from_json(inst);
    UnitGroup U = units(R);
    std::ostringstream out;
    out << U.units.size() << " units " << show_subset(R.add, U.units) << "\n";
    emit(ctx, json{{"count", U.units.size()}, {"units", subset_to_json(R.add, U.units)}},
         out.str());
    return 0;
  }
  if (action == "primary") {
    CommRing R = ring_from_json(inst);
    auto comps = primary_components(R);
    json arr = json::array();
    std::ostringstream out;
    out << comps.size() << " primary components\n";
    for (const CommRing& C : comps) {
      json cj = ring_to_json(C);
      cj["order"] = C.order();
      cj["is_local"] = is_local(C);
      arr.push_back(cj);
      out << "  order " << C.order() << (is_local(C) ? " (local)" : "") << "\n";
    }
    emit(ctx, json{{"components", arr}}, out.str());
    return 0;
  }
  if (action == "local-pairs") {
    AbelianGroup P = group_from_json(inst.contains("group") ? inst.at("group") : inst);
    auto classes = enumerate_local_pairs(P, ctx.caps);
    json arr = json::array();
    std::ostringstream out;
    out << classes.size() << " conjugacy classes of local pairs\n";
    for (const auto& cls : classes) {
      json cj{{"K_order", cls[0].K.order()}, {"pair_count", cls.size()}};
      json pairs = json::array();
      for (const LocalPair& pair : cls) pairs.push_back(local_pair_to_json(pair));
      cj["pairs"] = pairs;
      arr.push_back(cj);
      out << "  K of order " << cls[0].K.order() << ", " << cls.size() << " pairs, complement "
          << show_subset(P, cls[0].complement) << "\n";
    }
    emit(ctx, json{{"classes", arr}, {"class_count", classes.size()}}, out.str());
    return 0;
  }
  if (action == "from-pair") {
    LocalPair pair = local_pair_from_json(inst);
    CommRing R = ring_from_local_pair(pair);
    json j = ring_to_json(R);
    j["is_local"] = true;
    j["is_field"] = is_field(R);
    j["units"] = subset_to_json(R.add, units(R).units);
    j["radical"] = subset_to_json(R.add, ring_radical(R));
    std::ostringstream out;
    out << "local ring of order " << R.order() << (is_field(R) ? " (field)" : "") << ", "
        << units(R).units.size() << " units\n";
    emit(ctx, j, out.str());
    return 0;
  }
  throw invalid_input("unknown ring action");
}

int run_verify(const Ctx& ctx, const std::string& id, const json& inst) {
  VerificationReport rep;
  if (id == "thm1")
    rep = verify_theorem1(ring_from_json(inst), ctx.caps);
  else if (id == "thm3")
    rep = verify_theorem3(ring_from_json(inst), ctx.caps);
  else if (id == "thm2") {
    AbelianGroup G = group_from_json(inst.at("group"));
    std::vector<Endo> gens;
    for (const auto& g : inst.at("generators")) {
      Endo t;
      for (const auto& v : g) t.push_back(v.get<int>());
      gens.push_back(std::move(t));
    }
    rep = verify_theorem2(G, AutGroup::from_generators(G, gens, ctx.caps.closure),
                          inst.at("p").get<int>(), ctx.caps);
  } else if (id == "thm4")
    rep = verify_theorem4(group_from_json(inst), ctx.caps);
  else if (id == "wielandt")
    rep = verify_wielandt(group_from_json(inst), ctx.caps);
  else if (id == "multiplier")
    rep = verify_schur_multiplier(group_from_json(inst), ctx.caps);
  else if (id == "lemma22")
    rep = verify_lemma_power(group_from_json(inst), ctx.caps);
  else if (id == "cor42")
    rep = verify_corollary_42(group_from_json(inst), ctx.caps);
  else if (id == "prop13")
    rep = verify_prop13(group_from_json(inst), ctx.caps);
  else if (id == "separating")
    rep = verify_separating(group_from_json(inst), ctx.caps);
  else if (id == "duality")
    rep = verify_duality(group_from_json(inst), ctx.caps);
  else if (id == "counterexample")
    rep = verify_counterexample(inst.at("p").get<int>(), ctx.caps);
  else
    throw invalid_input("unknown statement id \"" + id + "\"");
  emit(ctx, report_to_json(rep), report_text(rep));
  return report_exit(rep);
}

int run_counterexample(const Ctx& ctx, int p) {
  auto [R, A] = build_counterexample(p);
  json j{{"ring", ring_to_json(R)}, {"sring", sring_to_json(A)}, {"rank", A.rank()}};
  std::ostringstream out;
  out << "rank-3 quasiprimitive non-cyclotomic S-ring over Z_" << p << " x Z_" << p << "\n";
  for (const Subset& X : A.basic_sets) out << "  " << show_subset(A.group, X) << "\n";
  emit(ctx, j, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  CLI::App app{"Schur rings over finite abelian groups and finite commutative rings"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.as_json, "emit JSON instead of text");
  app.add_option("--cap-group", ctx.caps.group, "subgroup/automorphism scan cap")
      ->envname("SRK_CAP_GROUP");
  app.add_option("--cap-enum", ctx.caps.sring_enum, "S-ring enumeration cap")
      ->envname("SRK_CAP_ENUM");
  app.add_option("--cap-orbit", ctx.caps.orbit_blocks, "orbit-merge block cap")
      ->envname("SRK_CAP_ORBIT");
  app.add_option("--cap-closure", ctx.caps.closure, "table closure cap")
      ->envname("SRK_CAP_CLOSURE");
  bool seedless = true;
  app.add_flag("--seedless", seedless, "deterministic ordering (always on; reserved)");

  std::string instance;
  std::string verify_id;
  int ce_p = 3;

  auto* group = app.add_subcommand("group", "finite abelian group queries");
  for (auto [a, d] : {std::pair{"info", "order, exponent, canonical form"},
                      {"subgroups", "the full subgroup list"},
                      {"aut", "the automorphism group"}})
    group->add_subcommand(a, d)->add_option("--instance", instance, "group JSON")->required();

  auto* sring = app.add_subcommand("sring", "S-ring operations");
  for (auto [a, d] : {std::pair{"validate", "check the partition axioms"},
                      {"dual", "the dual S-ring on the character labels"},
                      {"radical", "radical and span of a subset"},
                      {"power-map", "the prime power map of a basic set"},
                      {"enumerate", "all S-rings, optionally orbit-stable for given maps"}})
    sring->add_subcommand(a, d)->add_option("--instance", instance, "instance JSON")->required();

  auto* ring = app.add_subcommand("ring", "finite commutative ring operations");
  for (auto [a, d] : {std::pair{"make", "construct and validate a ring"},
                      {"units", "the unit group"},
                      {"primary", "primary components"},
                      {"local-pairs", "all local pairs on a p-group, by conjugacy class"},
                      {"from-pair", "the local ring built from a local pair"}})
    ring->add_subcommand(a, d)->add_option("--instance", instance, "ring JSON")->required();

  auto* verify = app.add_subcommand("verify", "machine-check a named statement");
  verify->add_option("statement", verify_id, "statement id")->required();
  verify->add_option("--instance", instance, "instance JSON")->required();

  auto* ce = app.add_subcommand("counterexample", "rank-3 quasiprimitive S-ring over Z_p x Z_p");
  ce->add_option("--p", ce_p, "odd prime, at most 7")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto* top : {group, sring, ring})
      for (auto* sub : top->get_subcommands())
        if (sub->parsed()) {
          json inst = parse_instance(instance);
          if (top == group) return run_group(ctx, sub->get_name(), inst);
          if (top == sring) return run_sring(ctx, sub->get_name(), inst);
          return run_ring(ctx, sub->get_name(), inst);
        }
    if (verify->parsed()) return run_verify(ctx, verify_id, parse_instance(instance));
    if (ce->parsed()) return run_counterexample(ctx, ce_p);
    throw invalid_input("no subcommand given");
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
