// Command-line surface: compute invariants, build and classify fibrations,
// apply dualities, inspect lattices and graphs, and run the reproduction
// suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "k3/curvegraph.hpp"
#include "k3/doublesextic.hpp"
#include "k3/duality.hpp"
#include "k3/json_io.hpp"
#include "k3/lattices.hpp"
#include "k3/moduli.hpp"
#include "k3/quartics.hpp"
#include "k3/verify.hpp"

using namespace k3;
using nlohmann::json;

namespace {

json read_input(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return json::parse(inline_json);
  if (path.empty()) throw CLI::ValidationError("provide --in FILE or --json '{...}'");
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("cannot open " + path);
  return json::parse(f);
}

Family parse_family(const std::string& s) {
  if (s == "P") return Family::P;
  if (s == "Pprime" || s == "P'") return Family::PPrime;
  if (s == "Psecond" || s == "P''") return Family::PSecond;
  throw CLI::ValidationError("unknown family " + s + " (P, Pprime, Psecond)");
}

json lattice_report(const IntLattice& L) {
  auto inv = lattice_invariants(L);
  json q = json::array();
  for (const auto& row : inv.disc.q) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    q.push_back(r);
  }
  json factors = json::array();
  for (const auto& f : inv.disc.invariant_factors) factors.push_back(f.get_str());
  return json{{"label", L.label},
              {"rank", inv.rank},
              {"signature", {inv.sig_pos, inv.sig_neg}},
              {"discriminant_group", inv.disc.group_str()},
              {"invariant_factors", factors},
              {"q_values", q},
              {"two_elementary", inv.two_elementary},
              {"parity", inv.disc.even ? "even" : "odd"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact models, fibrations, lattices and dual graphs of the rank-14 "
               "quartic K3 families"};
  app.require_subcommand(1);
  std::string family = "P", fibration = "alternate", in_path, inline_json, format = "json";
  uint64_t seed = 20260810;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input JSON file");
    cmd->add_option("--json", inline_json, "inline JSON payload");
  };

  auto* inv = app.add_subcommand("invariants", "moduli invariants of a coefficient tuple");
  inv->add_option("--family", family, "P | Pprime | Psecond")->capture_default_str();
  add_io(inv);

  auto* fib = app.add_subcommand("fibration", "Weierstrass model of a fibration");
  fib->add_option("--family", family)->capture_default_str();
  fib->add_option("--fibration", fibration,
                  "alternate | standard | base_fiber_dual | base_fiber_dual_prime | maximal")
      ->capture_default_str();
  add_io(fib);

  auto* cls = app.add_subcommand("classify", "Kodaira fiber configuration of a fibration");
  cls->add_option("--family", family)->capture_default_str();
  cls->add_option("--fibration", fibration)->capture_default_str();
  cls->add_flag("--model", "input is a Weierstrass model {a2,a4,a6[,k]} instead of a tuple");
  add_io(cls);

  auto* dual = app.add_subcommand("dualize", "Van Geemen-Sarti quotient or moduli involution");
  add_io(dual);

  auto* lat = app.add_subcommand("lattice", "invariants of a lattice expression");
  std::string lattice_expr = "H + E8(-1) + A1(-1)^4";
  lat->add_option("expr", lattice_expr, "e.g. \"H + E8(-1) + A1(-1)^4\"")
      ->capture_default_str();

  auto* gr = app.add_subcommand("graph", "dual graphs of rational curves");
  std::string graph_id = "P14", embed;
  gr->add_option("--id", graph_id, "P14 | Pprime14 | Psecond14 | P15 | P16")
      ->capture_default_str();
  gr->add_option("--embed", embed, "highlight a fibration embedding by name prefix");
  gr->add_option("--format", format, "json | dot | text")->capture_default_str();

  auto* ver = app.add_subcommand("verify-all", "run the full reproduction suite");
  ver->add_option("--seed", seed, "seed for generic-point draws")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) {
      json j = read_input(in_path, inline_json);
      ModuliPoint p = [&] {
        switch (parse_family(family)) {
          case Family::P: return invariants_P(coeffsP_from_json(j));
          case Family::PPrime: return invariants_PPrime(coeffsPPrime_from_json(j));
          case Family::PSecond: return invariants_Vinberg(vinberg_from_json(j));
        }
        throw std::logic_error("unreachable");
      }();
      std::cout << to_json(p).dump(2) << "\n";
      return 0;
    }
    if (fib->parsed() || cls->parsed()) {
      auto id = parse_fibration(fibration);
      if (!id) throw CLI::ValidationError("unknown fibration " + fibration);
      json j = read_input(in_path, inline_json);
      WeierstrassModel m = [&] {
        if (cls->parsed() && cls->count("--model")) return model_from_json(j);
        switch (parse_family(family)) {
          case Family::P: return fibration_model(*id, coeffsP_from_json(j));
          case Family::PPrime: return fibration_model(*id, coeffsPPrime_from_json(j));
          case Family::PSecond: return fibration_model(*id, vinberg_from_json(j));
        }
        throw std::logic_error("unreachable");
      }();
      if (fib->parsed()) {
        std::cout << to_json(m).dump(2) << "\n";
        return 0;
      }
      std::cout << to_json(classify_fibers(m)).dump(2) << "\n";
      return 0;
    }
    if (dual->parsed()) {
      json j = read_input(in_path, inline_json);
      if (j.contains("a") || j.contains("a2")) {
        // two-torsion model {a, b} (or {a2, a4}): Weierstrass-level quotient
        TwoTorsionModel m{unipoly_from_json(j.contains("a") ? j.at("a") : j.at("a2")),
                          unipoly_from_json(j.contains("b") ? j.at("b") : j.at("a4"))};
        TwoTorsionModel q = vgs_quotient(m);
        std::cout << json{{"a", to_json(q.a)}, {"b", to_json(q.b)}}.dump(2) << "\n";
        return 0;
      }
      ModuliPoint p = moduli_from_json(j);
      std::cout << to_json(iota_prime(p)).dump(2) << "\n";
      return 0;
    }
    if (lat->parsed()) {
      std::cout << lattice_report(build_lattice(lattice_expr)).dump(2) << "\n";
      return 0;
    }
    if (gr->parsed()) {
      auto id = parse_graph_id(graph_id);
      if (!id) throw CLI::ValidationError("unknown graph id " + graph_id);
      const CurveGraph& g = builtin_graph(*id);
      const FibrationEmbedding* highlight = nullptr;
      for (const auto& e : builtin_embeddings(*id))
        if (!embed.empty() && e.name.rfind(embed, 0) == 0) highlight = &e;
      if (!embed.empty() && !highlight)
        throw CLI::ValidationError("no embedding named " + embed + " on " + graph_id);
      if (format == "dot") {
        std::cout << emit_dot(g, highlight);
      } else if (format == "text") {
        auto ginv = graph_lattice_invariants(g);
        std::cout << g.id << ": " << g.nodes.size() << " nodes, " << g.edges.size()
                  << " edges; quotient rank " << ginv.rank << ", D = "
                  << ginv.disc.group_str() << "\n";
        for (const auto& e : builtin_embeddings(*id)) {
          auto rep = fiber_embedding_check(g, e);
          std::cout << "  " << e.name << ": " << (rep.ok ? "ok" : rep.first_failure) << "\n";
        }
      } else {
        json nodes = json::array();
        for (const auto& nd : g.nodes) nodes.push_back(nd);
        json edges = json::array();
        for (const auto& [e, m2] : g.edges)
          edges.push_back(json{{"u", g.nodes[e.first]}, {"v", g.nodes[e.second]}, {"m", m2}});
        std::cout << json{{"id", g.id}, {"nodes", nodes}, {"edges", edges}}.dump(2) << "\n";
      }
      return 0;
    }
    if (ver->parsed()) {
      auto results = run_checks(acceptance_checks(seed));
      int failed = 0;
      for (const auto& r : results) {
        std::printf("[%s] %-28s %s -- %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                    r.citation.c_str(), r.detail.c_str());
        if (!r.passed) ++failed;
      }
      std::printf("%zu checks, %d failed (seed %llu)\n", results.size(), failed,
                  static_cast<unsigned long long>(seed));
      return failed == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "usage error: malformed input JSON (" << e.what()
              << "); see the schemas in README.md\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
