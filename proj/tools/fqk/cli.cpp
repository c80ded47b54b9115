#include "fqk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/fusion_ring.hpp"
#include "fqk/json.hpp"
#include "fqk/ktheory.hpp"
#include "fqk/pv.hpp"
#include "fqk/subgroups.hpp"
#include "fqk/tensor_algebra.hpp"
#include "fqk/text.hpp"
#include "fqk/tree.hpp"

namespace fqk::cli {

namespace {

using nlohmann::json;
using Table = std::vector<std::vector<std::string>>;

void print_table(std::ostream& out, const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    std::size_t last = row.size();
    while (last > 0 && row[last - 1].empty()) --last;
    std::string line;
    for (std::size_t i = 0; i < last; ++i) {
      line += row[i];
      if (i + 1 < last) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i];
  }
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

FusionRing ring_of(const std::string& text) {
  return FusionRing::make(parse_spec(text));
}

void need_two_factors(const FusionRing& g) {
  if (g.factor_count() < 2) {
    throw DomainError("a free product of at least two factors is needed, got " +
                      g.name());
  }
}

Table report_rows(const KGroupReport& r) {
  Table t;
  t.push_back({"K0", r.k0.to_string(), join(r.k0.generators, ", ")});
  t.push_back({"K1", r.k1.to_string(), join(r.k1.generators, ", ")});
  t.push_back({"stabilized_at",
               r.stabilized_at ? std::to_string(*r.stabilized_at) : "-", ""});
  t.push_back({"route", r.route, ""});
  return t;
}

struct Options {
  bool json = false;
  std::string spec;
  std::string lhs;
  std::string rhs;
  int max_len = 0;
  std::string subgroup;
  int depth = -1;
  std::string side = "left";
  bool dot = false;
  std::string module;
  int degree = 4;
};

int cmd_fuse(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  const Irrep a = parse_word(o.lhs, g);
  const Irrep b = parse_word(o.rhs, g);
  const FormalSum s = g.fuse(a, b);
  if (o.json) {
    emit(out, {{"command", "fuse"},
               {"group", g.name()},
               {"lhs", render(g, a)},
               {"rhs", render(g, b)},
               {"terms", to_json(g, s)},
               {"text", render(g, s)}});
  } else {
    out << render(g, s) << "\n";
  }
  return kOk;
}

int cmd_conj(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  const Irrep a = parse_word(o.lhs, g);
  const Irrep c = g.conj(a);
  if (o.json) {
    emit(out, {{"command", "conj"},
               {"group", g.name()},
               {"irrep", render(g, a)},
               {"conj", render(g, c)}});
  } else {
    out << render(g, c) << "\n";
  }
  return kOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  const Irrep a = parse_word(o.lhs, g);
  const Integer d = g.dim(a);
  if (o.json) {
    emit(out, {{"command", "dim"},
               {"group", g.name()},
               {"irrep", render(g, a)},
               {"dim", to_json(d)}});
  } else {
    out << d << "\n";
  }
  return kOk;
}

int cmd_irr(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  if (o.max_len < 0) throw DomainError("negative --max-len");
  const auto irreps = g.irreps_up_to(o.max_len);
  std::vector<std::string> names;
  names.reserve(irreps.size());
  for (const auto& r : irreps) names.push_back(render(g, r));
  if (o.json) {
    emit(out, {{"command", "irr"},
               {"group", g.name()},
               {"max_len", o.max_len},
               {"count", names.size()},
               {"irreps", names}});
  } else {
    for (const auto& n : names) out << n << "\n";
  }
  return kOk;
}

int cmd_cosets(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  const SubgroupSpec h = parse_subgroup(o.subgroup, g);
  const int depth = o.depth < 0 ? 4 : o.depth;
  const Side side = o.side == "right" ? Side::Right : Side::Left;
  const auto cosets =
      cosets_up_to(g, h, depth, side, ClosureBudget::from_environment());
  if (o.json) {
    json list = json::array();
    for (const auto& c : cosets) list.push_back(to_json(g, c));
    emit(out, {{"command", "cosets"},
               {"group", g.name()},
               {"subgroup", o.subgroup},
               {"side", o.side},
               {"depth", depth},
               {"count", cosets.size()},
               {"cosets", list}});
    return kOk;
  }
  Table t{{"representative", "size", "members"}};
  for (const auto& c : cosets) {
    std::vector<std::string> members;
    for (const auto& m : c.members) members.push_back(render(g, m));
    t.push_back({"[" + render(g, c.representative) + "]",
                 std::to_string(c.members.size()), join(members, ", ")});
  }
  print_table(out, t);
  out << cosets.size() << " cosets up to depth " << depth << "\n";
  return kOk;
}

int cmd_divisible(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  const SubgroupSpec h = parse_subgroup(o.subgroup, g);
  const int depth = o.depth < 0 ? 4 : o.depth;
  const auto v = is_divisible(g, h, depth, ClosureBudget::from_environment());
  if (o.json) {
    json reps = json::array();
    for (const auto& [c, r] : v.representatives) {
      reps.push_back({{"coset", render(g, c.representative)},
                      {"representative", render(g, r)}});
    }
    json j = {{"command", "divisible"},
              {"group", g.name()},
              {"subgroup", o.subgroup},
              {"depth", depth},
              {"divisible", v.divisible},
              {"representatives", reps}};
    j["counterexample"] =
        v.counterexample ? to_json(g, *v.counterexample) : json(nullptr);
    emit(out, j);
    return kOk;
  }
  if (v.divisible) {
    out << "divisible up to depth " << depth << "\n";
    out << v.representatives.size() << " cosets certified\n";
  } else {
    const Coset& c = *v.counterexample;
    std::vector<std::string> members;
    for (const auto& m : c.members) members.push_back(render(g, m));
    out << "not divisible at depth " << depth << "\n";
    print_table(out, {{"coset", "[" + render(g, c.representative) + "]"},
                      {"members", join(members, ", ")}});
  }
  return kOk;
}

int cmd_tree(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  need_two_factors(g);
  const int depth = o.depth < 0 ? 4 : o.depth;
  const BassSerreGraph y = build_tree(g, 1, depth);
  const TreeVerdict v = verify_tree(y);
  if (o.dot) {
    out << to_dot(y);
    return kOk;
  }
  if (o.json) {
    json j = to_json(y);
    j["command"] = "tree";
    j["group"] = g.name();
    j["verdict"] = {{"kind", to_string(v.kind)},
                    {"witness_vertices", v.witness_vertices},
                    {"witness_edges", v.witness_edges}};
    emit(out, j);
    return kOk;
  }
  Table t{{"vertices", std::to_string(y.vertices.size())},
          {"edges", std::to_string(y.edges.size())},
          {"verdict", to_string(v.kind)}};
  if (!v.witness_edges.empty()) {
    std::vector<std::string> ws;
    for (auto e : v.witness_edges) ws.push_back(render(g, y.edges[e]));
    t.push_back({"witness", join(ws, ", ")});
  }
  if (!v.witness_vertices.empty()) {
    std::vector<std::string> ws;
    for (auto x : v.witness_vertices) {
      ws.push_back("[" + render(g, y.vertices[x].coset.representative) + "]_" +
                   std::to_string(y.vertices[x].quotient));
    }
    t.push_back({"witness", join(ws, ", ")});
  }
  print_table(out, t);
  return kOk;
}

void emit_report(const Options& o, const std::string& command,
                 const FusionRing& g, const KGroupReport& r, std::ostream& out) {
  if (o.json) {
    json j = to_json(r);
    j["command"] = command;
    j["group"] = g.name();
    emit(out, j);
  } else {
    print_table(out, report_rows(r));
  }
}

int cmd_ktree(const Options& o, std::ostream& out) {
  const FusionRing g = ring_of(o.spec);
  need_two_factors(g);
  const int depth = o.depth < 0 ? 5 : o.depth;
  emit_report(o, "ktree", g, k_of_tree_algebra(g, 1, depth), out);
  return kOk;
}

int cmd_kpv(const Options& o, std::ostream& out, std::ostream& err) {
  const FusionRing g = ring_of(o.spec);
  const PvSpec spec = PvSpec::from_ring(g);
  if (spec.has_fo2()) {
    err << "warning: FO(2) is outside the n > 2 range of the K-theory "
           "results; the sequence is evaluated formally\n";
  }
  CoefficientModule a = trivial_module(spec);
  if (!o.module.empty()) {
    std::ifstream in(o.module);
    if (!in) throw DomainError("cannot read module file " + o.module);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw SyntaxError(std::string("module file is not JSON: ") + e.what(),
                        e.byte == 0 ? 0 : e.byte - 1);
    }
    a = module_from_json(j);
  }
  emit_report(o, "kpv", g, pv_kgroups(spec, a), out);
  return kOk;
}

int cmd_rescheck(const Options& o, std::ostream& out, std::ostream& err) {
  const FusionRing g = ring_of(o.spec);
  const ResolutionVerdict v = tv_resolution_check(PvSpec::from_ring(g), o.degree);
  if (o.json) {
    emit(out, {{"command", "rescheck"},
               {"group", g.name()},
               {"max_degree", v.max_degree},
               {"exact", v.exact},
               {"words", v.words},
               {"pairs", v.pairs},
               {"checks", v.checks},
               {"witness", v.witness}});
  } else if (v.exact) {
    out << "exact up to degree " << v.max_degree << "\n";
    print_table(out, {{"words", std::to_string(v.words)},
                      {"pairs", std::to_string(v.pairs)},
                      {"checks", std::to_string(v.checks)}});
  }
  if (!v.exact) {
    err << "error: resolution check failed at " << v.witness << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fusion rings of free quantum groups and their K-theory", "fqk"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of aligned text");

  auto* fuse = app.add_subcommand("fuse", "Decompose a tensor product");
  fuse->add_option("spec", o.spec, "Group, e.g. \"FO(3)*Z\"")->required();
  fuse->add_option("lhs", o.lhs, "Left irrep")->required();
  fuse->add_option("rhs", o.rhs, "Right irrep")->required();

  auto* conj = app.add_subcommand("conj", "Conjugate irrep");
  conj->add_option("spec", o.spec, "Group")->required();
  conj->add_option("irrep", o.lhs, "Irrep")->required();

  auto* dim = app.add_subcommand("dim", "Classical dimension");
  dim->add_option("spec", o.spec, "Group")->required();
  dim->add_option("irrep", o.lhs, "Irrep")->required();

  auto* irr = app.add_subcommand("irr", "List irreps of the depth window");
  irr->add_option("spec", o.spec, "Group")->required();
  irr->add_option("--max-len", o.max_len, "Window depth")->required();

  auto* cosets = app.add_subcommand("cosets", "Coset space Irr(G)/Irr(H)");
  cosets->add_option("spec", o.spec, "Group")->required();
  cosets->add_option("--subgroup", o.subgroup,
                     "factor:<i>, fu-in-foz or fo-even")->required();
  cosets->add_option("--depth", o.depth, "Window depth (default 4)");
  cosets->add_option("--side", o.side, "left (G/H) or right (H\\G)")
      ->check(CLI::IsMember({"left", "right"}));

  auto* divisible = app.add_subcommand("divisible", "Divisibility test");
  divisible->add_option("spec", o.spec, "Group")->required();
  divisible->add_option("--subgroup", o.subgroup,
                        "factor:<i>, fu-in-foz or fo-even")->required();
  divisible->add_option("--depth", o.depth, "Window depth (default 4)");

  auto* tree = app.add_subcommand("tree", "Bass-Serre graph of G_0 * G_1");
  tree->add_option("spec", o.spec, "Group; G_0 is the first factor")->required();
  tree->add_option("--depth", o.depth, "Window depth (default 4)");
  tree->add_flag("--dot", o.dot, "Print DOT text");

  auto* ktree = app.add_subcommand("ktree", "K-theory of the tree algebra");
  ktree->add_option("spec", o.spec, "Group; G_0 is the first factor")->required();
  ktree->add_option("--depth", o.depth, "Window depth (default 5)");

  auto* kpv = app.add_subcommand("kpv", "K-theory via the PV sequence");
  kpv->add_option("spec", o.spec, "Free product of FU and FO blocks")->required();
  kpv->add_option("--module", o.module, "Coefficient module JSON file");

  auto* rescheck = app.add_subcommand("rescheck", "Check the TV resolution");
  rescheck->add_option("spec", o.spec, "Free product of FU and FO blocks")
      ->required();
  rescheck->add_option("--degree", o.degree, "Maximal degree (default 4)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (fuse->parsed()) return cmd_fuse(o, out);
    if (conj->parsed()) return cmd_conj(o, out);
    if (dim->parsed()) return cmd_dim(o, out);
    if (irr->parsed()) return cmd_irr(o, out);
    if (cosets->parsed()) return cmd_cosets(o, out);
    if (divisible->parsed()) return cmd_divisible(o, out);
    if (tree->parsed()) return cmd_tree(o, out);
    if (ktree->parsed()) return cmd_ktree(o, out);
    if (kpv->parsed()) return cmd_kpv(o, out, err);
    if (rescheck->parsed()) return cmd_rescheck(o, out, err);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace fqk::cli
