// Command-line front end: single checks on one group and JSON-specified
// batches over the catalog.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "pfusion/batch.hpp"
#include "pfusion/catalog.hpp"
#include "pfusion/criteria.hpp"
#include "pfusion/error.hpp"

using namespace pfusion;
using nlohmann::json;

namespace
{

struct Options
{
  std::size_t limit_order = default_element_limit;
  unsigned limit_lattice = 0u;
  std::string report;
  std::string quantifier = "universal";
  std::string fault = "none";

  std::string group;
  unsigned p = 0u;
  std::string kind = "max-abelian";
  std::string closed = "auto";
  std::string spec_path;
  bool full = false;
  bool list = false;
};

Config make_config(Options const &o)
{
  Config cfg;
  cfg.max_order = o.limit_order;
  if (o.limit_lattice != 0u)
    cfg.lattice_exponent = o.limit_lattice;
  cfg.quantifier = o.quantifier == "existential" ? Quantifier::Existential
                                                 : Quantifier::Universal;
  if (o.fault == "broken-dedup")
    cfg.fault = Fault::BrokenDedup;
  else if (o.fault == "corrupt-family")
    cfg.fault = Fault::CorruptFamily;
  return cfg;
}

void write_report(Options const &o, json const &doc)
{
  if (o.report.empty())
    return;
  std::ofstream out(o.report);
  if (!(out << doc.dump(2) << '\n'))
    throw Error(ErrorCode::InvalidArgument, "cannot write " + o.report);
}

std::string yesno(json const &j, char const *key)
{
  if (!j.contains(key))
    return "-";
  return j[key].get<bool>() ? "true" : "false";
}

void print_batch(json const &doc)
{
  for (auto const &r : doc["reports"]) {
    std::cout << r["group"].get<std::string>() << " p=" << r["prime"] << ' '
              << r["theorem"].get<std::string>();
    if (r.contains("D"))
      std::cout << " |D|=" << r["D"]["order"];
    std::cout << ": " << r["verdict"].get<std::string>();
    if (r.contains("lhs") || r.contains("rhs"))
      std::cout << " (lhs=" << yesno(r, "lhs") << " rhs=" << yesno(r, "rhs") << ')';
    std::cout << '\n';

    for (auto const &[name, value] : r["hypotheses"].items()) {
      if (value.is_boolean() && !value.get<bool>())
        std::cout << "  unmet: " << name << '\n';
    }
    for (auto const &c : r["claims"]) {
      if (!c["holds"].get<bool>())
        std::cout << "  claim fails: " << c["name"].get<std::string>() << '\n';
    }
    for (auto const &n : r["notes"])
      std::cout << "  note: " << n.get<std::string>() << '\n';
  }
  for (auto const &e : doc["errors"])
    std::cerr << "error: " << e["group"].get<std::string>() << ": "
              << e["message"].get<std::string>() << '\n';
  for (auto const &s : doc["skipped"]) {
    std::cout << "skipped: " << s["group"].get<std::string>();
    if (s.contains("prime"))
      std::cout << " p=" << s["prime"];
    std::cout << " (" << s["reason"].get<std::string>() << ")\n";
  }

  auto const &sum = doc["summary"];
  std::cout << "summary: " << sum["confirmed"] << " confirmed, " << sum["hypotheses_unmet"]
            << " hypotheses-unmet, " << sum["falsified"] << " FALSIFIED, " << sum["errors"]
            << " errors\n";
}

int run_single(Options const &o, std::vector<Check> checks)
{
  BatchSpec spec;
  spec.groups = {o.group};
  if (o.p != 0u)
    spec.primes = std::vector<unsigned>{o.p};
  spec.family = parse_family_kind(o.kind);
  spec.checks = std::move(checks);
  spec.closed = o.closed;
  spec.config = make_config(o);
  spec.output = o.report;

  auto res = run_batch(spec, 1u);
  print_batch(res.report);
  return res.exit_code;
}

int cmd_info(Options const &o)
{
  GroupFile file = resolve_group(o.group);
  Group G = file.group(o.limit_order);

  json doc = {{"name", file.name}, {"degree", file.degree}, {"group", to_json(G)},
              {"abelian", G.is_abelian()}};
  std::cout << file.name << ": degree " << file.degree << ", order " << G.order()
            << (G.is_abelian() ? ", abelian" : "") << '\n';
  for (auto const &g : file.generators)
    std::cout << "  gen " << g.str() << '\n';

  json primes = json::array();
  auto n = G.order();
  for (unsigned q = 2u; n > 1u; ++q) {
    if (n % q != 0u)
      continue;
    while (n % q == 0u)
      n /= q;
    Group P = sylow_subgroup(G, q);
    Group O = p_core(G, q);
    bool np = p_prime_generated(G, q).order() * P.order() == G.order();
    std::cout << "  p=" << q << ": |P|=" << P.order() << " |O_p(G)|=" << O.order()
              << (np ? " p-nilpotent" : "") << '\n';
    primes.push_back({{"prime", q}, {"sylow_order", P.order()}, {"p_core_order", O.order()},
                      {"p_nilpotent", np}});
  }
  doc["primes"] = primes;
  write_report(o, doc);
  return ExitOk;
}

int cmd_stability(Options const &o)
{
  Group G = resolve_group(o.group).group(o.limit_order);
  FusionContext ctx(G, o.p, make_config(o));
  auto r = is_p_stable(ctx, o.full);
  auto n = acts_p_stably_on_normal_p_subgroups(ctx);

  std::cout << o.group << " p=" << o.p << ": " << (r.stable ? "p-stable" : "not p-stable")
            << (r.by_shortcut ? " (abelian Sylow 2-subgroup)" : "") << '\n';
  if (r.witness)
    std::cout << "  witness: |Q|=" << r.witness->Q.order() << " g=" << r.witness->g << '\n';
  std::cout << "  on normal p-subgroups: " << (n.stable ? "p-stable" : "not p-stable") << '\n';

  json doc = {{"group", o.group}, {"prime", o.p}, {"p_stable", r.stable},
              {"by_shortcut", r.by_shortcut}, {"acts_p_stably_on_normal_p_subgroups", n.stable}};
  if (r.witness)
    doc["witness"] = {{"Q", to_json(r.witness->Q)}, {"g", r.witness->g.str()}};
  write_report(o, doc);
  return ExitOk;
}

int cmd_family(Options const &o)
{
  Group G = resolve_group(o.group).group(o.limit_order);
  FusionContext ctx(G, o.p, make_config(o));
  auto fam = build_family(ctx.lattice(), parse_family_kind(o.kind));

  std::cout << o.group << " p=" << o.p << " |P|=" << ctx.P().order() << ", " << fam.label()
            << ": " << fam.size() << " members\n";
  json members = json::array();
  for (auto const &A : fam.members()) {
    std::cout << "  order " << A.order() << ':';
    for (auto const &g : A.generators())
      std::cout << ' ' << g;
    std::cout << '\n';
    members.push_back(to_json(A));
  }

  Group I = family_meet(fam);
  Group ZJ = thompson_ZJ(ctx.lattice());
  std::cout << "  |I| = " << I.order() << ", |J(P)| = " << thompson_J(ctx.lattice()).order()
            << ", |Z(J(P))| = " << ZJ.order() << '\n';

  write_report(o, {{"group", o.group}, {"prime", o.p}, {"family", fam.label()},
                   {"members", members}, {"meet", to_json(I)}, {"ZJ", to_json(ZJ)}});
  return ExitOk;
}

int cmd_batch(Options const &o)
{
  BatchSpec spec = read_batch_spec(o.spec_path);
  Config cfg = make_config(o);
  cfg.quantifier = spec.config.quantifier;
  if (o.quantifier == "existential")
    cfg.quantifier = Quantifier::Existential;
  spec.config = cfg;
  if (!o.report.empty())
    spec.output = o.report;

  auto res = run_batch(spec);
  print_batch(res.report);
  return res.exit_code;
}

int cmd_list()
{
  for (auto const &f : builtin_catalog())
    std::cout << f.name << '\n';
  return ExitOk;
}

} // anonymous namespace

int main(int argc, char **argv)
{
  CLI::App app{"Fusion systems of finite permutation groups and their nilpotency criteria"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tool_version));

  Options o;
  app.add_option("--limit-order", o.limit_order, "Largest group order to enumerate")
    ->check(CLI::PositiveNumber);
  app.add_option("--limit-lattice", o.limit_lattice,
                 "Largest e with |P| <= p^e for subgroup lattices")
    ->check(CLI::PositiveNumber);
  app.add_option("--report", o.report, "Write a JSON report to this path");
  app.add_option("--strict-quantifier", o.quantifier,
                 "Reading of the replacement-closure condition")
    ->check(CLI::IsMember({"universal", "existential"}));
  app.add_option("--inject-fault", o.fault)
    ->check(CLI::IsMember({"none", "broken-dedup", "corrupt-family"}))
    ->group("");

  auto group_cmd = [&](char const *name, char const *desc, bool prime) {
    auto *cmd = app.add_subcommand(name, desc);
    cmd->add_option("group", o.group, "Catalog name or group file")->required();
    auto *p = cmd->add_option("-p,--prime", o.p, "Prime");
    if (prime)
      p->required();
    return cmd;
  };

  auto *info = group_cmd("info", "Order, generators and Sylow data", false);
  auto *nil = group_cmd("nilpotency", "Nilpotency of the fusion system, three ways", false);
  auto *stab = group_cmd("stability", "p-stability", true);
  stab->add_flag("--full", o.full, "Skip the abelian Sylow 2-subgroup shortcut");
  auto *family = group_cmd("family", "Abelian subgroup family of a Sylow subgroup", true);
  family->add_option("--kind", o.kind, "all-abelian, max-abelian or max-elementary-abelian");
  auto *a = group_cmd("check-a", "Nilpotency criterion via I_A", false);
  a->add_option("--kind", o.kind, "Family kind");
  auto *b = group_cmd("check-b", "Nilpotency criterion via I_{A|D}", false);
  b->add_option("--kind", o.kind, "Family kind");
  b->add_option("--closed", o.closed, "auto, P, 1, or generators of D separated by ';'");
  auto *zj = group_cmd("zj", "Normality of I_A and I_{A|D} in G", false);
  zj->add_option("--kind", o.kind, "Family kind");
  zj->add_option("--closed", o.closed, "auto, P, 1, or generators of D separated by ';'");
  auto *gt = group_cmd("gt", "p-nilpotency of G against N_G(Z(J(P)))", false);
  auto *rep = group_cmd("replacement", "Exhaustive replacement scan in a Sylow subgroup", false);
  auto *batch = app.add_subcommand("batch", "Run a JSON batch spec");
  batch->add_option("--spec", o.spec_path, "Batch spec file")->required();
  auto *list = app.add_subcommand("list", "List catalog groups");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(o);
    if (*nil) return run_single(o, {Check::Frobenius});
    if (*stab) return cmd_stability(o);
    if (*family) return cmd_family(o);
    if (*a) return run_single(o, {Check::TheoremA});
    if (*b) return run_single(o, {Check::TheoremB});
    if (*zj) return run_single(o, {Check::ZJ});
    if (*gt) return run_single(o, {Check::GlaubermanThompson});
    if (*rep) return run_single(o, {Check::Replacement});
    if (*batch) return cmd_batch(o);
    if (*list) return cmd_list();
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_internal() ? ExitFalsified : ExitInputError;
  }
  return ExitOk;
}
