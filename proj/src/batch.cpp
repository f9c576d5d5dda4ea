#include "pfusion/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "pfusion/catalog.hpp"
#include "pfusion/error.hpp"

namespace pfusion
{

using nlohmann::json;

namespace
{

struct CheckTag
{
  Check check;
  char const *tag;
};

constexpr CheckTag check_tags[] = {
  {Check::Frobenius, "frobenius"},
  {Check::GlaubermanThompson, "gt"},
  {Check::TheoremA, "theorem-a"},
  {Check::TheoremB, "theorem-b"},
  {Check::ZJ, "zj"},
  {Check::Replacement, "replacement"},
};

char const *quantifier_name(Quantifier q)
{
  return q == Quantifier::Universal ? "universal" : "existential";
}

Quantifier parse_quantifier(std::string const &tag)
{
  if (tag == "universal")
    return Quantifier::Universal;
  if (tag == "existential")
    return Quantifier::Existential;
  throw Error(ErrorCode::InvalidArgument, "unknown quantifier '" + tag + "'");
}

char const *fault_name(Fault f)
{
  switch (f) {
  case Fault::None:          return "none";
  case Fault::BrokenDedup:   return "broken-dedup";
  case Fault::CorruptFamily: return "corrupt-family";
  }
  return "none";
}

std::vector<unsigned> odd_prime_divisors(std::size_t n)
{
  std::vector<unsigned> res;
  for (unsigned q = 3u; n > 1u && q <= n; q += 2u) {
    if (n % q == 0u) {
      res.push_back(q);
      while (n % q == 0u)
        n /= q;
    }
  }
  return res;
}

bool needs_odd_prime(Check c)
{
  return c != Check::Frobenius;
}

json witness_json(InvarianceWitness const &w)
{
  return {{"Q", to_json(w.Q)}, {"g", w.g.str()}};
}

json witness_json(NormalisationWitness const &w)
{
  json j = {{"B", to_json(w.B)}, {"A", to_json(w.A)}, {"b", w.b.str()}};
  if (w.replacement)
    j["replacement"] = to_json(*w.replacement);
  return j;
}

json hypotheses_json(HypothesisReport const &h)
{
  json j = json::object();
  auto put = [&](char const *key, std::optional<bool> const &v) {
    if (v)
      j[key] = *v;
  };
  put("p_odd", h.p_odd);
  put("family_abelian", h.family_abelian);
  put("condition_i", h.condition_i);
  put("condition_ii", h.condition_ii);
  put("strongly_closed_D", h.strongly_closed_D);
  put("model_condition", h.model_condition);
  put("p_stable", h.p_stable);
  put("acts_p_stably", h.acts_p_stably);
  if (!h.condition_ii_variant.empty())
    j["condition_ii_variant"] = h.condition_ii_variant;
  if (h.condition_i_witness)
    j["condition_i_witness"] = witness_json(*h.condition_i_witness);
  if (h.condition_ii_witness)
    j["condition_ii_witness"] = witness_json(*h.condition_ii_witness);
  return j;
}

// Result of one (group, prime) item.
struct ItemResult
{
  std::vector<VerificationReport> reports;
  std::optional<Error> error;
  std::vector<std::string> notes;
};

struct Item
{
  std::string group;
  Group G;
  unsigned p;
};

std::vector<Group> closed_subgroups(FusionContext const &ctx, std::string const &closed)
{
  if (closed == "auto")
    return strongly_closed_subgroups(ctx);
  if (closed == "P")
    return {ctx.P()};
  if (closed == "1")
    return {Group::trivial(ctx.G().degree())};

  std::vector<Perm> gens;
  std::stringstream ss(closed);
  std::string part;
  while (std::getline(ss, part, ';'))
    gens.push_back(parse_perm(ctx.G().degree(), part));
  Group D = subgroup_generated(ctx.G(), gens);
  if (!D.is_subgroup_of(ctx.P()))
    throw Error(ErrorCode::NotInP, "D = <" + closed + "> is not contained in P");
  return {D};
}

ItemResult run_item(Item const &item, BatchSpec const &spec)
{
  ItemResult res;
  try {
    FusionContext ctx(item.G, item.p, spec.config);
    auto const family = build_family(ctx.lattice(), spec.family);

    auto add = [&](VerificationReport r) {
      r.group = item.group;
      res.reports.push_back(std::move(r));
    };

    for (auto check : spec.checks) {
      switch (check) {
      case Check::Frobenius:
        add(verify_frobenius(ctx));
        break;
      case Check::GlaubermanThompson:
        add(verify_glauberman_thompson(ctx));
        break;
      case Check::TheoremA:
        add(verify_theorem_A(ctx, family));
        add(verify_np_lemma(ctx, family));
        break;
      case Check::TheoremB:
        for (auto const &D : closed_subgroups(ctx, spec.closed)) {
          add(verify_theorem_B(ctx, family, D));
          add(verify_np_lemma(ctx, family, D));
        }
        break;
      case Check::ZJ: {
        auto base = verify_zj_normality(ctx, family);
        add(std::move(base.front()));
        for (auto const &D : closed_subgroups(ctx, spec.closed)) {
          auto reps = verify_zj_normality(ctx, family, D);
          for (std::size_t i = 1u; i < reps.size(); ++i)
            add(std::move(reps[i]));
        }
        break;
      }
      case Check::Replacement:
        add(verify_replacement(ctx));
        break;
      }

      if (!res.reports.empty() && res.reports.back().verdict == Verdict::Falsified)
        break;
    }
  } catch (Error const &e) {
    res.error = e;
  }
  return res;
}

bool is_fatal(ItemResult const &r)
{
  if (r.error && r.error->is_internal())
    return true;
  return std::any_of(r.reports.begin(), r.reports.end(),
                     [](auto const &rep) { return rep.verdict == Verdict::Falsified; });
}

std::string timestamp()
{
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

} // anonymous namespace

char const *check_name(Check check)
{
  for (auto const &t : check_tags) {
    if (t.check == check)
      return t.tag;
  }
  return "?";
}

Check parse_check(std::string const &tag)
{
  for (auto const &t : check_tags) {
    if (tag == t.tag)
      return t.check;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown check '" + tag + "'");
}

BatchSpec parse_batch_spec(json const &doc)
{
  if (!doc.is_object())
    throw Error(ErrorCode::ParseError, "batch spec must be an object");

  BatchSpec spec;
  try {
    for (auto const &[key, value] : doc.items()) {
      if (key == "groups") {
        spec.groups = value.get<std::vector<std::string>>();
      } else if (key == "primes") {
        if (value.is_string()) {
          if (value.get<std::string>() != "all-odd")
            throw Error(ErrorCode::InvalidArgument, "primes must be \"all-odd\" or a list");
        } else {
          spec.primes = value.get<std::vector<unsigned>>();
        }
      } else if (key == "family") {
        spec.family = parse_family_kind(value.get<std::string>());
        if (spec.family == FamilyKind::Custom)
          throw Error(ErrorCode::InvalidArgument, "custom families cannot be used in a batch");
      } else if (key == "checks") {
        for (auto const &c : value.get<std::vector<std::string>>())
          spec.checks.push_back(parse_check(c));
      } else if (key == "output") {
        spec.output = value.get<std::string>();
      } else if (key == "quantifier") {
        spec.config.quantifier = parse_quantifier(value.get<std::string>());
      } else if (key == "closed") {
        spec.closed = value.get<std::string>();
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown batch spec key '" + key + "'");
      }
    }
  } catch (json::exception const &e) {
    throw Error(ErrorCode::ParseError, std::string("batch spec: ") + e.what());
  }

  if (spec.groups.empty())
    throw Error(ErrorCode::InvalidArgument, "batch spec lists no groups");
  if (spec.checks.empty())
    throw Error(ErrorCode::InvalidArgument, "batch spec lists no checks");
  return spec;
}

BatchSpec read_batch_spec(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return parse_batch_spec(json::parse(in));
  } catch (json::exception const &e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

json spec_to_json(BatchSpec const &spec)
{
  json j;
  j["groups"] = spec.groups;
  if (spec.primes)
    j["primes"] = *spec.primes;
  else
    j["primes"] = "all-odd";
  j["family"] = family_kind_name(spec.family);
  j["checks"] = json::array();
  for (auto c : spec.checks)
    j["checks"].push_back(check_name(c));
  j["output"] = spec.output;
  j["closed"] = spec.closed;
  j["quantifier"] = quantifier_name(spec.config.quantifier);
  j["limit_order"] = spec.config.max_order;
  if (spec.config.lattice_exponent)
    j["limit_lattice"] = *spec.config.lattice_exponent;
  if (spec.config.fault != Fault::None)
    j["fault"] = fault_name(spec.config.fault);
  return j;
}

json to_json(Group const &H)
{
  json gens = json::array();
  for (auto const &g : H.generators())
    gens.push_back(g.str());
  return {{"order", H.order()}, {"generators", gens}};
}

json to_json(VerificationReport const &r)
{
  json j;
  j["theorem"] = r.theorem;
  j["group"] = r.group;
  j["prime"] = r.prime;
  if (!r.family.empty())
    j["family"] = r.family;
  if (r.D)
    j["D"] = to_json(*r.D);
  j["hypotheses"] = hypotheses_json(r.hypotheses);
  if (r.lhs)
    j["lhs"] = *r.lhs;
  if (r.rhs)
    j["rhs"] = *r.rhs;
  j["claims"] = json::array();
  for (auto const &c : r.claims)
    j["claims"].push_back({{"name", c.name}, {"holds", c.holds}});
  j["notes"] = r.notes;
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

std::string deterministic_dump(json const &report)
{
  json copy = report;
  copy.erase("run_info");
  return copy.dump(2);
}

BatchResult run_batch(BatchSpec const &spec, unsigned threads)
{
  auto start = std::chrono::steady_clock::now();

  json errors = json::array();
  json skipped = json::array();
  bool input_error = false;

  auto error_entry = [](std::string const &group, std::optional<unsigned> p, Error const &e) {
    json j = {{"group", group}, {"code", error_code_name(e.code())}, {"message", e.what()}};
    if (p)
      j["prime"] = *p;
    return j;
  };

  // Resolve groups and primes up front, in spec order.
  std::vector<Item> items;
  for (auto const &name : spec.groups) {
    try {
      GroupFile file = resolve_group(name);
      Group G = file.group(spec.config.max_order);

      std::vector<unsigned> primes;
      if (spec.primes) {
        for (auto p : *spec.primes) {
          if (!is_prime(p))
            throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
          if (p == 2u && std::any_of(spec.checks.begin(), spec.checks.end(), needs_odd_prime))
            throw Error(ErrorCode::InvalidArgument, "theorem checks need an odd prime");
          if (G.order() % p != 0u) {
            skipped.push_back({{"group", file.name}, {"prime", p},
                               {"reason", "p does not divide |G|"}});
            continue;
          }
          primes.push_back(p);
        }
      } else {
        primes = odd_prime_divisors(G.order());
        if (primes.empty())
          skipped.push_back({{"group", file.name}, {"reason", "no odd prime divides |G|"}});
      }

      for (auto p : primes)
        items.push_back({file.name, G, p});
    } catch (Error const &e) {
      errors.push_back(error_entry(name, std::nullopt, e));
      input_error = true;
    }
  }

  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0u};
  std::atomic<std::size_t> first_fatal{items.size()};

  auto worker = [&] {
    for (;;) {
      auto i = next.fetch_add(1u);
      if (i >= items.size())
        return;
      if (i > first_fatal.load())
        continue;

      results[i] = run_item(items[i], spec);
      if (is_fatal(results[i])) {
        auto cur = first_fatal.load();
        while (i < cur && !first_fatal.compare_exchange_weak(cur, i)) {}
      }
    }
  };

  if (threads == 0u)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(items.size(), 1u));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0u; t < threads; ++t)
      pool.emplace_back(worker);
  }

  // Single writer, spec order.
  json reports = json::array();
  json timings = json::array();
  std::size_t counts[3] = {0u, 0u, 0u};
  bool fatal = false;
  std::size_t aborted = 0u;
  auto const stop = first_fatal.load();

  for (std::size_t i = 0u; i < items.size(); ++i) {
    if (i > stop) {
      skipped.push_back({{"group", items[i].group}, {"prime", items[i].p},
                         {"reason", "aborted after a fatal result"}});
      ++aborted;
      continue;
    }

    auto const &r = results[i];
    for (auto const &rep : r.reports) {
      reports.push_back(to_json(rep));
      timings.push_back({{"group", rep.group}, {"prime", rep.prime}, {"theorem", rep.theorem},
                         {"elapsed_ms", rep.elapsed_ms}});
      ++counts[static_cast<int>(rep.verdict)];
    }
    if (r.error) {
      errors.push_back(error_entry(items[i].group, items[i].p, *r.error));
      if (r.error->is_internal())
        fatal = true;
      else
        input_error = true;
    }
  }
  fatal = fatal || counts[static_cast<int>(Verdict::Falsified)] > 0u;

  int exit_code = fatal ? ExitFalsified
                : input_error ? ExitInputError
                : counts[static_cast<int>(Verdict::HypothesesUnmet)] > 0u ? ExitHypothesesUnmet
                : ExitOk;

  json report;
  report["tool_version"] = tool_version;
  report["spec"] = spec_to_json(spec);
  report["reports"] = reports;
  report["errors"] = errors;
  report["skipped"] = skipped;
  report["summary"] = {
    {"items", items.size()},
    {"reports", reports.size()},
    {"confirmed", counts[static_cast<int>(Verdict::Confirmed)]},
    {"hypotheses_unmet", counts[static_cast<int>(Verdict::HypothesesUnmet)]},
    {"falsified", counts[static_cast<int>(Verdict::Falsified)]},
    {"errors", errors.size()},
    {"aborted", aborted},
    {"exit_code", exit_code},
  };
  report["run_info"] = {
    {"timestamp", timestamp()},
    {"threads", threads},
    {"elapsed_ms",
     std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()},
    {"timings", timings},
  };

  if (!spec.output.empty()) {
    std::ofstream out(spec.output);
    if (!out || !(out << report.dump(2) << '\n')) {
      report["errors"].push_back({{"group", ""}, {"code", "InvalidArgument"},
                                  {"message", "cannot write " + spec.output}});
      if (exit_code != ExitFalsified)
        exit_code = ExitInputError;
      report["summary"]["exit_code"] = exit_code;
    }
  }

  return {std::move(report), exit_code};
}

} // namespace pfusion
