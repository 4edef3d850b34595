#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "schreier/budget.hpp"
#include "schreier/error.hpp"
#include "schreier/families.hpp"
#include "schreier/json_io.hpp"
#include "schreier/norm.hpp"
#include "schreier/one_sets.hpp"
#include "schreier/oracle.hpp"
#include "schreier/properties.hpp"
#include "schreier/tingley.hpp"

using namespace schreier;
using json::Json;

namespace {

struct Config {
  std::string alpha = "1";
  std::string p = "1";
  std::string tolerance = "1e-12";
  std::string format = "json";
  bool oracle = false;
  unsigned budget = 0;
  unsigned jobs = 1;

  std::string set;
  std::string vec;
  std::string table;
  std::string signs;
  unsigned n = 0;
  bool only_maximal = false;
  std::string property;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  Index i = 0;
  Index j = 0;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidArgument, "cannot read " + path, {{"path", path}});
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "2,3,5", "[2,3,5]" or "" for the empty set.
FinSet parse_set(const std::string& text) {
  if (!text.empty() && text.front() == '[') return json::decode_set(json::parse(text));
  return json::decode_set(json::parse("[" + text + "]"));
}

// Inline JSON object or @path.
FinVector parse_vec(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "--vec is required");
  const std::string body = text.front() == '@' ? read_text(text.substr(1)) : text;
  return json::decode_vector(json::parse(body));
}

class Runner {
 public:
  explicit Runner(const Config& c)
      : c_(c),
        alpha_(parse_ordinal(c.alpha)),
        p_(Exponent::parse(c.p, Decimal(c.tolerance))),
        budget_(Budget::from_environment()) {
    if (!(Decimal(c.tolerance) > 0)) {
      throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    }
    if (c.budget > 0) {
      budget_.max_enumeration_bits = c.budget;
      budget_.max_support = c.budget;
    }
  }

  Json member() {
    const FinSet f = parse_set(c_.set);
    const bool fast = is_member(f, alpha_);
    if (c_.oracle) agree(fast == oracle::member_bruteforce(f, alpha_, budget_), "member");
    return Json{{"member", fast}};
  }

  Json maximal() {
    const FinSet f = parse_set(c_.set);
    const bool fast = is_maximal(f, alpha_);
    if (c_.oracle) agree(fast == oracle::maximal_bruteforce(f, alpha_, 4, budget_), "maximal");
    return Json{{"maximal", fast}};
  }

  Json decompose() {
    const FinSet g = parse_set(c_.set);
    const auto blocks = decompose_maximal(g, alpha_);
    if (c_.oracle) {
      const Ordinal beta = *classify(alpha_).predecessor;
      std::vector<Index> joined;
      bool ok = blocks.size() == g.min();
      for (const auto& b : blocks) {
        ok = ok && oracle::maximal_bruteforce(b, beta, 4, budget_);
        joined.insert(joined.end(), b.begin(), b.end());
      }
      agree(ok && joined == g.vec(), "decompose");
    }
    return Json{{"blocks", json::encode(blocks)}};
  }

  Json enumerate() {
    auto sets = c_.only_maximal ? enumerate_maximal(alpha_, c_.n, budget_)
                                : schreier::enumerate(alpha_, c_.n, budget_);
    if (c_.oracle) {
      std::vector<FinSet> slow;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c_.n); ++mask) {
        std::vector<Index> f;
        for (unsigned k = 0; k < c_.n; ++k) {
          if (mask >> k & 1) f.push_back(k + 1);
        }
        FinSet s(std::move(f));
        if (!oracle::member_bruteforce(s, alpha_, budget_)) continue;
        if (c_.only_maximal && (s.empty() || !oracle::maximal_bruteforce(s, alpha_, 4, budget_))) {
          continue;
        }
        slow.push_back(std::move(s));
      }
      std::sort(slow.begin(), slow.end());
      agree(slow == sets, "enumerate");
    }
    return Json{{"count", sets.size()}, {"sets", json::encode(sets)}};
  }

  Json norm_cmd() {
    const FinVector x = parse_vec(c_.vec);
    const NormValue v = norm(x, alpha_, p_, budget_);
    if (c_.oracle) {
      const NormValue slow = oracle::norm_bruteforce(x, alpha_, p_, budget_);
      agree(p_.is_exact() ? *v.pth_power == *slow.pth_power
                          : abs(v.value - slow.value) <= p_.tolerance(),
            "norm");
    }
    return json::encode(v);
  }

  Json norming_sets_cmd() {
    const FinVector x = parse_vec(c_.vec);
    const auto sets = norming_sets(x, alpha_, p_, budget_);
    if (c_.oracle) agree(sets == oracle::norming_sets_bruteforce(x, alpha_, p_, budget_), "norming-sets");
    return Json{{"sets", json::encode(sets)}};
  }

  Json one_sets_cmd() {
    const FinVector x = parse_vec(c_.vec);
    const OneSetReport r = analyze_one_sets(x, alpha_, budget_);
    if (c_.oracle) {
      agree(r.one_sets == oracle::norming_sets_bruteforce(x, alpha_, Exponent::exact(1), budget_),
            "one-sets");
    }
    return json::encode(r);
  }

  Json gap_cmd() {
    const FinVector x = parse_vec(c_.vec);
    const Rational g = gap(x, alpha_, budget_);
    if (c_.oracle) agree(g == gap_bruteforce(x), "gap");
    return Json{{"gap", to_string(g)}};
  }

  Json isometry_verify() {
    const MapTable t = load_table();
    validate_table(t, budget_);
    const VerificationReport iso = verify_isometry(t, budget_);
    if (c_.oracle) check_table_distances(t, iso.ok);
    Json out = Json::object();
    if (!c_.signs.empty()) {
      out["diagonal"] = json::encode(verify_diagonal(t, SignSeq::parse(c_.signs)));
    }
    out["isometry"] = json::encode(iso);
    return out;
  }

  Json isometry_extract() {
    const MapTable t = load_table();
    validate_table(t, budget_);
    const SignSeq theta = extract_signs(t, c_.n);
    if (c_.oracle) {
      bool ok = true;
      for (Index k = 1; k <= c_.n; ++k) {
        const FinVector e = FinVector::basis(k);
        for (const auto& [x, y] : t.pairs) {
          if (x == e) ok = ok && y == FinVector::basis(k, Rational(theta(k)));
        }
      }
      agree(ok, "isometry extract");
    }
    return Json{{"signs", json::encode(theta)}};
  }

  Json property_run() {
    PropertyOptions o;
    o.samples = c_.samples;
    o.seed = c_.seed;
    o.jobs = c_.jobs;
    o.budget = budget_;
    const PropertyOutcome r = run_property(c_.property, o);
    return Json{{"cases", r.cases},     {"examples", r.examples},     {"name", r.name},
                {"ok", r.ok()},         {"samples", r.samples},       {"skipped", r.skipped},
                {"violations", r.violations}};
  }

  Json property_list() { return Json{{"properties", property_names()}}; }

  Json witness_l3() {
    const FinVector u = parse_vec(c_.vec);
    const FinVector w = l3_witness(u, alpha_, p_, budget_);
    if (c_.oracle) {
      const auto above_one = [&](const FinVector& v) {
        return compare_norm(oracle::norm_bruteforce(v, alpha_, p_, budget_), 1) > 0;
      };
      agree(compare_norm(oracle::norm_bruteforce(w, alpha_, p_, budget_), 1) == 0 &&
                above_one(u + w) && above_one(u - w),
            "witness l3");
    }
    return Json{{"witness", json::encode(w)}};
  }

  Json witness_fact4() {
    const Fact4Witness w = fact4_witness(c_.i, c_.j, alpha_, budget_);
    if (c_.oracle) {
      const Exponent two = Exponent::exact(2);
      const auto sq = [&](const FinVector& v) {
        return *oracle::norm_bruteforce(v, alpha_, two, budget_).pth_power;
      };
      bool ok = sq(w.x) == 1;
      for (int s : {1, -1}) {
        ok = ok && sq(w.x + FinVector::basis(c_.i, Rational(s))) == 2 &&
             sq(w.x + FinVector::basis(c_.j, Rational(s))) < 2;
      }
      agree(ok, "witness fact4");
    }
    return Json{{"maximal_set", json::encode(w.maximal_set)}, {"witness", json::encode(w.x)}};
  }

 private:
  void agree(bool ok, const std::string& what) const {
    if (!ok) {
      throw Error(ErrorCode::OracleMismatch, what + " disagrees with the brute-force oracle",
                  {{"operation", what}});
    }
  }

  MapTable load_table() const {
    if (c_.table.empty()) throw Error(ErrorCode::InvalidArgument, "--table is required");
    return json::decode_table(json::parse(read_text(c_.table)));
  }

  Rational gap_bruteforce(const FinVector& x) const {
    const std::vector<Index> supp = x.support().vec();
    if (supp.size() > budget_.oracle_max_support) {
      throw Error(ErrorCode::ResourceLimit, "support too large for the oracle");
    }
    Rational best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << supp.size()); ++mask) {
      std::vector<Index> f;
      Rational sum = 0;
      for (std::size_t k = 0; k < supp.size(); ++k) {
        if (mask >> k & 1) {
          f.push_back(supp[k]);
          sum += abs(x(supp[k]));
        }
      }
      if (sum < 1 && sum > best && oracle::member_bruteforce(FinSet(std::move(f)), alpha_, budget_)) {
        best = sum;
      }
    }
    return 1 - best;
  }

  void check_table_distances(const MapTable& t, bool fast_ok) const {
    bool slow_ok = true;
    for (std::size_t a = 0; a < t.pairs.size(); ++a) {
      for (std::size_t b = a + 1; b < t.pairs.size(); ++b) {
        const NormValue before = oracle::norm_bruteforce(t.pairs[a].first - t.pairs[b].first, t.alpha, t.p, budget_);
        const NormValue after = oracle::norm_bruteforce(t.pairs[a].second - t.pairs[b].second, t.alpha, t.p, budget_);
        slow_ok = slow_ok && (t.p.is_exact() ? *before.pth_power == *after.pth_power
                                             : abs(before.value - after.value) <= t.p.tolerance());
      }
    }
    agree(slow_ok == fast_ok, "isometry verify");
  }

  const Config& c_;
  Ordinal alpha_;
  Exponent p_;
  Budget budget_;
};

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Schreier families, their p-convexified norms and sphere isometries"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alpha", c.alpha, "Countable ordinal below w^2, e.g. 2, w, w*2+1")->capture_default_str();
  app.add_option("--p", c.p, "Exponent: a positive integer (exact) or a decimal > 1")->capture_default_str();
  app.add_option("--tolerance", c.tolerance, "Comparison tolerance for decimal exponents")->capture_default_str();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();
  app.add_flag("--oracle", c.oracle, "Cross-check against the brute-force oracle");
  app.add_option("--budget", c.budget, "Override the enumeration and support caps");
  app.add_option("--jobs", c.jobs, "Worker threads for property sweeps")->check(CLI::PositiveNumber);

  std::function<Json(Runner&)> action;
  const auto bind = [&](CLI::App* sub, Json (Runner::*fn)()) {
    sub->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
  };

  auto* member = app.add_subcommand("member", "Membership in S_alpha");
  member->add_option("--set", c.set, "Finite set, e.g. 2,3,5")->required();
  bind(member, &Runner::member);

  auto* maximal = app.add_subcommand("maximal", "Maximality in S_alpha");
  maximal->add_option("--set", c.set)->required();
  bind(maximal, &Runner::maximal);

  auto* decompose = app.add_subcommand("decompose", "Block decomposition of a maximal set");
  decompose->add_option("--set", c.set)->required();
  bind(decompose, &Runner::decompose);

  auto* enumerate = app.add_subcommand("enumerate", "Members of S_alpha inside {1..n}");
  enumerate->add_option("--n", c.n)->required();
  enumerate->add_flag("--maximal", c.only_maximal, "Only maximal members");
  bind(enumerate, &Runner::enumerate);

  auto* norm = app.add_subcommand("norm", "Norm of a finitely supported vector");
  norm->add_option("--vec", c.vec, "JSON object index -> rational, or @file")->required();
  bind(norm, &Runner::norm_cmd);

  auto* norming = app.add_subcommand("norming-sets", "Sets attaining the norm");
  norming->add_option("--vec", c.vec)->required();
  bind(norming, &Runner::norming_sets_cmd);

  auto* ones = app.add_subcommand("one-sets", "1-sets, gap and non-maximal 1-set (p = 1)");
  ones->add_option("--vec", c.vec)->required();
  bind(ones, &Runner::one_sets_cmd);

  auto* gap = app.add_subcommand("gap", "Gap below 1 for sums over non-1-sets (p = 1)");
  gap->add_option("--vec", c.vec)->required();
  bind(gap, &Runner::gap_cmd);

  auto* isometry = app.add_subcommand("isometry", "Check a map given as a table of pairs");
  isometry->require_subcommand(1);
  auto* verify = isometry->add_subcommand("verify", "Distance preservation, and diagonal form with --signs");
  verify->add_option("--table", c.table, "JSON table file, - for stdin")->required();
  verify->add_option("--signs", c.signs, "Sign sequence, e.g. +,-,+");
  bind(verify, &Runner::isometry_verify);
  auto* extract = isometry->add_subcommand("extract", "Read signs off the images of e_1..e_n");
  extract->add_option("--table", c.table)->required();
  extract->add_option("--n", c.n)->required();
  bind(extract, &Runner::isometry_extract);

  auto* property = app.add_subcommand("property", "Randomized property sweeps");
  property->require_subcommand(1);
  auto* run = property->add_subcommand("run", "Run one sweep");
  run->add_option("name", c.property)->required();
  run->add_option("--samples", c.samples)->capture_default_str();
  run->add_option("--seed", c.seed)->capture_default_str();
  bind(run, &Runner::property_run);
  auto* list = property->add_subcommand("list", "Names of the sweeps");
  bind(list, &Runner::property_list);

  auto* witness = app.add_subcommand("witness", "Build a witness vector");
  witness->require_subcommand(1);
  auto* l3 = witness->add_subcommand("l3", "x on the sphere with ||u + x|| > 1 and ||u - x|| > 1");
  l3->add_option("--vec", c.vec, "The sphere point u")->required();
  bind(l3, &Runner::witness_l3);
  auto* fact4 = witness->add_subcommand("fact4", "x with ||x +- e_i||^2 = 2 and ||x +- e_j||^2 < 2 (p = 2)");
  fact4->add_option("--i", c.i)->required();
  fact4->add_option("--j", c.j)->required();
  bind(fact4, &Runner::witness_fact4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const int indent = c.format == "pretty" ? 2 : -1;
  try {
    Runner runner(c);
    std::cout << action(runner).dump(indent) << '\n';
    return 0;
  } catch (const Error& e) {
    std::cout << json::encode(e).dump(indent) << '\n';
    return 1;
  }
}
