#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coordgame/analysis.hpp"
#include "coordgame/classify.hpp"
#include "coordgame/color_forest.hpp"
#include "coordgame/deviation.hpp"
#include "coordgame/dynamics.hpp"
#include "coordgame/error.hpp"
#include "coordgame/instances.hpp"
#include "coordgame/io.hpp"
#include "coordgame/solvers.hpp"

using namespace coordgame;

namespace {

enum Exit { kHolds = 0, kRefuted = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string instance;
  std::string profile;
  std::vector<int> ks;
  std::string method = "auto";
  std::string scheduler = "first-found";
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultBudget;
  std::size_t steps = 10'000;
  std::string potential;
  std::string format = "text";
  std::string out;
};

class Clock {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct Session {
  Options opt;
  Instance inst;
  std::ostream* out;
  ReportWriter writer;

  ReportRecord record(std::string property, std::string value, std::optional<int> k = {},
                      std::string witness = {}, double ms = 0) const {
    return {inst.name,
            inst.game.node_count(),
            inst.game.palette().size(),
            k,
            std::move(property),
            std::move(value),
            std::move(witness),
            ms};
  }
  void emit(std::string property, std::string value, std::optional<int> k = {},
            std::string witness = {}, double ms = 0) {
    writer.write(record(std::move(property), std::move(value), k, std::move(witness), ms));
  }
};

JointStrategy start_profile(const Session& s, bool fallback_first) {
  if (!s.opt.profile.empty()) return load_profile(s.inst, s.opt.profile);
  if (s.inst.profile) return *s.inst.profile;
  if (fallback_first) return JointStrategy::first_colors(s.inst.game);
  throw InvalidArgument("no profile: pass --profile or use an instance that carries one");
}

int single_k(const Session& s, int fallback) {
  if (s.opt.ks.empty()) return fallback;
  if (s.opt.ks.size() > 1) throw InvalidArgument("this command takes a single --k");
  return s.opt.ks.front();
}

int cmd_verify(Session& s) {
  Clock clock;
  const JointStrategy profile = start_profile(s, false);
  const int k = single_k(s, s.inst.game.node_count());
  const std::string& m = s.opt.method;
  std::optional<DeviationReport> witness;
  if (m == "colorforest" ||
      (m == "auto" && is_color_forest(s.inst.game.graph(), s.inst.game.assignment()))) {
    witness = verify_color_forest(s.inst.game, profile, k).witness;
  } else if (m == "auto" || m == "brute") {
    witness = is_k_equilibrium(s.inst.game, profile, k, s.opt.budget).witness;
  } else {
    throw InvalidArgument("verify supports --method auto, colorforest or brute");
  }
  s.emit("k-equilibrium", witness ? "false" : "true", k,
         witness ? format_witness(s.inst, *witness) : "", clock.ms());
  return witness ? kRefuted : kHolds;
}

int cmd_solve(Session& s) {
  Clock clock;
  AutoSolution sol = s.opt.method == "auto"
                         ? solve_auto(s.inst.game, s.opt.budget)
                         : solve_with(s.inst.game, parse_method(s.opt.method), s.opt.budget);
  const double ms = clock.ms();
  s.emit("method", method_name(sol.method));
  if (!sol.profile) {
    s.emit("strong-equilibrium", "none", {}, "", ms);
    return kRefuted;
  }
  s.emit("strong-equilibrium", format_profile(s.inst, *sol.profile), {}, "", ms);
  s.emit("welfare", std::to_string(social_welfare(s.inst.game, *sol.profile)));
  return kHolds;
}

int cmd_dynamics(Session& s) {
  if (s.opt.scheduler == "random" && !s.opt.seed) {
    throw InvalidArgument("the random scheduler requires --seed");
  }
  ImprovementOptions io;
  io.scheduler = Scheduler::parse(s.opt.scheduler, s.opt.seed.value_or(0));
  io.max_coalition = single_k(s, 1);
  io.step_limit = s.opt.steps;
  io.budget = s.opt.budget;
  if (!s.opt.potential.empty()) io.tracker = parse_potential(s.opt.potential);
  Clock clock;
  const JointStrategy start = start_profile(s, true);
  ImprovementTrace trace = run_improvement_path(s.inst.game, start, io);
  const double ms = clock.ms();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ImprovementStep& st = trace.steps[i];
    std::string value = "dSW=" + std::to_string(st.deviation.delta_sw);
    if (st.potential_after) value += " potential=" + st.potential_after->str();
    s.emit("step-" + std::to_string(i + 1), value, io.max_coalition,
           format_witness(s.inst, st.deviation));
  }
  s.emit("termination", termination_name(trace.reason), io.max_coalition, "", ms);
  s.emit("steps", std::to_string(trace.steps.size()), io.max_coalition);
  s.emit("terminal", format_profile(s.inst, trace.terminal), io.max_coalition);
  s.emit("seed", std::to_string(trace.seed));
  return trace.reason == Termination::equilibrium ? kHolds : kRefuted;
}

int cmd_poa(Session& s) {
  std::vector<int> ks = s.opt.ks;
  if (ks.empty()) {
    ks.resize(s.inst.game.node_count());
    std::iota(ks.begin(), ks.end(), 1);
  }
  Clock clock;
  InefficiencyReport rep = inefficiency(s.inst.game, ks, s.opt.budget);
  const double ms = clock.ms();
  s.emit("optimum", std::to_string(rep.optimum_welfare), {},
         format_profile(s.inst, rep.optimum), ms);
  bool violated = false;
  for (const auto& row : rep.rows) {
    if (!row.equilibria) {
      s.emit("k-poa", "no k-equilibrium", row.k);
      continue;
    }
    s.emit("k-poa", row.poa.str(), row.k, format_profile(s.inst, *row.worst));
    s.emit("k-pos", row.pos.str(), row.k, format_profile(s.inst, *row.best));
    if (row.upper) {
      s.emit("bounds", row.lower->str() + ".." + row.upper->str(), row.k);
    }
    if (row.violation) s.emit("bound-violation", "true", row.k);
    violated |= row.violation;
  }
  return violated ? kRefuted : kHolds;
}

int cmd_transition(Session& s) {
  Clock clock;
  TransitionReport rep = transition_value(s.inst.game, s.opt.budget);
  s.emit("transition-value", std::to_string(rep.value), {},
         format_profile(s.inst, rep.witness), clock.ms());
  s.emit("strong-equilibrium-exists", rep.strong_exists ? "true" : "false");
  return kHolds;
}

int cmd_classify(Session& s) {
  Clock clock;
  GraphClass c = classify(s.inst.game.graph(), s.inst.game.assignment());
  const double ms = clock.ms();
  auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
  s.emit("forest", flag(c.is_forest), {}, "", ms);
  s.emit("pseudoforest", flag(c.is_pseudoforest));
  s.emit("edge-disjoint-cycles", flag(c.cycles_pairwise_edge_disjoint));
  s.emit("girth", c.girth ? std::to_string(*c.girth) : "inf");
  s.emit("color-forest", flag(c.is_color_forest));
  s.emit("color-complete", flag(c.is_color_complete));
  s.emit("tau", std::to_string(feedback_edge_number(s.inst.game.graph())));
  return kHolds;
}

int cmd_gen(Session& s) {
  *s.out << serialize_instance(s.inst);
  return kHolds;
}

int cmd_audit(Session& s) {
  Clock clock;
  const JointStrategy profile = start_profile(s, false);
  std::optional<DeviationReport> dev;
  if (s.inst.deviation && s.opt.ks.empty()) {
    dev = describe_deviation(s.inst.game, profile, s.inst.deviation->coalition,
                             s.inst.deviation->color);
  } else {
    dev = find_profitable_deviation(s.inst.game, profile,
                                    single_k(s, s.inst.game.node_count()), true,
                                    s.opt.budget);
  }
  if (!dev) {
    s.emit("key-lemma", "no profitable deviation", {}, "", clock.ms());
    return kHolds;
  }
  if (!dev->profitable()) throw InvalidArgument("the reference deviation is not profitable");
  KeyLemmaAudit a = audit_key_lemma(s.inst.game, profile, *dev);
  const double ms = clock.ms();
  const std::string w = format_witness(s.inst, *dev);
  auto flag = [](bool b) { return b ? std::string("holds") : std::string("fails"); };
  s.emit("delta-sw", std::to_string(a.delta_sw), dev->size(), w, ms);
  s.emit("tau", std::to_string(a.tau), dev->size(), w);
  s.emit("identity", flag(a.identity_holds) + " rhs=" + std::to_string(a.identity_rhs),
         dev->size(), w);
  s.emit("feedback-bound",
         flag(a.feedback_bound_holds) + " bound=" + std::to_string(a.feedback_bound),
         dev->size(), w);
  s.emit("tau-bound", flag(a.tau_bound_holds) + " bound=" + std::to_string(-2L * a.tau),
         dev->size(), w);
  return a.all_hold() ? kHolds : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordination games on graphs: equilibria, solvers, dynamics, inefficiency"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("COORDGAME_BUDGET")) {
    try {
      opt.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: COORDGAME_BUDGET is not a number\n";
      return kUsage;
    }
  }

  struct Command {
    const char* name;
    const char* help;
    int (*run)(Session&);
  };
  const Command commands[] = {
      {"verify", "check whether a profile is a k-equilibrium", cmd_verify},
      {"solve", "compute a strong equilibrium", cmd_solve},
      {"dynamics", "follow a coalitional improvement path", cmd_dynamics},
      {"poa", "k-price of anarchy and stability by enumeration", cmd_poa},
      {"transition", "largest k with a k-equilibrium", cmd_transition},
      {"classify", "structural classes of the graph", cmd_classify},
      {"gen", "print a built-in instance in the text format", cmd_gen},
      {"audit-keylemma", "check the welfare identities for a deviation", cmd_audit},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "gen") {
      sub->add_option("tag", opt.instance, "built-in instance name");
    }
    sub->add_option("--instance", opt.instance, "built-in name or instance file");
    sub->add_option("--profile", opt.profile, "profile file");
    sub->add_option("--k", opt.ks, "coalition bound(s)");
    sub->add_option("--method", opt.method,
                    "auto|colorforest|pseudoforest|colorcomplete|twocolor|brute");
    sub->add_option("--scheduler", opt.scheduler,
                    "first-found|smallest-coalition|max-dsw|random");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--budget", opt.budget, "enumeration budget");
    sub->add_option("--steps", opt.steps, "step limit");
    sub->add_option("--potential", opt.potential, "welfare|pair|sorted");
    sub->add_option("--format", opt.format, "text|csv|json-lines");
    sub->add_option("--out", opt.out, "write the report to a file");
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    const Command* chosen = nullptr;
    for (auto [sub, c] : subs) {
      if (sub->parsed()) chosen = c;
    }
    if (opt.instance.empty()) throw InvalidArgument("--instance is required");
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out.empty()) {
      file.open(opt.out);
      if (!file) throw InvalidArgument("cannot write '" + opt.out + "'");
      out = &file;
    }
    Session session{opt, load_instance(opt.instance), out,
                    ReportWriter(*out, parse_report_format(opt.format))};
    return chosen->run(session);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
