#include "coordgame/deviation.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "coordgame/classify.hpp"
#include "coordgame/error.hpp"

namespace coordgame {

namespace {

using Mask = std::uint64_t;

Mask bit(NodeId v) { return Mask{1} << v; }

std::vector<NodeId> members(Mask m) {
  std::vector<NodeId> out;
  while (m) {
    out.push_back(static_cast<NodeId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// Lexicographic order on equal-size sorted member lists: the set holding the
// smallest element of the symmetric difference comes first.
bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

// Shared state of one search over profile s.
class SearchContext {
 public:
  SearchContext(const CoordinationGame& game, const JointStrategy& s,
                std::uint64_t budget)
      : game_(game), s_(s), budget_(budget) {
    check_feasible(game, s);
    n_ = game.node_count();
    if (n_ > kMaxSearchNodes) {
      throw BudgetExceeded("exhaustive deviation search supports at most " +
                           std::to_string(kMaxSearchNodes) + " nodes");
    }
    adj_.assign(n_, 0);
    pay_.assign(n_, 0);
    for (const Edge& e : game.graph().edges()) {
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
    }
    for (NodeId v = 0; v < n_; ++v) {
      for (NodeId w : game.graph().neighbors(v)) pay_[v] += s[w] == s[v];
    }
  }

  const CoordinationGame& game() const { return game_; }
  const JointStrategy& profile() const { return s_; }
  int n() const { return n_; }
  Mask adj(NodeId v) const { return adj_[v]; }
  int pay(NodeId v) const { return pay_[v]; }

  void tick() {
    if (++examined_ > budget_) {
      throw BudgetExceeded("deviation search examined more than " +
                           std::to_string(budget_) + " candidates");
    }
  }

 private:
  const CoordinationGame& game_;
  const JointStrategy& s_;
  std::uint64_t budget_;
  std::uint64_t examined_ = 0;
  int n_ = 0;
  std::vector<Mask> adj_;
  std::vector<int> pay_;
};

// Simple deviations to one color x: coalitions are connected subsets of the
// nodes that may play x but currently do not.
class ColorMoves {
 public:
  ColorMoves(const SearchContext& ctx, ColorId x) : ctx_(ctx), x_(x) {
    const auto& a = ctx.game().assignment();
    const auto& s = ctx.profile();
    on_x_.assign(ctx.n(), 0);
    for (NodeId v = 0; v < ctx.n(); ++v) {
      if (a.allows(v, x) && s[v] != x) candidates_ |= bit(v);
      for (NodeId w : ctx.game().graph().neighbors(v)) on_x_[v] += s[w] == x;
    }
  }

  ColorId color() const { return x_; }
  Mask candidates() const { return candidates_; }
  Mask adj(NodeId v) const { return ctx_.adj(v) & candidates_; }

  bool profitable(Mask coalition) const {
    for (Mask m = coalition; m; m &= m - 1) {
      NodeId v = static_cast<NodeId>(std::countr_zero(m));
      int after = std::popcount(ctx_.adj(v) & coalition) + on_x_[v];
      if (after <= ctx_.pay(v)) return false;
    }
    return true;
  }

 private:
  const SearchContext& ctx_;
  ColorId x_;
  Mask candidates_ = 0;
  std::vector<int> on_x_;
};

// ESU enumeration of connected vertex sets (each exactly once). When
// exact_size > 0 only sets of that size are visited; otherwise every set up
// to max_size is. The visitor returns true to stop.
template <typename Visit>
class ConnectedSets {
 public:
  ConnectedSets(const ColorMoves& moves, int max_size, int exact_size,
                Visit& visit)
      : moves_(moves), max_size_(max_size), exact_(exact_size), visit_(visit) {}

  bool run() {
    for (Mask m = moves_.candidates(); m; m &= m - 1) {
      NodeId v = static_cast<NodeId>(std::countr_zero(m));
      Mask above = ~((bit(v) << 1) - 1);
      Mask ext = moves_.adj(v) & above;
      if (extend(bit(v), ext, moves_.adj(v) | bit(v), above, 1)) return true;
    }
    return false;
  }

 private:
  bool extend(Mask sub, Mask ext, Mask closed_nbhd, Mask above, int size) {
    if (exact_ == 0 || size == exact_) {
      if (visit_(sub)) return true;
    }
    if (size == (exact_ ? exact_ : max_size_)) return false;
    while (ext) {
      NodeId w = static_cast<NodeId>(std::countr_zero(ext));
      ext &= ext - 1;
      Mask exclusive = moves_.adj(w) & ~closed_nbhd & above;
      if (extend(sub | bit(w), ext | exclusive, closed_nbhd | moves_.adj(w),
                 above, size + 1)) {
        return true;
      }
    }
    return false;
  }

  const ColorMoves& moves_;
  int max_size_;
  int exact_;
  Visit& visit_;
};

template <typename Visit>
bool for_each_connected(const ColorMoves& moves, int max_size, int exact_size,
                        Visit visit) {
  ConnectedSets<Visit> sets(moves, max_size, exact_size, visit);
  return sets.run();
}

std::vector<ColorMoves> all_color_moves(const SearchContext& ctx) {
  std::vector<ColorMoves> out;
  for (ColorId x = 0; x < ctx.game().palette().size(); ++x) {
    out.emplace_back(ctx, x);
  }
  return out;
}

struct Found {
  Mask coalition = 0;
  std::vector<ColorId> colors;  // aligned with members(coalition)
};

DeviationReport to_report(const SearchContext& ctx, const Found& f) {
  std::vector<NodeId> k = members(f.coalition);
  return describe_deviation(ctx.game(), ctx.profile(), k, f.colors);
}

// sum_{j<=k} C(n,j) * c^j, saturating.
std::uint64_t general_move_bound(int n, int k, int c) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, j)
  std::uint64_t power = 1;  // c^j
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  };
  for (int j = 1; j <= k; ++j) {
    // C(n, j) = C(n, j-1) / g * ((n-j+1) / (j/g)), g = gcd(C(n, j-1), j)
    if (binom != kMax) {
      const std::uint64_t g = std::gcd(binom, static_cast<std::uint64_t>(j));
      binom = mul(binom / g, static_cast<std::uint64_t>(n - j + 1) / (j / g));
    }
    power = mul(power, static_cast<std::uint64_t>(c));
    std::uint64_t term = mul(binom, power);
    total = term > kMax - total ? kMax : total + term;
  }
  return total;
}

// General deviations: every coalition of exactly `size` members (in
// lexicographic order) and every tuple of alternative colors (last member
// fastest). The visitor returns true to stop.
template <typename Visit>
bool for_each_general(SearchContext& ctx, int size, Visit visit) {
  const int n = ctx.n();
  if (size > n) return false;
  const auto& a = ctx.game().assignment();
  const auto& s = ctx.profile();
  std::vector<NodeId> combo(size);
  for (int j = 0; j < size; ++j) combo[j] = j;
  std::vector<std::vector<ColorId>> options(size);
  std::vector<std::size_t> digit(size);
  std::vector<ColorId> next(s.colors().begin(), s.colors().end());
  std::vector<ColorId> chosen(size);
  while (true) {
    bool viable = true;
    for (int j = 0; j < size; ++j) {
      options[j].clear();
      for (ColorId x : a.colors_of(combo[j])) {
        if (x != s[combo[j]]) options[j].push_back(x);
      }
      viable = viable && !options[j].empty();
    }
    if (viable) {
      std::fill(digit.begin(), digit.end(), 0);
      while (true) {
        ctx.tick();
        for (int j = 0; j < size; ++j) {
          chosen[j] = options[j][digit[j]];
          next[combo[j]] = chosen[j];
        }
        bool profit = true;
        for (int j = 0; j < size && profit; ++j) {
          NodeId v = combo[j];
          int after = 0;
          for (NodeId w : ctx.game().graph().neighbors(v)) after += next[w] == next[v];
          profit = after > ctx.pay(v);
        }
        if (profit) {
          Mask m = 0;
          for (NodeId v : combo) m |= bit(v);
          if (visit(Found{m, chosen})) {
            for (NodeId v : combo) next[v] = s[v];
            return true;
          }
        }
        int j = size - 1;
        while (j >= 0 && ++digit[j] == options[j].size()) {
          digit[j] = 0;
          --j;
        }
        if (j < 0) break;
      }
      for (NodeId v : combo) next[v] = s[v];
    }
    // Next combination in lexicographic order.
    int j = size - 1;
    while (j >= 0 && combo[j] == n - size + j) --j;
    if (j < 0) return false;
    ++combo[j];
    for (int t = j + 1; t < size; ++t) combo[t] = combo[t - 1] + 1;
  }
}

void require_general_budget(const SearchContext& ctx, int max_coalition,
                            std::uint64_t budget) {
  std::uint64_t bound = general_move_bound(
      ctx.n(), max_coalition, ctx.game().assignment().max_set_size());
  if (bound > budget) {
    throw BudgetExceeded("unrestricted deviation search needs up to " +
                         std::to_string(bound) + " candidate moves, budget is " +
                         std::to_string(budget));
  }
}

int clamp_coalition(const CoordinationGame& game, int max_coalition) {
  return std::clamp(max_coalition, 0, game.node_count());
}

std::optional<Found> canonical_simple(SearchContext& ctx, int max_coalition) {
  auto moves = all_color_moves(ctx);
  for (int size = 1; size <= max_coalition; ++size) {
    std::optional<Found> best;
    for (const auto& m : moves) {
      for_each_connected(m, size, size, [&](Mask k) {
        ctx.tick();
        if (m.profitable(k) && (!best || lex_less(k, best->coalition))) {
          best = Found{k, std::vector<ColorId>(size, m.color())};
        }
        return false;
      });
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<Found> canonical_general(SearchContext& ctx, int max_coalition) {
  for (int size = 1; size <= max_coalition; ++size) {
    std::optional<Found> found;
    for_each_general(ctx, size, [&](Found f) {
      found = std::move(f);
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

bool DeviationReport::profitable() const {
  if (coalition.empty()) return false;
  for (std::size_t j = 0; j < coalition.size(); ++j) {
    if (payoff_after[j] <= payoff_before[j]) return false;
  }
  return true;
}

JointStrategy DeviationReport::apply(const CoordinationGame& game,
                                     const JointStrategy& s) const {
  return s.with(game, coalition, new_colors);
}

DeviationReport describe_deviation(const CoordinationGame& game,
                                   const JointStrategy& s,
                                   std::span<const NodeId> coalition,
                                   std::span<const ColorId> new_colors) {
  check_feasible(game, s);
  if (coalition.empty()) throw InvalidArgument("empty coalition");
  if (coalition.size() != new_colors.size()) {
    throw InvalidArgument("coalition and color lists differ in length");
  }
  std::vector<std::pair<NodeId, ColorId>> moves;
  for (std::size_t j = 0; j < coalition.size(); ++j) {
    moves.emplace_back(coalition[j], new_colors[j]);
  }
  std::sort(moves.begin(), moves.end());
  DeviationReport r;
  for (auto [v, x] : moves) {
    if (!game.graph().contains(v)) {
      throw InvalidArgument("unknown node id " + std::to_string(v));
    }
    if (!r.coalition.empty() && r.coalition.back() == v) {
      throw InvalidArgument("node " + std::to_string(v) +
                            " appears twice in the coalition");
    }
    if (s[v] == x) {
      throw InvalidArgument("node " + std::to_string(v) +
                            " does not change its color");
    }
    r.coalition.push_back(v);
    r.new_colors.push_back(x);
  }
  JointStrategy next = s.with(game, r.coalition, r.new_colors);
  for (NodeId v : r.coalition) {
    r.payoff_before.push_back(payoff(game, s, v));
    r.payoff_after.push_back(payoff(game, next, v));
  }
  r.delta_sw = social_welfare(game, next) - social_welfare(game, s);

  bool one_color = std::all_of(r.new_colors.begin(), r.new_colors.end(),
                               [&](ColorId x) { return x == r.new_colors[0]; });
  bool connected = connected_components(
                       induced_subgraph(game.graph(), r.coalition).graph)
                       .count() == 1;
  r.simple = one_color && connected;
  return r;
}

DeviationReport describe_deviation(const CoordinationGame& game,
                                   const JointStrategy& s,
                                   std::span<const NodeId> coalition,
                                   ColorId color) {
  std::vector<ColorId> colors(coalition.size(), color);
  return describe_deviation(game, s, coalition, colors);
}

std::optional<DeviationReport> find_profitable_deviation(
    const CoordinationGame& game, const JointStrategy& s, int max_coalition,
    bool simple_only, std::uint64_t budget) {
  SearchContext ctx(game, s, budget);
  max_coalition = clamp_coalition(game, max_coalition);
  std::optional<Found> found;
  if (simple_only) {
    found = canonical_simple(ctx, max_coalition);
  } else {
    require_general_budget(ctx, max_coalition, budget);
    found = canonical_general(ctx, max_coalition);
  }
  if (!found) return std::nullopt;
  return to_report(ctx, *found);
}

EquilibriumVerdict is_k_equilibrium(const CoordinationGame& game,
                                    const JointStrategy& s, int k,
                                    std::uint64_t budget) {
  if (k < 1 || k > game.node_count()) {
    throw InvalidArgument("k must lie in 1.." + std::to_string(game.node_count()));
  }
  EquilibriumVerdict v;
  v.witness = find_profitable_deviation(game, s, k, true, budget);
  v.holds = !v.witness.has_value();
  return v;
}

int stability_level(const CoordinationGame& game, const JointStrategy& s,
                    std::uint64_t budget) {
  SearchContext ctx(game, s, budget);
  auto found = canonical_simple(ctx, game.node_count());
  if (!found) return game.node_count();
  return std::popcount(found->coalition) - 1;
}

std::vector<DeviationReport> profitable_deviations(
    const CoordinationGame& game, const JointStrategy& s, int max_coalition,
    bool simple_only, std::uint64_t budget) {
  SearchContext ctx(game, s, budget);
  max_coalition = clamp_coalition(game, max_coalition);
  std::vector<std::pair<Found, ColorId>> all;
  if (simple_only) {
    for (const auto& m : all_color_moves(ctx)) {
      for_each_connected(m, max_coalition, 0, [&](Mask k) {
        ctx.tick();
        if (m.profitable(k)) {
          all.push_back({Found{k, std::vector<ColorId>(std::popcount(k), m.color())},
                         m.color()});
        }
        return false;
      });
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      int sa = std::popcount(a.first.coalition);
      int sb = std::popcount(b.first.coalition);
      if (sa != sb) return sa < sb;
      if (a.first.coalition != b.first.coalition) {
        return lex_less(a.first.coalition, b.first.coalition);
      }
      return a.second < b.second;
    });
  } else {
    require_general_budget(ctx, max_coalition, budget);
    for (int size = 1; size <= max_coalition; ++size) {
      for_each_general(ctx, size, [&](Found f) {
        all.push_back({std::move(f), 0});
        return false;
      });
    }
  }
  std::vector<DeviationReport> out;
  out.reserve(all.size());
  for (const auto& [f, x] : all) out.push_back(to_report(ctx, f));
  return out;
}

std::optional<DeviationReport> first_profitable_deviation(
    const CoordinationGame& game, const JointStrategy& s, int max_coalition,
    bool simple_only, std::uint64_t budget) {
  SearchContext ctx(game, s, budget);
  max_coalition = clamp_coalition(game, max_coalition);
  if (!simple_only) {
    require_general_budget(ctx, max_coalition, budget);
    auto found = canonical_general(ctx, max_coalition);
    if (!found) return std::nullopt;
    return to_report(ctx, *found);
  }
  if (max_coalition == 0) return std::nullopt;
  for (const auto& m : all_color_moves(ctx)) {
    std::optional<Found> found;
    for_each_connected(m, max_coalition, 0, [&](Mask k) {
      ctx.tick();
      if (!m.profitable(k)) return false;
      found = Found{k, std::vector<ColorId>(std::popcount(k), m.color())};
      return true;
    });
    if (found) return to_report(ctx, *found);
  }
  return std::nullopt;
}

KeyLemmaAudit audit_key_lemma(const CoordinationGame& game,
                              const JointStrategy& s,
                              const DeviationReport& report) {
  DeviationReport fresh =
      describe_deviation(game, s, report.coalition, report.new_colors);
  if (!fresh.profitable()) {
    throw InvalidArgument("deviation is not profitable for every member");
  }
  const JointStrategy next = fresh.apply(game, s);
  const auto& k = fresh.coalition;

  KeyLemmaAudit audit;
  audit.delta_sw = social_welfare(game, next) - social_welfare(game, s);
  audit.delta_sw_coalition = social_welfare_restricted(game, next, k) -
                             social_welfare_restricted(game, s, k);
  for (const Edge& e : edges_within(game.graph(), k)) {
    audit.inside_before += s[e.u] == s[e.v];
    audit.inside_after += next[e.u] == next[e.v];
  }
  audit.identity_rhs =
      2 * (audit.delta_sw_coalition - audit.inside_after + audit.inside_before);
  audit.identity_holds = audit.delta_sw == audit.identity_rhs;

  InducedSubgraph sub = induced_subgraph(game.graph(), k);
  for (const Edge& e : minimum_feedback_edge_set(sub.graph)) {
    audit.feedback_set.push_back(
        make_edge(sub.to_parent[e.u], sub.to_parent[e.v]));
  }
  audit.tau = static_cast<int>(audit.feedback_set.size());
  for (const Edge& e : audit.feedback_set) {
    audit.feedback_before += s[e.u] == s[e.v];
    audit.feedback_after += next[e.u] == next[e.v];
  }
  audit.feedback_bound = 2L * (audit.feedback_before - audit.feedback_after);
  audit.feedback_bound_holds = audit.delta_sw > audit.feedback_bound;
  audit.tau_bound_holds = audit.delta_sw > -2L * audit.tau;
  return audit;
}

UniformityReport is_uniform(const CoordinationGame& game, std::uint64_t budget) {
  ProfileSpace space(game);
  space.require(budget);
  UniformityReport report;
  report.color_complete = is_color_complete(game.graph(), game.assignment());
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    JointStrategy s = space.at(idx);
    std::vector<int> p = payoffs(game, s);
    for (const Edge& e : game.graph().edges()) {
      if (s[e.u] == s[e.v] && p[e.u] != p[e.v]) {
        report.uniform = false;
        report.counterexample = s;
        report.edge = e;
        return report;
      }
    }
  }
  return report;
}

}  // namespace coordgame
