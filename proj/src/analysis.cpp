#include "coordgame/analysis.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "coordgame/error.hpp"
#include "coordgame/graph.hpp"
#include "coordgame/solvers.hpp"

namespace coordgame {

double Ratio::value() const {
  if (infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Ratio::str() const {
  if (infinite()) return "inf";
  long g = std::gcd(num, den);
  long a = num / g, b = den / g;
  if (b == 1) return std::to_string(a);
  return std::to_string(a) + "/" + std::to_string(b);
}

bool operator==(const Ratio& a, const Ratio& b) {
  if (a.infinite() || b.infinite()) return a.infinite() && b.infinite();
  return a.num * b.den == b.num * a.den;
}

bool operator<(const Ratio& a, const Ratio& b) {
  if (a.infinite()) return false;
  if (b.infinite()) return true;
  return a.num * b.den < b.num * a.den;
}

Optimum social_optimum(const CoordinationGame& game, std::uint64_t budget) {
  if (is_pseudoforest(game.graph())) {
    PseudoforestSolution sol = solve_pseudoforest(game);
    return {sol.profile, sol.welfare};
  }
  ProfileSpace space(game);
  space.require(budget);
  std::uint64_t best = 0;
  long best_sw = -1;
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    long sw = social_welfare(game, space.at(idx));
    if (sw > best_sw) {
      best_sw = sw;
      best = idx;
    }
  }
  return {space.at(best), best_sw};
}

namespace {

void absorb(ProfileScan& into, const ProfileScan& part) {
  if (part.profiles == 0) return;
  if (into.profiles == 0) {
    into = part;
    return;
  }
  into.profiles += part.profiles;
  // Parts arrive in index order, so ties keep the earlier index.
  if (part.optimum > into.optimum) {
    into.optimum = part.optimum;
    into.optimum_index = part.optimum_index;
  }
  if (part.max_level > into.max_level) {
    into.max_level = part.max_level;
    into.max_level_index = part.max_level_index;
  }
  for (std::size_t k = 0; k < into.by_k.size(); ++k) {
    LevelStats& a = into.by_k[k];
    const LevelStats& b = part.by_k[k];
    if (b.count == 0) continue;
    if (a.count == 0) {
      a = b;
      continue;
    }
    a.count += b.count;
    if (b.min_welfare < a.min_welfare) {
      a.min_welfare = b.min_welfare;
      a.min_index = b.min_index;
    }
    if (b.max_welfare > a.max_welfare) {
      a.max_welfare = b.max_welfare;
      a.max_index = b.max_index;
    }
  }
}

ProfileScan scan_range(const CoordinationGame& game, const ProfileSpace& space,
                       std::uint64_t lo, std::uint64_t hi, std::uint64_t budget) {
  const int n = game.node_count();
  ProfileScan out;
  out.by_k.resize(n);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    JointStrategy s = space.at(idx);
    const long sw = social_welfare(game, s);
    const int level = stability_level(game, s, budget);
    if (out.profiles == 0 || sw > out.optimum) {
      out.optimum = sw;
      out.optimum_index = idx;
    }
    if (out.profiles == 0 || level > out.max_level) {
      out.max_level = level;
      out.max_level_index = idx;
    }
    ++out.profiles;
    for (int k = 1; k <= level; ++k) {
      LevelStats& st = out.by_k[k - 1];
      if (st.count == 0 || sw < st.min_welfare) {
        st.min_welfare = sw;
        st.min_index = idx;
      }
      if (st.count == 0 || sw > st.max_welfare) {
        st.max_welfare = sw;
        st.max_index = idx;
      }
      ++st.count;
    }
  }
  return out;
}

}  // namespace

ProfileScan scan_profiles(const CoordinationGame& game, std::uint64_t budget,
                          unsigned threads) {
  ProfileSpace space(game);
  space.require(budget);
  const std::uint64_t total = space.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 64)));

  std::vector<ProfileScan> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    std::uint64_t lo = total * t / threads;
    std::uint64_t hi = total * (t + 1) / threads;
    try {
      parts[t] = scan_range(game, space, lo, hi, budget);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ProfileScan out;
  for (const auto& p : parts) absorb(out, p);
  return out;
}

InefficiencyReport inefficiency(const CoordinationGame& game,
                                const ProfileScan& scan, std::span<const int> ks) {
  const int n = game.node_count();
  ProfileSpace space(game);
  InefficiencyReport rep{space.at(scan.optimum_index), scan.optimum, scan.profiles,
                         true, {}};
  for (int k : ks) {
    if (k < 1 || k > n) {
      throw InvalidArgument("k must lie in 1.." + std::to_string(n));
    }
    InefficiencyRow row;
    row.k = k;
    const LevelStats& st = scan.by_k[k - 1];
    row.equilibria = st.count;
    if (k >= 2) {
      row.upper = Ratio{2L * (n - 1), k - 1};
      row.lower = Ratio{2L * (n - 1) - (k - 1), k - 1};
    }
    if (st.count > 0) {
      row.worst = space.at(st.min_index);
      row.best = space.at(st.max_index);
      row.min_welfare = st.min_welfare;
      row.max_welfare = st.max_welfare;
      row.poa = Ratio{scan.optimum, st.min_welfare};
      row.pos = Ratio{scan.optimum, st.max_welfare};
      // Multiplicative form: SW(opt)(k-1) <= 2(n-1) SW(s).
      if (k >= 2 && scan.optimum * (k - 1) > 2L * (n - 1) * st.min_welfare) {
        row.violation = true;
      }
      if (k == n && scan.optimum > 2 * st.min_welfare) row.violation = true;
    } else {
      row.poa = row.pos = Ratio{scan.optimum, 0};
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

InefficiencyReport inefficiency(const CoordinationGame& game,
                                std::span<const int> ks, std::uint64_t budget) {
  for (int k : ks) {
    if (k < 1 || k > game.node_count()) {
      throw InvalidArgument("k must lie in 1.." + std::to_string(game.node_count()));
    }
  }
  return inefficiency(game, scan_profiles(game, budget), ks);
}

TransitionReport transition_value(const CoordinationGame& game,
                                  std::uint64_t budget) {
  ProfileScan scan = scan_profiles(game, budget);
  ProfileSpace space(game);
  return {scan.max_level, scan.max_level == game.node_count(),
          space.at(scan.max_level_index), scan.profiles};
}

}  // namespace coordgame
