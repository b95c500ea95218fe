#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coordgame/analysis.hpp"
#include "coordgame/classify.hpp"
#include "coordgame/color_forest.hpp"
#include "coordgame/deviation.hpp"
#include "coordgame/dynamics.hpp"
#include "coordgame/error.hpp"
#include "coordgame/instances.hpp"
#include "coordgame/io.hpp"
#include "coordgame/solvers.hpp"

namespace py = pybind11;
using namespace coordgame;

namespace {

// Profiles cross the boundary as color names in label order.
JointStrategy to_profile(const Instance& inst, const std::vector<std::string>& names) {
  return JointStrategy::from_names(inst.game, names);
}

std::vector<std::string> from_profile(const Instance& inst, const JointStrategy& s) {
  std::vector<std::string> out;
  for (NodeId v = 0; v < s.size(); ++v) out.push_back(inst.game.palette().name(s[v]));
  return out;
}

JointStrategy profile_or_reference(const Instance& inst,
                                   const std::optional<std::vector<std::string>>& names) {
  if (names) return to_profile(inst, *names);
  if (inst.profile) return *inst.profile;
  throw InvalidArgument("no profile given and the instance carries none");
}

py::dict deviation_dict(const Instance& inst, const DeviationReport& d) {
  py::dict out;
  std::vector<std::int64_t> labels;
  std::vector<std::string> colors;
  for (int i = 0; i < d.size(); ++i) {
    labels.push_back(inst.labels[d.coalition[i]]);
    colors.push_back(inst.game.palette().name(d.new_colors[i]));
  }
  out["coalition"] = labels;
  out["colors"] = colors;
  out["payoff_before"] = d.payoff_before;
  out["payoff_after"] = d.payoff_after;
  out["delta_sw"] = d.delta_sw;
  out["simple"] = d.simple;
  out["witness"] = format_witness(inst, d);
  return out;
}

py::object optional_deviation(const Instance& inst, const std::optional<DeviationReport>& d) {
  if (!d) return py::none();
  return deviation_dict(inst, *d);
}

py::object ratio(const Ratio& r) { return py::float_(r.value()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coordination games on graphs";

  py::register_exception<Error>(m, "CoordGameError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<InfeasibleProfile>(m, "InfeasibleProfile", PyExc_ValueError);

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  py::class_<Instance>(m, "Instance")
      .def_readonly("name", &Instance::name)
      .def_readonly("provenance", &Instance::provenance)
      .def_readonly("labels", &Instance::labels)
      .def_property_readonly("node_count", [](const Instance& i) { return i.game.node_count(); })
      .def_property_readonly("palette",
                             [](const Instance& i) { return i.game.palette().names(); })
      .def_property_readonly("color_sets",
                             [](const Instance& i) {
                               std::vector<std::vector<std::string>> out;
                               for (NodeId v = 0; v < i.game.node_count(); ++v) {
                                 auto& row = out.emplace_back();
                                 for (ColorId c : i.game.assignment().colors_of(v))
                                   row.push_back(i.game.palette().name(c));
                               }
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const Instance& i) {
                               std::vector<std::pair<std::int64_t, std::int64_t>> out;
                               for (const Edge& e : i.game.graph().edges())
                                 out.emplace_back(i.labels[e.u], i.labels[e.v]);
                               return out;
                             })
      .def_property_readonly("profile",
                             [](const Instance& i) -> py::object {
                               if (!i.profile) return py::none();
                               return py::cast(from_profile(i, *i.profile));
                             })
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + i.name + " n=" + std::to_string(i.game.node_count()) +
               " m=" + std::to_string(i.game.graph().edge_count()) + ">";
      });

  m.def("load", &load_instance, py::arg("name_or_path"),
        "Built-in instance name or path to an instance file.");
  m.def("parse", &parse_instance, py::arg("text"));
  m.def("serialize", &serialize_instance, py::arg("instance"));
  m.def("builtin_names", &builtin_names);

  m.def("payoffs",
        [](const Instance& i, const std::vector<std::string>& s) {
          return payoffs(i.game, to_profile(i, s));
        },
        py::arg("instance"), py::arg("profile"));
  m.def("social_welfare",
        [](const Instance& i, const std::vector<std::string>& s) {
          return social_welfare(i.game, to_profile(i, s));
        },
        py::arg("instance"), py::arg("profile"));

  m.def("classify", [](const Instance& i) {
    GraphClass c = classify(i.game.graph(), i.game.assignment());
    py::dict out;
    out["forest"] = c.is_forest;
    out["pseudoforest"] = c.is_pseudoforest;
    out["edge_disjoint_cycles"] = c.cycles_pairwise_edge_disjoint;
    out["girth"] = c.girth ? py::object(py::int_(*c.girth)) : py::object(py::none());
    out["color_forest"] = c.is_color_forest;
    out["color_complete"] = c.is_color_complete;
    out["tau"] = feedback_edge_number(i.game.graph());
    return out;
  });

  m.def("is_k_equilibrium",
        [](const Instance& i, int k, std::optional<std::vector<std::string>> s,
           std::uint64_t budget) {
          EquilibriumVerdict v = is_k_equilibrium(i.game, profile_or_reference(i, s), k, budget);
          return py::make_tuple(v.holds, optional_deviation(i, v.witness));
        },
        py::arg("instance"), py::arg("k"), py::arg("profile") = py::none(),
        py::arg("budget") = kDefaultBudget,
        "(holds, witness) by exhaustive simple-deviation search.");
  m.def("verify_color_forest",
        [](const Instance& i, int k, std::optional<std::vector<std::string>> s) {
          ColorForestVerdict v = verify_color_forest(i.game, profile_or_reference(i, s), k);
          return py::make_tuple(v.holds, optional_deviation(i, v.witness));
        },
        py::arg("instance"), py::arg("k"), py::arg("profile") = py::none());
  m.def("stability_level",
        [](const Instance& i, std::optional<std::vector<std::string>> s, std::uint64_t budget) {
          return stability_level(i.game, profile_or_reference(i, s), budget);
        },
        py::arg("instance"), py::arg("profile") = py::none(),
        py::arg("budget") = kDefaultBudget);

  m.def("solve",
        [](const Instance& i, const std::string& method, std::uint64_t budget) {
          AutoSolution sol = method == "auto" ? solve_auto(i.game, budget)
                                              : solve_with(i.game, parse_method(method), budget);
          py::dict out;
          out["method"] = method_name(sol.method);
          if (sol.profile) {
            out["profile"] = from_profile(i, *sol.profile);
            out["welfare"] = social_welfare(i.game, *sol.profile);
          } else {
            out["profile"] = py::none();
            out["welfare"] = py::none();
          }
          return out;
        },
        py::arg("instance"), py::arg("method") = "auto", py::arg("budget") = kDefaultBudget);

  m.def("run_dynamics",
        [](const Instance& i, std::optional<std::vector<std::string>> start,
           const std::string& scheduler, std::uint64_t seed, int max_coalition,
           std::size_t steps, std::optional<std::string> potential) {
          ImprovementOptions opt;
          opt.scheduler = Scheduler::parse(scheduler, seed);
          opt.max_coalition = max_coalition;
          opt.step_limit = steps;
          if (potential) opt.tracker = parse_potential(*potential);
          JointStrategy s0 = start ? to_profile(i, *start)
                                   : (i.profile ? *i.profile : JointStrategy::first_colors(i.game));
          ImprovementTrace t = run_improvement_path(i.game, s0, opt);
          py::dict out;
          py::list steps_out;
          for (const auto& st : t.steps) {
            py::dict d = deviation_dict(i, st.deviation);
            if (st.potential_after) d["potential"] = st.potential_after->key;
            steps_out.append(d);
          }
          out["steps"] = steps_out;
          out["terminal"] = from_profile(i, t.terminal);
          out["termination"] = termination_name(t.reason);
          out["seed"] = t.seed;
          return out;
        },
        py::arg("instance"), py::arg("start") = py::none(),
        py::arg("scheduler") = "first-found", py::arg("seed") = 0,
        py::arg("max_coalition") = 1, py::arg("steps") = 10'000,
        py::arg("potential") = py::none());

  m.def("inefficiency",
        [](const Instance& i, std::vector<int> ks, std::uint64_t budget) {
          InefficiencyReport r = inefficiency(i.game, ks, budget);
          py::dict out;
          out["optimum"] = r.optimum_welfare;
          out["optimum_profile"] = from_profile(i, r.optimum);
          out["profiles"] = r.profiles;
          out["complete"] = r.complete;
          py::list rows;
          for (const auto& row : r.rows) {
            py::dict d;
            d["k"] = row.k;
            d["equilibria"] = row.equilibria;
            if (row.equilibria) {
              d["min_welfare"] = row.min_welfare;
              d["max_welfare"] = row.max_welfare;
              d["poa"] = ratio(row.poa);
              d["pos"] = ratio(row.pos);
            }
            d["upper_bound"] = row.upper ? ratio(*row.upper) : py::object(py::none());
            d["lower_bound"] = row.lower ? ratio(*row.lower) : py::object(py::none());
            d["violation"] = row.violation;
            rows.append(d);
          }
          out["rows"] = rows;
          return out;
        },
        py::arg("instance"), py::arg("ks"), py::arg("budget") = kDefaultBudget);

  m.def("transition_value",
        [](const Instance& i, std::uint64_t budget) {
          return transition_value(i.game, budget).value;
        },
        py::arg("instance"), py::arg("budget") = kDefaultBudget);

  m.def("audit_key_lemma",
        [](const Instance& i, std::optional<std::vector<std::string>> s) {
          JointStrategy p = profile_or_reference(i, s);
          std::optional<DeviationReport> d;
          if (i.deviation && !s) {
            d = describe_deviation(i.game, p, i.deviation->coalition, i.deviation->color);
          } else {
            d = find_profitable_deviation(i.game, p, i.game.node_count());
          }
          if (!d) return py::object(py::none());
          KeyLemmaAudit a = audit_key_lemma(i.game, p, *d);
          py::dict out;
          out["deviation"] = deviation_dict(i, *d);
          out["delta_sw"] = a.delta_sw;
          out["tau"] = a.tau;
          out["identity_rhs"] = a.identity_rhs;
          out["identity_holds"] = a.identity_holds;
          out["feedback_bound"] = a.feedback_bound;
          out["feedback_bound_holds"] = a.feedback_bound_holds;
          out["tau_bound_holds"] = a.tau_bound_holds;
          return py::object(out);
        },
        py::arg("instance"), py::arg("profile") = py::none());
}
