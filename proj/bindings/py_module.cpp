#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "evodp/analysis.hpp"
#include "evodp/control.hpp"
#include "evodp/csv_io.hpp"
#include "evodp/dp.hpp"
#include "evodp/montecarlo.hpp"
#include "evodp/mutation.hpp"
#include "evodp/oracle.hpp"
#include "evodp/problems.hpp"

namespace py = pybind11;
using namespace evodp;

namespace {

double time_to_float(ExtendedTime t) { return t.value(); }

std::vector<double> times_to_floats(const std::vector<ExtendedTime>& times) {
    std::vector<double> out;
    out.reserve(times.size());
    for (ExtendedTime t : times) out.push_back(t.value());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Optimal dynamic mutation-rate schedules and runtime lower "
              "bounds for (1+lambda) evolutionary algorithms";

    py::class_<Rng>(m, "RandomStream")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_static(
            "for_cell",
            [](std::uint64_t seed, int fitness, std::size_t rate_index) {
                return transition_stream(seed, fitness, rate_index);
            },
            py::arg("seed"), py::arg("fitness"), py::arg("rate_index"));

    py::class_<FitnessDistribution>(m, "FitnessDistribution")
        .def_readonly("first_fitness", &FitnessDistribution::first_fitness)
        .def_readonly("mass", &FitnessDistribution::mass)
        .def("mass_at", &FitnessDistribution::mass_at, py::arg("fitness"))
        .def("total", &FitnessDistribution::total);

    py::class_<ProblemModel>(m, "ProblemModel")
        .def_static("onemax", &ProblemModel::onemax, py::arg("n"))
        .def_static("ruggedness", &ProblemModel::ruggedness, py::arg("n"))
        .def_property_readonly("name", &ProblemModel::name)
        .def_property_readonly("n", &ProblemModel::n)
        .def_property_readonly("f_min", &ProblemModel::f_min)
        .def_property_readonly("f_max", &ProblemModel::f_max)
        .def_property_readonly("om_decomposable", &ProblemModel::om_decomposable)
        .def("evaluate", &ProblemModel::evaluate, py::arg("x"))
        .def("om_to_fitness", &ProblemModel::om_to_fitness, py::arg("om"))
        .def("fitness_to_om", &ProblemModel::fitness_to_om, py::arg("fitness"))
        .def("representative", &ProblemModel::representative, py::arg("fitness"))
        .def("initial_fitness_distribution",
             &ProblemModel::initial_fitness_distribution);

    m.def("onemax_eval", &onemax_eval, py::arg("x"));
    m.def("ruggedness_eval", &ruggedness_eval, py::arg("x"));
    m.def("shift_binomial_pmf", &shift_binomial_pmf, py::arg("n"), py::arg("p"),
          py::arg("k"));
    m.def(
        "sample_flip_count",
        [](int n, double p, Rng& rng) { return ShiftBinomial(n, p).sample(rng); },
        py::arg("n"), py::arg("p"), py::arg("rng"));
    m.def("flip_k_bits", &flip_k_bits, py::arg("x"), py::arg("k"), py::arg("rng"));

    py::class_<McConfig>(m, "McConfig")
        .def(py::init([](long long iterations, long long successes,
                         std::uint64_t seed) {
                 McConfig cfg;
                 cfg.iterations = iterations;
                 cfg.successes = successes;
                 cfg.seed = seed;
                 return cfg;
             }),
             py::arg("iterations") = 1'000'000, py::arg("successes") = 50'000,
             py::arg("seed") = 1)
        .def_readwrite("iterations", &McConfig::iterations)
        .def_readwrite("successes", &McConfig::successes)
        .def_readwrite("seed", &McConfig::seed);

    py::class_<TransitionDistribution>(m, "TransitionDistribution")
        .def_readonly("gains", &TransitionDistribution::gains)
        .def_readonly("n_actual", &TransitionDistribution::n_actual);

    m.def("estimate_transitions", &estimate_transitions, py::arg("problem"),
          py::arg("fitness"), py::arg("rate"), py::arg("lambda_"), py::arg("cfg"),
          py::arg("rng"));
    m.def("transition_exact", &transition_exact, py::arg("problem"),
          py::arg("fitness"), py::arg("rate"), py::arg("lambda_"));
    m.def(
        "gain_pmf",
        [](int n, int d, int k) {
            const GainLaw law = gain_pmf(n, d, k);
            py::dict out;
            for (int gain = -k; gain <= k; ++gain) {
                const double prob = law.prob_of_gain(gain);
                if (prob != 0.0) out[py::int_(gain)] = prob;
            }
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("k"));
    m.def("offspring_fitness_pmf", &offspring_fitness_pmf, py::arg("problem"),
          py::arg("fitness"), py::arg("rate"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("mult_base", &GridSpec::mult_base)
        .def_readwrite("mult_alpha", &GridSpec::mult_alpha)
        .def_readwrite("mult_count", &GridSpec::mult_count)
        .def_readwrite("add_base", &GridSpec::add_base)
        .def_readwrite("add_step", &GridSpec::add_step)
        .def_readwrite("add_count", &GridSpec::add_count);

    py::class_<RateGrid>(m, "RateGrid")
        .def(py::init<int, int, std::vector<double>>(), py::arg("f_min"),
             py::arg("f_max"), py::arg("rates"))
        .def_property_readonly("f_min", &RateGrid::f_min)
        .def_property_readonly("f_max", &RateGrid::f_max)
        .def("rates", &RateGrid::rates, py::arg("fitness"),
             py::return_value_policy::copy);

    m.def("build_grid", &build_grid, py::arg("spec"), py::arg("f_min"),
          py::arg("f_max"));

    py::class_<DpTables>(m, "DpTables")
        .def_readonly("f_min", &DpTables::f_min)
        .def_readonly("f_max", &DpTables::f_max)
        .def_readonly("grid", &DpTables::grid)
        .def_readonly("P_opt", &DpTables::P_opt)
        .def_readonly("infinite_levels", &DpTables::infinite_levels)
        .def_property_readonly("T_star",
                               [](const DpTables& t) {
                                   return times_to_floats(t.T_star);
                               })
        .def_property_readonly("T",
                               [](const DpTables& t) {
                                   std::vector<std::vector<double>> rows;
                                   rows.reserve(t.T.size());
                                   for (const auto& row : t.T) {
                                       rows.push_back(times_to_floats(row));
                                   }
                                   return rows;
                               })
        .def_property_readonly("problem",
                               [](const DpTables& t) { return t.meta.problem; })
        .def_property_readonly("provider",
                               [](const DpTables& t) { return t.meta.provider; });

    m.def("solve_mc", &solve_mc, py::arg("problem"), py::arg("grid"),
          py::arg("lambda_"), py::arg("cfg"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("solve_exact", &solve_exact, py::arg("problem"), py::arg("grid"),
          py::arg("lambda_"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());

    py::class_<ControlPolicy> policy(m, "ControlPolicy");
    policy.def_static("static_rate", &ControlPolicy::static_rate, py::arg("p"))
        .def_static("ab_rule", &ControlPolicy::ab_rule, py::arg("p_init"),
                    py::arg("p_min"), py::arg("p_max"))
        .def_static("two_rate", &ControlPolicy::two_rate, py::arg("p_init"),
                    py::arg("p_min"), py::arg("p_max"),
                    py::arg("clamp_offspring") = false)
        .def_property_readonly("rate", &ControlPolicy::rate)
        .def("offspring_rate", &ControlPolicy::offspring_rate, py::arg("index"),
             py::arg("lambda_"))
        .def("update", &ControlPolicy::update, py::arg("parent_fitness"),
             py::arg("best_first_half"), py::arg("best_second_half"),
             py::arg("rng"));

    py::class_<TraceRecord>(m, "TraceRecord")
        .def_readonly("iteration", &TraceRecord::iteration)
        .def_readonly("parent_fitness", &TraceRecord::parent_fitness)
        .def_readonly("rate", &TraceRecord::rate)
        .def_readonly("best_offspring_fitness", &TraceRecord::best_offspring_fitness)
        .def_readonly("success", &TraceRecord::success);

    py::class_<RunTrace>(m, "RunTrace")
        .def_readonly("records", &RunTrace::records)
        .def_readonly("reached_optimum", &RunTrace::reached_optimum)
        .def_readonly("iterations", &RunTrace::iterations);

    m.def("run_ea", &run_ea, py::arg("problem"), py::arg("lambda_"),
          py::arg("policy"), py::arg("budget"), py::arg("rng"),
          py::arg("start_fitness") = std::nullopt);

    py::class_<HeatmapCell>(m, "HeatmapCell")
        .def_readonly("fitness", &HeatmapCell::fitness)
        .def_readonly("rate", &HeatmapCell::rate)
        .def_readonly("C", &HeatmapCell::C)
        .def_readonly("alpha_f", &HeatmapCell::alpha_f)
        .def_property_readonly("T",
                               [](const HeatmapCell& c) { return c.T.value(); });

    py::class_<RegretPoint>(m, "RegretPoint")
        .def_readonly("iteration", &RegretPoint::iteration)
        .def_readonly("fitness", &RegretPoint::fitness)
        .def_readonly("rate", &RegretPoint::rate)
        .def_readonly("mapped_rate", &RegretPoint::mapped_rate)
        .def_property_readonly(
            "regret", [](const RegretPoint& p) { return p.regret.value(); });

    m.def(
        "lower_bound",
        [](const DpTables& tables, const FitnessDistribution& init) {
            return time_to_float(lower_bound(tables, init));
        },
        py::arg("tables"), py::arg("init"));
    m.def("heatmap", &heatmap, py::arg("tables"));
    m.def("regret_trace", &regret_trace, py::arg("trace"), py::arg("tables"));

    m.def("write_tables_csv", &write_tables_csv, py::arg("path"), py::arg("tables"));
    m.def("read_tables_csv", &read_tables_csv, py::arg("path"));
    m.def("write_optimal_csv", &write_optimal_csv, py::arg("path"), py::arg("tables"));
    m.def("write_trace_csv", &write_trace_csv, py::arg("path"), py::arg("runs"));
    m.def("read_trace_csv", &read_trace_csv, py::arg("path"));
}
