#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "dis/bounds.hpp"
#include "dis/delta_search.hpp"
#include "dis/double_string.hpp"
#include "dis/endpoint_rep.hpp"
#include "dis/endpoint_stats.hpp"
#include "dis/search.hpp"
#include "dis/society.hpp"

namespace py = pybind11;

namespace {

// Coordinates cross the boundary as fractions.Fraction; ints, Fractions and
// "p/q" strings are accepted on input.
py::object to_fraction(const dis::Coord& c) {
  return py::module_::import("fractions").attr("Fraction")(c.numerator(),
                                                          c.denominator());
}

dis::Coord from_python(const py::handle& h) {
  return dis::parse_coord(py::str(h).cast<std::string>());
}

dis::Society society_from_tuples(const std::vector<py::tuple>& voters) {
  std::vector<dis::Voter> out;
  out.reserve(voters.size());
  for (const py::tuple& t : voters) {
    if (t.size() != 5) {
      throw py::value_error("voter must be (name, lo1, hi1, lo2, hi2)");
    }
    out.push_back({t[0].cast<std::string>(),
                   {from_python(t[1]), from_python(t[2])},
                   {from_python(t[3]), from_python(t[4])}});
  }
  return dis::Society(std::move(out));
}

py::list society_to_tuples(const dis::Society& s) {
  py::list out;
  for (const dis::Voter& v : s.voters()) {
    out.append(py::make_tuple(v.name, to_fraction(v.first.lo), to_fraction(v.first.hi),
                              to_fraction(v.second.lo), to_fraction(v.second.hi)));
  }
  return out;
}

py::dict report_dict(const dis::CertificateReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["approval"] = r.approval;
  d["ratio"] = to_fraction(r.ratio);
  d["pairwise_intersecting"] = r.pairwise_intersecting;
  d["missing_pairs"] = r.missing_pairs;
  d["claimed"] = r.claimed;
  d["passed"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pairwise-intersecting double-interval societies";

  // Translators run newest first, so the base class goes first.
  auto error = py::register_exception<dis::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<dis::ParseError>(m, "ParseError", error);
  py::register_exception<dis::InfeasibleTarget>(m, "InfeasibleTarget", error);
  py::register_exception<dis::SearchLimitExceeded>(m, "SearchLimitExceeded", error);

  m.def("approval_number",
        [](const std::vector<py::tuple>& voters) {
          const auto r = dis::approval_number(society_from_tuples(voters));
          return py::make_tuple(r.approval_number, to_fraction(r.witness_platform),
                                to_fraction(r.approval_ratio));
        },
        py::arg("voters"),
        "(approval number, leftmost witness platform, approval ratio) for a list "
        "of (name, lo1, hi1, lo2, hi2) voters.");

  m.def("violating_pairs",
        [](const std::vector<py::tuple>& voters) {
          const auto s = society_from_tuples(voters);
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& [i, j] : dis::is_pairwise_intersecting(s).violating_pairs) {
            out.emplace_back(s[i].name, s[j].name);
          }
          return out;
        },
        py::arg("voters"));

  m.def("society_from_endpoints",
        [](const std::string& text) {
          return society_to_tuples(
              dis::society_from_endpoint_rep(dis::parse_endpoint_rep(text)));
        },
        py::arg("text"));

  m.def("endpoint_stats",
        [](const std::vector<py::tuple>& voters) {
          const auto stats = dis::endpoint_stats(society_from_tuples(voters));
          py::list rows;
          for (const auto& s : stats.intervals) {
            rows.append(py::make_tuple(s.voter, s.second, s.left, s.right, s.both,
                                       s.center));
          }
          return rows;
        },
        py::arg("voters"),
        "(voter, second, L, R, B, C) per interval; needs distinct endpoints.");

  m.def("verify",
        [](const std::string& text, std::optional<int> claimed) {
          return report_dict(
              dis::verify_certificate(dis::parse_endpoint_rep(text), claimed));
        },
        py::arg("text"), py::arg("claimed") = py::none());

  m.def("canonicalize",
        [](const std::string& text) {
          return dis::to_string(dis::canonicalize(dis::parse_double_string(text)));
        },
        py::arg("text"));

  m.def("diameter",
        [](const std::string& text) {
          const auto r = dis::diameter(dis::parse_double_string(text));
          return py::make_tuple(r.diameter, r.witness);
        },
        py::arg("text"));

  m.def("society_from_string",
        [](const std::string& text, int width) {
          return society_to_tuples(
              dis::society_from_string(dis::parse_double_string(text), width));
        },
        py::arg("text"), py::arg("width"));

  m.def("construct_quarter",
        [](int n) { return dis::to_string(dis::construct_quarter(n), dis::StringStyle::comma); },
        py::arg("n"));
  m.def("construct_thirteen",
        [](int n) { return dis::to_string(dis::construct_thirteen(n), dis::StringStyle::comma); },
        py::arg("n"));

  m.def("delta",
        [](int n, int limit, int jobs) {
          dis::DeltaOptions options;
          options.limit = limit;
          options.jobs = jobs;
          std::optional<dis::DeltaResult> r;
          {
            py::gil_scoped_release release;
            r = dis::delta_exhaustive(n, options);
          }
          return py::make_tuple(r->delta, dis::to_string(r->witness, dis::StringStyle::comma));
        },
        py::arg("n"), py::arg("limit") = 8, py::arg("jobs") = 1);

  m.def("approval_lower_bound", &dis::approval_lower_bound, py::arg("n"));
  m.def("max_society_size", &dis::max_society_size, py::arg("a"));
  m.def("ratio_lower_bound_estimate",
        [](std::int64_t n) { return static_cast<double>(dis::ratio_lower_bound_estimate(n)); },
        py::arg("n"));
  m.def("delta_theoretical_lower", &dis::delta_theoretical_lower, py::arg("n"));
  m.def("bounds_table",
        [](std::int64_t lo, std::int64_t hi) {
          py::list rows;
          for (const auto& r : dis::bounds_table(lo, hi)) {
            rows.append(py::make_tuple(r.approval, r.max_n, to_fraction(r.min_ratio)));
          }
          return rows;
        },
        py::arg("lo") = 2, py::arg("hi") = 12);

  m.def("search",
        [](int n, int target, std::uint64_t seed, std::uint64_t iters, int restarts,
           std::uint64_t sideways, int jobs) {
          dis::SearchConfig config;
          config.target_approval = target;
          config.rng_seed = seed;
          config.max_iterations = iters;
          config.restarts = restarts;
          config.sideways_limit = sideways;
          config.jobs = jobs;
          const auto start = dis::starting_rep(n, target);
          std::optional<dis::SearchResult> result;
          {
            py::gil_scoped_release release;
            result = dis::hill_climb(start, config);
          }
          const dis::SearchResult& r = *result;
          py::dict d;
          d["success"] = r.success;
          d["rep"] = r.best.rep.to_string();
          d["approval"] = r.best.approval;
          d["missing_pairs"] = r.best.missing_pairs;
          d["run"] = r.run;
          d["moves"] = r.moves;
          return d;
        },
        py::arg("n"), py::arg("target"), py::arg("seed") = 1, py::arg("iters") = 20000,
        py::arg("restarts") = 500, py::arg("sideways") = 1000, py::arg("jobs") = 1);
}
