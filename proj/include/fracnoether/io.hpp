#pragma once

// JSON round trips for the function types and verification reports. Objects
// are emitted with sorted keys, so equal inputs give equal bytes.

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"
#include "fracnoether/line_function.hpp"
#include "fracnoether/pohozaev.hpp"

namespace fracnoether {

using Json = nlohmann::json;

inline Json to_json(const CircleFunction& u) {
  Json rows = Json::array();
  for (int j = 0; j < u.components(); ++j) {
    Json row = Json::array();
    for (int k = -u.bandwidth(); k <= u.bandwidth(); ++k) {
      const auto c = u.coeff(j, k);
      row.push_back({c.real(), c.imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"N", u.bandwidth()}, {"m", u.components()}, {"coeffs", std::move(rows)}};
}

inline CircleFunction circle_function_from_json(const Json& j) {
  try {
    const int n = j.at("N").get<int>();
    const int m = j.at("m").get<int>();
    const auto& rows = j.at("coeffs");
    if (static_cast<int>(rows.size()) != m) throw InvalidInput("CircleFunction JSON: coeffs has wrong number of components");
    std::vector<std::vector<Complex>> out;
    for (const auto& row : rows) {
      std::vector<Complex> r;
      for (const auto& c : row) r.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
      out.push_back(std::move(r));
    }
    return CircleFunction::from_coefficients(n, out);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("CircleFunction JSON: ") + e.what());
  }
}

inline Json to_json(const SampledLineFunction& u) {
  return {{"a", u.a()}, {"b", u.b()}, {"h", u.h()}, {"m", u.components()}, {"samples", u.samples()}};
}

inline SampledLineFunction sampled_line_function_from_json(const Json& j) {
  try {
    SampledLineFunction u(j.at("a").get<double>(), j.at("b").get<double>(),
                          j.at("samples").get<std::vector<std::vector<double>>>());
    if (j.contains("m") && j.at("m").get<int>() != u.components())
      throw InvalidInput("SampledLineFunction JSON: m does not match the samples");
    return u;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("SampledLineFunction JSON: ") + e.what());
  }
}

inline Json to_json(const ChebyshevSolution& u) {
  return {{"a", u.a()}, {"b", u.b()}, {"M", u.M()}, {"coeffs", u.coeffs()}, {"f", u.f().expression()}};
}

inline ChebyshevSolution chebyshev_solution_from_json(const Json& j) {
  try {
    auto c = j.at("coeffs").get<std::vector<double>>();
    if (j.contains("M") && j.at("M").get<int>() != static_cast<int>(c.size()))
      throw InvalidInput("ChebyshevSolution JSON: M does not match coeffs");
    return {j.at("a").get<double>(), j.at("b").get<double>(), std::move(c), Nonlinearity(j.at("f").get<std::string>())};
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("ChebyshevSolution JSON: ") + e.what());
  }
}

/// One named residual with its tolerance and verdict.
struct VerificationReport {
  std::string check;
  Json params = Json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long resolution = 0;
};

/// pass is residual <= tolerance; a NaN residual fails.
inline VerificationReport make_check(std::string name, Json params, double residual, double tolerance,
                                     long resolution) {
  return {std::move(name), std::move(params), residual, tolerance, residual <= tolerance, resolution};
}

inline Json to_json(const VerificationReport& r) {
  return {{"check", r.check},         {"params", r.params}, {"residual", r.residual},
          {"tolerance", r.tolerance}, {"pass", r.pass},     {"resolution", r.resolution}};
}

inline VerificationReport verification_report_from_json(const Json& j) {
  try {
    return {j.at("check").get<std::string>(), j.at("params"),          j.at("residual").get<double>(),
            j.at("tolerance").get<double>(),  j.at("pass").get<bool>(), j.at("resolution").get<long>()};
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("report JSON: ") + e.what());
  }
}

inline Json to_json(const std::vector<VerificationReport>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json(std::istream& is) {
  try {
    return Json::parse(is);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

/// Shortest text that reads back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

/// CSV with header check,residual,tolerance,pass,resolution.
inline void write_reports_csv(std::ostream& os, const std::vector<VerificationReport>& rs) {
  os << "check,residual,tolerance,pass,resolution\n";
  for (const auto& r : rs)
    os << r.check << ',' << format_double(r.residual) << ',' << format_double(r.tolerance) << ','
       << (r.pass ? "true" : "false") << ',' << r.resolution << '\n';
}

}  // namespace fracnoether
