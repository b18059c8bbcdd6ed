#include "hyperb/measures.hpp"

#include <sstream>

#include "hyperb/boundary_metrics.hpp"

namespace hyperb {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

FiniteMeasure to_double(const ExactMeasure& m) {
  FiniteMeasure out;
  for (const auto& [v, w] : m) out.add(v, w.convert_to<double>());
  return out;
}

void BoundaryMeasure::validate(const Graph& g) const {
  const auto& d = g.base_row();
  for (const auto& [v, w] : weights) {
    g.check_vertex(v);
    if (d[v] != radius) {
      throw GraphError("boundary measure atom " + std::to_string(v) +
                       " is not on the horizon sphere of radius " + std::to_string(radius));
    }
  }
}

FiniteMeasure parse_measure(const std::string& text, const Graph& g) {
  FiniteMeasure m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long v;
    double w;
    if (!(ls >> v)) continue;
    if (!(ls >> w)) throw GraphError("measure file: expected 'vertex weight' in '" + line + "'");
    std::string rest;
    if (ls >> rest) throw GraphError("measure file: trailing token in '" + line + "'");
    if (v < 0 || v >= g.vertex_count()) {
      throw GraphError("measure file: vertex " + std::to_string(v) + " out of range");
    }
    m.add(static_cast<Vertex>(v), w);
  }
  return m;
}

BoundaryMeasure parse_boundary_measure(const std::string& text, const Graph& g,
                                       Distance radius) {
  BoundaryMeasure m;
  m.radius = radius;
  m.weights = parse_measure(text, g);
  m.validate(g);
  return m;
}

void write_boundary_measure(const BoundaryMeasure& m, std::ostream& out) {
  for (const auto& [v, w] : m.weights) out << v << ' ' << format_double(w) << '\n';
}

void write_measure_csv(const FiniteMeasure& m, std::ostream& out) {
  out << "point,weight\n";
  for (const auto& [v, w] : m) out << v << ',' << format_double(w) << '\n';
}

void write_measure_csv(const ExactMeasure& m, std::ostream& out) {
  out << "point,weight\n";
  for (const auto& [v, w] : m) out << v << ',' << to_string(w) << '\n';
}

}  // namespace hyperb
