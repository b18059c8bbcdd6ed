#ifndef HYPERB_MEASURES_HPP
#define HYPERB_MEASURES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>
#include <ostream>
#include <string>

#include "hyperb/graph.hpp"

namespace hyperb {

using Rational = boost::multiprecision::cpp_rational;

/// `p/q` (or `p` when integral).
std::string to_string(const Rational& r);

/// Finitely supported weight function on vertex ids. Zero weights are never
/// stored, so the support is exactly the key set.
template <class Weight, bool AllowNegative>
class BasicMeasure {
 public:
  using Map = std::map<Vertex, Weight>;

  BasicMeasure() = default;

  static BasicMeasure dirac(Vertex v, Weight w = Weight(1)) {
    BasicMeasure m;
    m.add(v, w);
    return m;
  }

  void add(Vertex v, const Weight& w) {
    if constexpr (!AllowNegative) {
      if (w < Weight(0)) throw GraphError("negative weight in a nonnegative measure");
    }
    if (w == Weight(0)) return;
    auto [it, inserted] = weights_.try_emplace(v, w);
    if (!inserted) {
      it->second += w;
      if (it->second == Weight(0)) weights_.erase(it);
    }
  }

  Weight operator[](Vertex v) const {
    auto it = weights_.find(v);
    return it == weights_.end() ? Weight(0) : it->second;
  }

  Weight mass() const {
    Weight total(0);
    for (const auto& [v, w] : weights_) total += w;
    return total;
  }

  Weight max_atom() const {
    Weight best(0);
    for (const auto& [v, w] : weights_) best = std::max(best, w);
    return best;
  }

  std::size_t support_size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  const Map& weights() const { return weights_; }
  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }

  BasicMeasure scaled(const Weight& factor) const {
    BasicMeasure out;
    for (const auto& [v, w] : weights_) out.add(v, w * factor);
    return out;
  }

  BasicMeasure& operator+=(const BasicMeasure& other) {
    for (const auto& [v, w] : other.weights_) add(v, w);
    return *this;
  }

  bool operator==(const BasicMeasure&) const = default;

 private:
  Map weights_;
};

using FiniteMeasure = BasicMeasure<double, false>;
using SignedMeasure = BasicMeasure<double, true>;
using ExactMeasure = BasicMeasure<Rational, false>;

/// Total variation norm of the difference, sum over points of |a - b|
/// (so two probability measures are at distance at most 2).
template <class W, bool N1, bool N2>
W total_variation(const BasicMeasure<W, N1>& a, const BasicMeasure<W, N2>& b) {
  W total(0);
  auto ia = a.begin();
  auto ib = b.begin();
  auto absval = [](const W& x) { return x < W(0) ? W(-x) : x; };
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      total += absval(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      total += absval(ib->second);
      ++ib;
    } else {
      total += absval(W(ia->second - ib->second));
      ++ia;
      ++ib;
    }
  }
  return total;
}

FiniteMeasure to_double(const ExactMeasure& m);

/// A finite measure on horizon points, each keyed by its endpoint vertex on
/// the sphere S(base, radius).
struct BoundaryMeasure {
  FiniteMeasure weights;
  Distance radius = 0;

  bool is_probability(double tol = 1e-9) const {
    return std::abs(weights.mass() - 1.0) <= tol;
  }
  double max_atom() const { return weights.max_atom(); }
  /// Throws unless every atom sits on the horizon sphere of `g`.
  void validate(const Graph& g) const;
};

/// Reads `vertex_id weight` lines (`#` comments allowed).
FiniteMeasure parse_measure(const std::string& text, const Graph& g);

/// Reads `horizon_vertex_id weight` lines (`#` comments allowed).
BoundaryMeasure parse_boundary_measure(const std::string& text, const Graph& g,
                                       Distance radius);
void write_boundary_measure(const BoundaryMeasure& m, std::ostream& out);

/// `point,weight` lines.
void write_measure_csv(const FiniteMeasure& m, std::ostream& out);
void write_measure_csv(const ExactMeasure& m, std::ostream& out);

}  // namespace hyperb

#endif  // HYPERB_MEASURES_HPP
