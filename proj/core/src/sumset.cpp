#include "planesum/sumset.hpp"

#include <algorithm>
#include <tuple>

#include "planesum/errors.hpp"

namespace planesum {

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  std::vector<Point> sums;
  sums.reserve(a.size() * b.size());
  for (const Point& p : a) {
    for (const Point& q : b) sums.push_back(p + q);
  }
  return PointSet(std::move(sums));
}

UniqueRepresentation unique_representation(const PointSet& a, const PointSet& b) {
  // (sum, a, b) triples sorted by sum put all representations of a point next to each other.
  std::vector<std::tuple<Point, Point, Point>> triples;
  triples.reserve(a.size() * b.size());
  for (const Point& p : a) {
    for (const Point& q : b) triples.emplace_back(p + q, p, q);
  }
  std::sort(triples.begin(), triples.end());

  UniqueRepresentation out;
  for (std::size_t k = 0; k + 1 < triples.size(); ++k) {
    if (std::get<0>(triples[k]) != std::get<0>(triples[k + 1])) continue;
    SumWitness w{std::get<0>(triples[k]), {}};
    for (std::size_t j = k; j < triples.size() && std::get<0>(triples[j]) == w.point; ++j) {
      w.reps.emplace_back(std::get<1>(triples[j]), std::get<2>(triples[j]));
    }
    out.unique = false;
    out.witness = std::move(w);
    break;
  }
  return out;
}

PointSet canonical_translate(const PointSet& s) {
  if (s.empty()) throw PreconditionViolated("canonical_translate needs a nonempty set");
  return s.translated(-s.front());
}

bool is_translate_of(const PointSet& x, const PointSet& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  const Point shift = y.front() - x.front();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] + shift != y[k]) return false;
  }
  return true;
}

}  // namespace planesum
