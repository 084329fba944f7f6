#pragma once

#include <span>
#include <utility>
#include <vector>

#include "arcchroma/geometry.hpp"

namespace arcchroma {

// Difference-set presentation of PG(2,q): points are the residues modulo
// n = q^2+q+1 and lines are the translates D + t of one perfect planar
// difference set D.  D is derived from a Singer cycle: index the nonzero
// field elements of GF(q^3) by powers of a primitive element g; the residues
// i with Tr(g^i) = 0 in GF(q) form D.  The model carries an explicit
// bijection onto the coordinate plane under which every translate maps onto
// a coordinate line.
//
// D is canonicalized to the lexicographically smallest translate containing
// the residue 0.  Both the difference-set property and the line
// correspondence are verified during construction.
class CyclicModel {
 public:
  static CyclicModel build(int q);

  int q() const { return q_; }
  int modulus() const { return n_; }
  const std::vector<int>& difference_set() const { return diff_set_; }
  const Geometry& plane() const { return plane_; }

  PointId point_of_residue(int r) const;
  int residue_of_point(PointId p) const;

  std::vector<int> line_residues(int t) const;               // sorted D + t
  std::vector<int> negate(std::span<const int> s) const;     // sorted {-x mod n}
  std::vector<PointId> points_of_residues(std::span<const int> s) const;  // sorted ids

 private:
  explicit CyclicModel(Geometry plane) : plane_(std::move(plane)) {}

  int q_ = 0;
  int n_ = 0;
  std::vector<int> diff_set_;
  std::vector<PointId> residue_to_point_;
  std::vector<int> point_to_residue_;
  Geometry plane_;
};

// The common point of the tangents of a (q+1)-arc in PG(2,q) for even q.
// Adjoining it keeps the set an arc.
struct Nucleus {
  PointId point = -1;
  std::vector<PointId> arc;  // the (q+1)-arc it completes
};

Nucleus nucleus_of(const Geometry& pg, std::span<const PointId> arc);

// For even q: translate t -> nucleus of the negated line -(D + t).  The map
// is verified to be a bijection onto the plane's points.
std::vector<PointId> nucleus_bijection(const CyclicModel& model);

}  // namespace arcchroma
