#include "lathop/lattice.hpp"

#include <algorithm>

namespace lathop {

Direction opposite(Direction d) {
  int i = static_cast<int>(d);
  return static_cast<Direction>(i ^ 1);
}

Site direction_step(Direction d) {
  switch (d) {
    case Direction::plus_x: return {1, 0, 0};
    case Direction::minus_x: return {-1, 0, 0};
    case Direction::plus_y: return {0, 1, 0};
    case Direction::minus_y: return {0, -1, 0};
    case Direction::plus_z: return {0, 0, 1};
    case Direction::minus_z: return {0, 0, -1};
  }
  throw precondition_error("invalid direction");
}

int direction_axis(Direction d) { return static_cast<int>(d) / 2; }

bool direction_positive(Direction d) { return (static_cast<int>(d) & 1) == 0; }

Direction axis_direction(int axis, bool positive) {
  if (axis < 0 || axis > 2) throw precondition_error("axis out of range");
  return static_cast<Direction>(2 * axis + (positive ? 0 : 1));
}

std::string direction_name(Direction d) {
  static const char* names[6] = {"+x", "-x", "+y", "-y", "+z", "-z"};
  return names[static_cast<int>(d)];
}

Direction direction_from_name(const std::string& name) {
  for (Direction d : link_directions)
    if (direction_name(d) == name) return d;
  throw precondition_error("unknown direction name: " + name);
}

LatticeSpec::LatticeSpec(std::array<int, 3> dims) : dims_(dims) {
  for (int L : dims_)
    if (L < 2) throw precondition_error("lattice extents must be at least 2");
}

bool LatticeSpec::all_even() const {
  return dims_[0] % 2 == 0 && dims_[1] % 2 == 0 && dims_[2] % 2 == 0;
}

bool LatticeSpec::divisible_by(int m) const {
  return dims_[0] % m == 0 && dims_[1] % m == 0 && dims_[2] % m == 0;
}

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

Site LatticeSpec::wrap(Site s) const {
  return {mod(s.x, dims_[0]), mod(s.y, dims_[1]), mod(s.z, dims_[2])};
}

int LatticeSpec::index(Site s) const {
  Site w = wrap(s);
  return w.x + dims_[0] * (w.y + dims_[1] * w.z);
}

Site LatticeSpec::site_at(int index) const {
  int x = index % dims_[0];
  int rest = index / dims_[0];
  return {x, rest % dims_[1], rest / dims_[1]};
}

Rotation Rotation::identity() {
  return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

Site Rotation::apply(Site s) const {
  return {m[0][0] * s.x + m[0][1] * s.y + m[0][2] * s.z,
          m[1][0] * s.x + m[1][1] * s.y + m[1][2] * s.z,
          m[2][0] * s.x + m[2][1] * s.y + m[2][2] * s.z};
}

Rotation Rotation::transposed() const {
  Rotation r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

Rotation operator*(const Rotation& a, const Rotation& b) {
  Rotation r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int acc = 0;
      for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
      r.m[i][j] = acc;
    }
  return r;
}

SymmetryOp SymmetryOp::translation(Site t) {
  SymmetryOp op;
  op.shift = t;
  op.name = "T(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
            std::to_string(t.z) + ")";
  return op;
}

SymmetryOp SymmetryOp::rotation_x() {
  // Forward map (x,y,z) -> (x,-z,y); the inverse is (x,y,z) -> (x,z,-y).
  SymmetryOp op;
  op.rot = {{{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}}};
  op.name = "Rx";
  return op;
}

SymmetryOp SymmetryOp::rotation_z() {
  // Forward map (x,y,z) -> (-y,x,z); the inverse is (x,y,z) -> (y,-x,z).
  SymmetryOp op;
  op.rot = {{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}};
  op.name = "Rz";
  return op;
}

SymmetryOp SymmetryOp::inverse() const {
  SymmetryOp op;
  op.rot = rot.transposed();
  Site rt = op.rot.apply(shift);
  op.shift = {-rt.x, -rt.y, -rt.z};
  op.name = name.empty() ? std::string("inv") : "inv(" + name + ")";
  return op;
}

SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b) {
  // (a*b) s = a(b s): rotation a.rot*b.rot, shift a.rot(b.shift) + a.shift.
  SymmetryOp op;
  op.rot = a.rot * b.rot;
  op.shift = a.rot.apply(b.shift) + a.shift;
  op.name = a.name + "*" + b.name;
  return op;
}

Site SymmetryOp::apply_site(Site s, const LatticeSpec& lat) const {
  return lat.wrap(rot.apply(s) + shift);
}

Site SymmetryOp::apply_site_inverse(Site s, const LatticeSpec& lat) const {
  return lat.wrap(rot.transposed().apply(s - shift));
}

namespace {
Direction direction_of_step(Site step) {
  for (Direction d : link_directions)
    if (direction_step(d) == step) return d;
  throw numerical_error("rotation produced a non-unit step");
}
}  // namespace

Direction SymmetryOp::apply_direction(Direction n) const {
  return direction_of_step(rot.apply(direction_step(n)));
}

Direction SymmetryOp::apply_direction_inverse(Direction n) const {
  return direction_of_step(rot.transposed().apply(direction_step(n)));
}

std::vector<Rotation> cubic_rotations() {
  std::vector<Rotation> group = {Rotation::identity()};
  const Rotation gens[2] = {SymmetryOp::rotation_x().rot, SymmetryOp::rotation_z().rot};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < group.size(); ++i)
      for (const Rotation& g : gens) {
        Rotation r = g * group[i];
        if (std::find(group.begin(), group.end(), r) == group.end()) {
          group.push_back(r);
          grew = true;
        }
      }
  }
  return group;
}

std::vector<SymmetryOp> symmetry_generators() {
  return {SymmetryOp::translation({1, 0, 0}), SymmetryOp::translation({0, 1, 0}),
          SymmetryOp::translation({0, 0, 1}), SymmetryOp::rotation_x(),
          SymmetryOp::rotation_z()};
}

}  // namespace lathop
