#pragma once

#include <array>
#include <string>
#include <vector>

#include "lathop/errors.hpp"

namespace lathop {

struct Site {
  int x = 0;
  int y = 0;
  int z = 0;

  friend bool operator==(const Site&, const Site&) = default;
  friend Site operator+(Site a, Site b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Site operator-(Site a, Site b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  int operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  int& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
};

enum class Direction : int {
  plus_x = 0,
  minus_x = 1,
  plus_y = 2,
  minus_y = 3,
  plus_z = 4,
  minus_z = 5,
};

inline constexpr std::array<Direction, 6> link_directions = {
    Direction::plus_x, Direction::minus_x, Direction::plus_y,
    Direction::minus_y, Direction::plus_z, Direction::minus_z,
};

Direction opposite(Direction d);
Site direction_step(Direction d);
int direction_axis(Direction d);       // 0, 1, 2
bool direction_positive(Direction d);
Direction axis_direction(int axis, bool positive);
std::string direction_name(Direction d);        // "+x", "-x", ...
Direction direction_from_name(const std::string& name);

// Periodic cubic lattice geometry. Sites are indexed lexicographically with x
// fastest: index = x + Lx*(y + Ly*z).
class LatticeSpec {
 public:
  explicit LatticeSpec(std::array<int, 3> dims);
  LatticeSpec(int lx, int ly, int lz) : LatticeSpec(std::array<int, 3>{lx, ly, lz}) {}

  const std::array<int, 3>& dims() const { return dims_; }
  int extent(int axis) const { return dims_[axis]; }
  int volume() const { return dims_[0] * dims_[1] * dims_[2]; }
  bool all_even() const;
  bool divisible_by(int m) const;

  Site wrap(Site s) const;
  int index(Site s) const;
  Site site_at(int index) const;
  Site neighbor(Site s, Direction n) const { return wrap(s + direction_step(n)); }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

 private:
  std::array<int, 3> dims_;
};

// Proper rotation with integer entries; acts on sites and directions alike.
struct Rotation {
  std::array<std::array<int, 3>, 3> m;

  static Rotation identity();
  Site apply(Site s) const;
  Rotation transposed() const;  // the inverse, for orthogonal matrices
  friend Rotation operator*(const Rotation& a, const Rotation& b);
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

// Lattice symmetry s -> R s + t with the rotation taken about the origin.
struct SymmetryOp {
  Rotation rot = Rotation::identity();
  Site shift{};
  std::string name;

  static SymmetryOp translation(Site t);
  static SymmetryOp rotation_x();  // inverse action: (x,y,z) -> (x,z,-y)
  static SymmetryOp rotation_z();  // inverse action: (x,y,z) -> (y,-x,z)

  SymmetryOp inverse() const;
  friend SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b);

  Site apply_site(Site s, const LatticeSpec& lat) const;
  Site apply_site_inverse(Site s, const LatticeSpec& lat) const;
  Direction apply_direction(Direction n) const;
  Direction apply_direction_inverse(Direction n) const;
};

// Closure of {rotation_x, rotation_z}: the 24 proper rotations of the cube.
std::vector<Rotation> cubic_rotations();

// Unit translations plus the two generating rotations; enough to generate the
// full symmetry group used by the classification.
std::vector<SymmetryOp> symmetry_generators();

}  // namespace lathop
