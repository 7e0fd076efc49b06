// Command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "operahedra/exact.hpp"

namespace operahedra::cli {

// Exit statuses.
enum Status { Ok = 0, Failure = 1, BadTree = 2, OnWall = 3, TooLarge = 4 };

struct DimensionCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// OFF surface of 3-dimensional cells living in a hyperplane sum x = c; the first coordinate is dropped.
// faces index into points and are oriented counterclockwise seen from outside their cell.
struct OffMesh {
  std::vector<RatVector> points;
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> cells;  // face indices per cell
};
// Adds the boundary polygons of conv(V) to the mesh, sharing equal points.
void add_cell(OffMesh& mesh, const std::vector<RatVector>& V);
void write_off(std::ostream& os, const OffMesh& mesh);

}  // namespace operahedra::cli
