#pragma once

#include <string>
#include <vector>

#include "shadowpack/packing.hpp"

namespace shadowpack {

/// Basis (2,-1/3,-1/3), (-1/3,2,-1/3), (-1/3,-1/3,2); determinant 196/27.
Lattice lattice_lambda1();
/// Basis (2,0,0), (1,3/2,3/2), (1,-3/2,3/2); determinant 9.
Lattice lattice_lambda2();

/// Built-in configurations addressable from the CLI:
///   lambda1 | lambda2   cuboctahedron with the lattice window inside 3W
///   single              one translate at the origin
///   thm31               origin plus the symmetric facet contact (4/3,4/3,4/3)
///   lem42               origin plus (3/2, 3/4, 7/4)
///   lem44               origin plus a touching pair toward the F0 side
Configuration make_named_config(const std::string& name);
std::vector<std::string> named_config_list();

}  // namespace shadowpack
