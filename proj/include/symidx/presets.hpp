#pragma once

#include "symidx/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symidx {

/// A named algebra together with the matrix model it was built from.
struct Preset {
  LieAlgebra<double> algebra;
  std::optional<Representation<double>> representation;
};

/// so(n) on the elementary skew matrices E_ab = e_a e_b^T - e_b e_a^T,
/// a < b in lexicographic order, labelled "E12", "E13", ...
MatrixAlgebra<double> so_algebra(int n);

/// spin(3) as imaginary quaternions (i, j, k), represented by left
/// multiplication on R^4 = H with basis (1, i, j, k).
MatrixAlgebra<double> spin3_quaternion();

/// su(3) on i times the Gell-Mann matrices, realified to 6 x 6.
MatrixAlgebra<double> su3_algebra();

/// Block-diagonal sum of two matrix algebras.
MatrixAlgebra<double> direct_sum(const MatrixAlgebra<double>& a, const MatrixAlgebra<double>& b,
                                 const std::string& prefix_a, const std::string& prefix_b);

/// Names: "so3", "so4", "spin3_quat", "su3", "abelian:<n>", "so:<n>".
Preset preset(const std::string& name);
std::vector<std::string> preset_names();

/// Quaternion multiplication on R^4 with basis (1, i, j, k).
Matrix<double> quaternion_left(const Vector<double>& q);
Matrix<double> quaternion_right(const Vector<double>& q);
Vector<double> quaternion_product(const Vector<double>& a, const Vector<double>& b);

}  // namespace symidx
