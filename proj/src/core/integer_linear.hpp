#pragma once

#include <vector>

#include "weight.hpp"

namespace lierep {

using IntMatrix = std::vector<std::vector<Int>>;

// Row-style Hermite normal form basis of the Z-span of `rows` (zero rows dropped).
IntMatrix hermite_basis(IntMatrix rows);

// Lattice basis of {x in Z^n : m x = 0}, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m, std::size_t n);

Int gcd_of(const std::vector<Int>& v);
// Divides by the gcd of the entries; zero stays zero.
std::vector<Int> primitive(std::vector<Int> v);

}  // namespace lierep
