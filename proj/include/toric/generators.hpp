#pragma once

#include "toric/configuration.hpp"

namespace toric::gen {

/// (Id_m Id_m ; 0...0 1...1), the Segre embedding of P^1 x P^(m-1).
Configuration segre(std::size_t m);

/// (Id_n Id_n ; 0 M) for a d x n matrix M.
Configuration lawrence(const IntMatrix &m);

/// The 5 x 7 matrix A_alpha.
Configuration family_alpha(long alpha);

/// The 7 x 2 Gale matrix printed next to A_alpha.
IntMatrix printed_gale_alpha(long alpha);

/// Planar Gale rows (a_1,0),...,(a_r,0),(0,1),(0,-1),(1,1),(-1,-1).
IntMatrix gale_family_dim(const std::vector<long> &alphas);
Configuration family_dim(const std::vector<long> &alphas);

/// Gale rows a_1 e_1,...,a_r e_1, +-e_2,...,+-e_m, +-(e_1+...+e_m) in Z^m.
IntMatrix gale_family_codim(std::size_t m, const std::vector<long> &alphas);
Configuration family_codim(std::size_t m, const std::vector<long> &alphas);

/// A configuration whose affine relations are exactly the column lattice of
/// b. Rows of b must sum to zero and the columns must be independent and
/// saturated. The weights are in Hermite form.
Configuration config_from_gale(const IntMatrix &b);

} // namespace toric::gen
