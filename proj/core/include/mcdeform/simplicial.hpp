#ifndef MCDEFORM_SIMPLICIAL_HPP
#define MCDEFORM_SIMPLICIAL_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mcdeform/graded.hpp"

namespace mcdeform {

/// Simplicial set truncated at level L, stored as face/degeneracy tables.
/// faces[n][i][x] is d_i of simplex x at level n (n >= 1);
/// degeneracies[n][i][x] is s_i of simplex x at level n (n < L).
struct FiniteSimplicialSet {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies;

  std::size_t top_level() const { return sizes.empty() ? 0 : sizes.size() - 1; }
};

/// Checks every simplicial identity that fits inside the truncation.
ValidationReport validate_simplicial(const FiniteSimplicialSet& x);

/// Connected components through level-1 simplices.
std::size_t pi0(const FiniteSimplicialSet& x);

/// Groupoid with finitely many objects and arrows. compose[{g, f}] = g o f
/// for every composable pair (target of f = source of g).
struct FiniteGroupoid {
  struct Arrow {
    std::size_t source;
    std::size_t target;
  };
  std::size_t objects = 0;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> identity;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;
};

/// One-object groupoid of a finite group given by its multiplication table;
/// element 0 must be the identity.
FiniteGroupoid group_groupoid(const std::vector<std::vector<std::size_t>>& table);
FiniteGroupoid discrete_groupoid(std::size_t objects);
/// Exactly one arrow between any two objects with the same class.
FiniteGroupoid codiscrete_groupoid(const std::vector<std::size_t>& class_of);

/// Nerve up to level L: n-simplices are composable strings (f_1, ..., f_n)
/// with target(f_k) = source(f_{k+1}).
FiniteSimplicialSet finite_nerve(const FiniteGroupoid& g, std::size_t levels);

/// Bisimplicial set truncated at (L, L). h_faces[p][q][i] : X_{p,q} -> X_{p-1,q},
/// v_faces[p][q][i] : X_{p,q} -> X_{p,q-1}, and likewise for degeneracies.
struct BisimplicialSet {
  std::vector<std::vector<std::size_t>> sizes;
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> h_faces, v_faces;
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> h_degeneracies, v_degeneracies;
};

/// X_{p,q} = X_q with identity horizontal structure.
BisimplicialSet constant_bisimplicial(const FiniteSimplicialSet& x);

/// Diagonal n -> X_{n,n}, d_i = d^h_i d^v_i, s_i = s^h_i s^v_i.
FiniteSimplicialSet diagonal(const BisimplicialSet& x);

}  // namespace mcdeform

#endif  // MCDEFORM_SIMPLICIAL_HPP
