#ifndef SO32_STRUCTURE_HPP
#define SO32_STRUCTURE_HPP

#include <string>
#include <vector>

#include "so32/generators.hpp"

namespace so32 {

/// One bracket relation [lhs, rhs] = sum_k coeff_k * term_k.
struct BracketRelation {
  struct Term {
    double coeff = 0.0;
    Generator generator = Generator::J3;
  };
  Generator lhs = Generator::J3;
  Generator rhs = Generator::J3;
  std::vector<Term> result;
  /// Which subalgebra or family the relation belongs to.
  std::string group;

  std::string formula() const;
};

/// Every bracket of the so(3,2) realization: the three so(2,1)/so(3)
/// subalgebra triples (K, J, R, S) and all the crossed brackets between
/// J, K, R and S ladders and Cartan elements.
const std::vector<BracketRelation>& structure_relations();

/// Builds the right-hand side of a relation as an operator on the window.
SparseOperator relation_rhs(const BracketRelation& rel, Truncation trunc);

}  // namespace so32

#endif  // SO32_STRUCTURE_HPP
