#pragma once

// Irreducible character tables of small groups via the class-algebra
// eigenvector method: the structure-constant matrices M_i commute, a generic
// linear combination splits their common eigenvectors, and each eigenvector
// (omega_c) = (|C_c| chi(g_c) / dim) recovers one irreducible character.

#include <vector>

#include "oddwedge/class_function.hpp"
#include "oddwedge/group.hpp"

namespace oddwedge {

struct CharacterTable {
  ClassStructurePtr cs;
  std::vector<ClassFunction> rows;  // one per irreducible, canonical order
  std::vector<int> dims;            // row -> chi(e)
};

// Rows are sorted by dimension, then lexicographically over the canonical
// class order (descending real part, ascending imaginary part); values are
// snapped against roots of unity and the group's known closed forms.
// Throws std::runtime_error if eigenvalue degeneracy persists after
// deterministic perturbation retries.
CharacterTable character_table(const FiniteGroup& g);
CharacterTable character_table(const FiniteGroup& g, ClassStructurePtr cs);

}  // namespace oddwedge
