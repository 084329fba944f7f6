#pragma once

#include "arcchroma/coloring.hpp"
#include "arcchroma/cyclic_model.hpp"

namespace arcchroma::constructions {

// Colors PG(2,q) with q+1 classes. The classes are the negated lines through
// residue 0 of the cyclic model; negating a line of a plane with a cyclic
// point regular automorphism yields an arc, and the lines through a common
// point partition the remaining ones.
Coloring pg_cyclic_coloring(const CyclicModel& model);
Coloring pg_cyclic_coloring(int q);

// Colors AG(2,q) with q classes by the vertical translates of the parabola
// y = x^2. The color of (x, y) is the encoding of y - x^2.
Coloring ag_parabola_coloring(int q);

// Covers every point of PG(2,q) exactly b times with arcs, where b = q+1 for
// odd q (the negated lines) and b = q+2 for even q (each negated line
// extended by its nucleus). Both use k = q^2+q+1 classes, so k/b beats the
// integral chromatic number.
FractionalColoring pg_fractional_coloring(const CyclicModel& model);
FractionalColoring pg_fractional_coloring(int q);

// Colors the n x n grid by embedding it into AG(2,q) for the smallest prime
// q >= n and restricting the parabola coloring. Unused colors are compacted
// away, so k <= q.
Coloring grid_embedding_coloring(int n);

int smallest_prime_at_least(int n);

}  // namespace arcchroma::constructions
