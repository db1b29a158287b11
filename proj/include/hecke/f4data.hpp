#pragma once

/*
  Frozen exact character table of the F4 Weyl group (25 classes, 25
  irreducible types).  Generated once by tools/gen_f4_table.py, which builds
  the 1152-element group, splits tensor products of the reflection
  representation and the linear characters into irreducibles over Q, checks
  both orthogonality relations, and emits this table; the test suite
  re-checks row orthogonality against independently enumerated classes.

  Classes are keyed by a representative word in the simple reflections
  (digits '0'..'3' index the simples in build(F4, 4) order) so the table can
  be aligned with any enumeration of the group.
*/

namespace hecke::f4 {

extern const int class_count;
extern const int type_count;
extern const char* const class_words[];
extern const int class_sizes[];
extern const char* const type_names[];
extern const int type_dims[];
extern const long values[25][25];

}  // namespace hecke::f4
