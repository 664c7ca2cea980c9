from cohomology.fixed import fixed_sublattice, half_gram_quotient
from cohomology.glattice import GLattice, invariant_gram
from cohomology.h1 import (
    CohResult,
    class_order,
    generates_same_classes,
    h1,
    is_coboundary,
    is_cocycle,
    norm_and_diff,
)
