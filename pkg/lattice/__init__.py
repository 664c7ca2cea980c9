from lattice.core import (
    Lattice,
    build_E8,
    build_H,
    build_K3,
    build_Q,
    direct_sum,
    is_even,
    pair,
    q_checksum,
    q_rows,
    scaled,
    unit_vector,
)
from lattice.embedding import (
    ComplementResult,
    Embedding,
    basis_extension,
    check_isometric,
    is_primitive,
    orthogonal_complement,
    saturation,
)
from lattice.isometry import (
    HODGE_ASSUMPTION,
    ExtensionResult,
    extend_by_minus_one,
    find_nonintegral_witness,
    fixes_vector,
    hyperbolic_square,
)
