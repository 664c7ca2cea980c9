from toolkit.linalg.determinant import cofactor_det, det
from toolkit.linalg.matrix import ExactMatrix, IntMatrix, RatMatrix, block_diag, dot, hstack, vstack
from toolkit.linalg.normal_forms import (
    SNFResult,
    hermite_normal_form,
    is_unimodular,
    rank,
    snf,
    unimodular_inverse,
)
from toolkit.linalg.signature import Signature, congruence_diagonalize, signature
from toolkit.linalg.solve import integer_kernel, solve_integer
