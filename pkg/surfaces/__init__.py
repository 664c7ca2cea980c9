from surfaces.k3 import (
    H0_ASSUMPTION,
    AmpleCertificate,
    DivisorClass,
    Effectivity,
    PairCheck,
    effectivity,
    euler_characteristic,
    genus,
    is_nodal_class,
    nakai_certificate,
)
from surfaces.models import (
    QDivisor,
    SurfaceModel,
    hirzebruch_index,
    recognize_quotient,
    surface_hirzebruch,
    surface_p2,
    surface_quadric,
    surface_rational_elliptic,
    surface_ruled_elliptic,
)
from surfaces.orders import (
    Irreducibility,
    Maximality,
    OrderClass,
    OrderClassification,
    OrderDescriptor,
    RamifiedDivisor,
    RestrictionClass,
    canonical_order_class,
    classify_order,
    h0_hirzebruch,
    h0_hirzebruch2,
    is_numerically_trivial,
    maximality_check,
    overlap_applicable,
    ramification_transfer,
    restriction_class,
    restriction_profile,
)
