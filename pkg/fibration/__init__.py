from fibration.groups import (
    AbGroupModel,
    BlockEndo,
    GroupCohomology,
    GroupElement,
    coboundary_check,
    coboundary_of,
    cocycle_check,
    h1_structured,
)
from fibration.rational_elliptic import fibre_class, is_numerical_section, mw_sum_rational_elliptic
from fibration.sections import (
    FormalDivisor,
    Graph,
    Horizontal,
    SectionExpr,
    TrivialFibration,
    ZeroSection,
    section_line_bundle,
    symbol_line_bundle,
)
