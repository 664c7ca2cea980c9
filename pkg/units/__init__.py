from units.exact import (
    IntVector,
    RatVector,
    count,
    int_vector,
    rat_vector,
    to_integer,
    to_rational,
)
