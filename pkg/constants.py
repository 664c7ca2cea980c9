# Imports
from pathlib import Path

from units import count

# Scenario and report files

SCHEMA: str = "k3ord/1"
SCENARIO_FILE: str = "scenario.json"
EXPECTED_FILE: str = "expected.json"

# Matrix data shipped beside the corpus; not scenarios, so discovery skips it.
DATA_DIR: Path = Path(__file__).resolve().parent / "corpus" / "data"
Q_FILE: str = "q18.json"
GAMMA_FILE: str = "gamma_{name}.json"

# Lattices

# E8 Gram matrix: -2 on the diagonal, 1 for each edge of the Dynkin diagram
# (1-based node pairs below), 0 elsewhere.
E8_RANK: count = 8
E8_EDGES: tuple[tuple[int, int], ...] = (
    (1, 4),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
)

H_GRAM: tuple[tuple[int, ...], ...] = (
    (0, 1),
    (1, 0),
)

K3_RANK: count = 22

# Basis order of the K3 lattice E8 + E8 + H + H + H
K3_LABELS: tuple[str, ...] = (
    *(f"l{i}" for i in range(1, 9)),
    *(f"l'{i}" for i in range(1, 9)),
    "m1", "m2",
    "m'1", "m'2",
    "m''1", "m''2",
)

# Intersection matrix of the nodal classes s1..s18 ships in DATA_DIR / Q_FILE.
# Picard lattices of rank n use its leading n x n block.
Q_RANK: count = 18
Q_MIN_RANK: count = 3
# sha256 of the rows written as comma-separated integers joined by "\n"
Q_SHA256: str = "cbb09d52f0039526e8dd2896f40b8b59f0e7141ca03527eaff80bcf70a22ac82"

# Surfaces

RATIONAL_ELLIPTIC_RANK: count = 10  # H, E1..E9

# Property suites

SNF_PROPERTY_CASES: count = 500
SIGNATURE_PROPERTY_CASES: count = 200
H1_PROPERTY_CASES: count = 100
EXTENSION_PROPERTY_CASES: count = 50
H0_ORACLE_MAX_A: count = 4
H0_ORACLE_MAX_B: count = 8
