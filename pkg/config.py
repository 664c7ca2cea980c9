from enum import Enum
from pathlib import Path

DEBUG_MODE: bool = False
# MAKE SURE THIS IS FALSE FOR CORPUS RUNS THAT FEED CI
# ^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^
# When true, unexpected exceptions inside a command are re-raised
# instead of being reported as an Error verdict.
LOGGING: bool = False
LOG_OUT_LEVEL: int = 2
LOG_FILE_LEVEL: int = 1
LOG_FILE: str = "k3ord.log"
COLOR: bool = True

# Levels are how much information is logged
# higher level = less information
# level 0 will log everything
# level 1 will log everything except debug
# and so on
# levels:
# 0 = All
# 1 = INFO
# 2 = WARNING
# 3 = ERROR
# 4 = SETUP
# anything else will log nothing
# ^^^^^^^^^^^^^^^^^^^^^^^^^^^^^^


# OUTPUT
class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


OUTPUT_FORMAT: OutputFormat = OutputFormat.TEXT
REPORT_TIMING: bool = False  # timing breaks byte-identical reports

# CORPUS
CORPUS_DIR: Path = Path(__file__).resolve().parent / "corpus"

# SEARCH AND PROPERTY TESTS
PROPERTY_SEED: int = 7407
WITNESS_SEARCH_BOUND: int = 2
