"""Constants for the dsi-bounds package."""

# -- Capacity --------------------------------------------------------------
MAX_VERTICES = 63  # one VertexSet fits a machine word

# -- Oracle guards ---------------------------------------------------------
DEFAULT_GUARD_SINGLE = 20  # alpha_j / gamma_j value with witness
DEFAULT_GUARD_FAMILY = 16  # full enumeration of F, annihilating-set scans
DEFAULT_GUARD_CHROMATIC = 16  # chi_j backtracking
DEFAULT_GUARD_CORPUS = 7  # labeled corpus enumeration

# -- Set kinds -------------------------------------------------------------
KIND_INDEPENDENCE = "independence"
KIND_DOMINATION = "domination"

# -- Provenance tags -------------------------------------------------------
PROVENANCE_PAPER = "PAPER"
PROVENANCE_TRIVIAL = "TRIVIAL"
PROVENANCE_DERIVED = "DERIVED"
PROVENANCES = (PROVENANCE_PAPER, PROVENANCE_TRIVIAL, PROVENANCE_DERIVED)

# -- Certificates ----------------------------------------------------------
CERT_PLANAR = "planar"

# -- graph6 ----------------------------------------------------------------
GRAPH6_OFFSET = 63
GRAPH6_MAX_BYTE = 126
GRAPH6_HEADER = ">>graph6<<"

# -- Output ----------------------------------------------------------------
FORMAT_JSON = "json"
FORMAT_TSV = "tsv"
FORMAT_HUMAN = "human"
OUTPUT_FORMATS = (FORMAT_JSON, FORMAT_TSV, FORMAT_HUMAN)

# Key order of a BoundReport JSON line; optional keys follow the required ones.
REPORT_REQUIRED_KEYS = (
    "graph6",
    "n",
    "m",
    "j",
    "alpha_j",
    "a",
    "a_j",
    "c_j",
    "a_weak",
    "c_weak",
    "chrom_bound",
)
REPORT_OPTIONAL_KEYS = (
    "p",
    "gamma_j",
    "chi_j",
    "claw_w",
    "faudree",
    "k1p_free",
    "z_j",
    "w_j",
    "w_weak",
    "planar",
)

# -- Exit codes ------------------------------------------------------------
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# -- Logging Messages ------------------------------------------------------
LOG_GUARD_EXCEEDED = "%s refused: n=%d exceeds guard %d"
LOG_CHAIN_FAILED = "Chain check %s failed on %s: %s vs %s"
