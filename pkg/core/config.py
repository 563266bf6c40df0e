import os
import sys
from dotenv import load_dotenv

# --- Application Version ---
APP_VERSION = "0.4.0"

# Load .env for local runs (if present)
load_dotenv()

# --- 1. OUTPUT CONFIGURATION ---
# Where `train` writes its artifacts when --out is not given
DEFAULT_OUTPUT_DIR = os.getenv("GROWNETS_OUTPUT_DIR", "runs")

# --- 2. LOGGING CONFIGURATION ---
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
LOG_LEVEL = os.getenv("GROWNETS_LOG_LEVEL", "INFO").upper()

if LOG_LEVEL not in LOG_LEVELS:
    print(f"WARNING: GROWNETS_LOG_LEVEL '{LOG_LEVEL}' is not one of {LOG_LEVELS}. Using INFO.", file=sys.stderr, flush=True)
    LOG_LEVEL = "INFO"

# --- 3. SERIALIZATION ---
# 17 significant digits round-trip every double exactly
FLOAT_FORMAT = "%.17g"
LINE_TERMINATOR = "\n"

# --- 4. ARTIFACT NAMES ---
CODEBOOK_FILE = "codebook.csv"
EDGES_FILE = "edges.txt"
ASSIGNMENTS_FILE = "assignments.csv"
METRICS_FILE = "metrics.txt"
