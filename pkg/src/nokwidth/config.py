import os

from dotenv import load_dotenv

# Load from .env if it exists (useful for local runs)
load_dotenv()

LOGGING_LEVEL = os.getenv("LOGGING_LEVEL", "INFO").upper()

# --- Module builds ---
# Guard for complete module builds (essential sets, gamma slices).
MAX_DIM = int(os.getenv("NOK_WIDTH_MAX_DIM", "5000"))

# Worker threads for independent cases / constructions
JOBS = int(os.getenv("NOK_WIDTH_JOBS", "1"))

# --- Report documents ---
SCHEMA_VERSION = "nok-width/1"
