"""Configuration constants and environment variables."""

import logging
import os

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(message)s")
log = logging.getLogger("domination")

# The one budget knob: seconds per solve call
TIME_BUDGET = float(os.environ.get("DOMINATION_TIME_BUDGET", "60"))
NODE_BUDGET = 10 ** 8
WORKERS = int(os.environ.get("DOMINATION_WORKERS", "1"))

ORACLE_MAX_VERTICES = 20
BUDGET_CHECK_INTERVAL = 1024  # nodes between clock reads

# Default campaign sizes
DEFAULT_MAX_N = 13
DEFAULT_SAMPLES = 20
DEFAULT_SEED = 1
RANDOM_EDGE_PROBABILITY = 0.3
