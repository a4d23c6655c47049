"""Centralized configuration for the marked rhythm CLI."""

# =============================================================================
# Verification Settings
# =============================================================================
# Largest |mR_N^n| that verify/enumerate will walk without an explicit --budget.
DEFAULT_BUDGET = 2_000_000

# Counterexamples kept per claim; the total count is always reported.
COUNTEREXAMPLE_LIMIT = 10

# The floor/ceil product inequality is checked on 1 <= a, b <= FLOOR_CEIL_GRID.
FLOOR_CEIL_GRID = 512

# Worker processes for verify (1 = run claims in-process).
DEFAULT_JOBS = 1

# =============================================================================
# Render Settings (pixels)
# =============================================================================
DEFAULT_CANVAS = 480
DEFAULT_RADIUS = 180
DEFAULT_NODE_RADIUS = 7
DEFAULT_MARKER_RING = 12
DEFAULT_FONT_SIZE = 14
DEFAULT_STROKE_WIDTH = 2
DEFAULT_LABEL_OFFSET = 22
