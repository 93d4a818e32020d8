"""
Acyclic Matching Toolkit - Configuration

All configuration values with environment variable overrides.
Values can also be placed in a local .env file.
"""

import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    """Central configuration for constructions, censuses and sweeps."""

    # ═══════════════════════════════════════════════════════════════════
    # FEASIBILITY BOUNDS
    # ═══════════════════════════════════════════════════════════════════
    MAX_CENSUS_SIZE = int(os.getenv('MAX_CENSUS_SIZE', '8'))      # |A| bound for census work (|A|! growth)
    MAX_SWEEP_ORDER = int(os.getenv('MAX_SWEEP_ORDER', '16'))     # largest group swept exhaustively

    # ═══════════════════════════════════════════════════════════════════
    # SWEEPS
    # ═══════════════════════════════════════════════════════════════════
    SWEEP_WORKERS = int(os.getenv('SWEEP_WORKERS', '1'))          # >1 runs chunks in a process pool
    DEFAULT_SAMPLES = int(os.getenv('DEFAULT_SAMPLES', '500'))
    DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', '0'))
    FREE_SAMPLE_RADIUS = int(os.getenv('FREE_SAMPLE_RADIUS', '6'))  # box [-R, R] for free Z factors
    SAMPLE_ATTEMPTS = int(os.getenv('SAMPLE_ATTEMPTS', '200'))    # rejection tries per sampled pair

    # ═══════════════════════════════════════════════════════════════════
    # CONSTRUCTION / TABLES
    # ═══════════════════════════════════════════════════════════════════
    DEFAULT_ORDER = os.getenv('DEFAULT_ORDER', 'asc')             # asc, desc or seed:<n>
    STRICT_LATIN = os.getenv('STRICT_LATIN', 'false').lower() == 'true'

    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def describe(cls) -> list:
        """Configuration banner, one line per setting."""
        return [
            "=" * 60,
            "🧮 ACYCLIC MATCHING TOOLKIT - CONFIGURATION",
            "=" * 60,
            f"📏 Census bound: |A| <= {cls.MAX_CENSUS_SIZE}",
            f"📏 Exhaustive sweeps: order <= {cls.MAX_SWEEP_ORDER}",
            f"⚙️ Workers: {cls.SWEEP_WORKERS}",
            f"🎲 Samples: {cls.DEFAULT_SAMPLES} (seed {cls.DEFAULT_SEED}, radius {cls.FREE_SAMPLE_RADIUS})",
            f"🔢 Greedy order: {cls.DEFAULT_ORDER}",
            f"🔲 Strict Latin tables: {'✅ Yes' if cls.STRICT_LATIN else '⚪ No'}",
            "=" * 60,
        ]
