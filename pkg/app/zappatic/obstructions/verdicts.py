# ═══════════════════════════════════════════════════════════════════════════
# OBSTRUCTION VERDICTS
# Vocabulary of the smoothability checks. Kept apart from the checks so
# reports and the CLI can use it without importing the formulas.
# ═══════════════════════════════════════════════════════════════════════════

from enum import Enum


class VerdictStatus(str, Enum):
    """Outcome of `check`.

    NO_OBSTRUCTION_FOUND: Every applicable inequality holds. This does not
                          prove the configuration smoothable.
    OBSTRUCTED:           Some applicable inequality fails; no smooth
                          surface degenerates to this configuration.
    """
    NO_OBSTRUCTION_FOUND = "no_obstruction_found"
    OBSTRUCTED = "obstructed"


class EqualityClass(str, Enum):
    """Configurations attaining K^2 = 8 chi + 1 - g.

    VERONESE_S4:    The Veronese surface degenerating to four planes
                    (three planes glued to a central one, three R_3 points).
    ELLIPTIC_CYCLE: An elliptic scroll of degree n >= 5 degenerating to a
                    cycle of n planes with n R_3 points.
    OTHER:          Anything else. Only the two cases above are possible for
                    smoothable configurations, so this is flagged.
    """
    VERONESE_S4 = "veronese_S4"
    ELLIPTIC_CYCLE = "elliptic_cycle"
    OTHER = "other"
