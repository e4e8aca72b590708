"""nokwidth.widths

Simplex constructions certifying the Gromov-width lower bound: the good
ordering, the convex (suffix reduced-word) ordering and the Levi telescope.
Each verifier returns a :class:`SimplexReport`; :func:`width_report` runs
every applicable one for a rational weight.
"""

from .convex import mmax_closed_form, mmax_tuples, verify_convex_ordering_theorem
from .errors import Disagreement, NotRegular
from .good import checked_width, unit, verify_good_ordering_theorem, width_over_phi_p
from .report import width_report
from .telescope import verify_telescope_theorem
from .types import KINDS, SimplexReport, SimplexSpec, WidthReport

__all__ = [
    "KINDS",
    "Disagreement",
    "NotRegular",
    "SimplexReport",
    "SimplexSpec",
    "WidthReport",
    "checked_width",
    "mmax_closed_form",
    "mmax_tuples",
    "unit",
    "verify_convex_ordering_theorem",
    "verify_good_ordering_theorem",
    "verify_telescope_theorem",
    "width_over_phi_p",
    "width_report",
]
