"""Exact measures on tame subsets of the product ``[0,1] x R``.

The x-axis carries counting measure and the y-axis Lebesgue measure.  Sets
are finite unions of rectangles with rational endpoints and slope-1 line
segments, so every measure here is computed exactly.
"""

from ._rational import BACKEND, Rational
from .errors import BudgetError, DomainError
from .extreal import INF, ONE, ZERO, ExtReal, Finite, ext_add, ext_mul, ext_sum, parse_extreal
from .measures import (ETA, PI, RHO, XI, MeasureId, MeasureReport, ShiftComparison,
                       check_product_property, eta, eta_family, eta_t, measure_report,
                       pi_outer, rho_cld, shift_comparison, xi)
from .oracle import (CoverBudget, CoverSearch, GenConfig, cover_search, gen_disjoint_family,
                     gen_rect_factors, gen_tame_set1d, gen_tame_set2d, pi_cover_upper_bound,
                     rho_restriction_lower_bound)
from .set1d import UNIT, Interval, Set1D
from .set2d import EMPTY, GraphPatch, GraphSpec, RectPatch, Set2D, diagonal, diagonal_approx, graph, rect

__version__ = "0.1.0"
