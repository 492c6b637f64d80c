"""lode-atlas: exact classification data for algebraic third-order LODEs.

Finite primitive subgroups of SL3(C), their invariant rings and syzygies,
the hypergeometric standard equations, and the gauge / pullback /
exp-product / symmetric-power transformations that tie them together,
all in exact rational and cyclotomic arithmetic.
"""

from .errors import (CatalogIntegrityError, ClosureBoundExceeded,
                     ConductorMismatch, ConstantPullback, DegenerateGauge,
                     DivisionByZero, EmbedUnsupported, FixtureError,
                     InconclusiveTruncation, InvalidParameter, LodeAtlasError,
                     NoHypergeometricStandard, NotSemiInvariant, ShapeMismatch,
                     SingularExpansionPoint, UnsupportedFactor)
from .exactnum import Cyclo, Rat, cyclo_arith, cyclo_embed, cyclo_inv
from .mpoly import MPoly, poly_det, poly_diff, poly_eval, poly_substitute_linear
from .groups import (GroupId, MatGroup, Mat3, catalog_generators, closure,
                     is_invariant, molien, projective_order, semi_character)
from .invariants import (InvariantSet, build_invariants, check_identity,
                         verify_syzygy)
from .ratfun import RatFun, ratfun_nth_root
from .diffop import LinODE, exp_product, gauge_transform, pullback
from .sympow import symmetric_power
from .series import (TruncSeries, hyp2f1_series, hyp3f2_series,
                     operator_residual, ratfun_series, series_solutions,
                     span_membership)
from .ratsol import indicial_roots, rational_solutions, singularity_data
from .catalog import StandardEquation, standard_equation, verify_standard
from .pipeline import (ExampleFixture, closed_form, load_example,
                       verify_example)

__all__ = [name for name in dir() if not name.startswith("_")]
