"""Dowker-Thistlethwaite codes, bridge counts, tangles and knot invariants."""

from .dt import (
    DtCode,
    DtError,
    DtSyntaxError,
    DuplicateLabel,
    OddValue,
    OutOfRange,
    Visit,
    canonicalize,
    diagram_bridges,
    over_under_sequence,
    pairing,
    parse_dt,
)
from .invariants import (
    SizeGuardExceeded,
    alexander,
    alexander_polynomial,
    determinant,
    jones,
    kauffman_bracket,
    same_alexander,
)
from .laurent import LaurentPolynomial
from .realize import NotRealizable, PlanarDiagram, is_realizable, mirror, pd_text, realize, writhe
from .tangles import (
    MontesinosForm,
    NotAKnot,
    RuleNotApplicable,
    cf_to_fraction,
    fraction_to_cf,
    montesinos_bridge_index,
    montesinos_diagram,
    parse_montesinos,
    rational_knot,
    two_bridge_equivalent,
)

__version__ = "0.1.0"
