"""Twisted torus knots T(p, q, 3, s): braids, tunnel certificates and invariant oracles."""
from .braid import (
    BraidWord,
    PDCode,
    Permutation,
    TwistedTorusKnot,
    conjugate,
    crossing_count,
    gauss_code,
    is_knot,
    pd_code_of_closure,
    permutation_of,
    stabilize,
    torus_braid,
    twisted_torus_braid,
    twisted_torus_word,
    writhe,
)
from .errors import CrossingCapExceeded, InexactDivision, ParameterError, TheoremViolation
from .invariants import (
    alexander_torus_closed_form,
    compare_up_to_mirror,
    jones,
    jones_torus_closed_form,
    kauffman_bracket,
)
from .kernels import BACKEND
from .laurent import LaurentPolynomial
from .tunnel import (
    CaseWitness,
    FirstHit,
    ScanReport,
    StrandLabeling,
    TunnelCertificate,
    classify_tunnel,
    find_case_witness,
    first_hit,
    scan_theorem,
    strand_labels,
)

__version__ = "0.1.0"
