"""Exact graded commutative algebra for linkage of modules.

Polynomial rings over prime fields, presented modules over their quotients,
Groebner bases, resolutions, Ext/Tor/Hom, the transpose and linkage operators,
and checks of module classes defined through Ext modules.
"""

from .algebra import (
    AmbientRing,
    GradedMatrix,
    Polynomial,
    QuotientRing,
    parse_polynomial,
    polynomial_ring,
    quotient_ring,
)
from .errors import (
    HomogeneityError,
    InputError,
    LinkageError,
    PreconditionError,
    ResourceCapError,
    RingMismatchError,
    ZeroModuleError,
)
from .functors import (
    biduality_map,
    canonical_module,
    dual,
    ext,
    grade,
    hom_module,
    is_finite_length,
    local_cohomology_dual,
    local_cohomology_function,
    tensor,
    tor,
)
from .groebner import groebner_basis, kernel, lift, normal_form, syzygies
from .hilbert import GradedFunction, HilbertSeries
from .operators import (
    is_horizontally_linked,
    is_stable,
    lambda_,
    link_by_ideal,
    syzygy,
    t_functor,
    trace_ideal,
    transpose,
)
from .predicates import (
    is_cm,
    is_cme,
    is_generalized_cm,
    is_mcm,
    is_sde,
    is_seq_cm_ext,
    is_seq_cm_linkage,
)
from .resolution import (
    PresentedModule,
    betti_table,
    depth,
    free_resolution,
    hilbert_series,
    krull_dim,
    minimize_presentation,
)
from .verify import Instance, TheoremReport, verify_theorem

__version__ = "0.1.0"
