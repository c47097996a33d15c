"""Exact arithmetic for the alpha-bicyclic monoid family and its topologies.

Layers:

* ``ordinal`` — hereditary-normal-form ordinal arithmetic and a text grammar;
* ``semigroup`` — pair elements, the Bruck extension with adjoined zero,
  boxes, and the word-rewriting oracle for level 1;
* ``iso`` — the level-shift bijection between level alpha+1 and Bruck
  triples over level alpha;
* ``topology`` — the indexed family of shift-continuous topologies as
  decidable neighborhood descriptors, with constructive continuity and
  separation witnesses and truncation-exhaustive checkers;
* ``verify`` — seeded, reproducible verification suites;
* ``cli`` — the command-line front end.

The arithmetic kernel is compiled when the extension is built
(``python setup.py build_ext --inplace``) and falls back to pure Python
otherwise; see ``active_kernel``.
"""

from ._kernel import active_kernel
from .errors import (
    DomainError,
    EqualPoints,
    InvalidDescriptor,
    LevelMismatch,
    NotALimitLevel,
    OutOfRange,
    ParseError,
    SubtrahendTooLarge,
    TargetMismatch,
    UndefinedForZeroCoordinate,
    UnsupportedLevel,
    WitnessNotFound,
    ZeroHasNoBox,
    ZeroNotInImage,
    ZeroOrdinal,
)
from .iso import CaseTag, classify_case, from_bruck, to_bruck
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    ModifiedSplit,
    Ordinal,
    compare,
    decrement_last,
    enumerate_below_omega_pow,
    format_ordinal,
    is_canonical,
    last_term,
    modified_split,
    omega_pow,
    parse_ordinal,
)
from .semigroup import (
    BRUCK_ZERO,
    BAlphaElement,
    BoxIndex,
    BruckElement,
    BruckZero,
    balpha_inverse,
    balpha_mul,
    balpha_pow,
    bicyclic_reduce,
    box_of,
    bruck_mul,
    element,
    format_balpha,
    format_bruck,
    identity,
    parse_balpha,
    parse_bruck,
)
from .topology import (
    BaseNbhd,
    BoxSquare,
    FinerResult,
    InclusionResult,
    Isolated,
    Limit,
    NbhdDescriptor,
    PointClass,
    Singleton,
    TopologySpec,
    base_nbhd,
    classify_point,
    continuity_witness,
    enumerate_topologies,
    forced_nbhd_contains,
    format_descriptor,
    hausdorff_witness,
    iter_members,
    nbhd_contains,
    parse_descriptor,
    spec,
    topology_finer,
    transport,
    transport_inv,
    uncovered_boxes,
    verify_shift_inclusion,
)

__version__ = "0.1.0"
