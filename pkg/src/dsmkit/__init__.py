"""Hyper-powerset generation, set-expression canonicalization, and fusion.

The lattice of all union/intersection compositions of n frame atoms is
represented as bit-masks over the 2^n - 1 Venn regions; this package
generates it, parses and canonicalizes expressions over it, and combines
evidence with the DSm rule plus the classical Dempster/Yager/Smets rules.
"""

from .errors import (
    AtomRangeError,
    CapacityError,
    DsmkitError,
    FrameMismatchError,
    FullContradictionError,
    LabelRenderingError,
    MassValidationError,
    ModelViolationError,
    NotIsotoneError,
    ParseError,
    RegionRangeError,
    UnknownCardinalityError,
    WeightValidationError,
)
from .expr import CanonicalForm, canonicalize, equivalent, eval_mask, parse
from .fusion import (
    BelPl,
    ClassicalBBA,
    FusionOutcome,
    GeneralizedBBA,
    RedistributionWeights,
    conjunctive_consensus,
    dempster_combine,
    dempster_weights,
    dsm_bel_pl,
    dsm_combine,
    dsm_fuse_many,
    dst_bel_pl,
    smets_weights,
    weighted_redistribution,
    yager_weights,
)
from .hyperpowerset import (
    Antichain,
    HyperPowerset,
    NonMinimalMemberWarning,
    dnf_of_mask,
    from_antichain,
    generate,
    generate_stream,
    known_cardinality,
    render_expr,
    to_dnf,
)
from .oracles import (
    MbfResult,
    MemRow,
    TruthTable,
    brute_force_mbf,
    kisielewicz_d,
    memsize_report,
    render_size,
    table_to_mask,
)
from .venn import (
    Frame,
    MaskRelations,
    VennMask,
    atom_mask,
    basis_order,
    combine_masks,
    empty_mask,
    from_bitstring,
    full_mask,
    is_isotone,
    mask_relations,
    region_label,
    to_bitstring,
    to_hex,
)

__version__ = "0.1.0"
