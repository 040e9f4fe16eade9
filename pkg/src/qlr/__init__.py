"""Exact q-analogues of Littlewood-Richardson coefficients.

Four independent engines for the polynomial family, plus the full tableau
substrate they rest on: RSK column insertion, crystal operators, charge and
cocharge, catabolism, and the cyclage poset with its content embeddings.
"""

from .shapes import (
    RectSequence,
    box_complement,
    compositions,
    conjugate,
    dominant_sort,
    dominates,
    from_rects,
    n_stat,
    normalize_index,
    partitions,
    rect_sequence,
    roots_of,
)
from .tableaux import (
    Tableau,
    column_rsk,
    column_rsk_inverse,
    content,
    enumerate_cst,
    evacuation,
    h_slice,
    knuth_equivalent,
    overlap,
    schensted_p,
    straight_cst,
    tab,
    v_slice,
)
from .crystal import (
    is_lattice,
    is_mu_lattice,
    lattice_involution,
    lowering,
    plactic_act,
    r_pairing,
    raising,
    reflection,
)
from .charge import charge, charge_tableau, cocharge, cocharge_tableau
from .catabolism import (
    catabolism_type,
    cat_block,
    enumerate_catabolizable,
    is_catabolizable,
    is_mu_catabolizable,
    is_mu_column_catabolizable,
    yamanouchi_block,
)
from .cyclage import (
    CyclagePoset,
    content_embedding,
    cyclage_covers,
    cyclage_poset,
    cyclage_standardization,
    cocyclage,
)
from .kpoly import (
    KIndex,
    QPoly,
    compute,
    cocharge_kostka,
    k_at_one,
    k_by_charge,
    k_by_kostant,
    k_by_recurrence,
    k_by_series,
    kostka_foulkes,
    kostka_number,
    lr_coefficient,
    standard_cocharge_sum,
    two_rectangle_formula,
)
from .involution import InvolutionContext, SignedTriple, verify_involution

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
