"""Ideal colourings of the cyclotomic integers Z[xi_n] and their colour symmetries."""
from .ideals import (
    CosetTable,
    CycIdeal,
    NotClassNumberOne,
    colour_of,
    conjugate_ideal,
    coset_representatives,
    ideal_mul,
    principal_ideal,
    quotient_invariants,
    two_generator_ideal,
)
from .lattice import (
    HermiteBasis,
    canonical_residue,
    determinant,
    hnf,
    lattice_contains,
    snf_invariants,
)
from .render import Window, ab_patch, ammann_beenker_vertices, lattice_patch, render_patch
from .ring import CLASS_NUMBER_ONE, CycInt, RingIndex, cyclotomic_polynomial, cyclotomic_ring
from .splitting import (
    classify_norm,
    factor_integer,
    factor_phi_mod_p,
    ideals_of_norm,
    norm_table,
    prime_ideals_above,
    verify_generator,
)
from .symmetry import (
    AffineMap,
    NotAColourSymmetry,
    PointIsometry,
    brute_force_verify,
    classify,
    colour_preserving_group,
    colour_stabiliser,
    colour_symmetry_group,
    induced_permutation,
    is_balanced,
    is_perfect,
    lemma_predictions,
    point_group,
    quotient_order,
    semidirect_witness_l2,
)

__version__ = "0.1.0"
