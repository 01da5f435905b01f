"""Solomon-Terao algebras of hyperplane arrangements over exact fields."""

from .scalars import QQ, Field, FieldMismatchError, Scalar, extension_field
from .poly import (
    BivariatePoly,
    FreeModuleElement,
    HilbertSeries,
    Polynomial,
    factor_quantum_integers,
    is_palindromic,
)
from .arr import Arrangement, Hyperplane, IntersectionLattice
from .gb import (
    GroebnerBasis,
    buchberger,
    free_resolution,
    hilbert_series_submodule,
    kernel_of_map,
    minimal_generators,
    normal_form,
    projective_dimension,
    standard_monomials,
    syzygies,
)
from .logder import (
    DerModule,
    check_acyclicity,
    is_free,
    is_tame,
    log_derivations,
    psi_free_form,
    solomon_terao_polynomial,
    terao_factorization_check,
)
from .stalgebra import (
    EtaSpec,
    STAlgebra,
    analyze,
    apply_derivation,
    default_eta,
    exists_nilpotent_linear,
    macaulay_dual,
    restriction_map_check,
    socle_witness,
    st_algebra,
    verify_eta,
)
from .coxeter import (
    LowerIdeal,
    RootSystem,
    all_lower_ideals,
    bruhat_interval_size,
    bruhat_leq,
    ideal_arrangement,
    ideal_exponents,
    inversion_arrangement,
    lowest_invariant,
    weyl_arrangement,
)
from .examples import corpus, example_names, get_example

__version__ = "0.1.0"
