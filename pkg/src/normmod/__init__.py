"""Exact arithmetic for full modules in number fields and norm form equations.

The package constructs full modules containing arbitrarily many pairwise
non-associate elements of norm 1, verifies the certificates it emits, and
solves small norm form equations into families of solutions.  Everything
is exact: rationals, integer lattices in Hermite normal form, and
determinant-based norms; no floating point anywhere.
"""

from .fields import (
    FieldElement,
    FieldMismatchError,
    NumberField,
    find_small_unit,
    format_element,
    format_poly,
    parse_element,
    parse_poly,
)
from .lattices import ZLattice, hnf, integer_kernel, lattice_from_text, lattice_to_text
from .modules import (
    NotAnOrderError,
    NotFullRankError,
    Order,
    ZModule,
    associates,
    intersect_modules,
    is_norm1_unit_of_order,
    module_from_generators,
    module_from_text,
    module_to_text,
    multiplier_ring,
    power_in_module,
    restrict,
    span_stabilizer_field,
    subfield_closure,
)
from .construction import (
    CertificateFormatError,
    CheckResult,
    CounterexampleCertificate,
    PrimeSequence,
    ProgressionParams,
    SearchExhaustedError,
    VerificationResult,
    build_counterexample,
    certificate_from_text,
    certificate_to_text,
    coset_order,
    crt_exponents,
    functional_gram_det,
    functional_kernel_module,
    kernel_ring_condition,
    next_faithful_prime,
    progression_params,
    scaled_monomial_module,
    scaled_monomial_order,
    shifted_order,
    unit_exponent_poly,
    verify_certificate,
)
from .normforms import (
    DegenerateFormError,
    NormForm,
    PartitionFamily,
    form_from_text,
    form_to_text,
    group_families,
    partition_matrices,
    quad_one_family,
    ratio_field_degree,
    solve_box,
    verify_partition,
)

__version__ = "0.1.0"
