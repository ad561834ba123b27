"""Exact spectra of integral Cayley graphs over finite abelian groups."""
from intcayley.characters import alpha_bar, char_sum, f_alpha, perp_set, psi_exponent
from intcayley.cyclotomic import (
    CycloValue,
    IntPolynomial,
    NotInteger,
    as_integer,
    cyclotomic_poly,
    from_exponents,
)
from intcayley.divisors import (
    ClassDescriptor,
    RepresentativeSet,
    class_representatives,
    divisors,
    equiv_class,
    euler_phi,
    moebius_classic,
    moebius_forward,
    moebius_invert,
    mu_pair,
    phi_pair,
)
from intcayley.errors import (
    ArityError,
    CayleyError,
    DomainError,
    IncompleteInputError,
    InvalidGroupError,
    InvariantViolation,
    NonIntegralError,
    NotCayleySetError,
)
from intcayley.group import (
    CyclicData,
    Element,
    GroupSpec,
    add,
    canonicalize,
    cyclic_subgroup,
    elements,
    make_group,
    order_of,
    scale,
)
from intcayley.kernels import backend
from intcayley.spectra import (
    ConnectionSet,
    SpectrumReport,
    c_bruteforce,
    c_closed,
    c_intermediate,
    decompose_connection_set,
    ramanujan,
    spectrum,
    verify_eigenrelation,
)

__version__ = "0.1.0"
