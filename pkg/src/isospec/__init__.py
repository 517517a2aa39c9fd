"""Element-order spectra of the simple groups with abelian Sylow 2-subgroups
and of their direct squares."""

__version__ = "0.1.0"

from .criteria import AuditReport, NonsolvabilityWitness, audit_nonsolvability, check_quadruple, check_triple
from .families import Family, GroupFamilySpec, mu_of, order_of, parse_group, ree_components
from .numtheory import factorize, multiplicative_order, ree_primitive_primes, zsigmondy_primes
from .spectra import (
    PrimeGraph,
    SpectrumSet,
    contains,
    direct_square_mu,
    independence_number,
    is_complete,
    normalize_mu,
    prime_graph,
)
