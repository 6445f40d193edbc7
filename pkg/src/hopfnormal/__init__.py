"""Which quotients of a twisted finite-group Hopf algebra stay normal.

Exact decision procedures for whether the F-invariants of the Galois object
``A(G, S, alpha)`` are stable under the Miyashita-Ulbrich grading, and
whether the corresponding twisted deformation is simple.
"""

from .cocycle import (OneCochain, TwoCocycle, alpha_F_regular, alpha_regular_elements,
                      bilinear_cocycle, conjugate_pair, is_nondegenerate,
                      multiply_by_coboundary, normalize_inverse_pairs,
                      standard_nondegenerate, twisted_conjugation, validate)
from .cyclotomic import CycInt, cyclotomic_polynomial, lift_modulus
from .errors import (ConsistencyError, HopfNormalError, HypothesisError, SizeLimitError,
                     SpecParseError)
from .galois import (AlgebraElement, GaloisObject, MonomialVector, act, build, multiply,
                     mu_component, mu_degree)
from .groups import (FiniteGroup, Subgroup, centralizer, conjugacy_classes, direct_product,
                     group_from_generators, left_coset_decomposition, normal_subgroups,
                     semidirect_product, subgroup_generated)
from .invariants import f_orbits, invariant_basis, is_regular_orbit, regular_orbit_count
from .normality import (hopf_subalgebra_normal, is_simple_deformation, mu_stable_criterion,
                        mu_stable_direct, prime_index_theorem_check)
from .specfile import parse_group_spec

__version__ = "0.1.0"
