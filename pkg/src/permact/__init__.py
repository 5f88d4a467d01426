"""Exact combinatorics of the valley-hopping action on permutations.

The package verifies, by direct enumeration at small n, a family of results
tied to one group action: orbit descent polynomials of the form
t^k (1+t)^(n-1-2k), invariance of stack sorting and of the vincular patterns
(2-31) and (13-2), the extension to linear extensions of sign-graded posets,
and tree statistics (veh, veh') with their Eulerian and Euler-Mahonian
partners.
"""

from .action import (
    ClassPolys,
    OrbitReport,
    class_polys,
    orbit,
    phi_prime_S,
    phi_prime_x,
    phi_S,
    phi_x,
    x_factorization,
)
from .limits import BoundExceededError, enumeration_bound
from .mahonian import ev_set, increasing_tree, siveh, theta, veh_prime
from .patterns import (
    apq_polynomial,
    avoiding_permutations,
    avoids_231,
    bni_polynomial,
    count_13_2,
    count_2_31,
    narayana,
)
from .polynomials import (
    GammaExpansion,
    GesselExpansion,
    IntPolynomial,
    gamma_expand,
    gessel_expand,
    h_from_f,
    q_factorial,
    try_divide,
    uni,
)
from .posets import (
    LabeledPoset,
    SignGrading,
    adjoin_top,
    all_canonical_posets,
    is_canonical,
    linear_extensions,
    poset_orbit,
    psi_x_poset,
    sign_grading,
    wp_polynomial,
)
from .stacksort import (
    enumerate_r_sortable,
    is_r_sortable,
    slide_r,
    sort_depth,
    stack_sort,
    stack_sort_via_slides,
)
from .trees import (
    binary_tree,
    dyck_path,
    kreweras_stats,
    odd_set,
    phi_cap,
    psi,
    psi_prime,
    redge_set,
    unordered_tree,
    veh,
)
from .words import (
    Boundary,
    LetterClass,
    Word,
    all_permutations,
    as_word,
    complement,
    des,
    descent_set,
    involutions,
    maj,
    parse_word,
    peak,
)

__version__ = "0.1.0"

__all__ = [
    "Boundary",
    "BoundExceededError",
    "ClassPolys",
    "GammaExpansion",
    "GesselExpansion",
    "IntPolynomial",
    "LabeledPoset",
    "LetterClass",
    "OrbitReport",
    "SignGrading",
    "Word",
    "adjoin_top",
    "all_canonical_posets",
    "all_permutations",
    "apq_polynomial",
    "as_word",
    "avoiding_permutations",
    "avoids_231",
    "binary_tree",
    "bni_polynomial",
    "class_polys",
    "complement",
    "count_13_2",
    "count_2_31",
    "des",
    "descent_set",
    "dyck_path",
    "enumerate_r_sortable",
    "enumeration_bound",
    "ev_set",
    "gamma_expand",
    "gessel_expand",
    "h_from_f",
    "increasing_tree",
    "involutions",
    "is_canonical",
    "is_r_sortable",
    "kreweras_stats",
    "linear_extensions",
    "maj",
    "narayana",
    "odd_set",
    "orbit",
    "parse_word",
    "peak",
    "phi_S",
    "phi_cap",
    "phi_prime_S",
    "phi_prime_x",
    "phi_x",
    "poset_orbit",
    "psi",
    "psi_prime",
    "psi_x_poset",
    "q_factorial",
    "redge_set",
    "sign_grading",
    "siveh",
    "slide_r",
    "sort_depth",
    "stack_sort",
    "stack_sort_via_slides",
    "theta",
    "try_divide",
    "unordered_tree",
    "uni",
    "veh",
    "veh_prime",
    "wp_polynomial",
    "x_factorization",
]
