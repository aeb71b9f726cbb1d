"""Groebner bases for finitely presented shuffle operads.

Trees and elements cross the boundary as the same text syntax the
command-line tool uses: ``m(m(1,2),3)``, ``b(b(1,2),3) - b(1,b(2,3))``.
"""

from opgb._core import (
    GroebnerResult,
    Presentation,
    count_shuffle_permutations,
    enumerate_monomials,
    groebner,
    orderings,
    shuffle_permutations,
    small_common_multiples,
    symmetrize,
)

__all__ = [
    "GroebnerResult",
    "Presentation",
    "count_shuffle_permutations",
    "enumerate_monomials",
    "groebner",
    "orderings",
    "shuffle_permutations",
    "small_common_multiples",
    "symmetrize",
]
