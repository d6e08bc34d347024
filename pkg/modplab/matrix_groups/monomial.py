"""Monomial groups induced from a character of the diagonal torus."""

import logging
import warnings
from typing import List, Sequence

from ..exceptions import ParameterError, ReducibleInductionWarning
from .field import FiniteField
from .matrix import SquareMatrix, diagonal

logger = logging.getLogger(__name__)


def cyclic_shift(field: FiniteField, n: int) -> SquareMatrix:
    """The permutation matrix sending e_i to e_{i+1 mod n}."""
    entries = [0] * (n * n)
    for i in range(n):
        entries[((i + 1) % n) * n + i] = 1
    return SquareMatrix(field, n, entries)


def is_shift_invariant(exponents: Sequence[int], modulus: int) -> bool:
    """Whether some nontrivial rotation fixes the exponent vector mod modulus."""
    reduced = [e % modulus for e in exponents]
    n = len(reduced)
    return any(reduced[k:] + reduced[:k] == reduced for k in range(1, n))


def build_monomial_induction(
    field: FiniteField, psi_exponents: Sequence[int], n: int = 3
) -> List[SquareMatrix]:
    """
    Generators of Ind_H^G psi as a monomial group in GL_n(F_q).

    psi is given on the diagonal torus by exponents of the primitive element:
    D = diag(g^e_0, ..., g^e_(n-1)). The generators are the cyclic shift P
    followed by D and its distinct conjugates P^k D P^-k.

    Args:
        field: F_q
        psi_exponents: n exponents, read mod q - 1
        n: Dimension, at least 2

    Returns:
        Generator list [P, D, ...] without repeats

    Warns:
        ReducibleInductionWarning: If psi is fixed by a nontrivial shift
    """
    if len(psi_exponents) != n:
        raise ParameterError(f"expected {n} exponents, got {len(psi_exponents)}")
    if not 2 <= n <= SquareMatrix.MAX_DIM:
        raise ParameterError(f"n must lie in [2, {SquareMatrix.MAX_DIM}]")
    order = field.q - 1
    exponents = [e % order for e in psi_exponents]
    if is_shift_invariant(exponents, order):
        message = (
            f"psi exponents {exponents} are shift-invariant mod {order}; "
            "the induction is reducible"
        )
        logger.warning(message)
        warnings.warn(message, ReducibleInductionWarning, stacklevel=2)

    generators = [cyclic_shift(field, n)]
    for k in range(n):
        # P^k D P^-k puts psi's value at coordinate i on coordinate i + k
        rotated = exponents[n - k :] + exponents[: n - k]
        d = diagonal(field, [field.generator_power(e) for e in rotated])
        if d not in generators:
            generators.append(d)
    return generators
