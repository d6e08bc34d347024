"""
The congruence filter on q-restricted dominant weights.

A weight (a_1 >= ... >= a_n = 0) with successive differences in [0, q-1]
survives when every permutation x of it satisfies
q^(n-1) x_1 + ... + x_n = q^beta mod (q^n - 1)/(q - 1) for some beta.
"""

import itertools
import logging
from typing import Iterator, List, Sequence, Tuple

from sympy import isprime, perfect_power

from ..exceptions import ParameterError

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]

MIN_RANK = 3
MAX_RANK = 6


def _characteristic(q: int) -> int:
    if isprime(q):
        return q
    power = perfect_power(q)
    if not power or not isprime(power[0]):
        raise ParameterError(f"q={q} is not a prime power")
    return int(power[0])


def restricted_weights(q: int, n: int) -> Iterator[Weight]:
    """All q-restricted dominant weights with a_n = 0, lexicographic in the gaps."""
    for gaps in itertools.product(range(q), repeat=n - 1):
        weight = [0] * n
        for i in range(n - 2, -1, -1):
            weight[i] = weight[i + 1] + gaps[i]
        yield tuple(weight)


def passes_congruence(weight: Sequence[int], q: int) -> bool:
    n = len(weight)
    modulus = (q**n - 1) // (q - 1)
    targets = {pow(q, beta, modulus) for beta in range(n)}
    for x in set(itertools.permutations(weight)):
        value = sum(x_i * q ** (n - 1 - i) for i, x_i in enumerate(x)) % modulus
        if value not in targets:
            return False
    return True


def admissible_weights(q: int, n: int) -> List[Weight]:
    """
    Restricted weights all of whose permutations pass the congruence.

    Args:
        q: A prime power whose characteristic is at least n
        n: Rank, 3 <= n <= 6

    Returns:
        Surviving weights, sorted

    Raises:
        ParameterError: If q or n is out of range
    """
    if not MIN_RANK <= n <= MAX_RANK:
        raise ParameterError(f"n must lie in [{MIN_RANK}, {MAX_RANK}]")
    char = _characteristic(q)
    if char < n:
        raise ParameterError(f"characteristic {char} of q={q} must be at least n={n}")
    survivors = sorted(w for w in restricted_weights(q, n) if passes_congruence(w, q))
    logger.debug("admissible weights for q=%d, n=%d: %s", q, n, survivors)
    return survivors
