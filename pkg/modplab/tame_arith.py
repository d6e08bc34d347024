"""
Arithmetic of tame-inertia character exponents modulo p^d - 1.

An exponent kappa stands for the character omega_d^kappa of niveau d. All
values are canonical residues in [0, e) with e = p^d - 1, and every
function here is pure.
"""

from functools import lru_cache
from typing import ClassVar, Iterable, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import divisors, isprime

DigitVector = Tuple[int, ...]


class TameParams(BaseModel):
    """The arithmetic frame (p, d) with derived moduli e and s."""

    model_config = ConfigDict(frozen=True)

    MAX_PRIME: ClassVar[int] = 97
    MAX_NIVEAU: ClassVar[int] = 6

    p: int = Field(..., description="Odd prime")
    d: int = Field(..., description="Niveau")

    @field_validator("p")
    @classmethod
    def _check_prime(cls, p: int) -> int:
        if p < 3 or p % 2 == 0 or not isprime(p):
            raise ValueError("p must be an odd prime")
        if p > cls.MAX_PRIME:
            raise ValueError(f"p must be at most {cls.MAX_PRIME}")
        return p

    @field_validator("d")
    @classmethod
    def _check_niveau(cls, d: int) -> int:
        if not 1 <= d <= cls.MAX_NIVEAU:
            raise ValueError(f"d must lie in [1, {cls.MAX_NIVEAU}]")
        return d

    @property
    def e(self) -> int:
        """The modulus p^d - 1."""
        return self.p**self.d - 1

    @property
    def s(self) -> int:
        """1 + p + ... + p^(d-1)."""
        return self.e // (self.p - 1)


class ExponentClass(BaseModel):
    """A residue kappa in [0, e), the exponent of omega_d^kappa."""

    model_config = ConfigDict(frozen=True)

    params: TameParams
    kappa: int = Field(..., description="Canonical residue in [0, p^d - 1)")

    @model_validator(mode="after")
    def _check_range(self) -> "ExponentClass":
        if not 0 <= self.kappa < self.params.e:
            raise ValueError(f"kappa must lie in [0, {self.params.e})")
        return self

    @classmethod
    def of(cls, params: TameParams, kappa: int) -> "ExponentClass":
        """Reduce an arbitrary integer into its canonical class."""
        return cls(params=params, kappa=kappa % params.e)

    def digits(self) -> DigitVector:
        return digits(self.params, self.kappa)

    def twist(self) -> "ExponentClass":
        kappa = frobenius_twist(self.params, self.kappa)
        return ExponentClass(params=self.params, kappa=kappa)

    def is_primitive(self) -> bool:
        return is_primitive(self.params, self.kappa)

    def norm(self) -> int:
        return norm_to_niveau1(self.params, self.kappa)


KappaLike = Union[int, ExponentClass]


def _residue(params: TameParams, kappa: KappaLike) -> int:
    if isinstance(kappa, ExponentClass):
        return kappa.kappa
    return kappa % params.e


def digits(params: TameParams, kappa: KappaLike) -> DigitVector:
    """
    Base-p digits [a_0, ..., a_{d-1}] of kappa.

    The all-(p-1) vector also represents 0 mod e; it is never returned and
    kappa = 0 maps to all zeros.

    Args:
        params: Arithmetic frame
        kappa: Exponent (reduced mod e first)

    Returns:
        Tuple of d digits, each in [0, p-1]
    """
    value = _residue(params, kappa)
    out = []
    for _ in range(params.d):
        value, digit = divmod(value, params.p)
        out.append(digit)
    return tuple(out)


def exponent_from_digits(params: TameParams, digit_vector: Iterable[int]) -> int:
    """Inverse of digits: sum of a_i p^i, reduced mod e."""
    values = list(digit_vector)
    if len(values) != params.d:
        raise ValueError(f"expected {params.d} digits, got {len(values)}")
    return sum(a * params.p**i for i, a in enumerate(values)) % params.e


def frobenius_twist(params: TameParams, kappa: KappaLike) -> int:
    """Return p * kappa mod e."""
    return (params.p * _residue(params, kappa)) % params.e


def frobenius_orbit(params: TameParams, kappa: KappaLike) -> Tuple[int, ...]:
    """The orbit (kappa, p kappa, p^2 kappa, ...) up to the first repetition."""
    start = _residue(params, kappa)
    orbit = [start]
    current = frobenius_twist(params, start)
    while current != start:
        orbit.append(current)
        current = frobenius_twist(params, current)
    return tuple(orbit)


def canonical_orbit_representative(params: TameParams, kappa: KappaLike) -> int:
    """Minimum over the Frobenius orbit; Ind of omega_d^kappa depends only on it."""
    return min(frobenius_orbit(params, kappa))


def is_primitive(params: TameParams, kappa: KappaLike) -> bool:
    """
    Whether omega_d^kappa has no proper Frobenius sub-period.

    Equivalently the induction to G_Qp of a character restricting to
    omega_d^kappa on inertia is irreducible.

    Args:
        params: Arithmetic frame
        kappa: Exponent

    Returns:
        True iff p^d' kappa != kappa mod e for every proper divisor d' of d
    """
    value = _residue(params, kappa)
    for d_prime in _proper_divisors(params.d):
        if (params.p**d_prime * value - value) % params.e == 0:
            return False
    return True


def norm_to_niveau1(params: TameParams, kappa: KappaLike) -> int:
    """The exponent m with omega_d^(kappa s) = omega^m, i.e. kappa mod (p - 1)."""
    return _residue(params, kappa) % (params.p - 1)


def teichmuller_twist(params: TameParams, kappa: KappaLike, t: int) -> int:
    """Exponent of omega_d^kappa * omega^t, i.e. kappa + s t mod e."""
    return (_residue(params, kappa) + params.s * t) % params.e


@lru_cache(maxsize=None)
def _proper_divisors(d: int) -> Tuple[int, ...]:
    return tuple(x for x in divisors(d) if x != d)
