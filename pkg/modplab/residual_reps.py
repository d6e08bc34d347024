"""
Semisimple mod-p representations of G_Qp as multisets of induced tame characters.

A summand (d, kappa) is Ind from G_Q_{p^d} of a character whose restriction
to inertia is omega_d^kappa. Unramified twists are not tracked.
"""

import re
from typing import Any, Dict, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .exceptions import ParameterError
from .tame_arith import (
    TameParams,
    canonical_orbit_representative,
    digits,
    is_primitive,
    norm_to_niveau1,
    teichmuller_twist,
)

_SUMMAND_RE = re.compile(r"^\s*(\d+)\s*:\s*(\d+)\s*$")


class InducedSummand(BaseModel):
    """An irreducible summand Ind(omega_d^kappa) of dimension d."""

    model_config = ConfigDict(frozen=True)

    params: TameParams
    kappa: int = Field(..., description="Exponent of omega_d on inertia")

    @model_validator(mode="after")
    def _check_primitive(self) -> "InducedSummand":
        if not 0 <= self.kappa < self.params.e:
            raise ValueError(f"kappa must lie in [0, {self.params.e})")
        if not is_primitive(self.params, self.kappa):
            raise ValueError(
                f"kappa={self.kappa} is not primitive for d={self.params.d}; "
                "the induction is reducible"
            )
        return self

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.params.d, self.kappa)


class ResidualRep(BaseModel):
    """A semisimple representation: a multiset of induced summands sharing p."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., description="Shared prime")
    summands: Tuple[InducedSummand, ...] = Field(
        ..., description="Jordan-Holder factors"
    )

    @model_validator(mode="after")
    def _check_summands(self) -> "ResidualRep":
        if not self.summands:
            raise ValueError("a representation needs at least one summand")
        if any(s.params.p != self.p for s in self.summands):
            raise ValueError("all summands must share the prime p")
        return self

    @property
    def n(self) -> int:
        """Total dimension."""
        return sum(s.d for s in self.summands)

    @classmethod
    def from_pairs(cls, p: int, pairs: Iterable[Tuple[int, int]]) -> "ResidualRep":
        """Build from (d, kappa) pairs."""
        summands = tuple(
            InducedSummand(params=TameParams(p=p, d=d), kappa=kappa)
            for d, kappa in pairs
        )
        return cls(p=p, summands=summands)


def summand_exponents(summand: InducedSummand) -> Tuple[int, ...]:
    """The d digits of kappa, read as residues mod p."""
    return tuple(a % summand.params.p for a in digits(summand.params, summand.kappa))


def rep_exponents(rep: ResidualRep) -> Tuple[int, ...]:
    """Multiset union of the summand exponents, in summand order."""
    out: List[int] = []
    for summand in rep.summands:
        out.extend(summand_exponents(summand))
    return tuple(out)


def exponents_r_regular(exponents: Iterable[int], p: int, r: int) -> bool:
    """Whether the residues a_i + k, 0 <= k <= r + 1, are pairwise distinct mod p."""
    seen = set()
    for a in exponents:
        for k in range(r + 2):
            residue = (a + k) % p
            if residue in seen:
                return False
            seen.add(residue)
    return True


def is_r_regular(rep: ResidualRep, r: int) -> bool:
    """
    Check r-regularity of a representation.

    Args:
        rep: Semisimple representation
        r: Non-negative integer

    Returns:
        True iff the n (r + 2) shifted exponents are pairwise distinct mod p
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    return exponents_r_regular(rep_exponents(rep), rep.p, r)


def det_inertia_exponent(rep: ResidualRep) -> int:
    """The m with det(rep) restricted to inertia equal to omega^m, m in [0, p-1)."""
    return sum(norm_to_niveau1(s.params, s.kappa) for s in rep.summands) % (rep.p - 1)


def has_big_subquotient(rep: ResidualRep) -> bool:
    """Whether some irreducible summand has dimension > 1."""
    return any(s.d > 1 for s in rep.summands)


def twist(rep: ResidualRep, t: int) -> ResidualRep:
    """Twist every summand by omega^t."""
    return ResidualRep(
        p=rep.p,
        summands=tuple(
            InducedSummand(
                params=s.params, kappa=teichmuller_twist(s.params, s.kappa, t)
            )
            for s in rep.summands
        ),
    )


def canonical(rep: ResidualRep) -> ResidualRep:
    """Replace each kappa by its Frobenius orbit minimum and sort by (d, kappa)."""
    summands = [
        InducedSummand(
            params=s.params, kappa=canonical_orbit_representative(s.params, s.kappa)
        )
        for s in rep.summands
    ]
    ordered = tuple(sorted(summands, key=lambda s: s.sort_key))
    return ResidualRep(p=rep.p, summands=ordered)


def concatenate(first: ResidualRep, second: ResidualRep) -> ResidualRep:
    """Direct sum of two representations with the same p."""
    if first.p != second.p:
        raise ValueError("cannot add representations with different primes")
    return ResidualRep(p=first.p, summands=first.summands + second.summands)


def parse_rep(text: str, p: int) -> ResidualRep:
    """
    Parse the grammar "d:kappa(,d:kappa)*".

    Args:
        text: Summand list, e.g. "1:0,1:4,1:8"
        p: The prime

    Returns:
        The parsed ResidualRep

    Raises:
        ParameterError: If the text is malformed or a summand is invalid
    """
    pairs = []
    for chunk in text.split(","):
        match = _SUMMAND_RE.match(chunk)
        if not match:
            raise ParameterError(f"malformed summand {chunk!r}; expected d:kappa")
        pairs.append((int(match.group(1)), int(match.group(2))))
    try:
        return ResidualRep.from_pairs(p, pairs)
    except ValidationError as e:
        raise ParameterError(f"invalid representation {text!r}: {e}") from e


def rep_payload(rep: ResidualRep) -> Dict[str, Any]:
    """JSON form {p, summands[{d, kappa, digits}], exponents, detInertia}."""
    return {
        "p": rep.p,
        "summands": [
            {"d": s.d, "kappa": s.kappa, "digits": list(digits(s.params, s.kappa))}
            for s in rep.summands
        ],
        "exponents": list(rep_exponents(rep)),
        "detInertia": det_inertia_exponent(rep),
    }
