"""
Rank-one Breuil modules with tame descent data.

Only exponent data is modelled: a rank-one object is determined up to the
unit in phi_r by integers r_i (the filtration jumps) and k_i (the descent
data), and its generic fibre restricted to inertia is omega_d^kappa_0.
"""

import itertools
import logging
from typing import Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .exceptions import InvariantError, ProfileRangeError
from .tame_arith import TameParams

logger = logging.getLogger(__name__)


class RankOneData(BaseModel):
    """Exponent data (r_i, k_i) of a rank-one object, indices cyclic mod d."""

    model_config = ConfigDict(frozen=True)

    params: TameParams
    r: int = Field(..., description="Weight bound")
    r_vec: Tuple[int, ...] = Field(..., description="Filtration exponents r_i")
    k_vec: Tuple[int, ...] = Field(..., description="Descent data exponents k_i")


class Niveau1Profile(BaseModel):
    """
    The (x_i, y_i) shape of rank-one data with k_i = s x_i.

    Construction checks the individual ranges only; whether every derived
    r_i lands in [0, e r] is reported by is_consistent().
    """

    model_config = ConfigDict(frozen=True)

    params: TameParams
    r: int = Field(..., ge=0, description="Weight bound")
    x_vec: Tuple[int, ...] = Field(..., description="x_i in [0, p-2]")
    y_vec: Tuple[int, ...] = Field(..., description="y_i in [0, r]")

    @model_validator(mode="after")
    def _check_ranges(self) -> "Niveau1Profile":
        d, p = self.params.d, self.params.p
        if len(self.x_vec) != d or len(self.y_vec) != d:
            raise ValueError(f"x_vec and y_vec must have length {d}")
        if any(not 0 <= x <= p - 2 for x in self.x_vec):
            raise ValueError(f"x_i must lie in [0, {p - 2}]")
        if any(not 0 <= y <= self.r for y in self.y_vec):
            raise ValueError(f"y_i must lie in [0, {self.r}]")
        return self

    def r_values(self) -> Tuple[int, ...]:
        """r_i = s (x_{i+1} - x_i) + e y_i, unchecked."""
        s, e, d = self.params.s, self.params.e, self.params.d
        x, y = self.x_vec, self.y_vec
        return tuple(s * (x[(i + 1) % d] - x[i]) + e * y[i] for i in range(d))

    def is_consistent(self) -> bool:
        bound = self.params.e * self.r
        return all(0 <= value <= bound for value in self.r_values())


class RankOneCheck(BaseModel):
    """Outcome of validate: ok, or the first violated constraint."""

    ok: bool
    constraint: Optional[str] = Field(
        None, description="Name of the violated constraint"
    )
    index: Optional[int] = Field(None, description="Cyclic index where it fails")
    detail: Optional[str] = None


def validate(data: RankOneData) -> RankOneCheck:
    """
    Check ranges and the chain condition k_i = p (k_{i-1} + r_{i-1}) mod e.

    Args:
        data: Candidate rank-one data

    Returns:
        RankOneCheck naming the first violation, never raises
    """
    p, d, e = data.params.p, data.params.d, data.params.e
    if not 0 <= data.r <= p - 2:
        return RankOneCheck(
            ok=False, constraint="weight", detail=f"r={data.r} outside [0, {p - 2}]"
        )
    if len(data.r_vec) != d or len(data.k_vec) != d:
        return RankOneCheck(
            ok=False, constraint="length", detail=f"vectors must have length {d}"
        )
    for i, value in enumerate(data.r_vec):
        if not 0 <= value <= e * data.r:
            return RankOneCheck(
                ok=False,
                constraint="r-range",
                index=i,
                detail=f"r_{i}={value} outside [0, {e * data.r}]",
            )
    for i, value in enumerate(data.k_vec):
        if not 0 <= value < e:
            return RankOneCheck(
                ok=False,
                constraint="k-range",
                index=i,
                detail=f"k_{i}={value} outside [0, {e})",
            )
    for i in range(d):
        expected = (p * (data.k_vec[i - 1] + data.r_vec[i - 1])) % e
        if data.k_vec[i] != expected:
            return RankOneCheck(
                ok=False,
                constraint="chain",
                index=i,
                detail=(
                    f"k_{i}={data.k_vec[i]} but "
                    f"p(k_{i - 1}+r_{i - 1}) = {expected} mod {e}"
                ),
            )
    return RankOneCheck(ok=True)


def generic_fiber_exponent(data: RankOneData) -> int:
    """
    kappa_0 = k_0 + p (r_0 p^(d-1) + r_1 p^(d-2) + ... + r_{d-1}) / e  mod e.

    Args:
        data: Rank-one data that passes validate

    Returns:
        kappa_0 in [0, e)

    Raises:
        InvariantError: If the division is not exact
    """
    p, d, e = data.params.p, data.params.d, data.params.e
    numerator = p * sum(r_i * p ** (d - 1 - i) for i, r_i in enumerate(data.r_vec))
    quotient, remainder = divmod(numerator, e)
    if remainder:
        raise InvariantError(
            f"e={e} does not divide {numerator}; the data should have failed validate"
        )
    return (data.k_vec[0] + quotient) % e


def from_profile(profile: Niveau1Profile) -> RankOneData:
    """
    Expand a niveau-1 profile into rank-one data.

    Args:
        profile: Profile with x_i, y_i in range

    Returns:
        RankOneData with k_i = s x_i and r_i = s (x_{i+1} - x_i) + e y_i

    Raises:
        ProfileRangeError: If some r_i falls outside [0, e r]
    """
    params = profile.params
    bound = params.e * profile.r
    r_vec = profile.r_values()
    for i, value in enumerate(r_vec):
        if not 0 <= value <= bound:
            raise ProfileRangeError(
                f"r_{i}={value} outside [0, {bound}]", index=i, value=value
            )
    k_vec = tuple(params.s * x for x in profile.x_vec)
    return RankOneData(params=params, r=profile.r, r_vec=r_vec, k_vec=k_vec)


def profile_kappa(profile: Niveau1Profile) -> int:
    """kappa_0 = x_0 + y_0 + p^(d-1)(x_1 + y_1) + ... + p(x_{d-1} + y_{d-1}) mod e."""
    p, d, e = profile.params.p, profile.params.d, profile.params.e
    total = profile.x_vec[0] + profile.y_vec[0]
    for i in range(1, d):
        total += p ** (d - i) * (profile.x_vec[i] + profile.y_vec[i])
    return total % e


def profile_from_rank_one(data: RankOneData) -> Optional[Niveau1Profile]:
    """
    Recover the profile behind niveau-1 shaped data.

    Returns:
        The profile P with from_profile(P) == data, or None when some k_i is
        not s x_i with 0 <= x_i < p - 1 or the data does not decompose
    """
    params = data.params
    s, d, e = params.s, params.d, params.e
    x_vec = []
    for k in data.k_vec:
        x, remainder = divmod(k, s)
        if remainder or not 0 <= x <= params.p - 2:
            return None
        x_vec.append(x)
    y_vec = []
    for i, r_i in enumerate(data.r_vec):
        y, remainder = divmod(r_i - s * (x_vec[(i + 1) % d] - x_vec[i]), e)
        if remainder or not 0 <= y <= data.r:
            return None
        y_vec.append(y)
    return Niveau1Profile(
        params=params, r=data.r, x_vec=tuple(x_vec), y_vec=tuple(y_vec)
    )


def _check_allowed(params: TameParams, allowed_x: Iterable[int]) -> List[int]:
    allowed = sorted(set(allowed_x))
    if not allowed:
        raise ValueError("allowed_x must be non-empty")
    if any(not 0 <= x <= params.p - 2 for x in allowed):
        raise ValueError(f"allowed_x entries must lie in [0, {params.p - 2}]")
    return allowed


def enumerate_profiles(
    params: TameParams, r: int, allowed_x: Iterable[int]
) -> Iterator[Niveau1Profile]:
    """
    Every consistent profile with x_i in allowed_x and y_i in [0, r].

    Args:
        params: Arithmetic frame
        r: Weight bound
        allowed_x: Non-empty set of admissible x values

    Yields:
        Profiles in lexicographic order on (x_vec, y_vec)
    """
    allowed = _check_allowed(params, allowed_x)
    d, s, e = params.d, params.s, params.e
    bound = e * r
    y_range = range(r + 1)
    count = 0
    for x_vec in itertools.product(allowed, repeat=d):
        for y_vec in itertools.product(y_range, repeat=d):
            if all(
                0 <= s * (x_vec[(i + 1) % d] - x_vec[i]) + e * y_vec[i] <= bound
                for i in range(d)
            ):
                count += 1
                yield Niveau1Profile(params=params, r=r, x_vec=x_vec, y_vec=y_vec)
    logger.debug("enumerated %d profiles for p=%d d=%d r=%d", count, params.p, d, r)


def enumerate_rank_one(
    params: TameParams, r: int, allowed_x: Iterable[int]
) -> Iterator[RankOneData]:
    """
    Brute-force every valid rank-one datum with k_i in s * allowed_x.

    Independent of the profile decomposition; used to check that
    enumerate_profiles misses nothing.

    Yields:
        Valid RankOneData in lexicographic order on (k_vec, r_vec)
    """
    allowed = _check_allowed(params, allowed_x)
    d, s, e = params.d, params.s, params.e
    p = params.p
    k_values = [s * x for x in allowed]
    for k_vec in itertools.product(k_values, repeat=d):
        for r_vec in itertools.product(range(e * r + 1), repeat=d):
            if all(k_vec[i] == p * (k_vec[i - 1] + r_vec[i - 1]) % e for i in range(d)):
                yield RankOneData(params=params, r=r, r_vec=r_vec, k_vec=k_vec)
