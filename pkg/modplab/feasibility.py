"""
Decision engine for generic vanishing in small Hodge-Tate weights.

Given an inertial type (a_1, ..., a_n) and a weight bound r, a residual
representation whose Jordan-Holder factors come from rank-one Breuil
submodules with descent data drawn from the type, and whose determinant on
inertia is omega^(a_1 + ... + a_n + n(n-1)/2), is never r-regular once
r <= (n-1)/2 and p > n(n-1)/2 + 1 (plus a dimension condition when
r = (n-1)/2). This module checks the hypotheses, computes the attainable
summand exponents and verifies the conclusion exhaustively.
"""

import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, Iterator, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .breuil_rank_one import (
    enumerate_profiles,
    from_profile,
    generic_fiber_exponent,
    profile_kappa,
)
from .config import LabConfig
from .exceptions import BudgetExceededError, InvariantError, ParameterError
from .residual_reps import (
    ResidualRep,
    det_inertia_exponent,
    exponents_r_regular,
    has_big_subquotient,
    is_r_regular,
    rep_exponents,
    rep_payload,
)
from .tame_arith import TameParams, canonical_orbit_representative, digits, is_primitive

logger = logging.getLogger(__name__)


class InertialType(BaseModel):
    """A multiset of niveau-1 exponents a_j in [0, p-2]."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., description="The prime")
    a_vec: Tuple[int, ...] = Field(
        ..., description="Teichmuller exponents a_1, ..., a_n"
    )

    @model_validator(mode="after")
    def _check_entries(self) -> "InertialType":
        if not self.a_vec:
            raise ValueError("an inertial type needs at least one exponent")
        if any(not 0 <= a <= self.p - 2 for a in self.a_vec):
            raise ValueError(f"type exponents must lie in [0, {self.p - 2}]")
        return self

    @property
    def n(self) -> int:
        return len(self.a_vec)

    def allowed_x(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.a_vec)))


class TheoremInstance(BaseModel):
    """Data (p, n, r, type, rep) to which the vanishing theorem may apply."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    p: int
    n: int
    r: int = Field(..., ge=0, description="Hodge-Tate weights lie in [0, r]")
    inertial_type: InertialType = Field(..., alias="type")
    rep: ResidualRep

    @model_validator(mode="after")
    def _check_shapes(self) -> "TheoremInstance":
        if self.rep.n != self.n:
            raise ValueError(f"rep has dimension {self.rep.n}, expected {self.n}")
        if self.inertial_type.n != self.n:
            raise ValueError(
                f"type has {self.inertial_type.n} entries, expected {self.n}"
            )
        if self.rep.p != self.p or self.inertial_type.p != self.p:
            raise ValueError("type and rep must share p")
        return self


class HypothesisCheck(BaseModel):
    """One named hypothesis of the theorem."""

    name: str
    passed: bool
    reason: str


class Verdict(BaseModel):
    """Either the theorem applies and predicts non-regularity, or it does not apply."""

    kind: Literal["PredictsNotRegular", "NotApplicable"]
    failed: List[str] = Field(default_factory=list)


class Counterexample(BaseModel):
    """A rep satisfying every checked hypothesis that is nevertheless r-regular."""

    type: List[int]
    summands: List[Dict[str, object]]
    exponents: List[int]
    detInertia: int

    def sort_key(self) -> Tuple:
        return (self.type, [(s["d"], s["kappa"]) for s in self.summands])


class VerificationReport(BaseModel):
    """Result of an exhaustive run over one or more inertial types."""

    p: int
    n: int
    r: int
    mode: Literal["standard", "diagnostic"] = "standard"
    typesChecked: int = 0
    repsChecked: int = 0
    repsApplicable: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)
    elapsedMs: int = 0

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two reports over disjoint work; counterexamples are re-sorted."""
        merged = sorted(
            self.counterexamples + other.counterexamples, key=Counterexample.sort_key
        )
        return self.model_copy(
            update={
                "typesChecked": self.typesChecked + other.typesChecked,
                "repsChecked": self.repsChecked + other.repsChecked,
                "repsApplicable": self.repsApplicable + other.repsApplicable,
                "counterexamples": merged,
                "elapsedMs": self.elapsedMs + other.elapsedMs,
            }
        )


def _det_target(a_vec: Sequence[int], p: int) -> int:
    n = len(a_vec)
    return (sum(a_vec) + n * (n - 1) // 2) % (p - 1)


def _hypothesis_checks(
    p: int, n: int, r: int, a_vec: Sequence[int], det: int, big: bool
) -> List[HypothesisCheck]:
    target = _det_target(a_vec, p)
    bound = n * (n - 1) // 2 + 1
    checks = [
        HypothesisCheck(
            name="det",
            passed=det == target,
            reason=f"det exponent {det}, required {target} mod {p - 1}",
        ),
        HypothesisCheck(
            name="r-bound",
            passed=2 * r <= n - 1,
            reason=f"r={r}, (n-1)/2={(n - 1) / 2:g}",
        ),
        HypothesisCheck(
            name="p-bound",
            passed=p > bound,
            reason=f"p={p}, n(n-1)/2+1={bound}",
        ),
    ]
    if 2 * r == n - 1:
        checks.append(
            HypothesisCheck(
                name="big-subquotient",
                passed=big,
                reason=(
                    "some summand has dimension > 1"
                    if big
                    else "every summand is a character"
                ),
            )
        )
    else:
        checks.append(
            HypothesisCheck(
                name="big-subquotient",
                passed=True,
                reason="not required since r < (n-1)/2",
            )
        )
    return checks


def check_hypotheses(inst: TheoremInstance) -> List[HypothesisCheck]:
    """
    Evaluate the four hypotheses of the vanishing theorem.

    Args:
        inst: The instance

    Returns:
        Checks named det, r-bound, p-bound and big-subquotient, in that order
    """
    return _hypothesis_checks(
        inst.p,
        inst.n,
        inst.r,
        inst.inertial_type.a_vec,
        det_inertia_exponent(inst.rep),
        has_big_subquotient(inst.rep),
    )


def theorem_verdict(inst: TheoremInstance) -> Verdict:
    """PredictsNotRegular iff every hypothesis check passes."""
    failed = [c.name for c in check_hypotheses(inst) if not c.passed]
    if failed:
        return Verdict(kind="NotApplicable", failed=failed)
    return Verdict(kind="PredictsNotRegular")


def attainable_exponents(
    params: TameParams, r: int, inertial_type: InertialType
) -> frozenset:
    """
    Generic-fibre exponents of rank-one submodules with descent data from the type.

    Args:
        params: Frame (p, d) of the summand
        r: Weight bound, at most p - 2
        inertial_type: The type supplying the allowed x values

    Returns:
        Set of kappa_0 values in [0, p^d - 1)
    """
    if not 0 <= r <= params.p - 2:
        raise ParameterError(f"r must lie in [0, {params.p - 2}]")
    return frozenset(
        profile_kappa(profile)
        for profile in enumerate_profiles(params, r, inertial_type.allowed_x())
    )


def attainable_exponents_via_lemma(
    params: TameParams, r: int, inertial_type: InertialType
) -> frozenset:
    """Same set computed through generic_fiber_exponent(from_profile(P))."""
    if not 0 <= r <= params.p - 2:
        raise ParameterError(f"r must lie in [0, {params.p - 2}]")
    return frozenset(
        generic_fiber_exponent(from_profile(profile))
        for profile in enumerate_profiles(params, r, inertial_type.allowed_x())
    )


def exponents_within_window(
    rep: ResidualRep, inertial_type: InertialType, r: int
) -> bool:
    """Whether each exponent of rep is a_j + k mod p, a_j in the type, k in [0, r+1]."""
    p = rep.p
    window = {(a + k) % p for a in inertial_type.a_vec for k in range(r + 2)}
    return all(x in window for x in rep_exponents(rep))


def inertial_types(p: int, n: int) -> Iterator[InertialType]:
    """All multisets of size n from [0, p-2], lexicographic."""
    for a_vec in itertools.combinations_with_replacement(range(p - 1), n):
        yield InertialType(p=p, a_vec=a_vec)


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of positive integers summing to n."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _check_frame(p: int, n: int, r: int) -> None:
    if n < 1 or n > TameParams.MAX_NIVEAU:
        raise ParameterError(f"n must lie in [1, {TameParams.MAX_NIVEAU}]")
    if r < 0:
        raise ParameterError("r must be non-negative")
    bound = n * (n - 1) // 2 + 1
    if p <= bound:
        raise ParameterError(
            f"p-bound hypothesis unsatisfiable: p={p} must exceed n(n-1)/2+1={bound}"
        )
    if 2 * r > n - 1:
        raise ParameterError(f"r-bound hypothesis unsatisfiable: r={r} > (n-1)/2")
    try:
        TameParams(p=p, d=1)
    except ValidationError as e:
        raise ParameterError(f"invalid prime p={p}: {e}") from e


# (d, kappa, exponents, norm) for one candidate summand
_Candidate = Tuple[int, int, Tuple[int, ...], int]


def _iter_summand_candidates(
    p: int, d: int, r: int, inertial_type: InertialType, dedupe_orbits: bool
) -> Iterator[_Candidate]:
    """New candidates of niveau d in the order the profile enumeration reaches them."""
    params = TameParams(p=p, d=d)
    seen = set()
    for profile in enumerate_profiles(params, r, inertial_type.allowed_x()):
        kappa = profile_kappa(profile)
        if not is_primitive(params, kappa):
            continue
        if dedupe_orbits:
            kappa = canonical_orbit_representative(params, kappa)
        if kappa in seen:
            continue
        seen.add(kappa)
        yield (d, kappa, tuple(a % p for a in digits(params, kappa)), kappa % (p - 1))


def _count_reps(shapes: Sequence[Dict[int, int]], counts: Dict[int, int]) -> int:
    """Multisets of candidates over every shape, given candidate counts per niveau."""
    return sum(
        math.prod(math.comb(counts[d] + m - 1, m) for d, m in multiplicity.items())
        for multiplicity in shapes
    )


def exhaustive_verify(
    p: int,
    n: int,
    r: int,
    inertial_type: InertialType,
    config: Optional[LabConfig] = None,
    require_big_subquotient: bool = True,
    dedupe_orbits: bool = True,
) -> VerificationReport:
    """
    Test the theorem on every rep of dimension n built from attainable summands.

    Summand niveaus range over all partitions of n. For each part d the
    summand exponents are the primitive members of attainable_exponents,
    reduced to Frobenius orbit representatives unless dedupe_orbits is off.

    Args:
        p: Odd prime with p > n(n-1)/2 + 1
        n: Dimension
        r: Weight bound, r <= (n-1)/2
        inertial_type: Type of size n
        config: Budget settings; defaults to LabConfig.from_env()
        require_big_subquotient: Diagnostic switch; off drops that hypothesis
        dedupe_orbits: Debug switch for cross-checking cardinalities

    Returns:
        VerificationReport over this single type

    Raises:
        ParameterError: If the frame makes the hypotheses unsatisfiable
        BudgetExceededError: If the candidate count exceeds the budget
    """
    _check_frame(p, n, r)
    if inertial_type.p != p or inertial_type.n != n:
        raise ParameterError(f"type {inertial_type.a_vec} does not match p={p}, n={n}")
    config = config or LabConfig.from_env()
    started = time.perf_counter()

    shapes: List[Dict[int, int]] = []
    for partition in _partitions(n):
        multiplicity: Dict[int, int] = {}
        for d in partition:
            multiplicity[d] = multiplicity.get(d, 0) + 1
        shapes.append(multiplicity)

    # counts only grow, so the running total is a lower bound on the final one
    counts = {d: 0 for d in range(1, n + 1)}
    candidates: Dict[int, List[_Candidate]] = {}
    for d in range(1, n + 1):
        found = []
        stream = _iter_summand_candidates(p, d, r, inertial_type, dedupe_orbits)
        for candidate in stream:
            found.append(candidate)
            counts[d] += 1
            total = _count_reps(shapes, counts)
            if total > config.instance_budget:
                raise BudgetExceededError(
                    f"more than {config.instance_budget} candidate reps for type "
                    f"{inertial_type.a_vec} (at least {total} by niveau {d})",
                    reached=total,
                    cap=config.instance_budget,
                )
        candidates[d] = sorted(found)

    a_vec = inertial_type.a_vec
    target = _det_target(a_vec, p)
    big_required = require_big_subquotient and 2 * r == n - 1
    mode = "standard" if require_big_subquotient else "diagnostic"
    report = VerificationReport(p=p, n=n, r=r, mode=mode, typesChecked=1)
    checked = applicable = 0
    counterexamples = []
    for multiplicity in shapes:
        pools = [
            itertools.combinations_with_replacement(candidates[d], m)
            for d, m in sorted(multiplicity.items(), reverse=True)
        ]
        for groups in itertools.product(*pools):
            summands = [c for group in groups for c in group]
            checked += 1
            if sum(c[3] for c in summands) % (p - 1) != target:
                continue
            if big_required and all(c[0] == 1 for c in summands):
                continue
            applicable += 1
            exponents = [a for c in summands for a in c[2]]
            if exponents_r_regular(exponents, p, r):
                counterexamples.append(
                    _confirm_counterexample(
                        p, n, r, inertial_type, summands, require_big_subquotient
                    )
                )

    report.repsChecked = checked
    report.repsApplicable = applicable
    report.counterexamples = sorted(counterexamples, key=Counterexample.sort_key)
    report.elapsedMs = int((time.perf_counter() - started) * 1000)
    logger.debug(
        "type %s: %d reps, %d applicable, %d counterexamples",
        a_vec,
        report.repsChecked,
        report.repsApplicable,
        len(report.counterexamples),
    )
    return report


def _confirm_counterexample(
    p: int,
    n: int,
    r: int,
    inertial_type: InertialType,
    summands: Iterable[_Candidate],
    require_big_subquotient: bool,
) -> Counterexample:
    """Rebuild a flagged rep through the model layer and re-run every check on it."""
    rep = ResidualRep.from_pairs(p, [(c[0], c[1]) for c in summands])
    inst = TheoremInstance(p=p, n=n, r=r, type=inertial_type, rep=rep)
    failed = [
        c.name
        for c in check_hypotheses(inst)
        if not c.passed and (require_big_subquotient or c.name != "big-subquotient")
    ]
    if failed or not is_r_regular(rep, r):
        raise InvariantError(
            f"counterexample {rep_payload(rep)} does not re-validate: {failed}"
        )
    payload = rep_payload(rep)
    logger.warning("r-regular rep satisfying the hypotheses: %s", payload)
    return Counterexample(
        type=list(inertial_type.a_vec),
        summands=payload["summands"],
        exponents=payload["exponents"],
        detInertia=payload["detInertia"],
    )


_Job = Tuple[int, int, int, Tuple[int, ...], int, bool, bool]


def _verify_one(args: _Job) -> VerificationReport:
    p, n, r, a_vec, budget, require_big, dedupe = args
    config = LabConfig(instance_budget=budget, workers=1)
    return exhaustive_verify(
        p, n, r, InertialType(p=p, a_vec=a_vec), config, require_big, dedupe
    )


def verify_all_types(
    p: int,
    n: int,
    r: int,
    config: Optional[LabConfig] = None,
    require_big_subquotient: bool = True,
    dedupe_orbits: bool = True,
    types: Optional[Iterable[InertialType]] = None,
) -> VerificationReport:
    """
    Run exhaustive_verify over every inertial type, sharded across worker processes.

    Args:
        p: Odd prime
        n: Dimension
        r: Weight bound
        config: Budget and worker count; config.workers == 1 runs inline
        require_big_subquotient: Diagnostic switch
        dedupe_orbits: Debug switch
        types: Restrict to these types; defaults to inertial_types(p, n)

    Returns:
        Merged report with counterexamples sorted canonically
    """
    _check_frame(p, n, r)
    config = config or LabConfig.from_env()
    started = time.perf_counter()
    selected = list(types) if types is not None else list(inertial_types(p, n))
    budget = config.instance_budget
    jobs: List[_Job] = [
        (p, n, r, t.a_vec, budget, require_big_subquotient, dedupe_orbits)
        for t in selected
    ]
    merged = VerificationReport(
        p=p, n=n, r=r, mode="standard" if require_big_subquotient else "diagnostic"
    )
    if config.workers == 1 or len(jobs) < 2:
        results: Iterable[VerificationReport] = map(_verify_one, jobs)
        for result in results:
            merged = merged.merge(result)
    else:
        chunksize = max(1, len(jobs) // (4 * config.workers))
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            for result in executor.map(_verify_one, jobs, chunksize=chunksize):
                merged = merged.merge(result)
    merged.elapsedMs = int((time.perf_counter() - started) * 1000)
    logger.info(
        "p=%d n=%d r=%d: %d types, %d reps, %d counterexamples in %d ms",
        p,
        n,
        r,
        merged.typesChecked,
        merged.repsChecked,
        len(merged.counterexamples),
        merged.elapsedMs,
    )
    return merged
