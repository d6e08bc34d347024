"""
Decision procedures for the group-theoretic lemmas: regular generation,
characteristic-polynomial annihilation and its consequences for kernels,
characters and determinants.
"""

import itertools
import logging
from typing import Any, Dict, Hashable, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from ..config import LabConfig
from ..exceptions import CapExceededError, ParameterError, PreconditionError
from . import poly
from .closure import (
    GeneratedGroup,
    PairElement,
    RepresentationPair,
    generated_subgroup,
    is_irreducible,
)
from .matrix import (
    SquareMatrix,
    char_poly,
    det,
    is_regular,
    is_unipotent,
    nullspace,
    poly_at_matrix,
)
from .poly import Poly

logger = logging.getLogger(__name__)


class CheckResult(BaseModel):
    """One named check with the element that failed it, if any."""

    name: str = Field(..., description="Check identifier")
    passed: bool = Field(..., description="Whether the check held")
    witness: Optional[Any] = Field(None, description="JSON form of a failing element")
    detail: str = Field("", description="Human-readable explanation")


class LemmaReport(BaseModel):
    """Outcome of a lemma verification on one group."""

    lemma: str = Field(..., description="Which lemma was checked")
    mode: Optional[str] = Field(None, description="Verification mode, where applicable")
    passed: bool = Field(..., description="True iff every check passed")
    checks: List[CheckResult] = Field(default_factory=list)


def pair_witness(g: PairElement) -> Dict[str, Any]:
    return {"rho": g.rho.to_json(), "theta": g.theta.to_json()}


# regular generation


def regular_subgroup(group: GeneratedGroup) -> GeneratedGroup:
    """The subgroup generated by the regular elements of the group."""
    regular = [g for g in group if is_regular(g)]
    return generated_subgroup(regular, group.field, group.n, cap=max(len(group), 1))


def is_regular_generated(group: GeneratedGroup) -> bool:
    """Whether the regular elements generate G; false when G has none."""
    if not any(is_regular(g) for g in group):
        return False
    return len(regular_subgroup(group)) == len(group)


# annihilation


def _charpoly_cache(pair: RepresentationPair) -> Dict[SquareMatrix, Poly]:
    cache: Dict[SquareMatrix, Poly] = {}
    for g in pair.elements:
        if g.rho not in cache:
            cache[g.rho] = char_poly(g.rho)
    return cache


def charpoly_family(pair: RepresentationPair) -> Dict[Hashable, Poly]:
    """g -> char(rho(g)), keyed by the element key."""
    cache = _charpoly_cache(pair)
    return {g.key: cache[g.rho] for g in pair.elements}


def find_annihilation_failure(
    pair: RepresentationPair, family: Optional[Dict[Hashable, Poly]] = None
) -> Optional[PairElement]:
    """The first g (in closure order) whose polynomial does not kill theta(g)."""
    family = family if family is not None else charpoly_family(pair)
    checked: Dict[Tuple[Poly, SquareMatrix], bool] = {}
    for g in pair.elements:
        f = family[g.key]
        key = (f, g.theta)
        if key not in checked:
            checked[key] = poly_at_matrix(f, g.theta).is_zero()
        if not checked[key]:
            return g
    return None


def annihilation_holds(pair: RepresentationPair) -> bool:
    """Whether char(rho(g)) evaluated at theta(g) vanishes for every g in G."""
    return find_annihilation_failure(pair) is None


# kernels


def find_kernel_violation(pair: RepresentationPair) -> Optional[PairElement]:
    """Some g with rho(g) = 1 and theta(g) != 1, if one exists."""
    one_rho, one_theta = pair.identity.rho, pair.identity.theta
    for g in pair.elements:
        if g.rho == one_rho and g.theta != one_theta:
            return g
    return None


def kernel_containment(pair: RepresentationPair) -> bool:
    """
    Whether ker(rho) is contained in ker(theta).

    Args:
        pair: The pair (rho, theta) on G

    Returns:
        True iff every g with rho(g) = 1 has theta(g) = 1

    Raises:
        PreconditionError: If annihilation fails or theta is reducible
    """
    failed: List[str] = []
    witness: Any = None
    bad = find_annihilation_failure(pair)
    if bad is not None:
        failed.append("annihilation")
        witness = pair_witness(bad)
    irreducible, subspace = is_irreducible(pair.field, pair.theta_generators, pair.m)
    if not irreducible:
        failed.append("theta-irreducible")
        witness = witness or {"invariantSubspace": [list(v) for v in subspace or []]}
    if failed:
        raise PreconditionError(
            f"kernel lemma preconditions fail: {', '.join(failed)}", failed, witness
        )
    violation = find_kernel_violation(pair)
    if violation is not None:
        logger.warning("kernel containment fails at %s", pair_witness(violation))
    return violation is None


# characters


def _is_diagonal(m: SquareMatrix) -> bool:
    return all(m[i, j] == 0 for i in range(m.n) for j in range(m.n) if i != j)


def find_union_of_kernels_failure(pair: RepresentationPair) -> Optional[PairElement]:
    """Some g lying in no kernel of the characters rho_i * theta^-1."""
    for g in pair.elements:
        t = g.theta[0, 0]
        if all(g.rho[i, i] != t for i in range(pair.n)):
            return g
    return None


def union_of_kernels(pair: RepresentationPair) -> bool:
    """
    For rho a sum of characters and theta a character: every g lies in the
    kernel of some rho_i * theta^-1.

    Raises:
        PreconditionError: If rho is not diagonal, theta is not a character,
            or annihilation fails
    """
    failed: List[str] = []
    witness: Any = None
    if pair.m != 1:
        failed.append("theta-character")
    if not all(_is_diagonal(g) for g in pair.rho_generators):
        failed.append("rho-diagonal")
    if not failed:
        bad = find_annihilation_failure(pair)
        if bad is not None:
            failed.append("annihilation")
            witness = pair_witness(bad)
    if failed:
        raise PreconditionError(
            f"character lemma preconditions fail: {', '.join(failed)}", failed, witness
        )
    return find_union_of_kernels_failure(pair) is None


# intertwiners


def _intertwiner_equations(
    rho_gens: Sequence[SquareMatrix], theta_gens: Sequence[SquareMatrix], n: int
) -> List[List[int]]:
    F = rho_gens[0].field
    rows = []
    for r, t in zip(rho_gens, theta_gens):
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[k * n + j] = F.add(row[k * n + j], r[i, k])
                    row[i * n + k] = F.sub(row[i * n + k], t[k, j])
                rows.append(row)
    return rows


def find_intertwiner(
    rho_gens: Sequence[SquareMatrix],
    theta_gens: Sequence[SquareMatrix],
    cap: Optional[int] = None,
) -> Optional[SquareMatrix]:
    """
    An invertible T with rho(g) T = T theta(g) for every generator g.

    Solves the linear system for the space of intertwiners, then searches its
    elements in lexicographic coordinate order for an invertible one.

    Args:
        rho_gens: Generator images under rho
        theta_gens: Generator images under theta, in the same order
        cap: Maximum combinations tried; defaults to the config value

    Returns:
        The first invertible intertwiner, or None (also when dimensions differ)

    Raises:
        CapExceededError: If the intertwiner space is too large to search
    """
    if len(rho_gens) != len(theta_gens):
        raise ParameterError("generator lists must have the same length")
    if not rho_gens or rho_gens[0].n != theta_gens[0].n:
        return None
    cap = cap or LabConfig.DEFAULT_INTERTWINER_SEARCH_CAP
    F, n = rho_gens[0].field, rho_gens[0].n
    basis = nullspace(F, _intertwiner_equations(rho_gens, theta_gens, n), n * n)
    if not basis:
        return None
    logger.debug("intertwiner space has dimension %d over F_%d", len(basis), F.q)
    for v in basis:
        candidate = SquareMatrix(F, n, v)
        if det(candidate):
            return candidate
    total = F.q ** len(basis) - 1
    if total > cap:
        raise CapExceededError(
            f"intertwiner space of size {total} exceeds the search cap",
            reached=total,
            cap=cap,
        )
    for coeffs in itertools.product(range(F.q), repeat=len(basis)):
        if not any(coeffs):
            continue
        entries = [0] * (n * n)
        for c, v in zip(coeffs, basis):
            if c:
                entries = [F.add(x, F.mul(c, y)) for x, y in zip(entries, v)]
        candidate = SquareMatrix(F, n, entries)
        if det(candidate):
            return candidate
    return None


# determinants


def _det_preconditions(
    pair: RepresentationPair, family: Dict[Hashable, Poly]
) -> Tuple[List[str], Any]:
    F = pair.field
    failed: List[str] = []
    witness: Any = None
    degrees = {poly.degree(f) for f in family.values()}
    if degrees != {pair.m} or any(f[-1] != 1 for f in family.values()):
        failed.append("family-degree")
    if not is_regular_generated(pair.theta_group()):
        failed.append("theta-regular-generated")
    bad = find_annihilation_failure(pair, family)
    if bad is not None:
        failed.append("annihilation")
        witness = pair_witness(bad)
    a_n = {key: poly.constant_term_sign(F, f) for key, f in family.items()}
    multiplicative = a_n[pair.identity.key] == 1
    if multiplicative:
        for s in pair.generators:
            for g in pair.elements:
                if a_n[pair.product(s, g).key] != F.mul(a_n[s.key], a_n[g.key]):
                    multiplicative = False
                    witness = witness or pair_witness(g)
                    break
            if not multiplicative:
                break
    if not multiplicative:
        failed.append("multiplicative")
    return failed, witness


def find_det_disagreement(
    pair: RepresentationPair, family: Dict[Hashable, Poly]
) -> Optional[PairElement]:
    F = pair.field
    for g in pair.elements:
        if det(g.theta) != poly.constant_term_sign(F, family[g.key]):
            return g
    return None


def det_agreement(
    pair: RepresentationPair, family: Optional[Dict[Hashable, Poly]] = None
) -> bool:
    """
    Check det theta(g) = a_n(g) for a family of monic polynomials.

    a_n(g) is (-1)^n times the constant term of family[g]. A False return
    with the preconditions satisfied is a counterexample and is logged.

    Args:
        pair: G with theta; rho only matters through the default family
        family: Element key -> monic polynomial of degree dim(theta);
            defaults to charpoly_family(pair)

    Returns:
        True iff the determinants agree everywhere on G

    Raises:
        PreconditionError: Itemizing every failed precondition
    """
    family = family if family is not None else charpoly_family(pair)
    failed, witness = _det_preconditions(pair, family)
    if failed:
        raise PreconditionError(
            f"determinant lemma preconditions fail: {', '.join(failed)}",
            failed,
            witness,
        )
    bad = find_det_disagreement(pair, family)
    if bad is not None:
        logger.warning("determinant disagreement at %s", pair_witness(bad))
    return bad is None


def regular_determinant_agreement(pair: RepresentationPair) -> bool:
    """det rho = det theta on G, given annihilation and regular-generated theta(G)."""
    if pair.n != pair.m:
        raise ParameterError("rho and theta must have the same dimension")
    return det_agreement(pair, charpoly_family(pair))


# the annihilation hypothesis


def find_hypothesis_violation(
    rho_gens: Sequence[SquareMatrix],
    candidates: Sequence[Sequence[SquareMatrix]],
    cap: Optional[int] = None,
) -> Optional[int]:
    """
    Index of the first candidate theta that is irreducible, annihilated by
    every char(rho(g)) and not isomorphic to rho.

    Candidates that fail to define a homomorphism on G raise HomomorphismError.
    """
    for index, theta_gens in enumerate(candidates):
        pair = RepresentationPair.build(
            rho_gens, theta_gens, source_gens=rho_gens, cap=cap
        )
        irreducible, _ = is_irreducible(pair.field, pair.theta_generators, pair.m)
        if not irreducible or not annihilation_holds(pair):
            continue
        if find_intertwiner(rho_gens, theta_gens) is None:
            logger.info("candidate %d is annihilated but not isomorphic to rho", index)
            return index
    return None


# criteria for regular generation


def _check(
    name: str, passed: bool, witness: Any = None, detail: str = ""
) -> CheckResult:
    return CheckResult(
        name=name, passed=passed, witness=None if passed else witness, detail=detail
    )


def _first(items, predicate) -> Optional[SquareMatrix]:
    return next((g for g in items if predicate(g)), None)


def _induced_checks(group: GeneratedGroup) -> List[CheckResult]:
    F, n = group.field, group.n
    diagonal = [g for g in group if _is_diagonal(g)]
    off = [g for g in group if not _is_diagonal(g)]
    checks = [
        _check(
            "index-3",
            len(group) == 3 * len(diagonal),
            detail=f"|G|={len(group)}, |D|={len(diagonal)}",
        )
    ]

    def not_binomial(g: SquareMatrix) -> bool:
        f = char_poly(g)
        return any(f[i] for i in range(1, n))

    bad = _first(off, not_binomial)
    checks.append(
        _check(
            "off-diagonal-charpoly",
            bad is None,
            bad.to_json() if bad else None,
            "every element outside D has characteristic polynomial X^3 - alpha",
        )
    )
    bad = _first(off, lambda g: not is_regular(g))
    checks.append(
        _check("off-diagonal-regular", bad is None, bad.to_json() if bad else None)
    )
    generated = generated_subgroup(off, F, n, cap=max(len(group), 1)) if off else None
    checks.append(
        _check(
            "off-diagonal-generate",
            generated is not None and len(generated) == len(group),
            detail="elements outside D generate G",
        )
    )
    return checks


def _unipotent_checks(group: GeneratedGroup) -> List[CheckResult]:
    regular_unipotent = _first(group, lambda g: is_unipotent(g) and is_regular(g))
    checks = [
        _check(
            "regular-unipotent",
            regular_unipotent is not None,
            detail="G contains a regular unipotent element",
        )
    ]
    subgroup = regular_subgroup(group)
    scalars = [
        g
        for g in group
        if _is_diagonal(g) and len(set(g[i, i] for i in range(g.n))) == 1
    ]
    bad = _first(scalars, lambda g: g not in subgroup)
    checks.append(
        _check(
            "scalars-in-regular-subgroup",
            bad is None,
            bad.to_json() if bad else None,
            "scalar elements of G lie in the subgroup generated by regular elements",
        )
    )
    return checks


def verify_regular_lemma(
    group: GeneratedGroup, mode: Literal["induced", "unipotent"]
) -> LemmaReport:
    """
    Check the regular-generation criteria on an irreducible group.

    Args:
        group: A group acting irreducibly on F_q^n
        mode: "induced" for monomial groups induced from an index-3 diagonal
            subgroup (n = 3), "unipotent" for groups containing a regular
            unipotent element

    Returns:
        A LemmaReport whose checks end with "regular-generated"

    Raises:
        PreconditionError: If G is reducible or the mode does not apply
    """
    irreducible, subspace = is_irreducible(group.field, group.generators, group.n)
    if not irreducible:
        raise PreconditionError(
            "group is reducible",
            ["irreducible"],
            {"invariantSubspace": [list(v) for v in subspace or []]},
        )
    if mode == "induced":
        if group.n != 3:
            raise PreconditionError("induced mode needs n = 3", ["dimension"])
        checks = _induced_checks(group)
    elif mode == "unipotent":
        checks = _unipotent_checks(group)
    else:
        raise ParameterError(f"unknown mode {mode!r}")
    outside = len(group) - len(regular_subgroup(group))
    checks.append(
        _check(
            "regular-generated",
            outside == 0 and any(is_regular(g) for g in group),
            detail=f"{outside} elements outside the regular subgroup",
        )
    )
    return LemmaReport(
        lemma="regular-criteria",
        mode=mode,
        passed=all(c.passed for c in checks),
        checks=checks,
    )
