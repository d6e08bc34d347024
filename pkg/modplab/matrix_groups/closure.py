"""
Multiplicative closure of matrix generators, paired closures for (rho, theta),
and irreducibility by spinning.
"""

import itertools
import logging
from typing import Dict, Hashable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..config import LabConfig
from ..exceptions import CapExceededError, HomomorphismError, ParameterError
from .field import FiniteField
from .matrix import SquareMatrix, Vector, det, identity, mat_mul

logger = logging.getLogger(__name__)


class GeneratedGroup:
    """
    A finite matrix group with its elements in breadth-first insertion order.

    The identity is always elements[0].
    """

    def __init__(
        self,
        field: FiniteField,
        n: int,
        elements: Sequence[SquareMatrix],
        generators: Sequence[SquareMatrix],
    ):
        self.field = field
        self.n = n
        self.elements: Tuple[SquareMatrix, ...] = tuple(elements)
        self.generators: Tuple[SquareMatrix, ...] = tuple(generators)
        self._members = frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[SquareMatrix]:
        return iter(self.elements)

    def __contains__(self, m: object) -> bool:
        return m in self._members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GeneratedGroup) and other._members == self._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"<GeneratedGroup order={len(self)} in GL_{self.n}(F_{self.field.q})>"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> SquareMatrix:
        return self.elements[0]


def _check_generators(
    generators: Sequence[SquareMatrix], field: FiniteField, n: int
) -> None:
    for g in generators:
        if g.field != field or g.n != n:
            raise ParameterError(f"generator {g!r} is not in GL_{n}(F_{field.q})")
        if not det(g):
            raise ParameterError(f"generator {g!r} is not invertible")


def closure(
    generators: Sequence[SquareMatrix],
    field: Optional[FiniteField] = None,
    n: Optional[int] = None,
    cap: Optional[int] = None,
) -> GeneratedGroup:
    """
    Breadth-first multiplicative closure of invertible generators.

    Args:
        generators: Invertible matrices of a common size over a common field
        field: Required when generators is empty
        n: Required when generators is empty
        cap: Element cap; defaults to LabConfig.DEFAULT_CLOSURE_CAP

    Returns:
        The generated group; insertion order is deterministic

    Raises:
        ParameterError: If a generator is singular or the shapes disagree
        CapExceededError: If the group has more than cap elements
    """
    if generators:
        field = field or generators[0].field
        n = n or generators[0].n
    if field is None or n is None:
        raise ParameterError("field and n are required for an empty generator list")
    cap = cap or LabConfig.DEFAULT_CLOSURE_CAP
    _check_generators(generators, field, n)

    gens = list(dict.fromkeys(generators))
    one = identity(field, n)
    elements = [one]
    seen = {one}
    for g in gens:
        if g not in seen:
            seen.add(g)
            elements.append(g)
    boundary = list(elements)
    while boundary:
        next_boundary = []
        for a in gens:
            for b in boundary:
                c = mat_mul(a, b)
                if c not in seen:
                    seen.add(c)
                    elements.append(c)
                    next_boundary.append(c)
                    if len(elements) > cap:
                        raise CapExceededError(
                            f"closure exceeded {cap} elements",
                            reached=len(elements),
                            cap=cap,
                        )
        boundary = next_boundary
    logger.debug(
        "closure of %d generators in GL_%d(F_%d): order %d",
        len(gens),
        n,
        field.q,
        len(elements),
    )
    return GeneratedGroup(field, n, elements, gens)


def generated_subgroup(
    candidates: Sequence[SquareMatrix],
    field: FiniteField,
    n: int,
    cap: Optional[int] = None,
) -> GeneratedGroup:
    """
    The subgroup generated by candidates.

    A candidate becomes a generator only when it lies outside the subgroup
    built so far, so the closure is rebuilt at most log2 |G| times.
    """
    group = closure([], field=field, n=n, cap=cap)
    gens: List[SquareMatrix] = []
    for g in candidates:
        if g not in group:
            gens.append(g)
            group = closure(gens, field=field, n=n, cap=cap)
    return group


class PairElement(NamedTuple):
    """An element g of the abstract group with its images rho(g) and theta(g)."""

    key: Hashable
    rho: SquareMatrix
    theta: SquareMatrix


class RepresentationPair:
    """
    A finite group G with two representations rho (dim n) and theta (dim m).

    G is the closure of the source generators when they are supplied (so theta
    and rho are checked to be homomorphisms on it), and otherwise the image of
    rho + theta.
    """

    def __init__(
        self,
        field: FiniteField,
        n: int,
        m: int,
        elements: Sequence[PairElement],
        generators: Sequence[PairElement],
        keyed_by_source: bool = False,
    ):
        self.field = field
        self.n = n
        self.m = m
        self.elements: Tuple[PairElement, ...] = tuple(elements)
        self.generators: Tuple[PairElement, ...] = tuple(generators)
        self.keyed_by_source = keyed_by_source
        self._by_key = {g.key: g for g in self.elements}

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return (
            f"<RepresentationPair |G|={len(self)} n={self.n} m={self.m} "
            f"F_{self.field.q}>"
        )

    @property
    def identity(self) -> PairElement:
        return self.elements[0]

    def lookup(self, key: Hashable) -> PairElement:
        return self._by_key[key]

    def product(self, a: PairElement, b: PairElement) -> PairElement:
        """The element ab of G."""
        if self.keyed_by_source:
            return self._by_key[mat_mul(a.key, b.key)]  # type: ignore[arg-type]
        return self._by_key[(mat_mul(a.rho, b.rho), mat_mul(a.theta, b.theta))]

    @property
    def rho_generators(self) -> List[SquareMatrix]:
        return [g.rho for g in self.generators]

    @property
    def theta_generators(self) -> List[SquareMatrix]:
        return [g.theta for g in self.generators]

    def rho_group(self) -> GeneratedGroup:
        images = list(dict.fromkeys(g.rho for g in self.elements))
        return GeneratedGroup(self.field, self.n, images, self.rho_generators)

    def theta_group(self) -> GeneratedGroup:
        images = list(dict.fromkeys(g.theta for g in self.elements))
        return GeneratedGroup(self.field, self.m, images, self.theta_generators)

    @classmethod
    def build(
        cls,
        rho_gens: Sequence[SquareMatrix],
        theta_gens: Sequence[SquareMatrix],
        source_gens: Optional[Sequence[SquareMatrix]] = None,
        cap: Optional[int] = None,
    ) -> "RepresentationPair":
        """
        Paired closure over generator triples (source, rho, theta).

        Args:
            rho_gens: Images of the generators under rho
            theta_gens: Images of the same generators under theta
            source_gens: Optional faithful realization of G itself
            cap: Element cap; defaults to LabConfig.DEFAULT_CLOSURE_CAP

        Returns:
            The pair with every element of G and its two images

        Raises:
            ParameterError: On mismatched generator lists or singular generators
            HomomorphismError: If the same g receives two different images
            CapExceededError: If G has more than cap elements
        """
        if not rho_gens or len(rho_gens) != len(theta_gens):
            raise ParameterError(
                "rho and theta need the same non-empty list of generator images"
            )
        if source_gens is not None and len(source_gens) != len(rho_gens):
            raise ParameterError("source generators must match the image lists")
        field, n, m = rho_gens[0].field, rho_gens[0].n, theta_gens[0].n
        if theta_gens[0].field != field:
            raise ParameterError("rho and theta must be defined over the same field")
        _check_generators(rho_gens, field, n)
        _check_generators(theta_gens, field, m)
        if source_gens is not None:
            _check_generators(source_gens, source_gens[0].field, source_gens[0].n)
        cap = cap or LabConfig.DEFAULT_CLOSURE_CAP

        def key_of(
            k_a: Hashable, k_b: Hashable, rho: SquareMatrix, theta: SquareMatrix
        ) -> Hashable:
            if source_gens is None:
                return (rho, theta)
            return mat_mul(k_a, k_b)  # type: ignore[arg-type]

        one_key: Hashable
        if source_gens is None:
            gens = [PairElement((r, t), r, t) for r, t in zip(rho_gens, theta_gens)]
            one_key = (identity(field, n), identity(field, m))
        else:
            triples = zip(source_gens, rho_gens, theta_gens)
            gens = [PairElement(s, r, t) for s, r, t in triples]
            one_key = identity(source_gens[0].field, source_gens[0].n)

        table: Dict[Hashable, PairElement] = {}

        def insert(element: PairElement) -> bool:
            known = table.get(element.key)
            if known is None:
                table[element.key] = element
                return True
            if known.rho != element.rho or known.theta != element.theta:
                raise HomomorphismError(
                    "generator images do not define a homomorphism",
                    failed=["homomorphism"],
                    witness=element.key,
                )
            return False

        insert(PairElement(one_key, identity(field, n), identity(field, m)))
        for g in gens:
            insert(g)
        boundary = list(table.values())
        while boundary:
            next_boundary = []
            for a in gens:
                for b in boundary:
                    rho = mat_mul(a.rho, b.rho)
                    theta = mat_mul(a.theta, b.theta)
                    c = PairElement(key_of(a.key, b.key, rho, theta), rho, theta)
                    if insert(c):
                        next_boundary.append(c)
                        if len(table) > cap:
                            raise CapExceededError(
                                f"paired closure exceeded {cap} elements",
                                reached=len(table),
                                cap=cap,
                            )
            boundary = next_boundary
        logger.debug(
            "paired closure: |G|=%d, n=%d, m=%d over F_%d", len(table), n, m, field.q
        )
        keyed = source_gens is not None
        return cls(field, n, m, list(table.values()), gens, keyed_by_source=keyed)


class _Span:
    """Incrementally maintained row-echelon basis of a subspace of F^n."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.rows: List[Tuple[int, List[int]]] = []
        self.vectors: List[Vector] = []

    def __len__(self) -> int:
        return len(self.rows)

    def add(self, v: Sequence[int]) -> bool:
        """Insert v; returns False if it was already in the span."""
        F = self.field
        current = list(v)
        for pivot, row in self.rows:
            c = current[pivot]
            if c:
                current = [F.sub(x, F.mul(c, y)) for x, y in zip(current, row)]
        pivot = next((i for i, x in enumerate(current) if x), None)
        if pivot is None:
            return False
        inv = F.inv(current[pivot])
        self.rows.append((pivot, [F.mul(inv, x) for x in current]))
        self.vectors.append(tuple(v))
        return True


def spin(
    generators: Sequence[SquareMatrix], v: Sequence[int], field: FiniteField
) -> List[Vector]:
    """A basis of the smallest subspace containing v and stable under the generators."""
    span = _Span(field)
    span.add(v)
    queue = [tuple(v)]
    while queue:
        w = queue.pop()
        for g in generators:
            image = g.apply(w)
            if span.add(image):
                queue.append(image)
    return span.vectors


MAX_SPIN_VECTORS = 10**6


def _projective_points(field: FiniteField, n: int) -> Iterator[Vector]:
    """Nonzero vectors of F^n whose first nonzero coordinate is 1."""
    for lead in range(n):
        for tail in itertools.product(range(field.q), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def is_irreducible(
    field: FiniteField, generators: Sequence[SquareMatrix], dim: int
) -> Tuple[bool, Optional[List[Vector]]]:
    """
    Decide irreducibility over F_q by spinning every projective point.

    Args:
        field: The field of definition
        generators: Matrices generating the action
        dim: Dimension of the representation

    Returns:
        (True, None) if irreducible, else (False, basis of a proper invariant subspace)

    Raises:
        ParameterError: If q^dim is too large to enumerate
    """
    if dim == 1:
        return True, None
    if field.q**dim > MAX_SPIN_VECTORS:
        raise ParameterError(f"cannot spin over F_{field.q}^{dim}")
    for v in _projective_points(field, dim):
        basis = spin(generators, v, field)
        if len(basis) < dim:
            return False, basis
    return True, None
