"""Finite fields F_q given by a prime l and a monic irreducible modulus of degree m."""

import itertools
from functools import lru_cache
from typing import ClassVar, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime, perfect_power, primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from ..exceptions import ParameterError

# Low-to-high coefficient lists of monic irreducible polynomials.
KNOWN_MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
}

ElementJSON = Union[int, List[int]]


def _is_irreducible(modulus: Sequence[int], characteristic: int) -> bool:
    # galoistools wants high-to-low coefficients
    high_to_low = [int(c) for c in reversed(modulus)]
    return bool(gf_irreducible_p(high_to_low, characteristic, ZZ))


@lru_cache(maxsize=None)
def default_modulus(characteristic: int, degree: int) -> Tuple[int, ...]:
    """
    The modulus used when a field is given by (l, m) alone.

    Known small cases come from KNOWN_MODULI; otherwise the first monic
    irreducible polynomial in lexicographic order of (c_{m-1}, ..., c_0).

    Args:
        characteristic: The prime l
        degree: The extension degree m

    Returns:
        Low-to-high coefficients, length m + 1, leading coefficient 1
    """
    if degree == 1:
        return (0, 1)
    if (characteristic, degree) in KNOWN_MODULI:
        return KNOWN_MODULI[(characteristic, degree)]
    if characteristic**degree > FieldSpec.MAX_TABLE_ORDER:
        raise ParameterError(
            f"no built-in modulus for q={characteristic}^{degree}; "
            "supply one explicitly"
        )
    for high_to_low in itertools.product(range(characteristic), repeat=degree):
        modulus = tuple(reversed(high_to_low)) + (1,)
        if modulus[0] != 0 and _is_irreducible(modulus, characteristic):
            return modulus
    raise ParameterError(
        f"no irreducible polynomial of degree {degree} over F_{characteristic}"
    )


class FieldSpec(BaseModel):
    """Characteristic, degree and modulus of F_q."""

    model_config = ConfigDict(frozen=True)

    MAX_ORDER: ClassVar[int] = 2**20
    MAX_TABLE_ORDER: ClassVar[int] = 2**10

    characteristic: int = Field(..., description="The prime l")
    degree: int = Field(1, ge=1, description="Extension degree m")
    modulus: Tuple[int, ...] = Field(
        (), description="Monic irreducible, low-to-high coefficients"
    )

    @model_validator(mode="before")
    @classmethod
    def _fill_modulus(cls, data):
        if isinstance(data, dict) and not data.get("modulus"):
            char, degree = data.get("characteristic"), data.get("degree", 1)
            ints = isinstance(char, int) and isinstance(degree, int)
            if ints and isprime(char) and degree >= 1:
                try:
                    data = {**data, "modulus": default_modulus(char, degree)}
                except ParameterError as e:
                    raise ValueError(str(e)) from e
        return data

    @model_validator(mode="after")
    def _check(self) -> "FieldSpec":
        if not isprime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not prime")
        if self.characteristic**self.degree > self.MAX_ORDER:
            raise ValueError(
                f"q = {self.characteristic}^{self.degree} exceeds {self.MAX_ORDER}"
            )
        if len(self.modulus) != self.degree + 1 or self.modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.degree}")
        if any(not 0 <= c < self.characteristic for c in self.modulus):
            raise ValueError("modulus coefficients must be reduced mod l")
        if not _is_irreducible(self.modulus, self.characteristic):
            raise ValueError(
                f"modulus {list(self.modulus)} is reducible "
                f"over F_{self.characteristic}"
            )
        return self

    @property
    def q(self) -> int:
        return self.characteristic**self.degree


class FiniteField:
    """
    Arithmetic in F_q.

    An element is the integer whose base-l digits are its coefficient vector
    in F_l[x]/(modulus), so elements are canonical, hashable and ordered, and
    the prime subfield is {0, ..., l-1}. Every in-memory API, SquareMatrix
    included, takes elements in this encoding.

    JSON uses a different convention: over F_l an int is reduced mod l; over
    an extension field an int must lie in [0, l) and names a prime-subfield
    element, and anything else is written as a coefficient vector. Since the
    two conventions agree on [0, l), no JSON int is read two ways.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.char = spec.characteristic
        self.degree = spec.degree
        self.q = spec.q
        self.is_prime_field = spec.degree == 1
        self._add: Optional[List[List[int]]] = None
        self._log: List[int] = []
        self._exp: List[int] = []
        if self.is_prime_field:
            self.primitive_element = 1 if self.q == 2 else int(primitive_root(self.q))
        else:
            if self.char != 2 and self.q <= FieldSpec.MAX_TABLE_ORDER:
                self._add = [
                    [self._add_slow(a, b) for b in range(self.q)] for a in range(self.q)
                ]
            self._build_log_tables()

    def __repr__(self) -> str:
        return f"<FiniteField F_{self.q}>"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    # coefficient vectors

    def to_coeffs(self, a: int) -> List[int]:
        out = []
        for _ in range(self.degree):
            a, c = divmod(a, self.char)
            out.append(c)
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.degree:
            raise ValueError(f"expected at most {self.degree} coefficients")
        return sum((c % self.char) * self.char**i for i, c in enumerate(coeffs))

    def _add_slow(self, a: int, b: int) -> int:
        pairs = zip(self.to_coeffs(a), self.to_coeffs(b))
        return self.from_coeffs([x + y for x, y in pairs])

    def _mul_slow(self, a: int, b: int) -> int:
        x, y = self.to_coeffs(a), self.to_coeffs(b)
        product = [0] * (2 * self.degree - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    product[i + j] = (product[i + j] + xi * yj) % self.char
        modulus = self.spec.modulus
        for top in range(len(product) - 1, self.degree - 1, -1):
            c = product[top]
            if c:
                for i in range(self.degree + 1):
                    shift = top - self.degree + i
                    product[shift] = (product[shift] - c * modulus[i]) % self.char
        return self.from_coeffs(product[: self.degree])

    def _build_log_tables(self) -> None:
        order = self.q - 1
        for candidate in range(2, self.q):
            powers = [1]
            current = candidate
            while current != 1:
                powers.append(current)
                current = self._mul_slow(current, candidate)
            if len(powers) == order:
                self.primitive_element = candidate
                self._exp = powers + powers
                self._log = [0] * self.q
                for k, value in enumerate(powers):
                    self._log[value] = k
                return
        raise ParameterError(f"no primitive element found in F_{self.q}")

    # arithmetic

    def from_int(self, k: int) -> int:
        """The image of the integer k under Z -> F_q."""
        return k % self.char

    def add(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return (a + b) % self.char
        if self.char == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.is_prime_field:
            return -a % self.char
        if self.char == 2:
            return a
        return self.from_coeffs([-c for c in self.to_coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return a * b % self.char
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.is_prime_field:
            return pow(a, self.char - 2, self.char)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if k == 0 else 0
        if self.is_prime_field:
            return pow(a, k % (self.q - 1), self.char)
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        if self.is_prime_field:
            return sum(x * y for x, y in zip(xs, ys)) % self.char
        total = 0
        for x, y in zip(xs, ys):
            if x and y:
                total = self.add(total, self.mul(x, y))
        return total

    def generator_power(self, k: int) -> int:
        """primitive_element ** k."""
        return self.pow(self.primitive_element, k)

    def root_of_unity(self, order: int) -> int:
        """
        A primitive order-th root of unity.

        Raises:
            ParameterError: If order does not divide q - 1
        """
        if order < 1 or (self.q - 1) % order:
            raise ParameterError(
                f"F_{self.q} has no primitive root of unity of order {order}"
            )
        return self.generator_power((self.q - 1) // order)

    def elements(self) -> range:
        return range(self.q)

    # JSON

    def element_from_json(self, value: ElementJSON) -> int:
        """An int naming a prime-subfield element, or a coefficient vector."""
        if isinstance(value, bool):
            raise ParameterError("field elements must be integers or coefficient lists")
        if isinstance(value, int):
            if not self.is_prime_field and not 0 <= value < self.char:
                raise ParameterError(
                    f"int {value} is ambiguous over F_{self.q}; "
                    "use a coefficient vector"
                )
            return self.from_int(value)
        if isinstance(value, list) and all(isinstance(c, int) for c in value):
            if len(value) > self.degree:
                raise ParameterError(
                    f"coefficient vector {value} longer than degree {self.degree}"
                )
            return self.from_coeffs(value)
        raise ParameterError(f"cannot read field element {value!r}")

    def element_to_json(self, a: int) -> ElementJSON:
        return a if self.is_prime_field else self.to_coeffs(a)


@lru_cache(maxsize=64)
def get_field(
    characteristic: int, degree: int = 1, modulus: Tuple[int, ...] = ()
) -> FiniteField:
    """Shared FiniteField instance for (l, m, modulus)."""
    return FiniteField(
        FieldSpec(characteristic=characteristic, degree=degree, modulus=modulus)
    )


def field_of_order(q: int) -> FiniteField:
    """F_q with the default modulus."""
    if isprime(q):
        return get_field(q)
    power = perfect_power(q)
    if not power or not isprime(power[0]):
        raise ParameterError(f"q={q} is not a prime power")
    return get_field(int(power[0]), int(power[1]))
