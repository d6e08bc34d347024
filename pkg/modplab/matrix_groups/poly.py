"""
Dense univariate polynomials over F_q.

A polynomial is a tuple of field elements, low-to-high, with no trailing
zeros; the zero polynomial is ().
"""

from typing import Iterable, Sequence, Tuple

from .field import FiniteField

Poly = Tuple[int, ...]


def trim(coeffs: Iterable[int]) -> Poly:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    """Degree, with deg 0 = -1."""
    return len(f) - 1


def add(F: FiniteField, f: Poly, g: Poly) -> Poly:
    size = max(len(f), len(g))
    f = tuple(f) + (0,) * (size - len(f))
    g = tuple(g) + (0,) * (size - len(g))
    return trim(F.add(a, b) for a, b in zip(f, g))


def scale(F: FiniteField, f: Poly, c: int) -> Poly:
    return trim(F.mul(a, c) for a in f)


def sub(F: FiniteField, f: Poly, g: Poly) -> Poly:
    return add(F, f, scale(F, g, F.neg(1)))


def mul(F: FiniteField, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def divmod_poly(F: FiniteField, f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    """Quotient and remainder of f by non-zero g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    remainder = list(f)
    quotient = [0] * max(len(f) - len(g) + 1, 0)
    lead_inv = F.inv(g[-1])
    for shift in range(len(f) - len(g), -1, -1):
        c = F.mul(remainder[shift + len(g) - 1], lead_inv)
        if c:
            quotient[shift] = c
            for i, b in enumerate(g):
                remainder[shift + i] = F.sub(remainder[shift + i], F.mul(c, b))
    return trim(quotient), trim(remainder)


def monic(F: FiniteField, f: Poly) -> Poly:
    if not f:
        return ()
    return scale(F, f, F.inv(f[-1]))


def gcd(F: FiniteField, f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, divmod_poly(F, f, g)[1]
    return monic(F, f)


def lcm(F: FiniteField, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    quotient, _ = divmod_poly(F, mul(F, f, g), gcd(F, f, g))
    return monic(F, quotient)


def from_roots(F: FiniteField, roots: Sequence[int]) -> Poly:
    """prod (X - a)."""
    out: Poly = (1,)
    for a in roots:
        out = mul(F, out, (F.neg(a), 1))
    return out


def evaluate(F: FiniteField, f: Poly, x: int) -> int:
    value = 0
    for c in reversed(f):
        value = F.add(F.mul(value, x), c)
    return value


def constant_term_sign(F: FiniteField, f: Poly) -> int:
    """a_n of a monic f = X^n - a_1 X^(n-1) + ... + (-1)^n a_n."""
    n = degree(f)
    c = f[0] if f else 0
    return c if n % 2 == 0 else F.neg(c)


def to_json(F: FiniteField, f: Poly) -> list:
    return [F.element_to_json(c) for c in f]


def format_poly(F: FiniteField, f: Poly) -> str:
    """Human-readable form such as 'X^3 + 2*X + 1'."""
    if not f:
        return "0"
    terms = []
    for power in range(len(f) - 1, -1, -1):
        c = f[power]
        if not c:
            continue
        coeff = str(F.element_to_json(c))
        if power == 0:
            terms.append(coeff)
        else:
            monomial = "X" if power == 1 else f"X^{power}"
            terms.append(monomial if c == 1 else f"{coeff}*{monomial}")
    return " + ".join(terms)
