"""Value types and exact gcd/residue arithmetic shared by the whole package.

Everything here is exact: Python integers are unbounded, so products such as
``c1 * c4 * t1`` never wrap.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class UsageError(ValueError):
    """Raised when an operation is called outside its documented domain."""


class ConstraintError(ValueError):
    """Raised when a relation's side condition does not hold."""


class PreconditionError(ValueError):
    """Raised when an invariant family is requested for a tuple outside it."""


@functools.total_ordering
class _Infinite:
    """The ``INFINITE`` value returned by :func:`gcd_star` on all-zero input."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("INFINITE")

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def _nonempty(xs: Iterable[int]) -> list[int]:
    xs = [int(x) for x in xs]
    if not xs:
        raise UsageError("gcd of an empty sequence is undefined")
    return xs


def gcd_star(xs: Iterable[int]):
    """gcd of ``xs``, or ``INFINITE`` when every entry is zero."""
    g = math.gcd(*_nonempty(xs))
    return INFINITE if g == 0 else g


def gcd_sub(xs: Iterable[int]) -> int:
    """gcd of ``xs``, or 0 when every entry is zero."""
    return math.gcd(*_nonempty(xs))


def as_modulus(g) -> int:
    """Map a gcd value to a residue modulus; ``INFINITE`` becomes 0."""
    return 0 if g is INFINITE else int(g)


@dataclass(frozen=True)
class Residue:
    """An integer class ``value + modulus*Z``; modulus 0 means plain integers."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise UsageError(f"negative modulus {self.modulus}")
        if self.modulus > 0 and not 0 <= self.value < self.modulus:
            raise UsageError(
                f"residue {self.value} not reduced modulo {self.modulus}")

    def class_gcd(self) -> int:
        """gcd over every representative of the class, i.e. gcd(value, modulus)."""
        return math.gcd(self.value, self.modulus)

    def __str__(self) -> str:
        if self.modulus == 0:
            return str(self.value)
        return f"{self.value} mod {self.modulus}"


def reduce_residue(v: int, m: int) -> Residue:
    if m < 0:
        raise UsageError(f"negative modulus {m}")
    return Residue(v % m if m else v, m)


def residue(v: int, m: int) -> Residue:
    """Like :func:`reduce_residue` but accepts a signed modulus (uses ``|m|``)."""
    return reduce_residue(v, abs(m))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    r0, r1, s0, s1, u0, u1 = a, b, 1, 0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    if r0 < 0:
        return -r0, -s0, -u0
    return r0, s0, u0


def xgcd(xs: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(g, coeffs)`` with ``sum(c*x for c, x in zip(coeffs, xs)) == g``.

    ``g`` is ``gcd_sub(xs)`` (0 for an all-zero input).
    """
    g, coeffs = 0, []
    for x in xs:
        g, s, u = _egcd(g, x)
        coeffs = [s * k for k in coeffs] + [u]
    return g, coeffs


def _ints(values: Iterable, n: int, name: str) -> tuple[int, ...]:
    out = tuple(values)
    if len(out) != n:
        raise UsageError(f"{name} must have {n} entries, got {len(out)}")
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise UsageError(f"{name} entries must be integers, got {v!r}")
    return out


@dataclass(frozen=True)
class ClasperForm:
    """A standard form ``(c1..c6 | f1..f4 | t1, t2)``.

    ``c`` counts C1-trees on the edges of the tetrahedron
    (c3: 12, c2: 13, c1: 23, c4: 14, c5: 24, c6: 34), ``f`` counts C2-trees
    on its faces (f4: 123, f3: 124, f2: 134, f1: 234) and ``t`` counts the two
    kinds of C3-trees. Negative counts stand for twisted claspers.
    """

    c: tuple[int, ...]
    f: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", _ints(self.c, 6, "c"))
        object.__setattr__(self, "f", _ints(self.f, 4, "f"))
        object.__setattr__(self, "t", _ints(self.t, 2, "t"))

    @classmethod
    def parse(cls, text: str) -> "ClasperForm":
        """Read the ``"c1,...,c6 | f1,...,f4 | t1,t2"`` notation."""
        parts = text.split("|")
        if len(parts) != 3:
            raise UsageError(f"expected three '|'-separated groups: {text!r}")
        c, f, t = ([int(x) for x in p.split(",") if x.strip()] for p in parts)
        return cls(c, f, t)

    @classmethod
    def zero(cls) -> "ClasperForm":
        return cls((0,) * 6, (0,) * 4, (0,) * 2)

    def entries(self) -> tuple[int, ...]:
        return self.c + self.f + self.t

    def __str__(self) -> str:
        j = lambda xs: ",".join(map(str, xs))
        return f"{j(self.c)} | {j(self.f)} | {j(self.t)}"


@dataclass(frozen=True)
class LevineForm:
    """Levine's parameters ``(k, l, r, d, e1..e8)``.

    When ``gcd*(k, l, r)`` is finite, ``d`` must lie in ``[0, gcd*)``; with
    ``k = l = r = 0`` any integer ``d`` is accepted.
    """

    k: int
    l: int
    r: int
    d: int
    e: tuple[int, ...]

    def __post_init__(self):
        _ints((self.k, self.l, self.r, self.d), 4, "k,l,r,d")
        object.__setattr__(self, "e", _ints(self.e, 8, "e"))
        g = gcd_star((self.k, self.l, self.r))
        if g is not INFINITE and not 0 <= self.d < g:
            raise UsageError(f"d={self.d} outside [0, {g})")

    @classmethod
    def zero(cls) -> "LevineForm":
        return cls(0, 0, 0, 0, (0,) * 8)
