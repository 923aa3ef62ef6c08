"""The move group acting on clasper standard forms.

A generator ``psi_ij`` pushes an arc of component ``j`` over the spanning disc
of component ``i``. It leaves ``c`` alone, shifts ``f`` by a vector that only
depends on ``c`` and adds a signed copy of one ``f`` coordinate to one ``t``
slot. The ``f`` coordinate it reads is never one it changes, so powers act
linearly.

Words are sequences of ``(generator, exponent)`` pairs applied first element
first; the product ``psi_23 psi_21`` (rightmost acts first) is therefore the
sequence ``[psi_21, psi_23]``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    INFINITE,
    ClasperForm,
    ConstraintError,
    LevineForm,
    UsageError,
    gcd_star,
    xgcd,
)

# (i, j) -> (((f index, c index, sign), ...), t slot, t sign, f index read)
_TABLE = {
    (2, 1): (((3, 5, +1), (4, 1, -1)), 1, +1, 1),
    (4, 1): (((2, 6, +1), (3, 5, -1)), 2, -1, 1),
    (1, 2): (((3, 4, -1), (4, 2, +1)), 1, +1, 2),
    (3, 2): (((1, 6, +1), (4, 2, -1)), 2, -1, 2),
    (4, 3): (((1, 5, +1), (2, 4, -1)), 1, +1, 3),
    (2, 3): (((1, 5, -1), (4, 3, +1)), 2, -1, 3),
    (3, 4): (((1, 1, -1), (2, 2, +1)), 1, +1, 4),
    (1, 4): (((2, 2, -1), (3, 3, +1)), 2, -1, 4),
}

# psi_il^-1 = psi_jl psi_kl for the four pairs without a row of their own
_DERIVED = {
    (3, 1): ((2, 1), (4, 1)),
    (1, 3): ((2, 3), (4, 3)),
    (4, 2): ((1, 2), (3, 2)),
    (2, 4): ((3, 4), (1, 4)),
}


@dataclass(frozen=True, order=True)
class Generator:
    i: int
    j: int

    def __post_init__(self):
        if (self.i, self.j) not in _TABLE:
            raise UsageError(
                f"psi_{self.i}{self.j} is not a table generator"
                + (" (use derived_generator_word)"
                   if (self.i, self.j) in _DERIVED else ""))

    @property
    def index(self) -> int:
        """Position in the fixed order psi21, psi41, psi12, psi32, psi43, psi23, psi34, psi14."""
        return _ORDER_INDEX[(self.i, self.j)]

    def __str__(self) -> str:
        return f"ψ{self.i}{self.j}"

    def __repr__(self) -> str:
        return f"psi{self.i}{self.j}"


GENERATORS: tuple[Generator, ...] = tuple(
    Generator(i, j) for (i, j) in
    [(2, 1), (4, 1), (1, 2), (3, 2), (4, 3), (2, 3), (3, 4), (1, 4)])
_ORDER_INDEX = {(g.i, g.j): n for n, g in enumerate(GENERATORS)}
psi = {(g.i, g.j): g for g in GENERATORS}


@dataclass(frozen=True)
class GeneratorDelta:
    f_delta: tuple[int, int, int, int]
    t_slot: int
    t_sign: int
    f_read_index: int


def generator_delta(c: Sequence[int], g: Generator) -> GeneratorDelta:
    if not isinstance(g, Generator):
        raise UsageError(f"not a generator: {g!r}")
    rows, slot, sign, read = _TABLE[(g.i, g.j)]
    delta = [0, 0, 0, 0]
    for fi, ci, s in rows:
        delta[fi - 1] = s * c[ci - 1]
    return GeneratorDelta(tuple(delta), slot, sign, read)


def _act(c, f, t, key, e):
    """Raw action on tuples; ``key`` is an ``(i, j)`` table pair."""
    rows, slot, sign, read = _TABLE[key]
    f = list(f)
    t = list(t)
    t[slot - 1] += e * sign * f[read - 1]
    for fi, ci, s in rows:
        f[fi - 1] += e * s * c[ci - 1]
    return f, t


def apply_generator(L: ClasperForm, g: Generator, exponent: int = 1) -> ClasperForm:
    f, t = _act(L.c, L.f, L.t, (g.i, g.j), exponent)
    return ClasperForm(L.c, f, t)


class MoveWord:
    """A finite sequence of generator powers, applied first element first."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[tuple[Generator, int]] = ()):
        out = []
        for g, e in letters:
            if not isinstance(g, Generator):
                raise UsageError(f"not a generator: {g!r}")
            if isinstance(e, bool) or not isinstance(e, int) or e == 0:
                raise UsageError(f"exponent must be a non-zero integer, got {e!r}")
            out.append((g, e))
        self.letters: tuple[tuple[Generator, int], ...] = tuple(out)

    @classmethod
    def from_exponents(cls, a: Sequence[int]) -> "MoveWord":
        """``psi21^a1`` first, then ``psi41^a2``, ..., ``psi14^a8`` last."""
        if len(a) != 8:
            raise UsageError("need one exponent per generator (8)")
        return cls((g, e) for g, e in zip(GENERATORS, a) if e)

    def __iter__(self) -> Iterator[tuple[Generator, int]]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __add__(self, other: "MoveWord") -> "MoveWord":
        w = MoveWord()
        w.letters = self.letters + other.letters
        return w

    def __eq__(self, other) -> bool:
        return isinstance(other, MoveWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"MoveWord({list(self.letters)!r})"

    def pretty(self) -> str:
        """Product notation, rightmost factor acting first (``ψ23 ψ21``)."""
        if not self.letters:
            return "1"
        return " ".join(str(g) + ("" if e == 1 else f"^{e}")
                        for g, e in reversed(self.letters))

    def exponent_sum(self) -> tuple[int, ...]:
        a = [0] * 8
        for g, e in self.letters:
            a[g.index] += e
        return tuple(a)


def apply_word(L: ClasperForm, w: MoveWord) -> ClasperForm:
    c, f, t = L.c, L.f, L.t
    for g, e in w:
        f, t = _act(c, f, t, (g.i, g.j), e)
    return ClasperForm(c, f, t)


def invert_word(w: MoveWord) -> MoveWord:
    return MoveWord((g, -e) for g, e in reversed(w.letters))


def commutator_word(g: Generator, h: Generator, power: int = 1) -> MoveWord:
    """The commutator ``[g^power, h] = g^p h g^-p h^-1`` as a sequence.

    Its action is a pure translation of ``t`` that is bilinear in the
    exponents, so ``power`` scales the translation.
    """
    if g == h:
        raise UsageError("commutator of a generator with itself")
    if power == 0:
        return MoveWord()
    return MoveWord([(h, -1), (g, -power), (h, 1), (g, power)])


COMMUTATOR_PAIRS: tuple[tuple[Generator, Generator], ...] = (
    (psi[1, 4], psi[2, 1]),
    (psi[1, 4], psi[1, 2]),
    (psi[4, 3], psi[1, 4]),
    (psi[3, 2], psi[4, 3]),
    (psi[2, 1], psi[2, 3]),
    (psi[1, 2], psi[4, 1]),
)


def commutator_t_effect(c: Sequence[int], pair: tuple[Generator, Generator]) -> tuple[int, int]:
    c1, c2, c3, c4, c5, c6 = c
    effects = {
        COMMUTATOR_PAIRS[0]: (0, c1),
        COMMUTATOR_PAIRS[1]: (c2, -c2),
        COMMUTATOR_PAIRS[2]: (c3, 0),
        COMMUTATOR_PAIRS[3]: (0, c4),
        COMMUTATOR_PAIRS[4]: (-c5, c5),
        COMMUTATOR_PAIRS[5]: (c6, 0),
    }
    try:
        return effects[tuple(pair)]
    except KeyError:
        raise UsageError(f"{pair} is not one of the tabulated commutators") from None


def pair_commutator_effect(c: Sequence[int], g: Generator, h: Generator) -> tuple[int, int]:
    """t-translation of ``commutator_word(g, h)`` for any two generators."""
    dg, dh = generator_delta(c, g), generator_delta(c, h)
    out = [0, 0]
    out[dg.t_slot - 1] += dg.t_sign * dh.f_delta[dg.f_read_index - 1]
    out[dh.t_slot - 1] -= dh.t_sign * dg.f_delta[dh.f_read_index - 1]
    return tuple(out)


def _nontrivial_pairs() -> tuple[tuple[Generator, Generator], ...]:
    """Ordered pairs (g before h) whose commutator is not identically trivial."""
    units = [tuple(int(k == n) for k in range(6)) for n in range(6)]
    return tuple(
        (g, h) for g, h in itertools.combinations(GENERATORS, 2)
        if any(pair_commutator_effect(u, g, h) != (0, 0) for u in units))


NONTRIVIAL_PAIRS = _nontrivial_pairs()


@dataclass(frozen=True)
class Collected:
    """Normal form ``psi21^a1 ... psi14^a8`` followed by central commutators.

    ``commutators`` maps a pair ``(g, h)`` (``g`` earlier in the fixed order)
    to the power ``p`` of ``[g^p, h]``.
    """

    exponents: tuple[int, ...]
    commutators: tuple[tuple[tuple[Generator, Generator], int], ...]

    def word(self) -> MoveWord:
        w = MoveWord.from_exponents(self.exponents)
        for (g, h), p in self.commutators:
            w = w + commutator_word(g, h, p)
        return w


def _pack(a, coef) -> Collected:
    return Collected(
        tuple(a),
        tuple((pair, coef[pair]) for pair in NONTRIVIAL_PAIRS if coef.get(pair)))


def collect(w: MoveWord) -> Collected:
    """Rewrite ``w`` into collected normal form with the same action.

    Commutators act as central translations, so moving a letter ``x^n`` past
    a later letter ``y^m`` (``y`` earlier in the fixed order) costs exactly
    ``[y^(m*n), x]``.
    """
    seen = [0] * 8
    coef: dict = {}
    for g, e in w:
        gi = g.index
        for xi in range(gi + 1, 8):
            if seen[xi]:
                pair = (g, GENERATORS[xi])
                coef[pair] = coef.get(pair, 0) + e * seen[xi]
        seen[gi] += e
    return _pack(seen, coef)


def power_word(w: MoveWord, d: int) -> MoveWord:
    """A word acting as ``w`` repeated ``d`` times, of length independent of ``d``."""
    if d == 0:
        return MoveWord()
    if d < 0:
        w, d = invert_word(w), -d
    base = collect(w)
    a = base.exponents
    coef = {pair: d * p for pair, p in base.commutators}
    pairs = d * (d - 1) // 2
    if pairs:
        for (g, h) in NONTRIVIAL_PAIRS:
            # h^a_h from an earlier copy precedes g^a_g from a later copy
            extra = pairs * a[g.index] * a[h.index]
            if extra:
                coef[(g, h)] = coef.get((g, h), 0) + extra
    return _pack([d * x for x in a], coef).word()


def derived_generator_word(i: int, j: int) -> MoveWord:
    """``psi_ij`` for the pairs 31, 13, 42, 24 via ``psi_il^-1 = psi_jl psi_kl``."""
    if (i, j) in _TABLE:
        raise UsageError(f"psi_{i}{j} is already a table generator")
    try:
        a, b = _DERIVED[(i, j)]
    except KeyError:
        raise UsageError(f"no move psi_{i}{j}") from None
    return MoveWord([(psi[a], -1), (psi[b], -1)])


def generator_word(i: int, j: int, power: int = 1) -> MoveWord:
    """``psi_ij^power`` for any ordered pair of distinct components."""
    if power == 0:
        return MoveWord()
    if (i, j) in _TABLE:
        return MoveWord([(psi[i, j], power)])
    # derived generators are products of two commuting table generators
    return MoveWord((g, e * power) for g, e in derived_generator_word(i, j))


# --- Levine parameters -----------------------------------------------------

def levine_to_clasper(T: LevineForm) -> ClasperForm:
    e1, e2, e3, e4, e5, e6, e7, e8 = T.e
    return ClasperForm(
        (-T.l, -T.r, -T.k, -e1, -e2, -e3),
        (-e6, e5, -e4, T.d),
        (e7 + e8, -e7))


def normalize_f4_word(L: ClasperForm) -> MoveWord:
    """Word bringing ``f4`` into ``[0, gcd*(c1, c2, c3))`` via psi21, psi12, psi23."""
    c1, c2, c3 = L.c[:3]
    g, (x1, x2, x3) = xgcd((c1, c2, c3))
    if g == 0:
        return MoveWord()
    q = (L.f[3] - L.f[3] % g) // g
    # psi21 shifts f4 by -c1, psi12 by +c2, psi23 by +c3
    parts = [(psi[2, 1], q * x1), (psi[1, 2], -q * x2), (psi[2, 3], -q * x3)]
    return MoveWord((h, e) for h, e in parts if e)


def clasper_to_levine(L: ClasperForm) -> tuple[LevineForm, MoveWord]:
    w = normalize_f4_word(L)
    N = apply_word(L, w)
    c1, c2, c3, c4, c5, c6 = N.c
    f1, f2, f3, f4 = N.f
    t1, t2 = N.t
    T = LevineForm(
        k=-c3, l=-c1, r=-c2, d=f4,
        e=(-c4, -c5, -c6, -f3, f2, -f1, -t2, t1 + t2))
    return T, w


PHI_NAMES = ("Phi1", "Phi2", "Phi3", "Phi4", "Phi5", "Phi6")


def phi_move(T: LevineForm, which: str, params: tuple[int, int, int] = (0, 0, 0)) -> LevineForm:
    """Add one row of Levine's relation table to ``(e4, ..., e8)``."""
    k, l, r, d = T.k, T.l, T.r, T.d
    e1, e2, e3, e4, e5, e6, e7, e8 = T.e
    if which == "Phi1":
        row = (k, r, 0, d, -d)
    elif which == "Phi2":
        row = (-k, 0, l, -d, 0)
    elif which == "Phi3":
        row = (-e1, 0, e3, e5, 0)
    elif which == "Phi4":
        row = (e2, e3, 0, e6, -e6)
    elif which == "Phi5":
        row = (0, -e1, -e2, 0, e4)
    elif which == "Phi6":
        a, b, cc = params
        if a * k - b * r + cc * l != 0:
            raise ConstraintError(
                f"Phi6{params} needs a*k - b*r + c*l = 0, got {a * k - b * r + cc * l}")
        row = (cc * e2 - b * e1, -a * e1, 0, a * e4, -a * b * e1 - cc * e6 + b * e5)
    else:
        raise UsageError(f"unknown relation {which!r}")
    new_e = T.e[:3] + tuple(x + y for x, y in zip(T.e[3:], row))
    return LevineForm(k, l, r, d, new_e)


def phi_word(which: str, params: tuple[int, int, int] = (0, 0, 0)) -> MoveWord:
    """The psi word that realizes a Levine relation on standard forms."""
    if which == "Phi1":
        return MoveWord([(psi[1, 4], 1)])
    if which == "Phi2":
        return MoveWord([(psi[1, 4], -1), (psi[3, 4], -1)])
    if which == "Phi3":
        return MoveWord([(psi[3, 2], 1), (psi[1, 2], 1)])
    if which == "Phi4":
        return MoveWord([(psi[4, 1], -1)])
    if which == "Phi5":
        return MoveWord([(psi[4, 3], -1)])
    if which == "Phi6":
        a, b, cc = params
        w = power_word(MoveWord([(psi[2, 3], -1), (psi[4, 3], -1)]), a)
        if b:
            w = w + MoveWord([(psi[1, 2], b)])
        if cc:
            w = w + MoveWord([(psi[2, 1], cc)])
        return w
    raise UsageError(f"unknown relation {which!r}")


__all__ = [
    "Generator", "GENERATORS", "GeneratorDelta", "MoveWord", "Collected",
    "COMMUTATOR_PAIRS", "NONTRIVIAL_PAIRS", "PHI_NAMES", "psi",
    "generator_delta", "apply_generator", "apply_word", "invert_word",
    "commutator_word", "commutator_t_effect", "pair_commutator_effect",
    "collect", "power_word", "derived_generator_word", "generator_word",
    "levine_to_clasper", "clasper_to_levine", "normalize_f4_word",
    "phi_move", "phi_word",
]
