"""Milnor invariants, 2-/3-component sublinks and complete invariant families.

The ten families are named ``T41-1`` .. ``T41-5`` (Levine's subsets, written
in clasper coordinates) and ``P43-1`` .. ``P43-5`` (subsets classified by
clasp counts). A family's report is only defined when its hypotheses hold;
two tuples in the same family are link-homotopic exactly when their reports
agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .core import (
    ClasperForm,
    PreconditionError,
    Residue,
    UsageError,
    gcd_sub,
    residue,
    xgcd,
)
from .intlin import kernel_basis

Value = Union[int, Residue]


@dataclass(frozen=True)
class MilnorProfile:
    """Milnor homotopy invariants of length 2, 3 and 4, keyed by sequence."""

    linking: tuple[tuple[str, int], ...]
    triple: tuple[tuple[str, Residue], ...]
    quadruple: tuple[tuple[str, Residue], ...]

    def __getitem__(self, seq: str) -> Value:
        for table in (self.linking, self.triple, self.quadruple):
            for k, v in table:
                if k == seq:
                    return v
        raise KeyError(seq)

    def as_dict(self) -> dict[str, Value]:
        return dict(self.linking + self.triple + self.quadruple)


def milnor_profile(L: ClasperForm) -> MilnorProfile:
    c1, c2, c3, c4, c5, c6 = L.c
    f1, f2, f3, f4 = L.f
    t1, t2 = L.t
    linking = (("12", -c3), ("13", -c2), ("23", -c1),
               ("14", -c4), ("24", -c5), ("34", -c6))
    triple = (
        ("123", residue(f4, gcd_sub((c1, c2, c3)))),
        ("124", residue(-f3, gcd_sub((c3, c4, c5)))),
        ("134", residue(f2, gcd_sub((c2, c4, c6)))),
        ("234", residue(-f1, gcd_sub((c1, c5, c6)))),
    )
    # gcd over every lower-order invariant; a class r + mZ contributes gcd(r, m)
    delta4 = gcd_sub([v for _, v in linking] + [r.class_gcd() for _, r in triple])
    quadruple = (("3124", residue(-t2, delta4)), ("2134", residue(t1 + t2, delta4)))
    return MilnorProfile(linking, triple, quadruple)


@dataclass(frozen=True)
class TripleForm:
    """Link-homotopy class of a 3-component (sub)link.

    ``linking`` lists the linking numbers of the pairs ``(ab, ac, bc)`` for
    ``labels == (a, b, c)``; ``triple`` is the length-3 invariant.
    """

    labels: tuple[int, int, int]
    linking: tuple[int, int, int]
    triple: Residue


_DROP = {
    4: ((1, 2, 3), ("12", "13", "23"), "123"),
    3: ((1, 2, 4), ("12", "14", "24"), "124"),
    2: ((1, 3, 4), ("13", "14", "34"), "134"),
    1: ((2, 3, 4), ("23", "24", "34"), "234"),
}


def sublink3(L: ClasperForm, drop: int) -> TripleForm:
    """The 3-component sublink obtained by forgetting component ``drop``."""
    if drop not in _DROP:
        raise UsageError(f"drop must be 1..4, got {drop}")
    labels, pairs, seq = _DROP[drop]
    p = milnor_profile(L)
    return TripleForm(labels, tuple(p[s] for s in pairs), p[seq])


def classify2(c: int) -> int:
    """A 2-component standard form is determined by its clasp count; returns the linking number."""
    return -c


def classify3(c12: int, c13: int, c23: int, f: int) -> TripleForm:
    """Unique standard form of a 3-component link with clasp counts and C2 count ``f``."""
    return TripleForm((1, 2, 3), (-c12, -c13, -c23),
                      residue(f, gcd_sub((c12, c13, c23))))


# --- complete invariant families ------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    family: str
    values: tuple[tuple[str, Value], ...]

    def as_dict(self) -> dict[str, Value]:
        return dict(self.values)


def _coprime(*xs: int) -> bool:
    return all(math.gcd(a, b) == 1 for i, a in enumerate(xs) for b in xs[i + 1:])


def _divides(m: int, x: int) -> bool:
    return x == 0 if m == 0 else x % m == 0


def _zero(*xs: int) -> bool:
    return all(x == 0 for x in xs)


def _hypotheses(L: ClasperForm) -> dict[str, list[tuple[str, Callable[[], bool]]]]:
    c1, c2, c3, c4, c5, c6 = L.c
    f1, f2, f3, f4 = L.f
    return {
        "T41-1": [("c1 = ... = c6 = 0", lambda: _zero(*L.c))],
        "T41-2": [("c1 = c2 = c3 = c4 = c5 = 0", lambda: _zero(c1, c2, c3, c4, c5)),
                  ("c6 != 0", lambda: c6 != 0)],
        "T41-3": [("c1 = c2 = c4 = c5 = 0", lambda: _zero(c1, c2, c4, c5)),
                  ("c3 != 0 and c6 != 0", lambda: c3 != 0 and c6 != 0)],
        "T41-4": [("c4, c5, c6 pairwise coprime", lambda: _coprime(c4, c5, c6))],
        "T41-5": [("c1, c2, c3 pairwise coprime", lambda: _coprime(c1, c2, c3))],
        "P43-1": [("c2 = c4 = c5 = c6 = 0", lambda: _zero(c2, c4, c5, c6)),
                  ("c1 != 0 and c3 != 0", lambda: c1 != 0 and c3 != 0),
                  ("f1 = 0 mod c1", lambda: _divides(c1, f1)),
                  ("f3 = 0 mod c3", lambda: _divides(c3, f3))],
        "P43-2": [("c2 = c4 = c5 = c6 = 0", lambda: _zero(c2, c4, c5, c6)),
                  ("c1 = c3 != 0", lambda: c1 == c3 != 0),
                  ("f1 = 0 mod gcd(c1, f2, f3)", lambda: _divides(gcd_sub((c1, f2, f3)), f1)),
                  ("f3 = 0 mod gcd(c1, f1, f2)", lambda: _divides(gcd_sub((c1, f1, f2)), f3))],
        "P43-3": [("c2 = c5 = c6 = 0", lambda: _zero(c2, c5, c6)),
                  ("c1, c3, c4 != 0", lambda: c1 * c3 * c4 != 0),
                  ("gcd(c1, c3) = gcd(c3, c4) = 1", lambda: _coprime(c1, c3) and _coprime(c3, c4))],
        "P43-4": [("c3 = c6 = 0", lambda: _zero(c3, c6)),
                  ("c1, c2, c4, c5 != 0", lambda: c1 * c2 * c4 * c5 != 0),
                  ("gcd(c1, c4) = gcd(c2, c5) = 1", lambda: _coprime(c1, c4) and _coprime(c2, c5))],
        "P43-5": [("c5 = c6 = 0", lambda: _zero(c5, c6)),
                  ("c1, c2, c3, c4 != 0", lambda: c1 * c2 * c3 * c4 != 0),
                  ("gcd(c2, c3) = gcd(c2, c4) = 1 and (gcd(c1, c4) = 1 or gcd(c1, c3) = 1)",
                   lambda: _coprime(c2, c3) and _coprime(c2, c4)
                   and (_coprime(c1, c4) or _coprime(c1, c3)))],
    }


FAMILIES = ("T41-1", "T41-2", "T41-3", "T41-4", "T41-5",
            "P43-1", "P43-2", "P43-3", "P43-4", "P43-5")


def applicability(L: ClasperForm) -> list[str]:
    hyps = _hypotheses(L)
    return [fam for fam in FAMILIES if all(ok() for _, ok in hyps[fam])]


def _theta(L: ClasperForm) -> Residue:
    c1, c2, c3, c4, c5, c6 = L.c
    f1, f2, f3, f4 = L.f
    g, (x1, x2, x3) = xgcd((c1, c2, c3))
    q = (f4 - f4 % g) // g if g else 0
    alpha, beta, gamma = q * x1, q * x2, q * x3
    ker = kernel_basis(((c1, c2, c3),))
    modulus = gcd_sub([c1 * c4 - c2 * c5, c1 * c4 - c3 * c6]
                      + [a * c5 * c6 + b * c4 * c6 + c * c4 * c5 for a, b, c in ker])
    value = (c4 * f1 + c5 * f2 + c6 * f3
             + alpha * c5 * c6 + beta * c4 * c6 + gamma * c4 * c5)
    return residue(value, modulus)


def case_invariants(L: ClasperForm, family: str) -> InvariantReport:
    hyps = _hypotheses(L)
    if family not in hyps:
        raise UsageError(f"unknown family {family!r}")
    for text, ok in hyps[family]:
        if not ok():
            raise PreconditionError(f"{family} does not apply: {text} fails for {L}")
    c1, c2, c3, c4, c5, c6 = L.c
    f1, f2, f3, f4 = L.f
    t1, t2 = L.t
    g = gcd_sub

    if family == "T41-1":
        m = g(L.f)
        vals = [("f1", f1), ("f2", f2), ("f3", f3), ("f4", f4),
                ("t1", residue(t1, m)), ("t2", residue(t2, m))]
    elif family == "T41-2":
        vals = [("c6", c6), ("f1", residue(f1, c6)), ("f2", residue(f2, c6)),
                ("f3", f3), ("f4", f4),
                ("t1", residue(t1, g((c6, f1, f2, f3, f4)))),
                ("Delta", residue(f1 * f2 + c6 * t2, c6 * g((f3, f4))))]
    elif family == "T41-3":
        vals = [("c3", c3), ("c6", c6),
                ("f1", residue(f1, c6)), ("f2", residue(f2, c6)),
                ("f3", residue(f3, c3)), ("f4", residue(f4, c3)),
                ("t1", residue(t1, g((c3, c6, f1, f2, f3, f4)))),
                ("Delta'", c3 * c6 * t2 + c3 * f1 * f2 + c6 * f3 * f4)]
    elif family == "T41-4":
        vals = [(f"c{n + 1}", x) for n, x in enumerate(L.c)]
        vals += [("f4", residue(f4, g((c1, c2, c3)))), ("theta", _theta(L))]
    elif family == "T41-5":
        vals = [(f"c{n + 1}", x) for n, x in enumerate(L.c)]
        vals += [("theta'", residue(c1 * c2 * f3 + c1 * c3 * f2 + c2 * c3 * f1 + c2 * c5 * f4,
                                    g((c1 * c4 - c2 * c5, c1 * c4 - c3 * c6))))]
    elif family == "P43-1":
        vals = [("c1", c1), ("c3", c3), ("f2", f2),
                ("f4", residue(f4, g((c1, c3)))),
                ("Delta1", residue(c1 * t1 + f1 * f4, c1 * g((c3, f2)))),
                ("Delta2", residue(c3 * t2 + f3 * f4, c3 * g((c1, f2))))]
    elif family == "P43-2":
        m = c1 * g((c1, f1, f2, f3))
        vals = [("c1", c1), ("f1", residue(f1, c1)), ("f3", residue(f3, c1)),
                ("f2", f2), ("f4", residue(f4, c1)),
                ("Delta1", residue(c1 * t1 + f1 * f4, m)),
                ("Delta2", residue(c1 * t2 + f3 * f4, m))]
    elif family == "P43-3":
        vals = [("c1", c1), ("c3", c3), ("c4", c4),
                ("f1", residue(f1, c1)), ("f2", residue(f2, c4)),
                ("Delta2", residue(c3 * t2 + f3 * f4, g((c1, c4, c3 * f1, c3 * f2)))),
                ("Delta3", residue(c1 * c4 * t1 + c4 * f1 * f4 + c1 * f2 * f3, c3))]
    elif family == "P43-4":
        vals = [("c1", c1), ("c2", c2), ("c4", c4), ("c5", c5),
                ("f1", residue(f1, g((c1, c5)))), ("f2", residue(f2, g((c2, c4)))),
                ("f3", residue(f3, g((c4, c5)))), ("f4", residue(f4, g((c1, c2))))]
    else:  # P43-5
        vals = [("c1", c1), ("c2", c2), ("c3", c3), ("c4", c4),
                ("f1", residue(f1, c1)),
                ("Delta4", residue(c1 * c2 * f3 + c1 * c3 * f2 + c2 * c3 * f1, c1 * c4))]
    return InvariantReport(family, tuple(vals))


__all__ = [
    "MilnorProfile", "TripleForm", "InvariantReport", "FAMILIES",
    "milnor_profile", "sublink3", "classify2", "classify3",
    "applicability", "case_invariants",
]
