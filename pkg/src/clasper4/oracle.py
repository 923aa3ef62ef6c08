"""Independent checks: seeded random instances, bounded orbit search and
certificate verification.

``bounded_bfs`` walks the orbit one signed generator at a time and never
touches the linear algebra used by :mod:`clasper4.decide`, so a word it finds
is an independent proof of equivalence. Not finding one proves nothing.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import ClasperForm, UsageError
from .invariants import FAMILIES, applicability
from .moves import GENERATORS, MoveWord, _act, apply_word


@dataclass(frozen=True)
class SearchConfig:
    max_depth: int = 6
    coord_bound: int = 32
    seed: int = 0

    def __post_init__(self):
        if self.max_depth < 1 or self.coord_bound < 1:
            raise UsageError("max_depth and coord_bound must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise UsageError("seed must fit in 64 bits")


@dataclass(frozen=True)
class InstanceProfile:
    """Bounds for :func:`random_instance`: absolute caps per field."""

    c_bound: int = 10
    f_bound: int = 10
    t_bound: int = 10
    max_word_length: int = 30
    max_power: int = 2


def random_word(rng: random.Random, length: int, max_power: int = 2) -> MoveWord:
    powers = [p for p in range(-max_power, max_power + 1) if p]
    return MoveWord((rng.choice(GENERATORS), rng.choice(powers)) for _ in range(length))


def _draw(rng: random.Random, profile: InstanceProfile) -> tuple[ClasperForm, MoveWord]:
    L = ClasperForm(
        [rng.randint(-profile.c_bound, profile.c_bound) for _ in range(6)],
        [rng.randint(-profile.f_bound, profile.f_bound) for _ in range(4)],
        [rng.randint(-profile.t_bound, profile.t_bound) for _ in range(2)])
    w = random_word(rng, rng.randint(0, profile.max_word_length), profile.max_power)
    return L, w


def random_instance(cfg: SearchConfig, profile: InstanceProfile = InstanceProfile()) -> tuple[ClasperForm, MoveWord]:
    """One tuple and one independently drawn word, determined by ``cfg.seed``."""
    return _draw(random.Random(cfg.seed), profile)


def random_instances(cfg: SearchConfig, profile: InstanceProfile = InstanceProfile(),
                     count: int = 1) -> Iterator[tuple[ClasperForm, MoveWord]]:
    """``count`` draws from the single stream seeded by ``cfg.seed``."""
    rng = random.Random(cfg.seed)
    for _ in range(count):
        yield _draw(rng, profile)


# --- samplers for the invariant families -----------------------------------

def _family_c(family: str, rng: random.Random, bound: int) -> list[int]:
    c = [rng.randint(-bound, bound) for _ in range(6)]
    zeros = {
        "T41-1": (1, 2, 3, 4, 5, 6), "T41-2": (1, 2, 3, 4, 5), "T41-3": (1, 2, 4, 5),
        "P43-1": (2, 4, 5, 6), "P43-2": (2, 4, 5, 6), "P43-3": (2, 5, 6),
        "P43-4": (3, 6), "P43-5": (5, 6),
    }.get(family, ())
    for i in zeros:
        c[i - 1] = 0
    if family == "P43-2":
        c[2] = c[0]
    return c


def family_instance(family: str, rng: random.Random, bound: int = 12,
                    tries: int = 10_000) -> ClasperForm:
    """A random tuple satisfying the hypotheses of ``family`` (rejection sampling)."""
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    for _ in range(tries):
        c = _family_c(family, rng, bound)
        f = [rng.randint(-bound, bound) for _ in range(4)]
        if family == "P43-1":
            f[0] = c[0] * rng.randint(-3, 3)
            f[2] = c[2] * rng.randint(-3, 3)
        L = ClasperForm(c, f, [rng.randint(-bound, bound) for _ in range(2)])
        if family in applicability(L):
            return L
    raise RuntimeError(f"could not sample {family} in {tries} tries")


def family_partner(family: str, L: ClasperForm, rng: random.Random,
                   bound: int = 12) -> ClasperForm:
    """A second tuple with the same ``c`` in the same family.

    Mixes orbit images (always equivalent), orbit images with one coordinate
    nudged, and independent draws; the caller decides which is which.
    """
    for _ in range(1000):
        mode = rng.random()
        moved = apply_word(L, random_word(rng, rng.randint(0, 8)))
        if mode < 0.4:
            L2 = moved
        elif mode < 0.8:
            f, t = list(moved.f), list(moved.t)
            k = rng.randrange(6)
            step = rng.choice([-2, -1, 1, 2, 3])
            if k < 4:
                f[k] += step
            else:
                t[k - 4] += step
            L2 = ClasperForm(L.c, f, t)
        else:
            other = family_instance(family, rng, bound)
            L2 = ClasperForm(L.c, other.f, other.t)
        if family in applicability(L2):
            return L2
    return L


# --- search and verification ------------------------------------------------

def verify_certificate(L1: ClasperForm, w: MoveWord, L2: ClasperForm) -> bool:
    return apply_word(L1, w) == L2


_STEPS = [((g.i, g.j), g, e) for g in GENERATORS for e in (1, -1)]


def bounded_bfs(L1: ClasperForm, L2: ClasperForm,
                cfg: SearchConfig = SearchConfig()) -> Optional[MoveWord]:
    """Shortest word of unit steps from ``L1`` to ``L2`` inside the bounds.

    States with any ``|f_i|`` or ``|t_i|`` above ``cfg.coord_bound`` are
    pruned. Ties are broken by the fixed generator order, positive step
    first, so the result is deterministic.
    """
    if L1.c != L2.c:
        return None
    c, bound = L1.c, cfg.coord_bound
    start, goal = (L1.f, L1.t), (L2.f, L2.t)
    if start == goal:
        return MoveWord()
    parent = {start: None}
    frontier = deque([(start, 0)])
    while frontier:
        state, depth = frontier.popleft()
        if depth >= cfg.max_depth:
            continue
        f, t = state
        for key, g, e in _STEPS:
            nf, nt = _act(c, f, t, key, e)
            if any(abs(x) > bound for x in nf) or any(abs(x) > bound for x in nt):
                continue
            nxt = (tuple(nf), tuple(nt))
            if nxt in parent:
                continue
            parent[nxt] = (state, g, e)
            if nxt == goal:
                return _unwind(parent, nxt)
            frontier.append((nxt, depth + 1))
    return None


def _unwind(parent, state) -> MoveWord:
    letters = []
    while parent[state] is not None:
        state, g, e = parent[state]
        letters.append((g, e))
    return MoveWord(reversed(letters))


__all__ = [
    "SearchConfig", "InstanceProfile", "random_word", "random_instance",
    "random_instances", "family_instance", "family_partner",
    "verify_certificate", "bounded_bfs",
]
