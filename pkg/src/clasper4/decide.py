"""Deciding link-homotopy of two standard forms, with certificates.

The procedure has three stages:

1. the ``c`` parts must agree (they are the linking numbers);
2. the ``f`` parts must differ by an integer combination of the columns of
   the move matrix, which yields a word ``w2``;
3. what is left in ``t`` must lie in the lattice of t-translations realized
   by words fixing ``f``: the six tabulated commutators plus one word per
   kernel vector of the move matrix.

Every positive verdict carries a word that is re-applied and checked before
it is returned.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import ClasperForm, UsageError
from .intlin import (
    IntMatrix,
    SNFResult,
    from_columns,
    kernel_basis,
    lattice_reduce,
    smith_normal_form,
    solve_diophantine,
)
from .moves import (
    GENERATORS,
    COMMUTATOR_PAIRS,
    MoveWord,
    _act,
    apply_word,
    commutator_t_effect,
    commutator_word,
    generator_delta,
    power_word,
)


class Stage(str, enum.Enum):
    C_MISMATCH = "C_MISMATCH"
    F_UNREACHABLE = "F_UNREACHABLE"
    T_UNREACHABLE = "T_UNREACHABLE"


class CertificateError(RuntimeError):
    """A certificate failed re-verification; this is a bug, never a verdict."""


@dataclass(frozen=True)
class Verdict:
    equivalent: bool
    certificate: Optional[MoveWord] = None
    failure_stage: Optional[Stage] = None

    def __bool__(self) -> bool:
        return self.equivalent


def build_move_matrix(c: Sequence[int]) -> IntMatrix:
    """4x8 matrix whose columns are the f-shifts of psi21, psi41, ..., psi14."""
    c = tuple(c)
    return from_columns([generator_delta(c, g).f_delta for g in GENERATORS], 4)


@functools.lru_cache(maxsize=4096)
def _move_snf(c: tuple[int, ...]) -> SNFResult:
    return smith_normal_form(build_move_matrix(c))


def _check_c(L1: ClasperForm, L2: ClasperForm) -> None:
    if L1.c != L2.c:
        raise UsageError(f"c parts differ: {L1.c} vs {L2.c}")


def step2_word(L1: ClasperForm, L2: ClasperForm) -> Optional[MoveWord]:
    """A word taking the f part of ``L1`` to that of ``L2``, if one exists."""
    _check_c(L1, L2)
    A = build_move_matrix(L1.c)
    sol = solve_diophantine(A, [b - a for a, b in zip(L1.f, L2.f)], _move_snf(L1.c))
    if sol is None:
        return None
    return MoveWord.from_exponents(sol.particular)


@functools.lru_cache(maxsize=4096)
def _kernel_vectors(c: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return kernel_basis(build_move_matrix(c), _move_snf(c))


def kernel_words(c: Sequence[int]) -> list[MoveWord]:
    """One f-fixing word per kernel basis vector, letters in the fixed order."""
    return [MoveWord.from_exponents(b) for b in _kernel_vectors(tuple(c))]


def word_t_effect(c: Sequence[int], f: Sequence[int], w: MoveWord) -> tuple[int, int]:
    """t-change of ``w`` applied at ``(c, f, t=0)``."""
    ff, t = tuple(f), (0, 0)
    for g, e in w:
        ff, t = _act(c, ff, t, (g.i, g.j), e)
    return tuple(t)


@dataclass(frozen=True)
class StabilizerBasis:
    commutator_columns: tuple[tuple[int, int], ...]
    kernel_word_columns: tuple[tuple[int, int], ...]
    commutator_pairs: tuple = COMMUTATOR_PAIRS
    kernel_word_list: tuple[MoveWord, ...] = ()

    def columns(self) -> list[tuple[int, int]]:
        return list(self.commutator_columns) + list(self.kernel_word_columns)

    def matrix(self) -> IntMatrix:
        return from_columns(self.columns(), 2)


def stabilizer_t_basis(c: Sequence[int], f: Sequence[int]) -> StabilizerBasis:
    c = tuple(c)
    words = tuple(kernel_words(c))
    return StabilizerBasis(
        commutator_columns=tuple(commutator_t_effect(c, p) for p in COMMUTATOR_PAIRS),
        kernel_word_columns=tuple(word_t_effect(c, f, w) for w in words),
        kernel_word_list=words,
    )


def decide_equiv(L1: ClasperForm, L2: ClasperForm) -> Verdict:
    if L1.c != L2.c:
        return Verdict(False, failure_stage=Stage.C_MISMATCH)
    w2 = step2_word(L1, L2)
    if w2 is None:
        return Verdict(False, failure_stage=Stage.F_UNREACHABLE)
    mid = apply_word(L1, w2)
    basis = stabilizer_t_basis(L2.c, L2.f)
    target = [b - a for a, b in zip(mid.t, L2.t)]
    sol = solve_diophantine(basis.matrix(), target)
    if sol is None:
        return Verdict(False, failure_stage=Stage.T_UNREACHABLE)
    coeffs = sol.particular
    n_comm = len(basis.commutator_columns)
    cert = w2
    for w, d in zip(basis.kernel_word_list, coeffs[n_comm:]):
        cert = cert + power_word(w, d)
    for (g, h), d in zip(basis.commutator_pairs, coeffs[:n_comm]):
        cert = cert + commutator_word(g, h, d)
    if apply_word(L1, cert) != L2:
        raise CertificateError(f"certificate does not map {L1} to {L2}")
    return Verdict(True, certificate=cert)


@dataclass(frozen=True)
class CanonicalForm:
    c: tuple[int, ...]
    f_star: tuple[int, ...]
    t_star: tuple[int, ...]

    def as_clasper(self) -> ClasperForm:
        return ClasperForm(self.c, self.f_star, self.t_star)


def canonical_form(L: ClasperForm) -> CanonicalForm:
    """A representative that is equal for two tuples iff they are equivalent."""
    A = build_move_matrix(L.c)
    cols = [tuple(A[r][j] for r in range(4)) for j in range(8)]
    f_star, _ = lattice_reduce(L.f, cols)
    sol = solve_diophantine(A, [b - a for a, b in zip(L.f, f_star)], _move_snf(L.c))
    moved = apply_word(L, MoveWord.from_exponents(sol.particular))
    if moved.f != f_star:
        raise CertificateError(f"f reduction of {L} did not reach {f_star}")
    t_star, _ = lattice_reduce(moved.t, stabilizer_t_basis(L.c, f_star).columns())
    return CanonicalForm(L.c, f_star, t_star)


__all__ = [
    "Stage", "Verdict", "CertificateError", "StabilizerBasis", "CanonicalForm",
    "build_move_matrix", "step2_word", "kernel_words", "word_t_effect",
    "stabilizer_t_basis", "decide_equiv", "canonical_form",
]
