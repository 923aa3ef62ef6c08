"""Acceptance criteria 1-10, exact (zero tolerance).

Each test prints one ``criterion N: PASS|FAIL - detail`` line. Run directly
(``python3 tests/test_acceptance.py``) for just the summary lines.
"""
import math
import random
import sys
import time

import pytest

from clasper4.core import ClasperForm, LevineForm
from clasper4.decide import (
    Stage, build_move_matrix, canonical_form, decide_equiv, kernel_words,
    stabilizer_t_basis, word_t_effect,
)
from clasper4.intlin import from_columns, hermite_normal_form, lattice_reduce, matvec, smith_normal_form
from clasper4.invariants import FAMILIES, applicability, case_invariants, milnor_profile, sublink3
from clasper4.moves import (
    PHI_NAMES, COMMUTATOR_PAIRS, MoveWord, apply_word, commutator_t_effect,
    commutator_word, levine_to_clasper, phi_move, phi_word, psi,
)
from clasper4.oracle import (
    InstanceProfile, SearchConfig, bounded_bfs, family_instance, family_partner,
    random_instances, random_word, verify_certificate,
)

C = (1, 2, 2, 4, 2, 2)
L1 = ClasperForm(C, (0, 0, 0, 0), (0, 0))
L2 = ClasperForm(C, (-2, 0, 2, 1), (1, 1))
L3 = ClasperForm(C, (-2, 0, 2, 1), (2, 0))
H1 = ClasperForm((-1, -4, -4, -1, -1, -1), (1, 4, 4, 16), (0, 0))
H2 = ClasperForm((-1, -4, -4, -1, -1, -1), (1, 8, 4, 16), (0, 0))
REFERENCE_KERNEL = [(-2, -2, 0, 1, 0, 0, 2, 0), (0, 0, 0, 0, 1, 0, 2, 0),
                (2, 2, 0, 0, 0, 1, -2, 0), (2, 0, 1, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 0, 1)]
PRINTED_T_EFFECTS = [(0, 4), (0, 0), (0, 0), (0, 0), (0, 0)]
SWEEP = dict(cfg=SearchConfig(seed=20240607),
             profile=InstanceProfile(c_bound=10, f_bound=10, t_bound=10, max_word_length=30))


def criterion_1():
    v = decide_equiv(L1, L2)
    return (not v.equivalent and v.failure_stage is Stage.T_UNREACHABLE,
            f"verdict={v.equivalent} stage={v.failure_stage}")


def criterion_2():
    A = build_move_matrix(C)
    matrix_ok = A == ((0, 0, 0, 2, 2, -2, -1, 0), (0, 2, 0, 0, -4, 0, 2, -2),
                      (2, -2, -4, 0, 0, 0, 0, 2), (-1, 0, 2, -2, 0, 2, 0, 0))
    snf = smith_normal_form(A)
    snf_ok = snf.divisors == (1, 1, 2) and snf.D[3] == (0,) * 8
    ours = from_columns([w.exponent_sum() for w in kernel_words(C)], 8)
    theirs = from_columns(REFERENCE_KERNEL, 8)
    kernel_ok = (all(not any(matvec(A, h)) for h in REFERENCE_KERNEL)
                 and hermite_normal_form(ours)[0] == hermite_normal_form(theirs)[0])
    moved = apply_word(L1, MoveWord([(psi[2, 1], 1), (psi[2, 3], 1)]))
    word_ok = moved == ClasperForm(C, (-2, 0, 2, 1), (0, -2))
    return (matrix_ok and snf_ok and kernel_ok and word_ok,
            f"matrix={matrix_ok} divisors={snf.divisors} kernel={kernel_ok} word={word_ok}")


def criterion_3():
    v = decide_equiv(L1, L3)
    ours = v.equivalent and verify_certificate(L1, v.certificate, L3)
    w = (MoveWord([(psi[2, 1], 1), (psi[2, 3], 1)])
         + commutator_word(psi[4, 3], psi[1, 4]) + commutator_word(psi[1, 4], psi[2, 1], 2))
    explicit = verify_certificate(L1, w, L3)
    cert = v.certificate.pretty() if v.certificate is not None else None
    return ours and explicit, f"certificate={cert!r} explicit_witness={explicit}"


def criterion_4():
    rng = random.Random(4)
    bad = 0
    for _ in range(100):
        L = ClasperForm([rng.randint(-20, 20) for _ in range(6)],
                        [rng.randint(-20, 20) for _ in range(4)],
                        [rng.randint(-20, 20) for _ in range(2)])
        for pair in COMMUTATOR_PAIRS:
            out = apply_word(L, commutator_word(*pair))
            dt = commutator_t_effect(L.c, pair)
            if out.c != L.c or out.f != L.f or out.t != (L.t[0] + dt[0], L.t[1] + dt[1]):
                bad += 1
    return bad == 0, f"600 commutator applications, {bad} mismatches"


def criterion_5():
    f = (-2, 0, 2, 1)
    comm = [commutator_t_effect(C, p) for p in COMMUTATOR_PAIRS]
    effects = [word_t_effect(C, f, MoveWord.from_exponents(h)) for h in REFERENCE_KERNEL]
    congruent = all(lattice_reduce((e[0] - p[0], e[1] - p[1]), comm)[1] and (e[0] - p[0]) % 2 == 0
                    for e, p in zip(effects, PRINTED_T_EFFECTS))
    lattice_is_x_even = (lattice_reduce((2, 0), comm)[1] and lattice_reduce((0, 1), comm)[1]
                         and not lattice_reduce((1, 0), comm)[1])
    excluded = not lattice_reduce((1, 3), stabilizer_t_basis(C, f).columns())[1]
    return (congruent and lattice_is_x_even and excluded,
            f"effects={effects} congruent={congruent} (1,3) excluded={excluded}")


def criterion_6():
    same = milnor_profile(H1) == milnor_profile(H2)
    fam = "T41-4" in applicability(H1) and "T41-4" in applicability(H2)
    th1 = case_invariants(H1, "T41-4").as_dict()["theta"]
    th2 = case_invariants(H2, "T41-4").as_dict()["theta"]
    diff = (th1.value - th2.value) % 3
    v = decide_equiv(H1, H2)
    ok = (same and fam and th1.modulus == th2.modulus == 3 and diff in (1, 2)
          and v.failure_stage is Stage.F_UNREACHABLE)
    return ok, f"profiles equal={same} theta={th1},{th2} stage={v.failure_stage}"


def _sweep_pairs():
    for L, w in random_instances(SWEEP["cfg"], SWEEP["profile"], count=10_000):
        yield L, apply_word(L, w)


def criterion_7():
    start = time.perf_counter()
    bad = 0
    for L, M in _sweep_pairs():
        v = decide_equiv(L, M)
        if not (v.equivalent and verify_certificate(L, v.certificate, M)):
            bad += 1
    return bad == 0, f"10000 pairs, {bad} failures, {time.perf_counter() - start:.1f}s"


def criterion_8():
    rng = random.Random(8)
    cfg = SearchConfig(max_depth=3, coord_bound=12)
    found = bad = 0
    for _ in range(100):
        L = ClasperForm([rng.randint(-3, 3) for _ in range(6)],
                        [rng.randint(-4, 4) for _ in range(4)],
                        [rng.randint(-4, 4) for _ in range(2)])
        M = apply_word(L, random_word(rng, rng.randint(1, 3), max_power=1))
        w = bounded_bfs(L, M, cfg)
        if w is not None:
            found += 1
            if not (verify_certificate(L, w, M) and decide_equiv(L, M).equivalent):
                bad += 1
    return bad == 0 and found > 0, f"100 pairs, {found} witnesses, {bad} disagreements"


def criterion_9():
    rng = random.Random(9)
    bad, summary = 0, []
    for family in FAMILIES:
        eq = neq = 0
        for _ in range(500):
            L = family_instance(family, rng)
            M = family_partner(family, L, rng)
            same = case_invariants(L, family) == case_invariants(M, family)
            decided = decide_equiv(L, M).equivalent
            bad += same != decided
            eq += decided
            neq += not decided
        summary.append(f"{family}:{eq}/{neq}")
    return bad == 0, f"{bad} disagreements; equivalent/inequivalent " + " ".join(summary)


def _phi6_params(T, rng):
    a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    if T.l and (b * T.r - a * T.k) % T.l == 0:
        return a, b, (b * T.r - a * T.k) // T.l
    return T.r, T.k, 0


def _random_levine(rng):
    k, l, r = (rng.randint(-8, 8) for _ in range(3))
    g = math.gcd(k, l, r)
    d = rng.randrange(g) if g else rng.randint(-8, 8)
    return LevineForm(k, l, r, d, tuple(rng.randint(-8, 8) for _ in range(8)))


def criterion_10():
    rng = random.Random(10)
    phi_bad = 0
    for which in PHI_NAMES:
        for _ in range(200):
            T = _random_levine(rng)
            params = _phi6_params(T, rng) if which == "Phi6" else (0, 0, 0)
            a, b = levine_to_clasper(T), levine_to_clasper(phi_move(T, which, params))
            if apply_word(a, phi_word(which, params)) != b or not decide_equiv(a, b).equivalent:
                phi_bad += 1
    canon_bad = 0
    for L, w in random_instances(SearchConfig(seed=1010), count=1000):
        if canonical_form(L) != canonical_form(apply_word(L, w)):
            canon_bad += 1
    sub_bad = 0
    for L, M in _sweep_pairs():
        if any(sublink3(L, d) != sublink3(M, d) for d in (1, 2, 3, 4)):
            sub_bad += 1
    return (phi_bad == canon_bad == sub_bad == 0,
            f"phi mismatches={phi_bad}/1200 canonical={canon_bad}/1000 sublink={sub_bad}/10000")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _report(n, ok, detail):
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _report(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, *crit()) for n, crit in enumerate(CRITERIA, 1)]
    for n, ok, detail in results:
        print(_report(n, ok, detail))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
