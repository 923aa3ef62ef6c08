"""Command-line interface.

Every command prints one JSON document on stdout (JSON lines in batch mode)
and diagnostics on stderr. Exit codes: 0 success / equivalent, 1 not
equivalent (``equiv``) or nothing found (``oracle``), 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Optional, Sequence, Union

from .core import ClasperForm, LevineForm, PreconditionError, Residue, UsageError
from .decide import canonical_form, decide_equiv
from .intlin import smith_normal_form
from .invariants import (
    FAMILIES,
    applicability,
    case_invariants,
    milnor_profile,
    sublink3,
)
from .moves import MoveWord, apply_word, clasper_to_levine, generator_word, levine_to_clasper
from .oracle import SearchConfig, bounded_bfs

SAFE_INT = 2 ** 53
_DECIMAL = re.compile(r"-?\d+\Z")


class InputError(ValueError):
    """A malformed document; ``path`` points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# --- documents ---------------------------------------------------------------

def to_json_int(x: int) -> Union[int, str]:
    return x if -SAFE_INT <= x <= SAFE_INT else str(x)


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool):
        raise InputError(path, "expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _DECIMAL.match(value.strip()):
        return int(value.strip())
    raise InputError(path, f"expected an integer or decimal string, got {value!r}")


def _int_list(doc: dict, key: str, n: int, path: str) -> list[int]:
    if key not in doc:
        raise InputError(f"{path}.{key}", "missing")
    value = doc[key]
    if not isinstance(value, list):
        raise InputError(f"{path}.{key}", "expected an array")
    if len(value) != n:
        raise InputError(f"{path}.{key}", f"{key} must have {n} entries, got {len(value)}")
    return [_int(v, f"{path}.{key}[{i}]") for i, v in enumerate(value)]


def _load(text: Union[str, bytes], path: str) -> Any:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(path, f"invalid JSON: {exc}") from None


def instance_from_doc(doc: Any, path: str = "$") -> Union[ClasperForm, LevineForm]:
    if not isinstance(doc, dict):
        raise InputError(path, "expected an object")
    if "label" in doc and not isinstance(doc["label"], str):
        raise InputError(f"{path}.label", "expected a string")
    form = doc.get("form")
    allowed = {"form", "label"}
    try:
        if form == "clasper":
            allowed |= {"c", "f", "t"}
            result = ClasperForm(_int_list(doc, "c", 6, path),
                                 _int_list(doc, "f", 4, path),
                                 _int_list(doc, "t", 2, path))
        elif form == "levine":
            allowed |= {"k", "l", "r", "d", "e"}
            for key in "klrd":
                if key not in doc:
                    raise InputError(f"{path}.{key}", "missing")
            result = LevineForm(*(_int(doc[k], f"{path}.{k}") for k in "klrd"),
                                e=_int_list(doc, "e", 8, path))
        else:
            raise InputError(f"{path}.form", f"expected 'clasper' or 'levine', got {form!r}")
    except UsageError as exc:
        raise InputError(path, str(exc)) from None
    extra = sorted(set(doc) - allowed)
    if extra:
        raise InputError(f"{path}.{extra[0]}", "unexpected field")
    return result


def parse_instance(text: Union[str, bytes]) -> Union[ClasperForm, LevineForm]:
    return instance_from_doc(_load(text, "$"))


def instance_to_doc(x: Union[ClasperForm, LevineForm], label: Optional[str] = None) -> dict:
    if isinstance(x, ClasperForm):
        doc = {"form": "clasper",
               "c": [to_json_int(v) for v in x.c],
               "f": [to_json_int(v) for v in x.f],
               "t": [to_json_int(v) for v in x.t]}
    else:
        doc = {"form": "levine", **{k: to_json_int(getattr(x, k)) for k in "klrd"},
               "e": [to_json_int(v) for v in x.e]}
    if label is not None:
        doc["label"] = label
    return doc


def word_from_doc(doc: Any, path: str = "$") -> MoveWord:
    if not isinstance(doc, list):
        raise InputError(path, "expected an array of moves")
    w = MoveWord()
    for n, item in enumerate(doc):
        p = f"{path}[{n}]"
        if not isinstance(item, dict):
            raise InputError(p, "expected an object")
        for key in ("i", "j", "power"):
            if key not in item:
                raise InputError(f"{p}.{key}", "missing")
        i, j, power = (_int(item[k], f"{p}.{k}") for k in ("i", "j", "power"))
        if not (1 <= i <= 4 and 1 <= j <= 4 and i != j):
            raise InputError(p, f"no move psi_{i}{j}")
        if power == 0:
            raise InputError(f"{p}.power", "power must be non-zero")
        w = w + generator_word(i, j, power)
    return w


def parse_word(text: Union[str, bytes]) -> MoveWord:
    return word_from_doc(_load(text, "$"))


def word_to_doc(w: MoveWord) -> list[dict]:
    return [{"i": g.i, "j": g.j, "power": to_json_int(e)} for g, e in w]


def residue_to_doc(r: Residue) -> dict:
    return {"value": to_json_int(r.value), "modulus": to_json_int(r.modulus)}


def _value_doc(v):
    return residue_to_doc(v) if isinstance(v, Residue) else to_json_int(v)


# --- commands ------------------------------------------------------------------

def _read_arg(arg: str) -> str:
    """An argument is inline JSON when it starts with '{' or '[', '-' for stdin, else a path."""
    s = arg.lstrip()
    if s.startswith(("{", "[")):
        return arg
    if arg == "-":
        return sys.stdin.read()
    try:
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(arg, f"cannot read: {exc.strerror}") from None


def _clasper(arg: str) -> ClasperForm:
    x = parse_instance(_read_arg(arg))
    return levine_to_clasper(x) if isinstance(x, LevineForm) else x


def equiv_doc(L1: ClasperForm, L2: ClasperForm) -> tuple[dict, int]:
    v = decide_equiv(L1, L2)
    if v.equivalent:
        return {"equivalent": True, "certificate": word_to_doc(v.certificate),
                "pretty": v.certificate.pretty()}, 0
    return {"equivalent": False, "stage": v.failure_stage.value}, 1


def _batch_line(line: str) -> dict:
    try:
        doc = _load(line, "$")
        if isinstance(doc, list) and len(doc) == 2:
            a, b = doc
            pa, pb = "$[0]", "$[1]"
        elif isinstance(doc, dict) and {"a", "b"} <= set(doc):
            a, b = doc["a"], doc["b"]
            pa, pb = "$.a", "$.b"
        else:
            raise InputError("$", "expected {\"a\": ..., \"b\": ...} or a two-element array")
        xs = [instance_from_doc(a, pa), instance_from_doc(b, pb)]
        L1, L2 = (levine_to_clasper(x) if isinstance(x, LevineForm) else x for x in xs)
        return equiv_doc(L1, L2)[0]
    except InputError as exc:
        return {"error": str(exc)}


def _cmd_equiv(args) -> tuple[Any, int]:
    if args.jsonl:
        if args.a or args.b:
            raise InputError("argv", "--jsonl takes no positional instances")
        return None, _run_batch(args)
    if not (args.a and args.b):
        raise InputError("argv", "equiv needs two instances (or --jsonl FILE)")
    return equiv_doc(_clasper(args.a), _clasper(args.b))


def _run_batch(args) -> int:
    text = _read_arg(args.jsonl)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_line, lines, chunksize=16))
    else:
        results = [_batch_line(ln) for ln in lines]
    failed = False
    for res in results:
        failed = failed or "error" in res
        print(json.dumps(res))
    return 2 if failed else 0


def _cmd_apply(args):
    L = _clasper(args.instance)
    w = parse_word(_read_arg(args.word))
    return instance_to_doc(apply_word(L, w)), 0


def _cmd_canon(args):
    cf = canonical_form(_clasper(args.instance))
    return instance_to_doc(cf.as_clasper()), 0


def _cmd_invariants(args):
    L = _clasper(args.instance)
    fams = applicability(L)
    if args.family:
        if args.family not in FAMILIES:
            raise InputError("--family", f"unknown family {args.family!r}")
        report = case_invariants(L, args.family)
        return {"family": args.family,
                "values": {k: _value_doc(v) for k, v in report.values}}, 0
    reports = {fam: {k: _value_doc(v) for k, v in case_invariants(L, fam).values}
               for fam in fams}
    return {"applicable": fams, "reports": reports}, 0


def _cmd_milnor(args):
    p = milnor_profile(_clasper(args.instance))
    return {k: _value_doc(v) for k, v in p.as_dict().items()}, 0


def _cmd_convert(args):
    x = parse_instance(_read_arg(args.instance))
    if args.to == "clasper":
        out = levine_to_clasper(x) if isinstance(x, LevineForm) else x
        return instance_to_doc(out), 0
    if isinstance(x, LevineForm):
        return instance_to_doc(x), 0
    T, w = clasper_to_levine(x)
    doc = instance_to_doc(T)
    doc["word"] = word_to_doc(w)
    return doc, 0


def _cmd_sublink(args):
    tf = sublink3(_clasper(args.instance), args.drop)
    return {"labels": list(tf.labels),
            "linking": [to_json_int(v) for v in tf.linking],
            "triple": residue_to_doc(tf.triple)}, 0


def _cmd_oracle(args):
    cfg = SearchConfig(max_depth=args.depth, coord_bound=args.bound)
    w = bounded_bfs(_clasper(args.a), _clasper(args.b), cfg)
    if w is None:
        return {"found": False}, 1
    return {"found": True, "word": word_to_doc(w), "pretty": w.pretty()}, 0


def _cmd_snf(args):
    doc = _load(_read_arg(args.matrix), "$")
    if not isinstance(doc, list) or not all(isinstance(r, list) for r in doc):
        raise InputError("$", "expected an array of rows")
    rows = [[_int(v, f"$[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(doc)]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InputError("$", "rows have different lengths")
    res = smith_normal_form(rows)
    mat = lambda M: [[to_json_int(v) for v in r] for r in M]
    return {"P": mat(res.P), "Q": mat(res.Q), "D": mat(res.D),
            "divisors": [to_json_int(d) for d in res.divisors]}, 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clasper4",
                description="Link-homotopy of 4-component links in clasper standard form.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("equiv", help="decide equivalence, print a certificate")
    s.add_argument("a", nargs="?")
    s.add_argument("b", nargs="?")
    s.add_argument("--jsonl", metavar="FILE", help="one instance pair per line")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for --jsonl")
    s.set_defaults(func=_cmd_equiv)

    s = sub.add_parser("apply", help="apply a move word")
    s.add_argument("instance")
    s.add_argument("--word", required=True)
    s.set_defaults(func=_cmd_apply)

    s = sub.add_parser("canon", help="canonical representative of the class")
    s.add_argument("instance")
    s.set_defaults(func=_cmd_canon)

    s = sub.add_parser("invariants", help="complete invariant families")
    s.add_argument("instance")
    s.add_argument("--family", choices=None)
    s.set_defaults(func=_cmd_invariants)

    s = sub.add_parser("milnor", help="Milnor homotopy invariants")
    s.add_argument("instance")
    s.set_defaults(func=_cmd_milnor)

    s = sub.add_parser("convert", help="convert between clasper and Levine forms")
    s.add_argument("instance")
    s.add_argument("--to", choices=("clasper", "levine"), required=True)
    s.set_defaults(func=_cmd_convert)

    s = sub.add_parser("sublink", help="3-component sublink class")
    s.add_argument("instance")
    s.add_argument("--drop", type=int, required=True, choices=(1, 2, 3, 4))
    s.set_defaults(func=_cmd_sublink)

    s = sub.add_parser("oracle", help="bounded breadth-first search for a word")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--depth", type=int, default=6)
    s.add_argument("--bound", type=int, default=32)
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=_cmd_snf)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.func(args)
    except (InputError, UsageError, PreconditionError) as exc:
        print(f"clasper4 {args.command}: {exc}", file=sys.stderr)
        return 2
    if doc is not None:
        print(json.dumps(doc))
    return code


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:
        code = exc.code
    sys.exit(code)


if __name__ == "__main__":
    main()
