"""Command-line front end.

    intcayley VERB --group m1,m2,... [verb arguments] [--format json|tsv]

Elements are written ``(a,b,c)`` in the coordinates of the given moduli, or
as a bare integer when the group has a single modulus.  Sets are
semicolon-separated elements.  Exit codes: 0 success, 1 non-integral
verdict, 2 usage or input error, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional

from intcayley.characters import alpha_bar, perp_set
from intcayley.cyclotomic import NotInteger
from intcayley.divisors import class_representatives, equiv_class, mu_pair, phi_pair
from intcayley.errors import (
    CayleyError,
    InvariantViolation,
    NonIntegralError,
)
from intcayley.group import GroupSpec, canonicalize, make_group, order_of
from intcayley.spectra import (
    BRUTE,
    CLOSED,
    INTERMEDIATE,
    SpectrumReport,
    c_bruteforce,
    c_closed,
    c_intermediate,
    decompose_connection_set,
    ramanujan,
    spectrum,
    verify_eigenrelation,
)

VERBS = ("classes", "mu-table", "perp", "c-value", "ramanujan", "check-integral", "spectrum", "verify")
METHOD_TAGS = {"closed": CLOSED, "intermediate": INTERMEDIATE, "brute": BRUTE}

EXIT_OK, EXIT_NONINTEGRAL, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

_INT = r"\s*[+-]?\d+\s*"
_TUPLE_RE = re.compile(rf"^\(({_INT}(?:,{_INT})*)\)$")
_BARE_RE = re.compile(rf"^{_INT}$")


class UsageError(Exception):
    pass


@dataclass
class Command:
    verb: str
    group_moduli: list[int]
    element: Optional[tuple[int, ...]] = None
    alpha: Optional[tuple[int, ...]] = None
    x: Optional[tuple[int, ...]] = None
    set: Optional[list[tuple[int, ...]]] = None
    classes: Optional[list[tuple[int, ...]]] = None
    lam: Optional[int] = None
    fmt: str = "json"
    allow_loops: bool = False
    method: str = "closed"
    output: Optional[str] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> _Parser:
    p = _Parser(prog="intcayley", description="Exact spectra of integral Cayley graphs.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--group", required=True, help="comma-separated cyclic moduli")
    p.add_argument("--element")
    p.add_argument("--alpha")
    p.add_argument("--x")
    p.add_argument("--set", dest="set_")
    p.add_argument("--classes")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--format", dest="fmt", choices=("json", "tsv"), default="json")
    p.add_argument("--allow-loops", action="store_true")
    p.add_argument("--method", choices=tuple(METHOD_TAGS), default="closed")
    p.add_argument("--output")
    return p


def _parse_moduli(text: str) -> list[int]:
    try:
        moduli = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed --group {text!r}") from None
    return moduli


def parse_element(text: str, arity: int) -> tuple[int, ...]:
    text = text.strip()
    m = _TUPLE_RE.match(text)
    if m:
        coords = tuple(int(t) for t in m.group(1).split(","))
    elif _BARE_RE.match(text):
        if arity != 1:
            raise UsageError(f"bare integer {text!r} needs a single-modulus group")
        coords = (int(text),)
    else:
        raise UsageError(f"malformed element {text!r}")
    if len(coords) != arity:
        raise UsageError(f"element {text!r} has {len(coords)} coordinates, expected {arity}")
    return coords


def parse_set(text: str, arity: int) -> list[tuple[int, ...]]:
    return [parse_element(t, arity) for t in text.split(";") if t.strip()]


def parse_invocation(argv: list[str]) -> Command:
    ns = _parser().parse_args(argv)
    moduli = _parse_moduli(ns.group)
    arity = len(moduli)
    cmd = Command(
        verb=ns.verb,
        group_moduli=moduli,
        element=parse_element(ns.element, arity) if ns.element is not None else None,
        alpha=parse_element(ns.alpha, arity) if ns.alpha is not None else None,
        x=parse_element(ns.x, arity) if ns.x is not None else None,
        set=parse_set(ns.set_, arity) if ns.set_ is not None else None,
        classes=parse_set(ns.classes, arity) if ns.classes is not None else None,
        fmt=ns.fmt,
        allow_loops=ns.allow_loops,
        method=ns.method,
        output=ns.output,
    )
    if ns.lam is not None:
        try:
            cmd.lam = int(ns.lam)
        except ValueError:
            raise UsageError(f"--lambda must be an integer, got {ns.lam!r}") from None
    _require(cmd)
    return cmd


def _require(cmd: Command) -> None:
    need = {
        "classes": ["element"],
        "mu-table": ["element"],
        "c-value": ["alpha", "x"],
        "ramanujan": ["alpha"],
        "verify": ["alpha", "lam"],
    }.get(cmd.verb, [])
    for name in need:
        if getattr(cmd, name) is None:
            flag = "--lambda" if name == "lam" else f"--{name}"
            raise UsageError(f"{cmd.verb} requires {flag}")
    if cmd.verb in ("perp", "check-integral", "spectrum", "verify"):
        if cmd.set is None and cmd.classes is None and not (cmd.verb == "perp" and cmd.element):
            raise UsageError(f"{cmd.verb} requires --set or --classes")
        if cmd.set is not None and cmd.classes is not None:
            raise UsageError("give either --set or --classes, not both")
    if cmd.verb == "ramanujan" and len(cmd.group_moduli) != 1:
        raise UsageError("ramanujan needs a cyclic group given by a single modulus")


class _Out:
    """Converts canonical elements back to the user's coordinates."""

    def __init__(self, G: GroupSpec):
        self.G = G

    def elem(self, x):
        user = self.G.crt_backward(x)
        return user[0] if self.G.is_cyclic_input else list(user)

    def elems(self, xs):
        return sorted(self.elem(x) for x in xs)

    def text(self, x) -> str:
        u = self.elem(x)
        return str(u) if isinstance(u, int) else "(" + ",".join(map(str, u)) + ")"


def _value_json(v):
    if isinstance(v, NotInteger):
        return {"approx": round(v.approx.real, 12) + 0.0, "cyclotomic": list(v.remainder)}
    return v


def _value_key(v) -> str:
    if isinstance(v, NotInteger):
        return "cyclotomic:" + ",".join(map(str, v.remainder))
    return str(v)


def _value_text(v) -> str:
    if isinstance(v, NotInteger):
        return f"{_value_key(v)}~{round(v.approx.real, 12) + 0.0}"
    return str(v)


def _spectrum_result(out: _Out, rep: SpectrumReport) -> dict:
    return {
        "alphas": [out.elem(a) for a, _ in rep.per_alpha],
        "degree": rep.degree,
        "eigenvalues": [_value_json(v) for _, v in rep.per_alpha],
        "integral": rep.integral,
        "multiplicities": {_value_key(v): c for v, c in rep.multiplicities.items()},
    }


def _spectrum_rows(out: _Out, rep: SpectrumReport) -> list[list]:
    return [["alpha", "lambda"]] + [[out.text(a), _value_text(v)] for a, v in rep.per_alpha]


def _connection(G: GroupSpec, cmd: Command) -> frozenset:
    if cmd.classes is not None:
        members = set()
        for t in cmd.classes:
            members |= equiv_class(G, canonicalize(G, t)).members
        return frozenset(members)
    return frozenset(canonicalize(G, t) for t in cmd.set)


def _run(cmd: Command) -> tuple[int, dict, list[list], Optional[str]]:
    """Returns (exit code, JSON result, TSV rows, method tag)."""
    G = make_group(cmd.group_moduli)
    out = _Out(G)
    verb = cmd.verb

    if verb == "classes":
        x = canonicalize(G, cmd.element)
        cls = equiv_class(G, x)
        result = {"class": out.elems(cls.members), "order": cls.order, "representative": out.elem(cls.representative)}
        rows = [["member", "order", "representative"]] + [
            [out.text(m), cls.order, out.text(cls.representative)] for m in sorted(cls.members, key=out.elem)
        ]
        return EXIT_OK, result, rows, None

    if verb == "mu-table":
        x = canonicalize(G, cmd.element)
        table = [
            {"mu": mu_pair(G, y, x), "order": order_of(G, y), "phi": phi_pair(G, y, x), "y": out.elem(y)}
            for y in class_representatives(G, x).reps
        ]
        rows = [["y", "order", "mu", "phi"]] + [[out.text(y), r["order"], r["mu"], r["phi"]]
                                                for y, r in zip(class_representatives(G, x).reps, table)]
        return EXIT_OK, {"base": out.elem(x), "rows": table}, rows, None

    if verb == "perp":
        gens = [canonicalize(G, t) for t in (cmd.set or [])]
        if cmd.element is not None:
            gens.append(canonicalize(G, cmd.element))
        perp = perp_set(G, gens)
        rows = [["element"]] + [[out.text(y)] for y in sorted(perp, key=out.elem)]
        return EXIT_OK, {"elements": out.elems(perp), "size": len(perp)}, rows, None

    if verb == "c-value":
        a, x = canonicalize(G, cmd.alpha), canonicalize(G, cmd.x)
        abar = alpha_bar(G, a, x)
        result = {
            "alpha_bar": out.elem(abar),
            "brute": c_bruteforce(G, a, x),
            "closed": c_closed(G, a, x),
            "intermediate": c_intermediate(G, a, x),
        }
        if len({result["brute"], result["closed"], result["intermediate"]}) != 1:
            raise InvariantViolation(f"class-sum paths disagree: {result}")
        rows = [["alpha", "x", "alpha_bar", "closed", "intermediate", "brute"],
                [out.text(a), out.text(x), out.text(abar), result["closed"], result["intermediate"], result["brute"]]]
        return EXIT_OK, result, rows, "all"

    if verb == "ramanujan":
        n, a = cmd.group_moduli[0], cmd.alpha[0]
        value = ramanujan(n, a)
        return EXIT_OK, {"a": a % n, "n": n, "value": value}, [["n", "a", "value"], [n, a % n, value]], None

    if verb == "check-integral":
        conn = decompose_connection_set(G, _connection(G, cmd))
        if conn.decomposable:
            result = {"classes": [out.elem(r) for r in conn.class_reps], "integral": True}
            rows = [["integral", "classes"], ["true", ";".join(out.text(r) for r in conn.class_reps)]]
            return EXIT_OK, result, rows, None
        result = {"integral": False, "witness": out.elem(conn.witness)}
        return EXIT_NONINTEGRAL, result, [["integral", "witness"], ["false", out.text(conn.witness)]], None

    if verb == "spectrum":
        rep = spectrum(G, _connection(G, cmd), METHOD_TAGS[cmd.method], loops=cmd.allow_loops)
        return EXIT_OK, _spectrum_result(out, rep), _spectrum_rows(out, rep), cmd.method

    if verb == "verify":
        S = _connection(G, cmd)
        a = canonicalize(G, cmd.alpha)
        holds = verify_eigenrelation(G, S, a, cmd.lam)
        result = {"alpha": out.elem(a), "holds": holds, "lambda": cmd.lam}
        rows = [["alpha", "lambda", "holds"], [out.text(a), cmd.lam, str(holds).lower()]]
        return EXIT_OK, result, rows, None

    raise UsageError(f"unknown verb {verb!r}")  # pragma: no cover - argparse rejects it first


def _render(cmd: Command, result, rows, method) -> str:
    if cmd.fmt == "tsv":
        return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)
    envelope = {"group": cmd.group_moduli, "verb": cmd.verb, "result": result, "method": method}
    return json.dumps(envelope, separators=(",", ":")) + "\n"


def execute(cmd: Command) -> tuple[int, str, str]:
    """Run a parsed command; returns (exit code, stdout text, stderr text)."""
    try:
        code, result, rows, method = _run(cmd)
    except NonIntegralError as exc:
        out = _Out(make_group(cmd.group_moduli))
        result = {"error": "non-integral", "witness": out.elem(exc.witness),
                  "spectrum": _spectrum_result(out, exc.report)}
        rows = [["error", "witness"], ["non-integral", out.text(exc.witness)]] + _spectrum_rows(out, exc.report)
        msg = f"error: non-integral connection set, the class of {out.text(exc.witness)} is cut\n"
        return EXIT_NONINTEGRAL, _render(cmd, result, rows, "brute"), msg
    except InvariantViolation as exc:
        return EXIT_INVARIANT, "", f"invariant violation: {exc}\n"
    except CayleyError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    return code, _render(cmd, result, rows, method), ""



def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_invocation(argv)
    except (UsageError, CayleyError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    code, text, err = execute(cmd)
    if err:
        sys.stderr.write(err)
    if text:
        if cmd.output:
            with open(cmd.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
