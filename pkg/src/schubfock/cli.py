"""``schubfock`` command line: expansions, tables and verification sweeps.

Every invocation prints one JSON object per line on stdout (or indented text
with ``--pretty``).  Exit codes: 0 ok, 1 a computed identity failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import verify
from .backstable import (
    backstable,
    backstable_window_oracle,
    bsym_to_json,
    dual_mn_check,
    eval_window,
    schubert_poly,
    stanley_p,
    stanley_trunc,
)
from .config import load_config, parse_range
from .errors import SchubFockError
from .fock import eg_coeffs
from .permcore import (
    Partition,
    Permutation,
    format_perm,
    grassmannian_from_partition,
    maya_from_partition,
    parse_partition,
    parse_perm,
    partition_from_maya,
    perm_to_json,
    simple,
)
from .poly import divided_difference, format_mpoly, mpoly_to_json, p_expansion_to_poly, schur_expand, symp_to_json, xvars

VERBS = ("stanley", "schubert", "backstable", "eg", "mn", "maya", "verify")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(SchubFockError):
    pass


@dataclass
class Command:
    verb: str
    subject: Any
    options: dict = field(default_factory=dict)


@dataclass
class Report:
    status: str
    payload: Any
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.status == "ok" else EXIT_FAIL

    def to_json(self) -> dict:
        return {"status": self.status, "payload": self.payload, "diagnostics": self.diagnostics}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="schubfock",
        description="Stanley, Schubert and back-stable Schubert polynomials via Heisenberg operators on S_Z.",
        epilog=(
            "subjects: permutations as 'w[offset: v0 v1 ...]' or words 's1 s2 s-1'; "
            "partitions as '3,1'; verify takes a sweep name: all, " + ", ".join(verify.SWEEPS)
        ),
    )
    p.add_argument("verb", choices=VERBS)
    p.add_argument("subject", help="permutation, partition or sweep name")
    p.add_argument("--vars", type=int, default=None, help="number of variables")
    p.add_argument("--k", type=int, default=None, help="cut position k")
    p.add_argument("--n", type=int, default=None, help="mode / ribbon size")
    p.add_argument("--max-len", type=int, default=None, help="pool length bound")
    p.add_argument("--window", default=None, help="A..B; pool window, or [-N, M] for backstable")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", help="JSON-lines output (default)")
    out.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable output")
    p.set_defaults(pretty=False)
    p.add_argument("--config", default=None, help="TOML file with pool parameters")
    p.add_argument("--jobs", type=int, default=None, help="worker threads for sweeps")
    return p


def parse_args(argv: Sequence[str]) -> Command:
    """Turn ``argv`` into a :class:`Command`; raises :class:`UsageError` on bad input."""
    argv = list(argv)
    # "--window -2..4" would otherwise read the range as a flag
    for i in range(len(argv) - 2, -1, -1):
        if argv[i] == "--window":
            argv[i : i + 2] = [f"--window={argv[i + 1]}"]
    ns = _build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(ns).items() if k not in ("verb", "subject")}
    for name in ("vars", "max_len", "n", "jobs"):
        if opts[name] is not None and opts[name] < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    if opts["window"] is not None:
        try:
            opts["window"] = parse_range(opts["window"])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        if ns.verb == "maya":
            subject: Any = parse_partition(ns.subject)
        elif ns.verb == "verify":
            if ns.subject != "all" and ns.subject not in verify.SWEEPS:
                raise UsageError(f"unknown sweep {ns.subject!r}")
            subject = ns.subject
        else:
            subject = parse_perm(ns.subject)
    except SchubFockError as exc:
        raise UsageError(str(exc)) from None
    return Command(ns.verb, subject, opts)


# verbs ------------------------------------------------------------------------------


def _poly_payload(f) -> dict:
    return {"text": format_mpoly(f), "terms": mpoly_to_json(f)}


def _schur_table(table: dict[Partition, Any]) -> list[dict]:
    return [{"lambda": list(lam), "coeff": str(c)} for lam, c in sorted(table.items()) if c]


def _stanley(w: Permutation, opts: dict) -> Report:
    n = opts["vars"] or max(w.length, 1)
    trunc = stanley_trunc(w, n)
    payload = {
        "perm": perm_to_json(w),
        "vars": n,
        "polynomial": _poly_payload(trunc),
        "power_sum": symp_to_json(stanley_p(w)),
        "schur": _schur_table(schur_expand(trunc, n)),
    }
    diags = []
    if p_expansion_to_poly(stanley_p(w), xvars(n)) != trunc:
        diags.append(f"power-sum expansion disagrees with factorisations for {format_perm(w)}")
    return Report("fail" if diags else "ok", payload, diags)


def _schubert(w: Permutation, opts: dict) -> Report:
    f = schubert_poly(w)
    diags = []
    for i in range(1, max(w.end, 1) + 1):
        expected = schubert_poly(w * simple(i)) if i in w.right_descents() else 0
        if divided_difference(f, i) != expected:
            diags.append(f"divided difference d_{i} fails at {format_perm(w)}")
    payload = {"perm": perm_to_json(w), "polynomial": _poly_payload(f), "degree": w.length}
    return Report("fail" if diags else "ok", payload, diags)


def _backstable(w: Permutation, opts: dict) -> Report:
    lo, hi = opts["window"] or (-3, 3)
    if lo > 0 or hi < 0:
        raise UsageError("--window for backstable must contain 0")
    N, M = -lo, hi
    f = backstable(w)
    window = eval_window(f, N, M)
    oracle = backstable_window_oracle(w, N, M)
    diags = [] if window == oracle else [f"coproduct disagrees with the shift limit for {format_perm(w)}"]
    payload = {"perm": perm_to_json(w), "bsym": bsym_to_json(f), "window": [lo, hi], "evaluation": _poly_payload(window)}
    return Report("fail" if diags else "ok", payload, diags)


def _eg(w: Permutation, opts: dict) -> Report:
    k = 0 if opts["k"] is None else opts["k"]
    return Report("ok", {"perm": perm_to_json(w), "k": k, "eg": _schur_table(eg_coeffs(w, k))})


def _mn(w: Permutation, opts: dict) -> Report:
    m = opts["n"] or 1
    k = 0 if opts["k"] is None else opts["k"]
    n = opts["vars"] or 3
    character = p_expansion_to_poly(stanley_p(w), xvars(n)) == stanley_trunc(w, n)
    dual = dual_mn_check(w, m, k, n)
    diags = []
    if not character:
        diags.append(f"MN rule fails for {format_perm(w)}")
    if not dual:
        diags.append(f"dual MN rule fails for {format_perm(w)}, m={m}, k={k}")
    payload = {"perm": perm_to_json(w), "m": m, "k": k, "vars": n, "mn": character, "dual_mn": dual}
    return Report("fail" if diags else "ok", payload, diags)


def _maya(lam: Partition, opts: dict) -> Report:
    k = 0 if opts["k"] is None else opts["k"]
    f = maya_from_partition(lam, k)
    lo, hi = opts["window"] or (k - len(lam) - 1, k + (lam[0] if lam else 0) + 1)
    back = partition_from_maya(f)
    u = grassmannian_from_partition(lam, k)
    payload = {
        "partition": list(lam),
        "k": k,
        "black": f.occupied(lo, hi),
        "window": [lo, hi],
        "labels": f.labels(k, lo, hi),
        "grassmannian": perm_to_json(u),
        "diagram": str(f),
    }
    ok = back == (lam, k)
    return Report("ok" if ok else "fail", payload, [] if ok else [f"Maya round trip gave {back}"])


def _verify(name: str, opts: dict) -> Report:
    overrides: dict[str, Any] = {"max_len": opts["max_len"], "window": opts["window"], "jobs": opts["jobs"]}
    if opts["vars"] is not None:
        overrides["nvars"] = opts["vars"]
    if opts["k"] is not None:
        overrides["k_values"] = (opts["k"],)
    if opts["n"] is not None:
        overrides["n_values"] = tuple(range(1, opts["n"] + 1))
    cfg = load_config(opts["config"], **overrides)
    results = verify.run(name, cfg)
    diags = [w for r in results for w in r.failures]
    payload = [r.to_json() for r in results]
    return Report("ok" if all(r.ok for r in results) else "fail", payload, diags)


_DISPATCH = {
    "stanley": _stanley,
    "schubert": _schubert,
    "backstable": _backstable,
    "eg": _eg,
    "mn": _mn,
    "maya": _maya,
    "verify": _verify,
}


def execute(c: Command) -> Report:
    """Run a parsed command; library errors become a failing report."""
    try:
        return _DISPATCH[c.verb](c.subject, c.options)
    except UsageError:
        raise
    except SchubFockError as exc:
        return Report("fail", None, [f"{type(exc).__name__}: {exc}"])


def _render(report: Report, pretty: bool) -> str:
    if pretty:
        return json.dumps(report.to_json(), indent=2, sort_keys=True, ensure_ascii=False)
    return json.dumps(report.to_json(), sort_keys=True, separators=(",", ":"))


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        command = parse_args(argv)
        report = execute(command)
    except UsageError as exc:
        print(f"schubfock: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:  # unreadable or invalid --config
        print(f"schubfock: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_render(report, command.options.get("pretty", False)))
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
