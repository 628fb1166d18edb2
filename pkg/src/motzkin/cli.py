"""``mzk``: command-line front end for the diagram monoids."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .diagram import Diagram, Monoid, beta, diagram_from_json, multiply, rank, render, tau
from .enumeration import enumerate_monoid, report
from .errors import MotzkinError, ParseError, WidthMismatch
from .relations import relation_catalog
from .rewrite import normalize_trace
from .structure import ballot_to_rp, decompose, rp_to_ballot, standard_word
from .words import evaluate, word_parse, word_print

COMMANDS = ("multiply", "normalize", "decompose", "enumerate", "verify-relations", "render", "ballot")


class _Usage(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mzk", description="Motzkin diagram monoids: words, diagrams, normal forms.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("-n", type=int, required=True, help="number of vertices per row")
    ap.add_argument("--monoid", choices=[m.value for m in Monoid], default="motzkin")
    ap.add_argument("--format", choices=("json", "text"), default="text")
    ap.add_argument("--trace", action="store_true", help="normalize: stream rewrite steps as JSON lines")
    ap.add_argument("--count", action="store_true", help="enumerate: print only the number of elements")
    ap.add_argument("--by-rank", action="store_true", help="enumerate: counts per number of edges (rank)")
    ap.add_argument("args", nargs="*", help="words (e.g. \"t1 r2\"), inline diagram JSON, or JSON files")
    return ap


def _diagram_arg(text: str, n: int) -> Diagram:
    """A word, an inline JSON diagram, or the path of a JSON file."""
    src = text.strip()
    if src.endswith(".json") and os.path.isfile(src):
        with open(src) as fh:
            src = fh.read()
    if src.startswith("{"):
        try:
            obj = json.loads(src)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        d = diagram_from_json(obj)
        if d.n != n:
            raise WidthMismatch(f"diagram has n={d.n}, expected {n}")
        return d
    return evaluate(word_parse(src, n))


def _show(d: Diagram, fmt: str) -> str:
    return json.dumps(d.to_json()) if fmt == "json" else render(d)


def _need(args: list[str], k: int | None = None) -> None:
    if not args or (k is not None and len(args) != k):
        raise _Usage("expected " + (f"{k} argument(s)" if k else "at least one argument"))


def _multiply(ns, out) -> None:
    _need(ns.args)
    ds = [_diagram_arg(a, ns.n) for a in ns.args]
    cur, loops = ds[0], 0
    for d in ds[1:]:
        sd = multiply(cur, d)
        cur, loops = sd.diagram, loops + sd.loops
    if ns.format == "json":
        print(json.dumps({"diagram": cur.to_json(), "loops": loops}), file=out)
    else:
        print(render(cur), file=out)
        print(f"loops: {loops}", file=out)


def _normalize(ns, out) -> None:
    _need(ns.args, 1)
    w = word_parse(ns.args[0], ns.n)
    tr = normalize_trace(w)
    if ns.trace:
        for st in tr.steps:
            print(json.dumps(st.to_json()), file=out)
    sw = standard_word(evaluate(w))
    if ns.format == "json":
        print(json.dumps({"word": word_print(tr.end), **sw.to_json(), "steps": len(tr)}), file=out)
    else:
        print(word_print(tr.end), file=out)


def _decompose(ns, out) -> None:
    _need(ns.args, 1)
    d = _diagram_arg(ns.args[0], ns.n)
    tri = decompose(d)
    sw = standard_word(d)
    if ns.format == "json":
        obj = {"r": tri.r.to_json(), "t": tri.t.to_json(), "l": tri.l.to_json(), "standard": sw.to_json()}
        print(json.dumps(obj), file=out)
        return
    for name, part in (("R", tri.r), ("T", tri.t), ("L", tri.l)):
        print(f"{name}:", file=out)
        print(render(part), file=out)
    print(f"standard word: {sw}", file=out)


def _enumerate(ns, out) -> None:
    m = Monoid(ns.monoid)
    if ns.count or ns.by_rank:
        rep = report(m, ns.n)
        if ns.format == "json":
            obj = {"monoid": m.value, "n": ns.n, "count": rep.count}
            if ns.by_rank:
                obj["by_rank"] = {str(k): v for k, v in rep.by_rank.items()}
            print(json.dumps(obj), file=out)
            return
        if ns.count:
            print(rep.count, file=out)
        if ns.by_rank:
            for k, v in rep.by_rank.items():
                print(f"rank {k}: {v}", file=out)
        return
    for item in enumerate_monoid(m, ns.n):
        if m is Monoid.R:
            print(json.dumps(list(item)) if ns.format == "json" else " ".join(map(str, item)), file=out)
        elif ns.format == "json":
            print(json.dumps(item.to_json()), file=out)
        else:
            print(f"rank {rank(item)}  tau {sorted(tau(item))}  beta {sorted(beta(item))}  {word_print(standard_word(item).word)}", file=out)


def _verify(ns, out) -> int:
    m = Monoid(ns.monoid)
    if m is Monoid.R:
        raise _Usage("no relation catalog for the rook monoid")
    rels = relation_catalog(m, ns.n)
    bad = [rel for rel in rels if not rel.holds()]
    for rel in bad:
        print(f"FAIL: {rel.name}", file=out)
    if bad:
        return 1
    print(f"OK: {len(rels)} instances verified", file=out)
    return 0


def _render(ns, out) -> None:
    _need(ns.args)
    for a in ns.args:
        print(_show(_diagram_arg(a, ns.n), ns.format), file=out)


def _ballot(ns, out) -> None:
    _need(ns.args, 1)
    text = ns.args[0].replace(",", " ").split()
    if text and all(x in ("1", "-1", "+1", "+", "-") for x in text):
        seq = [1 if x in ("1", "+1", "+") else -1 for x in text]
        d = ballot_to_rp(seq)
        if d.n != ns.n:
            raise WidthMismatch(f"sequence encodes n={d.n}, expected {ns.n}")
        print(_show(d, ns.format), file=out)
        return
    b = rp_to_ballot(_diagram_arg(ns.args[0], ns.n))
    if ns.format == "json":
        print(json.dumps(list(b.entries)), file=out)
    else:
        print(" ".join("+" if x > 0 else "-" for x in b.entries), file=out)


def run(argv: Sequence[str], out=None) -> int:
    out = sys.stdout if out is None else out
    ap = _parser()
    try:
        ns = ap.parse_intermixed_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if ns.n < 1:
        ap.print_usage(sys.stderr)
        print("mzk: error: -n must be positive", file=sys.stderr)
        return 2
    handlers = {
        "multiply": _multiply,
        "normalize": _normalize,
        "decompose": _decompose,
        "enumerate": _enumerate,
        "verify-relations": _verify,
        "render": _render,
        "ballot": _ballot,
    }
    try:
        return handlers[ns.command](ns, out) or 0
    except _Usage as exc:
        ap.print_usage(sys.stderr)
        print(f"mzk: error: {exc}", file=sys.stderr)
        return 2
    except MotzkinError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
