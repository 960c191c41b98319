"""``pi0`` command line.

Exit codes: 0 success, 1 internal inconsistency, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report
from .engine import pi0, pi0_torus
from .errors import InputError, InternalInconsistency, SchemaError
from .gamma_lattice import GammaLattice
from .real_form import CATALOG, ALIASES, RealFormSpec, catalog_ref, real_rank, validate_form
from .serialize import from_document, load, to_document
from .zlattice import IntMatrix

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2


def resolve_spec(spec: str, need_form: bool = True):
    """A catalog reference such as ``so/2,3`` or a path to a JSON document."""
    path = Path(spec)
    if spec.endswith(".json") or path.is_file():
        if not path.is_file():
            raise InputError(f"no such file: {spec}")
        d, f = load(path)
        if f is None and need_form:
            raise SchemaError(f"{spec}: document has no gamma")
        return d, f
    return catalog_ref(spec)


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _result_text(res) -> str:
    lines = [res.group.render()]
    lines += [f"witness {i}: {_vec(w)}" for i, w in enumerate(res.witnesses, 1)]
    return "\n".join(lines) + "\n"


def cmd_compute(args) -> int:
    d, f = resolve_spec(args.spec)
    res = pi0(d, f)
    if args.format == "json":
        doc = {
            "group": res.group.to_json(),
            "witnesses": [list(w) for w in res.witnesses],
            "real_rank": real_rank(f),
            "paths_agree": True,
            "datum": to_document(d, f),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        _emit(_result_text(res), args.output)
    return EXIT_OK


def _torus_gamma(args) -> IntMatrix:
    if args.gamma is not None:
        src = args.gamma
        text = Path(src).read_text() if Path(src).is_file() else src
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"gamma is not valid JSON: {exc}") from exc
        if isinstance(doc, dict):
            doc = doc.get("gamma")
        if not isinstance(doc, list) or any(not isinstance(r, list) for r in doc):
            raise SchemaError("gamma must be a list of integer rows")
        return IntMatrix(doc)
    blocks = [IntMatrix([[1]])] * args.split + [IntMatrix([[-1]])] * args.compact
    blocks += [IntMatrix([[0, 1], [1, 0]])] * args.cx
    return IntMatrix.block_diag(*blocks)


def cmd_torus(args) -> int:
    res = pi0_torus(GammaLattice.of(_torus_gamma(args)))
    if args.format == "json":
        doc = {"group": res.group.to_json(), "witnesses": [list(w) for w in res.witnesses]}
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        _emit(_result_text(res), args.output)
    return EXIT_OK


def cmd_table(args) -> int:
    rows = report.table_rows(args.max_rank, args.forms)
    text = report.render_csv(rows) if args.format == "csv" else report.render_text(rows)
    _emit(text, args.output)
    if args.figure:
        report.plot_table(rows, args.figure)
    return EXIT_OK


def cmd_validate(args) -> int:
    d, f = resolve_spec(args.spec, need_form=False)
    if f is not None:
        validate_form(d, f)
    print(f"ok: rank {d.rank}, {len(d.coroots)} coroots, semisimple rank {d.semisimple_rank}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    aliases = {v: k for k, v in ALIASES.items()}
    if args.format == "json":
        doc = [{"name": e.name, "params": e.params, "description": e.description,
                "alias": aliases.get(e.name)} for e in CATALOG.values()]
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = []
    for e in CATALOG.values():
        alias = f" (alias {aliases[e.name]})" if e.name in aliases else ""
        lines.append(f"{e.name}/{e.params}{alias}  {e.description}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pi0", description="Real component groups of reductive groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--output", metavar="FILE")

    c = sub.add_parser("compute", help="pi_0 G(R) of a catalog entry or JSON document")
    c.add_argument("spec", help="e.g. gl/3, split/A/3/adjoint, so/2,3 or group.json")
    common(c)
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("torus", help="pi_0 T(R) of a torus")
    t.add_argument("--split", type=int, default=0, metavar="A")
    t.add_argument("--compact", type=int, default=0, metavar="B")
    t.add_argument("--cx", type=int, default=0, metavar="C")
    t.add_argument("--gamma", help="JSON matrix, or a file holding one")
    common(t)
    t.set_defaults(func=cmd_torus)

    tb = sub.add_parser("table", help="table of pi_0 over simple types and catalog forms")
    tb.add_argument("--max-rank", type=int, default=8)
    tb.add_argument("--forms", choices=report.FORMS, default="all")
    tb.add_argument("--figure", metavar="PNG", help="also draw a heatmap to this file")
    common(tb, ("text", "csv"))
    tb.set_defaults(func=cmd_table)

    v = sub.add_parser("validate", help="check a datum and its involution")
    v.add_argument("spec")
    v.set_defaults(func=cmd_validate)

    cat = sub.add_parser("catalog", help="list named real forms")
    common(cat)
    cat.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
