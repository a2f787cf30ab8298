"""Command-line interface: ``gentle-topo [global options] COMMAND ...``.

Exit status is 0 on success, 1 when the library reports a domain error
(for example NotGentle or SymplecticBasisNotFound) and 2 on usage errors.
With ``--format json`` errors are printed as ``{"error": code, "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import presentation
from .algebra import (
    AnForm,
    an_form_of,
    an_rewrite_move,
    check_proper,
    check_smooth,
    koszul_dual_a2,
    make_an,
    reduce_idempotent,
)
from .errors import GentleTopoError, NotAnForm
from .invariants import compute_invariants, derived_equivalent, has_silting, partial_silting_analysis
from .surface import build_surface, dual_dot, incidence_dot

ENV_MAX_LEN = "GENTLE_TOPO_MAX_CYCLE_LEN"


class UsageError(Exception):
    pass


def _vertex_list(text: str) -> list[str]:
    items = [v.strip() for v in text.split(",") if v.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma separated list of vertices")
    return items


def _common(parser: argparse.ArgumentParser, top: bool) -> None:
    # Global flags are accepted before or after the subcommand.
    default = None if top else argparse.SUPPRESS
    parser.add_argument("--format", choices=["text", "json"], default="text" if top else default)
    parser.add_argument("--max-cycle-len", type=int, default=default, metavar="N",
                        help=f"cap on graph-cycle length in the basis search (env {ENV_MAX_LEN})")
    parser.add_argument("--seed", type=int, default=default, help="shuffle seed for the basis search")
    parser.add_argument("--batch", default=default, metavar="LIST",
                        help="file listing one input path per line; runs the command on each")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gentle-topo",
        description="Surface models and derived invariants of graded gentle algebras.",
    )
    _common(parser, top=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help_text, file=True):
        p = sub.add_parser(name, help=help_text)
        _common(p, top=False)
        if file:
            p.add_argument("file", nargs="?", default="-", help="presentation file, '-' for stdin")
        return p

    add("validate", "check a presentation and report basic properties")
    add("invariants", "compute the complete derived invariant")
    p = sub.add_parser("equiv", help="decide derived equivalence of two algebras")
    _common(p, top=False)
    p.add_argument("file_a")
    p.add_argument("file_b")
    add("silting", "decide whether per(A) has a silting object")
    p = add("presilting", "analyse the idempotent summand eA for the kept vertices")
    p.add_argument("--keep", type=_vertex_list, required=True, metavar="V1,V2,...")
    p = add("reduce", "print the reduced algebra A_e for the dropped vertices")
    p.add_argument("--drop", type=_vertex_list, required=True, metavar="V1,V2,...")
    p = add("an", "print the A^(n) algebra of a given form", file=False)
    p.add_argument("--pairs", required=True, help='form such as "1,1;0,0"')
    for name, text in (("move", "apply the derived-equivalence rewrite move to an A^(n) form"),
                       ("koszul", "Koszul dual of an A^(2) form")):
        p = add(name, text)
        p.add_argument("--pairs", help="form given directly instead of an algebra file")
    p = add("emit-dot", "DOT graphs of the surface model")
    p.add_argument("--kind", choices=["incidence", "dual", "both"], default="both")
    return parser


def _max_len(args) -> int | None:
    if args.max_cycle_len is not None:
        if args.max_cycle_len < 1:
            raise UsageError("--max-cycle-len must be positive")
        return args.max_cycle_len
    env = os.environ.get(ENV_MAX_LEN)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"{ENV_MAX_LEN} must be an integer") from None
        if value < 1:
            raise UsageError(f"{ENV_MAX_LEN} must be positive")
        return value
    return None


def _load(path: str):
    try:
        return presentation.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _algebra_payload(A, form: AnForm | None):
    payload = presentation.to_dict(A)
    if form is not None:
        payload["form"] = str(form)
    return payload


def _form_from(args) -> AnForm:
    if getattr(args, "pairs", None):
        return AnForm.parse(args.pairs)
    form = an_form_of(_load(args.file))
    if form is None:
        raise NotAnForm("input algebra is not of the form A^(n)")
    return form


def _run_one(args, path: str | None):
    """Return (json_value, text) for a single input."""
    cmd = args.command
    max_len = _max_len(args)
    if cmd == "validate":
        A = _load(path)
        form = an_form_of(A)
        info = {
            "valid": True,
            "vertices": len(A.vertices),
            "arrows": len(A.arrows),
            "relations": len(A.relations),
            "connected": A.is_connected(),
            "proper": check_proper(A),
            "smooth": check_smooth(A),
            "an_form": None if form is None else str(form),
        }
        text = "\n".join(f"{k}: {_plain(v)}" for k, v in info.items())
        return info, text
    if cmd == "invariants":
        model = build_surface(_load(path))
        rec = compute_invariants(model, max_len=max_len, seed=args.seed)
        out = rec.to_dict()
        out["basis"] = [] if rec.basis is None else [c.describe(model) for c in rec.basis.curves]
        lines = [f"genus: {rec.genus}", f"boundary components: {rec.b}"]
        lines += [f"  boundary {i}: marked {m}, winding {w}" for i, (m, w) in enumerate(rec.boundaries)]
        lines += [
            f"basis windings: {' '.join(map(str, rec.basis_windings)) or '-'}",
            f"sigma: {_plain(rec.sigma)}",
            f"atilde: {_plain(rec.atilde)}",
            f"arf: {_plain(rec.arf)}",
        ]
        return out, "\n".join(lines)
    if cmd == "equiv":
        A, B = _load(args.file_a), _load(args.file_b)
        ok, cert = derived_equivalent(A, B, max_len=max_len, seed=args.seed)
        lines = [_plain(ok)]
        lines += [
            f"  {c['invariant']}: {_plain(c['left'])} vs {_plain(c['right'])}"
            f" ({'match' if c['match'] else 'differ'})"
            for c in cert
        ]
        return {"equivalent": ok, "certificate": cert}, "\n".join(lines)
    if cmd == "silting":
        ok = has_silting(_load(path), max_len=max_len, seed=args.seed)
        return {"has_silting": ok}, _plain(ok)
    if cmd == "presilting":
        report = partial_silting_analysis(_load(path), args.keep, max_len=max_len, seed=args.seed)
        d = report.to_dict()
        lines = [
            f"presilting: {_plain(report.presilting)}",
            "corner degrees: " + " ".join(f"{k}:{v}" for k, v in report.corner_dims.items()),
            f"verdict: {report.verdict}",
            f"reason: {report.reason}",
        ]
        for c in report.components:
            lines.append(
                f"  component {','.join(c['vertices'])}: form {_plain(c['an_form'])}, "
                f"has_silting {_plain(c['has_silting'])}"
            )
        return d, "\n".join(lines)
    if cmd == "reduce":
        R = reduce_idempotent(_load(path), args.drop)
        return _algebra_payload(R, None), presentation.format_text(R).rstrip("\n")
    if cmd == "an":
        form = AnForm.parse(args.pairs)
        A = make_an(form)
        return _algebra_payload(A, form), presentation.format_text(A).rstrip("\n")
    if cmd in ("move", "koszul"):
        form = _form_from(args)
        new = an_rewrite_move(form) if cmd == "move" else koszul_dual_a2(form)
        A = make_an(new)
        return _algebra_payload(A, new), f"# form {new}\n" + presentation.format_text(A).rstrip("\n")
    if cmd == "emit-dot":
        model = build_surface(_load(path))
        parts = {}
        if args.kind in ("incidence", "both"):
            parts["incidence"] = incidence_dot(model)
        if args.kind in ("dual", "both"):
            parts["dual"] = dual_dot(model)
        return parts, "".join(parts.values()).rstrip("\n")
    raise UsageError(f"unknown command {cmd!r}")


def _plain(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_plain(x) for x in v) + "]"
    return str(v)


def _error_payload(exc: Exception) -> dict:
    code = exc.code if isinstance(exc, GentleTopoError) else "UsageError"
    return {"error": code, "message": str(exc)}


def _emit(fmt: str, value, text: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(value, indent=2, sort_keys=False) + "\n")
    else:
        out.write(text + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format
    try:
        if args.batch:
            return _run_batch(args, stdout, stderr)
        value, text = _run_one(args, getattr(args, "file", None))
    except UsageError as exc:
        _report(fmt, exc, stdout, stderr)
        return 2
    except GentleTopoError as exc:
        _report(fmt, exc, stdout, stderr)
        return 1
    _emit(fmt, value, text, stdout)
    return 0


def _report(fmt, exc, stdout, stderr) -> None:
    payload = _error_payload(exc)
    if fmt == "json":
        stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        stderr.write(f"error: {payload['error']}: {payload['message']}\n")


def _run_batch(args, stdout, stderr) -> int:
    if args.command in ("equiv", "an"):
        raise UsageError(f"--batch is not supported for {args.command!r}")
    try:
        with open(args.batch, encoding="utf-8") as fh:
            paths = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise UsageError(f"cannot read batch list {args.batch}: {exc.strerror}") from None
    results, status = [], 0
    for path in paths:
        try:
            value, text = _run_one(args, path)
            results.append({"file": path, "ok": True, "result": value})
            if args.format == "text":
                stdout.write(f"== {path}\n{text}\n")
        except (GentleTopoError, UsageError) as exc:
            status = 1
            payload = _error_payload(exc)
            results.append({"file": path, "ok": False, **payload})
            if args.format == "text":
                stdout.write(f"== {path}\nerror: {payload['error']}: {payload['message']}\n")
    if args.format == "json":
        stdout.write(json.dumps(results, indent=2) + "\n")
    return status


def load_schema(command: str | None = None) -> dict:
    """The published JSON schema for a subcommand's output (``error`` and
    ``batch`` are also keys).  Without an argument the whole document."""
    from importlib.resources import files

    doc = json.loads(files("gentle_topo").joinpath("schema.json").read_text(encoding="utf-8"))
    if command is None:
        return doc
    schema = dict(doc[command])
    schema["definitions"] = doc["definitions"]
    return schema


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
