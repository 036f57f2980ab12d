"""clar-kit command line.

    clar-kit <build|clar|bound|gen-tk|gen-family-b|enumerate|spectrum|verify>
             [--in FILE] [--out FILE] [--k INT] [--n INT] [--c INT]
             [--n-max INT] [--sample INT] [--seed INT] [--ascii]

Exit status: 0 on success, 1 on domain or input errors (and on failed
verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .benzenoid import BenzenoidGraph, BenzenoidSpec, build_benzenoid
from .clar import clar_bounds, clar_number
from .errors import ClarKitError
from .extremal import construct_with_clar, enumerate_catacondensed, gen_family_b, verify_main_theorem
from .render import render_ascii
from .trees import independence_bound, make_tk

COMMANDS = ("build", "clar", "bound", "gen-tk", "gen-family-b", "enumerate", "spectrum", "verify")
REQUIRED = {
    "build": ("input",),
    "clar": ("input",),
    "bound": ("input",),
    "gen-tk": ("k",),
    "gen-family-b": ("n",),
    "enumerate": ("n",),
    "spectrum": ("n",),
    "verify": ("n_max",),
}


class _InputError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clar-kit", description="Clar numbers of catacondensed benzenoids.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--in", dest="input", metavar="FILE", help="spec or graph JSON")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--sample", type=int, help="verify: seeded random subset size per n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ascii", action="store_true", help="build/clar: print a text sketch instead of JSON")
    return p


def _load_graph(path: str) -> BenzenoidGraph:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise _InputError(f"malformed JSON in {path}: {exc}") from None
    if not isinstance(data, dict):
        raise _InputError(f"{path}: expected a JSON object")
    if "vertices" in data:
        return BenzenoidGraph.from_json(data)
    return build_benzenoid(BenzenoidSpec.from_json(data))


def _dispatch(args) -> tuple[object, int]:
    cmd = args.command
    if cmd == "build":
        graph = _load_graph(args.input)
        return (render_ascii(graph) if args.ascii else graph.to_json()), 0
    if cmd == "clar":
        graph = _load_graph(args.input)
        cert = clar_number(graph)
        return (render_ascii(graph, cert) if args.ascii else cert.to_json()), 0
    if cmd == "bound":
        return clar_bounds(_load_graph(args.input)), 0
    if cmd == "gen-tk":
        return make_tk(args.k).to_json(), 0
    if cmd == "gen-family-b":
        return [s.to_json() for s in gen_family_b(args.n)], 0
    if cmd == "enumerate":
        return [s.to_json() for s in enumerate_catacondensed(args.n)], 0
    if cmd == "spectrum":
        cs = [args.c] if args.c is not None else range(1, independence_bound(args.n) + 1)
        out = []
        for c in cs:
            spec = construct_with_clar(args.n, c)
            out.append({"c": c, "clar": clar_number(build_benzenoid(spec)).value, "spec": spec.to_json()})
        return (out[0] if args.c is not None else out), 0
    # verify
    reports = [verify_main_theorem(n, args.sample, args.seed) for n in range(1, args.n_max + 1)]
    return [r.to_json() for r in reports], (0 if all(r.ok for r in reports) else 1)


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    missing = [name for name in REQUIRED[args.command] if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + ("in" if m == "input" else m.replace("_", "-")) for m in missing)
        parser.print_usage(sys.stderr)
        print(f"clar-kit: error: {args.command} requires {flags}", file=sys.stderr)
        return 2
    try:
        result, status = _dispatch(args)
    except (_InputError, ClarKitError) as exc:
        print(f"clar-kit: error: {exc}", file=sys.stderr)
        return 1
    text = result if isinstance(result, str) else json.dumps(result, sort_keys=True) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"clar-kit: error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return status


run = main

if __name__ == "__main__":
    sys.exit(main())
