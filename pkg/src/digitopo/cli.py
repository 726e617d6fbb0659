"""Command-line front end.

Exit codes: 0 when a result was computed (including "not a manifold"),
1 when a check-* verification fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any, Sequence

from . import corpus as corpus_mod
from .analysis import (
    ORDER_BOUND,
    connected_ray_orders,
    euler_characteristic,
    verify_partition_of_unity,
)
from .formats import (
    FormatError,
    homotopy_from_json,
    image_from_json,
    image_from_text,
    image_to_json,
    map_from_json,
    parse_point_list,
    partition_from_json,
    read_json,
)
from .lattice import (
    Adjacency,
    DigitalImage,
    components,
    gen_box,
    gen_cross,
    gen_interval,
    gen_sphere,
    is_totally_disconnected,
    neighborhood_image,
    remove_points,
    simplex_census,
)
from .manifold import classify_point, default_cap, manifold_report, render_text, sweep
from .morphisms import find_isomorphism, is_continuous, is_embedding, is_isomorphism, verify_homotopy


class InputError(Exception):
    pass


def _pts(points) -> list[list[int]]:
    return [list(p) for p in points]


def generate(spec: str) -> DigitalImage:
    """Build an image from NAME:ARGS (interval:a:b, sphere:n, box:a:b[:c:d...], cross:k)."""
    name, _, rest = spec.partition(":")
    try:
        args = [int(a) for a in rest.split(":")] if rest else []
    except ValueError as exc:
        raise InputError(f"--gen {spec}: arguments must be integers") from exc
    if name == "interval" and len(args) == 2:
        return gen_interval(*args)
    if name == "sphere" and len(args) == 1:
        return gen_sphere(args[0])
    if name == "box" and args and len(args) % 2 == 0:
        return gen_box(list(zip(args[::2], args[1::2])))
    if name == "cross" and len(args) == 1:
        return gen_cross(args[0])
    raise InputError(f"--gen {spec}: expected interval:a:b, sphere:n, box:a:b[:a:b...] or cross:k")


def _adjacency_override(args: argparse.Namespace, d: int) -> int | None:
    if args.adjacency is not None and args.kl is not None:
        raise InputError("give either --adjacency or --kl, not both")
    try:
        if args.adjacency is not None:
            return Adjacency.parse(args.adjacency, d).l
        if args.kl is not None:
            return Adjacency(args.kl, d).l
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return None


def load_image(args: argparse.Namespace) -> DigitalImage:
    if (args.file is None) == (args.gen is None):
        raise InputError("give exactly one of --file or --gen")
    if args.gen is not None:
        M = generate(args.gen)
    else:
        path = Path(args.file)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from exc
        if text.lstrip().startswith("{"):
            M = image_from_json(read_json(path), str(path))
        else:
            first = next((ln for ln in text.splitlines() if ln.split("#")[0].strip()), "")
            d = len(first.split())
            l = _adjacency_override(args, d) if d else None
            if l is None:
                raise InputError(f"{path}: plain-text images need --adjacency or --kl")
            M = image_from_text(text, l, str(path))
    l = _adjacency_override(args, M.dim)
    if l is not None:
        M = M.with_adjacency(l)
    if getattr(args, "remove", None):
        M = remove_points(M, parse_point_list(args.remove))
    return M


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(payload: Any) -> str:
    """Indented JSON with integer lists (points) kept on one line."""
    text = json.dumps(payload, indent=2, ensure_ascii=False)
    return _INT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]",
                         text)


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if getattr(args, "text", False):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(dumps(payload) + "\n")


def _cmd_analyze(args: argparse.Namespace) -> int:
    M = load_image(args)
    l = args.model_adjacency
    if args.points:
        cap = default_cap(M) if args.n_cap is None else args.n_cap
        rows = []
        lines = []
        for p in parse_point_list(args.points):
            if p not in M:
                raise InputError(f"--points: {p} is not in the image")
            nb = neighborhood_image(M, p)
            found = []
            for n in range(cap + 1):
                match = classify_point(M, p, n, l, args.with_boundary)
                found += [{"n": n, "zero_count": cls.zero_count, "boundary": cls.is_boundary}
                          for cls, _ in match.matches]
            rows.append({"point": list(p), "neighborhood": _pts(nb.points),
                         "neighborhood_size": len(nb), "neighborhood_edges": len(nb.graph.edges),
                         "matches": found})
            where = ", ".join(f"n={m['n']} k={m['zero_count']}" for m in found) or "none"
            lines.append(f"{p}: neighborhood size {len(nb)}, {len(nb.graph.edges)} edges; "
                         f"models matched: {where}")
        _emit(args, {"model_adjacency": l, "with_boundary": args.with_boundary,
                     "n_cap": cap, "points": rows}, "\n".join(lines))
        return 0
    if args.sweep:
        found = sweep(M, args.with_boundary, args.n_cap)
        _emit(args, {"with_boundary": args.with_boundary,
                     "passing": [{"model_adjacency": a, "dimension": n} for a, n in found]},
              "\n".join(f"kappa_{a}: dimension {n}" for a, n in found) or "no passing model")
        return 0
    judged = None
    if M.rim and not args.include_rim:
        judged = [p for p in M.points if p not in M.rim]
    report = manifold_report(M, l, args.with_boundary, args.n_cap, judged)
    _emit(args, report.to_dict(), render_text(report))
    return 0


def _cmd_euler(args: argparse.Namespace) -> int:
    M = load_image(args)
    census = simplex_census(M)
    chi = euler_characteristic(M)
    _emit(args, {"euler_characteristic": chi, "census": list(census.counts)}, str(chi))
    return 0


def _cmd_components(args: argparse.Namespace) -> int:
    M = load_image(args)
    blocks = [sorted(b) for b in components(M)]
    _emit(args, {"count": len(blocks), "connected": len(blocks) <= 1,
                 "totally_disconnected": is_totally_disconnected(M),
                 "components": [_pts(b) for b in blocks]},
          "\n".join(" ".join(str(p) for p in b) for b in blocks) or "(empty)")
    return 0


def _cmd_orient(args: argparse.Namespace) -> int:
    M = load_image(args)
    zero = manifold_report(M).dimension == 0
    payload: dict[str, Any] = {"zero_manifold": zero,
                               "orientations": 2 ** len(M) if zero else None}
    if len(M) <= args.bound:
        orders = connected_ray_orders(M, args.bound)
        payload["connected_ray_orders"] = [_pts(o.sequence) for o in orders]
        payload["connected_ray_order_count"] = len(orders)
    else:
        payload["connected_ray_orders"] = None
        payload["connected_ray_order_count"] = None
    text = (f"0-manifold orientations: {payload['orientations']}\n"
            f"connected-ray orders: {payload['connected_ray_order_count']}")
    _emit(args, payload, text)
    return 0


def _cmd_check_map(args: argparse.Namespace) -> int:
    f = map_from_json(read_json(args.map), args.map)
    ok = is_continuous(f)
    payload = {"continuous": ok, "isomorphism": is_isomorphism(f), "embedding": is_embedding(f)}
    _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return 0 if ok else 1


def _cmd_check_iso(args: argparse.Namespace) -> int:
    if args.map:
        f = map_from_json(read_json(args.map), args.map)
        ok = is_isomorphism(f)
        _emit(args, {"isomorphism": ok}, f"isomorphism: {ok}")
        return 0 if ok else 1
    if not args.other:
        raise InputError("check-iso needs --map, or an image plus --other FILE")
    A = load_image(args)
    B = image_from_json(read_json(args.other), args.other)
    w = find_isomorphism(A, B)
    payload = {"isomorphic": w is not None,
               "witness": None if w is None else [[list(p), list(q)] for p, q in w.items()]}
    _emit(args, payload, f"isomorphic: {w is not None}")
    return 0 if w is not None else 1


def _cmd_check_pou(args: argparse.Namespace) -> int:
    P = partition_from_json(read_json(args.partition), args.partition)
    domain = parse_point_list(args.points) if args.points else None
    report = verify_partition_of_unity(P, domain, args.continuity)
    payload = report.to_dict()
    keys = ("nonnegative", "neighborhoods_meet_supports", "sums_to_target",
            "subordinate", "continuous", "passed")
    _emit(args, payload, "\n".join(f"{k}: {payload[k]}" for k in keys))
    return 0 if report.passed else 1


def _cmd_check_homotopy(args: argparse.Namespace) -> int:
    f = map_from_json(read_json(args.f), args.f)
    g = map_from_json(read_json(args.g), args.g)
    H = homotopy_from_json(read_json(args.homotopy), f.source, f.target, args.homotopy)
    result = verify_homotopy(H, f, g)
    _emit(args, {"homotopy": result.ok, "reason": result.reason},
          f"homotopy: {result.ok}" + (f" ({result.reason})" if result.reason else ""))
    return 0 if result.ok else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    M = load_image(args)
    doc = image_to_json(M)
    sys.stdout.write(json.dumps(doc, ensure_ascii=False) + "\n")
    return 0


def _cmd_corpus(args: argparse.Namespace) -> int:
    results = corpus_mod.run_corpus(args.filter)
    if args.json:
        sys.stdout.write(dumps([
            {"name": r.case.name, "status": r.status, "observed": repr(r.observed),
             "expected": repr(r.case.expected),
             "claimed": repr(r.case.claimed) if r.case.is_discrepancy else None,
             "provenance": r.case.provenance} for r in results]) + "\n")
    else:
        for r in results:
            sys.stdout.write(r.line() + "\n")
        failed = sum(r.status == corpus_mod.FAIL for r in results)
        sys.stdout.write(f"{len(results)} cases, {failed} failed\n")
    return 1 if any(r.status == corpus_mod.FAIL for r in results) else 0


def _image_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", help="image file (JSON, or plain text with one point per line)")
    p.add_argument("--gen", metavar="NAME:ARGS",
                   help="generator: interval:a:b, sphere:n, box:a:b[:a:b...], cross:k")
    p.add_argument("--adjacency", type=int, metavar="N",
                   help="adjacency by name (4, 8, 6, 18, 26, ...) or by parameter l")
    p.add_argument("--kl", type=int, metavar="L", help="adjacency parameter l of kappa_l")
    p.add_argument("--remove", metavar="LIST", help="points to delete, e.g. '(2,2)'")


def _output_options(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="human-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="digitopo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="digital manifold classification")
    _image_options(p)
    _output_options(p)
    p.add_argument("--model-adjacency", type=int, default=1, metavar="L")
    p.add_argument("--with-boundary", action="store_true")
    p.add_argument("--n-cap", type=int, metavar="N")
    p.add_argument("--points", metavar="LIST", help="per-point report, e.g. '(0,0),(2,0)'")
    p.add_argument("--include-rim", action="store_true",
                   help="judge rim points of truncated images too")
    p.add_argument("--sweep", action="store_true", help="try every model adjacency")
    p.set_defaults(func=_cmd_analyze)

    for verb, func, help_ in (("euler", _cmd_euler, "Euler characteristic"),
                              ("components", _cmd_components, "connected components"),
                              ("gen", _cmd_gen, "write a generated image as JSON")):
        p = sub.add_parser(verb, help=help_)
        _image_options(p)
        if verb != "gen":
            _output_options(p)
        p.set_defaults(func=func)

    p = sub.add_parser("orient", help="orientations and connected-ray orders")
    _image_options(p)
    _output_options(p)
    p.add_argument("--bound", type=int, default=ORDER_BOUND)
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("check-map", help="continuity of a map file")
    p.add_argument("map")
    _output_options(p)
    p.set_defaults(func=_cmd_check_map)

    p = sub.add_parser("check-iso", help="verify or search a digital isomorphism")
    _image_options(p)
    _output_options(p)
    p.add_argument("--map", help="map file to verify")
    p.add_argument("--other", help="second image (JSON) to search an isomorphism to")
    p.set_defaults(func=_cmd_check_iso)

    p = sub.add_parser("check-pou", help="verify a partition of unity")
    p.add_argument("partition")
    _output_options(p)
    p.add_argument("--points", metavar="LIST", help="domain for the neighborhood condition")
    p.add_argument("--continuity", action="store_true", help="also require continuity")
    p.set_defaults(func=_cmd_check_pou)

    p = sub.add_parser("check-homotopy", help="verify a digital homotopy")
    p.add_argument("homotopy")
    p.add_argument("--f", required=True, help="map file for H(., 0)")
    p.add_argument("--g", required=True, help="map file for H(., j)")
    _output_options(p)
    p.set_defaults(func=_cmd_check_homotopy)

    p = sub.add_parser("corpus", help="run the golden corpus")
    p.add_argument("--filter", metavar="NAME")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_corpus)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, ValueError, OverflowError) as exc:
        sys.stderr.write(f"digitopo {args.verb}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
