"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 input error,
3 enumeration bound exceeded. Errors go to stderr as ``error:<kind>: ...``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import BlockRefineError, InputError
from .formats import emit_decomposition, from_json, parse_graph
from .graph import DEFAULT_AUTOMORPHISM_CAP, Graph, automorphisms
from .initial import initial_decomposition
from .profiles import (
    DEFAULT_PROFILE_CAP,
    enumerate_profiles,
    find_k_blocks,
    induced_profile,
    is_separable_block,
)
from .refine import refine_td
from .treedec import (
    adhesion,
    bag_isomorphic,
    is_tight_td,
    map_decomposition,
    refines,
    td_distinguishes,
    validate,
)

COMMANDS = ("blocks", "profiles", "decompose", "refine", "verify")
FORMATS = ("json", "dot", "text")


@dataclass(frozen=True)
class RunConfig:
    command: str
    k: int
    input: str
    format: str = "json"
    td: str | None = None
    coarse: str | None = None
    regular_only: bool = True
    simplify: bool = False
    profile_cap: int | None = DEFAULT_PROFILE_CAP
    automorphism_cap: int | None = DEFAULT_AUTOMORPHISM_CAP
    check_canonical: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise InputError(f"unknown format {self.format!r}")
        if self.k < 1:
            raise InputError("k must be at least 1")
        for cap in (self.profile_cap, self.automorphism_cap):
            if cap is not None and cap < 1:
                raise InputError("caps must be at least 1")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _separable_blocks(g: Graph, k: int):
    return [b for b in find_k_blocks(g, k) if is_separable_block(g, b)]


def _blocks(g: Graph, cfg: RunConfig) -> tuple[int, str]:
    rows = [(b.labels(g), is_separable_block(g, b)) for b in find_k_blocks(g, cfg.k)]
    if cfg.format == "json":
        return 0, _dump({"k": cfg.k, "blocks": [{"vertices": v, "separable": s} for v, s in rows]})
    if cfg.format == "text":
        lines = [f"{len(rows)} {cfg.k}-block(s)"]
        lines += [f"{' '.join(v)}  {'separable' if s else 'not separable'}" for v, s in rows]
        return 0, "\n".join(lines) + "\n"
    raise InputError("the blocks command supports json and text output")


def _profiles(g: Graph, cfg: RunConfig) -> tuple[int, str]:
    profiles = enumerate_profiles(g, cfg.k, cfg.regular_only, cfg.profile_cap)
    induced = {}
    for b in find_k_blocks(g, cfg.k):
        induced[induced_profile(g, b)] = b.labels(g)
    rows = []
    for p in profiles:
        shown = sorted(x for x in p.oriented if x.is_proper or x.small == g.full)
        rows.append({
            "block": induced.get(p),
            "regular": p.is_regular(g),
            "separations": [{"small": g.labels(x.small), "big": g.labels(x.big)} for x in shown],
        })
    if cfg.format == "json":
        return 0, _dump({"k": cfg.k, "regular_only": cfg.regular_only, "count": len(rows),
                         "profiles": rows})
    if cfg.format == "text":
        lines = [f"{len(rows)} {'regular ' if cfg.regular_only else ''}{cfg.k}-profile(s)"]
        for i, row in enumerate(rows):
            origin = f"induced by block {' '.join(row['block'])}" if row["block"] else "not block-induced"
            lines.append(f"profile {i}: {origin}, {len(row['separations'])} proper orientation(s)")
        return 0, "\n".join(lines) + "\n"
    raise InputError("the profiles command supports json and text output")


def _load_td(g: Graph, path: str | None):
    if path is None:
        raise InputError("this command needs --td")
    td, _ = from_json(g, _read(path))
    return td


def _decompose(g: Graph, cfg: RunConfig) -> tuple[int, str]:
    td = initial_decomposition(g, cfg.k, cfg.profile_cap)
    blocks = _separable_blocks(g, cfg.k)
    out = refine_td(g, td, blocks, simplify=cfg.simplify)
    return 0, emit_decomposition(g, out, cfg.k, blocks, cfg.format)


def _refine(g: Graph, cfg: RunConfig) -> tuple[int, str]:
    td = _load_td(g, cfg.td)
    blocks = _separable_blocks(g, cfg.k)
    out = refine_td(g, td, blocks, simplify=cfg.simplify)
    return 0, emit_decomposition(g, out, cfg.k, blocks, cfg.format)


def _verify(g: Graph, cfg: RunConfig) -> tuple[int, str]:
    td = _load_td(g, cfg.td)
    checks: list[tuple[str, bool | None, str]] = []
    report = validate(g, td)
    checks.append(("valid", report.ok, "; ".join(report.lines())))
    if report.ok:
        checks.append(("tight", is_tight_td(g, td), ""))
        adh = adhesion(g, td)
        checks.append(("adhesion", adh < cfg.k, f"adhesion {adh}, k {cfg.k}"))
        profiles = enumerate_profiles(g, cfg.k, True, cfg.profile_cap)
        missed = sum(1 for p, q in combinations(profiles, 2)
                     if not td_distinguishes(g, td, p, q, efficiently=True))
        checks.append(("distinguishes-profiles", missed == 0,
                       f"{missed} of {len(profiles) * (len(profiles) - 1) // 2} pairs missed"))
        bad = []
        for b in _separable_blocks(g, cfg.k):
            holders = [t for t, bag in td.bags.items() if not b.vertices & ~bag]
            if len(holders) != 1 or td.bags[holders[0]] != b.vertices:
                bad.append(" ".join(b.labels(g)))
        checks.append(("blocks-are-bags", not bad, "; ".join(bad)))
        if cfg.coarse is not None:
            coarse, _ = from_json(g, _read(cfg.coarse))
            checks.append(("refines", refines(g, td, coarse), ""))
        if cfg.check_canonical:
            auts = automorphisms(g, cfg.automorphism_cap)
            ok = all(bag_isomorphic(map_decomposition(g, td, phi), td) for phi in auts)
            checks.append(("canonical", ok, f"{len(auts)} automorphism(s)"))
    ok = all(c[1] for c in checks)
    status = 0 if ok else 1
    if cfg.format == "json":
        body = {"ok": ok, "checks": [{"name": n, "ok": r, "detail": d} for n, r, d in checks]}
        return status, _dump(body)
    lines = [f"{'PASS' if r else 'FAIL'} {n}" + (f": {d}" if d else "") for n, r, d in checks]
    lines.append("verified" if ok else "verification failed")
    return status, "\n".join(lines) + "\n"


HANDLERS = {"blocks": _blocks, "profiles": _profiles, "decompose": _decompose,
            "refine": _refine, "verify": _verify}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, stdout text)."""
    g = parse_graph(_read(cfg.input))
    return HANDLERS[cfg.command](g, cfg)


def _cap(text: str) -> int | None:
    if text.lower() == "none":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'none', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockrefine",
        description="k-blocks, k-profiles and block-displaying tree-decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("graph", help="edge-list file, or - for stdin")
        p.add_argument("-k", type=int, required=True)
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--regular-only", action=argparse.BooleanOptionalAction, default=True)
        p.add_argument("--simplify", action="store_true",
                       help="contract edges duplicating another edge's separation")
        p.add_argument("--profile-cap", type=_cap, default=DEFAULT_PROFILE_CAP,
                       help="max proper separations of order < k ('none' for no cap)")
        p.add_argument("--aut-cap", type=_cap, default=DEFAULT_AUTOMORPHISM_CAP,
                       help="max vertices for automorphism enumeration")
        p.add_argument("--check-canonical", action="store_true")
        if name in ("refine", "verify"):
            p.add_argument("--td", required=True, help="decomposition json")
        if name == "verify":
            p.add_argument("--coarse", help="decomposition json the input must refine")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command, k=args.k, input=args.graph, format=args.format,
            td=getattr(args, "td", None), coarse=getattr(args, "coarse", None),
            regular_only=args.regular_only, simplify=args.simplify,
            profile_cap=args.profile_cap, automorphism_cap=args.aut_cap,
            check_canonical=args.check_canonical,
        )
        status, out = run(cfg)
    except BlockRefineError as exc:
        print(f"error:{exc.kind}: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
