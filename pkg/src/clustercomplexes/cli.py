"""Command-line front end.

Subcommands build complexes and run the verification suites, emitting
deterministic reports (pretty table, JSON, or CSV).  Exit codes: 0 when
all requested checks pass, 1 when a structural check fails, 2 for
usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .colored import (build_complex, fr_compatible, get_context,
                      is_face, positive_part, typeA_polygon_oracle)
from .noncrossing import build_Lm, homotopy_compare, moebius, nc_interval
from .roots import build_root_system, parse_label
from .simplicial import f_h_vectors
from .topology import (check_pure, codim1_incidence, construct_shelling,
                       fuss_catalan, fuss_narayana_positive, homology,
                       kcm_audit, verify_shelling, verify_wedge, ShellingFailure)


@dataclass
class RunConfig:
    phi: str
    m: int = 1
    k: Optional[int] = None
    mode: str = "exhaustive"
    seed: int = 0
    workers: int = 1
    out: Optional[str] = None
    fmt: str = "table"
    cap_vertices: int = 200
    command: str = ""

    def to_dict(self) -> dict:
        return {"phi": self.phi, "m": self.m, "k": self.k, "mode": self.mode,
                "seed": self.seed, "workers": self.workers,
                "format": self.fmt, "cap_vertices": self.cap_vertices,
                "command": self.command}


class GuardError(ValueError):
    pass


MAX_RANK = 6
MAX_COLORS = 4
HOMOLOGY_FACE_CAP = 200_000


def _load_system(cfg: RunConfig):
    rs = build_root_system(cfg.phi)
    if rs.rank > MAX_RANK:
        raise GuardError("rank %d exceeds the desk-scale limit %d; full "
                         "enumeration at that size is out of reach"
                         % (rs.rank, MAX_RANK))
    if cfg.m > MAX_COLORS:
        raise GuardError("m = %d exceeds the desk-scale limit %d"
                         % (cfg.m, MAX_COLORS))
    predicted = cfg.m * len(rs.positive_roots) + rs.rank
    if predicted > cfg.cap_vertices:
        raise GuardError(
            "refusing facet enumeration: %d vertices exceeds the cap %d "
            "(raise --cap-vertices to override)" % (predicted, cfg.cap_vertices))
    return rs


def _emit(cfg: RunConfig, report: dict) -> None:
    text = _render(cfg, report)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        print("wrote %s" % cfg.out)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _render(cfg: RunConfig, report: dict) -> str:
    if cfg.fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if cfg.fmt == "csv":
        return _render_csv(report)
    return _render_table(report)


def _render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    rows = report.get("rows")
    if rows:
        writer.writerow(report.get("columns", []))
        for row in rows:
            writer.writerow(row)
    else:
        writer.writerow(["key", "value"])
        for key in sorted(report):
            if key not in ("config", "version", "checks"):
                writer.writerow([key, json.dumps(report[key], sort_keys=True)])
        for chk in report.get("checks", []):
            writer.writerow(["check:" + chk["id"],
                             "pass" if chk["ok"] else "fail"])
    return buf.getvalue()


def _render_table(report: dict) -> str:
    lines = []
    for key in sorted(report):
        if key in ("config", "version", "checks", "rows", "columns"):
            continue
        lines.append("%-24s %s" % (key, json.dumps(report[key], sort_keys=True)))
    if report.get("columns"):
        lines.append("  ".join(report["columns"]))
        for row in report.get("rows", []):
            lines.append("  ".join(str(x) for x in row))
    for chk in report.get("checks", []):
        lines.append("%-24s %s" % ("[%s]" % chk["id"],
                                   "pass" if chk["ok"] else "FAIL " +
                                   json.dumps(chk.get("detail", ""), sort_keys=True)))
    return "\n".join(lines) + "\n"


def _base_report(cfg: RunConfig) -> dict:
    return {"config": cfg.to_dict(), "version": __version__}


def _cached_complex(cfg: RunConfig):
    rs = _load_system(cfg)
    cx, graph = build_complex(rs, cfg.m)
    return rs, cx, graph


# -- subcommands -----------------------------------------------------------------


def cmd_build(cfg: RunConfig) -> int:
    rs, cx, _ = _cached_complex(cfg)
    report = _base_report(cfg)
    report.update({"phi": rs.label, "m": cfg.m, "rank": rs.rank})
    report.update(cx.to_dict())
    _emit(cfg, report)
    return 0


def cmd_fvector(cfg: RunConfig) -> int:
    rs, cx, _ = _cached_complex(cfg)
    pos = positive_part(cx)
    f, h = f_h_vectors(cx)
    fp, hp = f_h_vectors(pos)
    report = _base_report(cfg)
    report["columns"] = ["complex", "f_vector", "h_vector"]
    report["rows"] = [
        ["full", list(f), list(h) if h else None],
        ["positive", list(fp), list(hp) if hp else None],
    ]
    _emit(cfg, report)
    return 0


def cmd_homology(cfg: RunConfig) -> int:
    rs, cx, _ = _cached_complex(cfg)
    bound = sum(2 ** len(f) for f in cx.facets)
    if bound > HOMOLOGY_FACE_CAP:
        raise GuardError("face count bound %d exceeds the homology cap %d"
                         % (bound, HOMOLOGY_FACE_CAP))
    pos = positive_part(cx)
    report = _base_report(cfg)
    report["full"] = homology(cx).to_dict()
    report["positive"] = homology(pos).to_dict()
    want = fuss_narayana_positive(rs, cfg.m - 1)
    ok = verify_wedge(pos, want, rs.rank - 1)
    report["checks"] = [{"id": "wedge-positive", "ok": ok,
                         "detail": {"expected_spheres": want}}]
    _emit(cfg, report)
    return 0 if ok else 1


def cmd_shelling(cfg: RunConfig) -> int:
    rs, cx, _ = _cached_complex(cfg)
    report = _base_report(cfg)
    checks = []
    for name, complex_ in (("full", cx), ("positive", positive_part(cx))):
        try:
            order = construct_shelling(complex_)
            ok = verify_shelling(complex_, order.facets).ok
            detail = {"facets": len(order.facets)}
        except ShellingFailure as exc:
            ok, detail = False, {"error": str(exc)}
        checks.append({"id": "shelling-%s" % name, "ok": ok, "detail": detail})
    report["checks"] = checks
    _emit(cfg, report)
    return 0 if all(c["ok"] for c in checks) else 1


def cmd_kcm(cfg: RunConfig) -> int:
    rs, cx, _ = _cached_complex(cfg)
    k = cfg.k if cfg.k is not None else cfg.m + 1
    rep = kcm_audit(cx, k, mode=cfg.mode, seed=cfg.seed, workers=cfg.workers)
    report = _base_report(cfg)
    report["audit"] = rep.to_dict()
    report["checks"] = [{"id": "kcm-k%d" % k, "ok": rep.passed,
                         "detail": {"failures": len(rep.failures)}}]
    _emit(cfg, report)
    return 0 if rep.passed else 1


def cmd_incidence(cfg: RunConfig) -> int:
    rs, cx, _ = _cached_complex(cfg)
    hist = codim1_incidence(cx)
    ok = set(hist) == {cfg.m + 1}
    report = _base_report(cfg)
    report["histogram"] = {str(k): v for k, v in sorted(hist.items())}
    report["checks"] = [{"id": "codim1-incidence", "ok": ok,
                         "detail": {"expected": cfg.m + 1}}]
    _emit(cfg, report)
    return 0 if ok else 1


def cmd_ncp(cfg: RunConfig) -> int:
    rs, cx, _ = _cached_complex(cfg)
    pos = positive_part(cx)
    report = _base_report(cfg)
    checks = []
    interval = nc_interval(rs)
    report["interval_size"] = len(interval)
    if cfg.m == 1:
        p = interval.poset()
        e = next(w for w in interval.elements if w.is_identity())
        mu = moebius(p, e, interval.gamma)
        cx1_pos_facets = len(pos.facets)
        ok = mu == (-1) ** rs.rank * cx1_pos_facets
        report["moebius"] = mu
        checks.append({"id": "ncp-moebius", "ok": ok,
                       "detail": {"positive_facets": cx1_pos_facets}})
    L = build_Lm(rs, cfg.m)
    report["poset_size"] = len(L.elements)
    for k in range(1, rs.rank + 1):
        rep = homotopy_compare(rs, cfg.m, k, pos_cx=pos, poset=L,
                               check_fibers=(k == rs.rank))
        checks.append({"id": "ncp-homotopy-k%d" % k, "ok": rep.ok,
                       "detail": {"fibers": rep.fibers_checked}})
    report["checks"] = checks
    _emit(cfg, report)
    return 0 if all(c["ok"] for c in checks) else 1


def cmd_verify_all(cfg: RunConfig) -> int:
    rs, cx, graph = _cached_complex(cfg)
    pos = positive_part(cx)
    m = cfg.m
    checks = []

    def add(check_id, ok, **detail):
        checks.append({"id": check_id, "ok": bool(ok), "detail": detail})

    # structural checks
    add("purity", check_pure(cx) and cx.dimension() == rs.rank - 1,
        dim=cx.dimension())
    add("purity-positive", check_pure(pos) and pos.dimension() == rs.rank - 1,
        dim=pos.dimension())
    hist = codim1_incidence(cx)
    add("codim1-incidence", set(hist) == {m + 1}, histogram=sorted(hist.items()))
    # definition equivalence on pairs
    ctx = get_context(rs, m)
    verts = cx.objects
    agree = all(
        fr_compatible(rs, m, verts[i], verts[j]) == graph.is_edge(i, j)
        for i in range(len(verts)) for j in range(i + 1, len(verts)))
    add("flagness", agree, pairs=len(verts) * (len(verts) - 1) // 2)
    add("facet-count", len(cx.facets) == fuss_catalan(rs, m),
        facets=len(cx.facets), expected=fuss_catalan(rs, m))
    add("facet-count-positive", len(pos.facets) == fuss_catalan(rs, m, positive=True),
        facets=len(pos.facets))
    # shelling
    for name, complex_ in (("full", cx), ("positive", pos)):
        try:
            order = construct_shelling(complex_)
            ok = verify_shelling(complex_, order.facets).ok
        except ShellingFailure:
            ok = False
        add("shelling-%s" % name, ok, facets=len(complex_.facets))
    # wedge counts
    want = fuss_narayana_positive(rs, m - 1)
    add("wedge-positive", verify_wedge(pos, want, rs.rank - 1), expected=want)
    chi = pos.euler_characteristic_reduced()
    add("euler-identity", chi == (-1) ** (rs.rank - 1) * want, chi=chi)
    # connectivity audits (witness search kept cheap)
    exhaustive_cap = 5000
    from math import comb
    n_v = len(cx.vertices)
    total = sum(comb(n_v, s) for s in range(0, m + 1))
    mode = "exhaustive" if total <= exhaustive_cap else "sample"
    rep = kcm_audit(cx, m + 1, mode=mode, seed=cfg.seed)
    add("kcm", rep.passed, k=m + 1, mode=mode, examined=rep.examined)
    witness = kcm_audit(cx, m + 2, sizes=[m + 1], max_failures=1)
    add("kcm-witness", not witness.passed,
        witness=witness.failures[0].to_dict() if witness.failures else None)
    # the polygon model double-checks type A
    if rs.is_irreducible and rs.label.startswith("A"):
        poly = typeA_polygon_oracle(rs.rank + 1, m)
        add("polygon-oracle", poly.f_vector() == cx.f_vector(),
            f_vector=list(cx.f_vector()))
    # noncrossing checks at small rank
    if rs.rank <= 3 and m <= 3 and rs.is_irreducible:
        L = build_Lm(rs, m)
        rep = homotopy_compare(rs, m, rs.rank, pos_cx=pos, poset=L)
        add("ncp-homotopy", rep.ok, fibers=rep.fibers_checked)
    report = _base_report(cfg)
    report["checks"] = checks
    _emit(cfg, report)
    return 0 if all(c["ok"] for c in checks) else 1


def cmd_polygon(cfg: RunConfig) -> int:
    fam, rank, _ = parse_label(cfg.phi)
    if fam != "A":
        raise GuardError("the polygon oracle models type A only")
    rs, cx, _ = _cached_complex(cfg)
    poly = typeA_polygon_oracle(rank + 1, cfg.m)
    ok = poly.f_vector() == cx.f_vector()
    report = _base_report(cfg)
    report["polygon_f"] = list(poly.f_vector())
    report["complex_f"] = list(cx.f_vector())
    report["checks"] = [{"id": "polygon-oracle", "ok": ok, "detail": {}}]
    _emit(cfg, report)
    return 0 if ok else 1


COMMANDS = {
    "build": cmd_build,
    "fvector": cmd_fvector,
    "homology": cmd_homology,
    "shelling": cmd_shelling,
    "kcm": cmd_kcm,
    "incidence": cmd_incidence,
    "ncp": cmd_ncp,
    "polygon": cmd_polygon,
    "verify-all": cmd_verify_all,
}


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="clustercx",
        description="Build generalized cluster complexes of finite root "
                    "systems and verify their structural properties.")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--phi", required=True,
                       help="root system label, e.g. A2, B3, I2(7), A1xA1")
        p.add_argument("--rank", type=int, default=None,
                       help="rank, when not part of the label")
        p.add_argument("--m", type=int, default=1, help="number of colors")
        p.add_argument("--k", type=int, default=None,
                       help="connectivity parameter for kcm")
        p.add_argument("--mode", default="exhaustive",
                       choices=["exhaustive", "sample"])
        p.add_argument("--exhaustive", dest="mode", action="store_const",
                       const="exhaustive", help="shorthand for --mode exhaustive")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", default=None)
        p.add_argument("--format", dest="fmt", default="table",
                       choices=["table", "json", "csv"])
        p.add_argument("--cap-vertices", type=int, default=200)
    return top


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    phi = args.phi if args.rank is None else "%s%d" % (args.phi, args.rank)
    cfg = RunConfig(phi=phi, m=args.m, k=args.k, mode=args.mode,
                    seed=args.seed, workers=args.workers, out=args.out,
                    fmt=args.fmt, cap_vertices=args.cap_vertices,
                    command=args.command)
    try:
        return COMMANDS[args.command](cfg)
    except (GuardError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
