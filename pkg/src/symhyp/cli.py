"""Command-line entry point.

    symhyp field  --field 2,3
    symhyp count  --field 5,1 --k 3 --coeffs 0,1 --distinct
    symhyp vander count --field 5,1 --k 3 --poly 0,0,0,1 [--subset 1,2,3,4]
    symhyp rs deephole --field 5,1 --k 3 --poly 0,0,0,1
    symhyp verify thm-main --field 5,1 --k 3 --m-range 1..2

Exit codes: 0 success, 1 usage error, 2 a verification was violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, fields
from typing import Optional

from . import __version__
from .gf import FieldError, field_new
from .poly import UniPoly
from .rs import RSSpec, is_deep_hole
from .symmetric import CompleteSymPoly, count_points, count_points_distinct, reduction_profile
from .vander import GenVanderInstance, count_Df_zero, det_Df, first_vanishing_subset
from .verify import EXPERIMENTS, ExperimentError, default_threads

EXIT_OK, EXIT_USAGE, EXIT_VIOLATED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandConfig:
    subcommand: str
    action: Optional[str] = None
    field: tuple = (2, 1)
    k: Optional[list] = None
    coeffs: Optional[list] = None
    poly: Optional[list] = None
    alphas: Optional[list] = None
    subset: Optional[list] = None
    distinct: bool = False
    method: Optional[str] = None
    m_range: Optional[tuple] = None
    a_k: int = 1
    a_k_minus_1: Optional[int] = None
    budget: int = 10**8
    seed: int = 0
    threads: Optional[int] = None
    out: Optional[str] = None
    format: str = "json"

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("field", "m_range"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CommandConfig":
        names = {f.name for f in fields(cls)}
        d = {k: v for k, v in d.items() if k in names}
        for key in ("field", "m_range"):
            if d.get(key) is not None:
                d[key] = tuple(d[key])
        return cls(**d)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _field_arg(text: str) -> tuple:
    vals = _int_list(text)
    if len(vals) == 1:
        vals.append(1)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError("--field takes p,m")
    return tuple(vals)


def _range_arg(text: str) -> tuple:
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symhyp", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"symhyp {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, k_list=False):
        p.add_argument("--field", type=_field_arg, required=True, help="p,m for F_{p^m}")
        if k_list:
            p.add_argument("--k", type=_int_list, help="number of variables (comma list allowed)")
        else:
            p.add_argument("--k", type=int, help="number of variables")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("field", help="print the field model and element table")
    common(p)

    p = sub.add_parser("count", help="N_q(h) and N*(h) for h = sum a_e h_e")
    common(p)
    p.add_argument("--coeffs", type=_int_list, required=True, help="a_0,...,a_m as element indices")
    p.add_argument("--distinct", action="store_true", help="count only distinct-coordinate points")
    p.add_argument("--subset", type=_int_list, help="restrict distinct coordinates to this subset")
    p.add_argument("--method", choices=["multiset", "naive"], default="multiset")

    p = sub.add_parser("vander", help="generalized Vandermonde determinants")
    p.add_argument("action", choices=["count", "det"])
    common(p)
    p.add_argument("--poly", type=_int_list, required=True, help="f coefficients, low degree first")
    p.add_argument("--subset", type=_int_list)
    p.add_argument("--alphas", type=_int_list, help="points for 'det'")
    p.add_argument("--method", choices=["companion", "determinant"], default="companion")

    p = sub.add_parser("rs", help="Reed-Solomon deep holes")
    p.add_argument("action", choices=["deephole"])
    common(p)
    p.add_argument("--poly", type=_int_list, required=True)

    p = sub.add_parser("verify", help="run a verification experiment")
    p.add_argument("action", choices=sorted(EXPERIMENTS), metavar="experiment",
                   help=", ".join(sorted(EXPERIMENTS)))
    common(p, k_list=True)
    p.add_argument("--m-range", type=_range_arg, dest="m_range")
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int)
    p.add_argument("--a-k", type=int, default=1, dest="a_k")
    p.add_argument("--a-k-minus-1", type=int, dest="a_k_minus_1")
    p.add_argument("--subset", type=_int_list)
    return parser


def parse_config(argv) -> CommandConfig:
    ns = build_parser().parse_args(argv)
    d = {k: v for k, v in vars(ns).items() if v is not None or k in ("k",)}
    if isinstance(d.get("k"), int):
        d["k"] = [d["k"]]
    return CommandConfig.from_dict(d)


# --- handlers --------------------------------------------------------------------

def _header(F) -> dict:
    return {"field": F.descriptor(), "tool_version": __version__}


def _single_k(cfg: CommandConfig) -> int:
    if not cfg.k or len(cfg.k) != 1:
        raise UsageError("--k is required")
    return cfg.k[0]


def _do_field(cfg, F):
    report = dict(_header(F), q=F.q, generator=F.generator, elements=F.table())
    summary = f"{F!r} modulus {F.modulus} (low degree first), generator {F.generator}"
    return [report], summary, EXIT_OK


def _do_count(cfg, F):
    k = _single_k(cfg)
    try:
        h = CompleteSymPoly(F, k, tuple(cfg.coeffs))
    except ValueError as exc:
        raise UsageError(str(exc))
    report = dict(_header(F), k=k, coeffs=list(h.coeffs))
    if cfg.distinct or cfg.subset:
        pc = count_points_distinct(h, cfg.subset, method="naive" if cfg.method == "naive" else "subset")
        report.update(N=None, N_star=pc.n_distinct, method=pc.method, subsets_vanishing=pc.subsets_vanishing)
    else:
        pc = count_points(h, method=cfg.method or "multiset")
        report.update(N=pc.n_total, N_star=None, method=pc.method)
    if 2 <= k <= F.q:
        report["reduction_profile"] = reduction_profile(h).to_dict()
    summary = f"k={k} coeffs={list(h.coeffs)}: N={report['N']} N*={report['N_star']}"
    return [report], summary, EXIT_OK


def _do_vander(cfg, F):
    k = _single_k(cfg)
    inst = GenVanderInstance(UniPoly(F, tuple(cfg.poly)), k)
    report = dict(_header(F), k=k, poly=inst.f.to_list())
    if cfg.action == "det":
        if not cfg.alphas:
            raise UsageError("vander det needs --alphas")
        report.update(alphas=cfg.alphas, det=det_Df(inst, cfg.alphas))
        return [report], f"D_f{tuple(cfg.alphas)} = {report['det']}", EXIT_OK
    pc = count_Df_zero(inst, cfg.subset, method=cfg.method or "companion")
    w = first_vanishing_subset(inst, cfg.subset)
    report.update(N_star_Df=pc.n_distinct, subsets_vanishing=pc.subsets_vanishing,
                  subset=cfg.subset, method=pc.method, first_witness=list(w) if w else None)
    return [report], f"N*_S(D_f) = {pc.n_distinct} ({pc.subsets_vanishing} subsets)", EXIT_OK


def _do_rs(cfg, F):
    k = _single_k(cfg)
    v = is_deep_hole(RSSpec(F, k - 1), UniPoly(F, tuple(cfg.poly)))
    report = dict(_header(F), k=k, poly=cfg.poly, **v.to_dict())
    deg = v.f_degree if isinstance(v.f_degree, int) else "-inf"
    return [report], f"deep hole: {v.is_deep_hole} (degree {deg}, SR form {v.sr_form})", EXIT_OK


def _stream(rec: dict) -> None:
    print(json.dumps(rec), file=sys.stderr, flush=True)


def _do_verify(cfg, F):
    func = EXPERIMENTS[cfg.action]
    threads = cfg.threads if cfg.threads is not None else default_threads()
    ks = cfg.k or [None]
    reports = []
    for k in ks:
        kw = dict(on_record=_stream, seed=cfg.seed)
        if cfg.action in ("thm-main", "thm-even", "conj-even"):
            kw.update(m_range=cfg.m_range, budget=cfg.budget, threads=threads)
        elif cfg.action in ("deep-holes", "conj-nonzeros"):
            kw.update(budget=cfg.budget, threads=threads)
        elif cfg.action == "subset-sum":
            kw.update(a_km1=cfg.a_k_minus_1, a_k=cfg.a_k, S=cfg.subset)
        if cfg.action == "remarks":
            reports.append(func(F, **kw))
        else:
            if k is None:
                raise UsageError(f"verify {cfg.action} needs --k")
            reports.append(func(F, k, **kw))
    lines = [f"{r.experiment_id} q={F.q} k={r.params.get('k')}: {r.verdict} "
             f"({r.cases_checked} cases, min {r.min_count_observed}, bound {r.bound_required}, "
             f"{len(r.violations)} violations, {len(r.findings)} findings)" for r in reports]
    code = EXIT_VIOLATED if any(r.verdict == "violated" for r in reports) else EXIT_OK
    return [r.to_dict() for r in reports], "\n".join(lines), code


HANDLERS = {"field": _do_field, "count": _do_count, "vander": _do_vander, "rs": _do_rs, "verify": _do_verify}

CSV_COLUMNS = ["experiment_id", "p", "m", "k", "cases_checked", "violations", "findings",
               "min_count_observed", "bound_required", "exhaustive", "verdict", "elapsed"]


def render(reports: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(reports[0] if len(reports) == 1 else reports, indent=2) + "\n"
    buf = io.StringIO()
    if reports and "experiment_id" in reports[0]:
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in reports:
            w.writerow({
                **{c: r.get(c) for c in CSV_COLUMNS},
                "p": r["field"]["p"], "m": r["field"]["m"], "k": r["params"].get("k"),
                "violations": len(r["violations"]), "findings": len(r["findings"]),
            })
    else:
        flat = [{k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()} for r in reports]
        w = csv.DictWriter(buf, fieldnames=list(flat[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
    return buf.getvalue()


def dispatch(cfg: CommandConfig) -> int:
    try:
        F = field_new(*cfg.field)
        reports, summary, code = HANDLERS[cfg.subcommand](cfg, F)
    except (UsageError, FieldError, ExperimentError, ValueError) as exc:
        print(f"symhyp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(reports, cfg.format)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return code


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"symhyp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())
