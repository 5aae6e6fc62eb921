"""Command-line front end: single evaluations, verification commands,
parameter sweeps and scans, with CSV/JSON artifacts and reproducible
run manifests.

Every run writes one artifact file plus ``<artifact>.manifest.json``
recording the full flat config, package version and wall time; a run is
regenerable from its manifest alone (``--config`` accepts either the
manifest or a flat ``key=value`` file).

Exit codes: 0 success, 2 when a verification command produced at least
one "fails" verdict (so CI can assert the suite in one line), 3 on input
or operational errors.

Determinism: fixed row ordering, shortest round-trip float formatting,
and sweep results identical for any ``--jobs`` value (workers only ever
compute independent grid points that are reassembled in input order).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .characters import characters_mod, parse_character
from .charsums import (
    d_chi_bound_ratio,
    d_chi_sum,
    lemma_distance_scan,
    min_implied_c,
    prop6_scan,
    pv_profile,
    pv_scan,
    twisted_partial_max,
)
from .distance import HalaszGrid, distance, halasz_M, sigma_norm
from .errors import PretentiousError
from .halasz import (
    hall_family_scan,
    hall_real_diagnostic,
    halasz_report,
    heuristic_value,
    mean_value,
    progression_mean,
)
from .inequalities import (
    VERDICT_FAILS,
    check_341,
    check_cor2,
    check_derivative_ineq,
    check_lfun_triangle,
    check_prop1,
)
from .multfunc import parse_function
from .ntheory import build_prime_table
from .series import dirichlet_F, zeta

COMMANDS = (
    "sieve-info", "char-list", "distance", "norm-identity", "prop1", "cor2",
    "three-four-one", "lfun-triangle", "deriv-ineq", "pv-scan", "dchi",
    "prop6-scan", "lemma-scan", "halasz", "hall", "mean", "progression",
)

_VERIFICATION_COMMANDS = {"prop1", "cor2", "three-four-one", "lfun-triangle", "deriv-ineq"}


@dataclass
class RunConfig:
    """Flat, fully serializable description of one run."""

    command: str
    params: dict = field(default_factory=dict)
    sieve_limit: int = 10**6
    precision: float = 1e-8
    out: str = "run.csv"
    fmt: str = "csv"
    seed: int = 0
    jobs: int = 1

    def to_lines(self) -> list[str]:
        lines = [
            f"command={self.command}",
            f"sieve_limit={self.sieve_limit}",
            f"precision={self.precision!r}",
            f"out={self.out}",
            f"format={self.fmt}",
            f"seed={self.seed}",
            f"jobs={self.jobs}",
        ]
        for k in sorted(self.params):
            v = self.params[k]
            lines.append(f"{k}={v!r}" if isinstance(v, float) else f"{k}={v}")
        return lines

    @classmethod
    def from_lines(cls, lines) -> "RunConfig":
        raw: dict[str, str] = {}
        for line in lines:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            raw[key.strip()] = val.strip()
        cfg = cls(command=raw.pop("command"))
        if "sieve_limit" in raw:
            cfg.sieve_limit = int(float(raw.pop("sieve_limit")))
        if "precision" in raw:
            cfg.precision = float(raw.pop("precision"))
        if "out" in raw:
            cfg.out = raw.pop("out")
        if "format" in raw:
            cfg.fmt = raw.pop("format")
        if "seed" in raw:
            cfg.seed = int(raw.pop("seed"))
        if "jobs" in raw:
            cfg.jobs = int(raw.pop("jobs"))
        cfg.params = raw
        return cfg


def _fmt(v) -> str:
    """Shortest round-trip decimal for floats, locale independent."""
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, complex):
        return f"{v.real!r}+{v.imag!r}j"
    return str(v)


def _write_rows(path: str, fmt: str, header: list[str], rows: list[dict]) -> None:
    if fmt == "json":
        with open(path, "w") as fh:
            json.dump(
                [{k: row.get(k) for k in header} for row in rows],
                fh, indent=1, default=_fmt,
            )
            fh.write("\n")
        return
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(row.get(k, "")) for k in header])


def _grid_values(spec: str) -> list[float]:
    """start:stop:step, endpoints inclusive up to float slack."""
    start_s, stop_s, step_s = spec.split(":")
    start, stop, step = float(start_s), float(stop_s), float(step_s)
    if step <= 0:
        raise PretentiousError(f"grid step must be positive in {spec!r}")
    out = []
    k = 0
    while True:
        v = start + k * step
        if v > stop + step * 1e-9:
            break
        out.append(v)
        k += 1
    return out


def _parse_grid(spec: str) -> dict[str, list[float]]:
    grids = {}
    for part in spec.split(","):
        name, _, rng = part.partition("=")
        grids[name.strip()] = _grid_values(rng)
    return grids


def _report_row(rep) -> dict:
    row = {
        "name": rep.name,
        "sigma": rep.params.get("sigma", ""),
        "t1": rep.params.get("t1", rep.params.get("t", "")),
        "t2": rep.params.get("t2", rep.params.get("t", "")),
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "margin": rep.margin,
        "budget": rep.error_budget,
        "verdict": rep.verdict,
    }
    return row


_INEQ_HEADER = ["name", "sigma", "t1", "t2", "lhs", "rhs", "margin", "budget", "verdict"]


def _cor2_point(args: tuple[float, float, float, float]) -> list[dict]:
    sigma, t1, t2, prec = args
    r1, r2 = check_cor2(sigma, t1, t2, prec)
    return [_report_row(r1), _report_row(r2)]


def _341_point(args: tuple[float, float, float]) -> list[dict]:
    sigma, t, prec = args
    return [_report_row(check_341(sigma, t, prec))]


def _map_points(fn, points, jobs: int) -> list[dict]:
    if jobs <= 1 or len(points) < 4:
        chunks = map(fn, points)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(fn, points, chunksize=max(1, len(points) // (8 * jobs))))
    rows: list[dict] = []
    for chunk in chunks:
        rows.extend(chunk)
    return rows


# ---------------------------------------------------------------------------
# command implementations: each returns (header, rows)

def _cmd_sieve_info(cfg: RunConfig):
    mode = cfg.params.get("mode", "primes")
    table = build_prime_table(cfg.sieve_limit, mode=mode)
    rows = [{
        "limit": table.limit,
        "mode": mode,
        "prime_count": len(table.primes),
        "largest_prime": int(table.primes[-1]),
    }]
    return ["limit", "mode", "prime_count", "largest_prime"], rows


def _cmd_char_list(cfg: RunConfig):
    q = int(cfg.params["q"])
    rows = []
    for chi in characters_mod(q):
        rows.append({
            "q": q,
            "chi": chi.label,
            "conductor": chi.conductor,
            "order": chi.order,
            "parity": chi.parity,
            "primitive": int(chi.is_primitive),
        })
    return ["q", "chi", "conductor", "order", "parity", "primitive"], rows


def _cmd_distance(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    f = parse_function(cfg.params["f"])
    g = parse_function(cfg.params["g"])
    x = int(cfg.params["x"])
    res = distance(f, g, x, table)
    rows = [{
        "f": f.label, "g": g.label, "x": x,
        "D2": res.squared, "D": res.value, "terms": res.terms,
    }]
    return ["f", "g", "x", "D2", "D", "terms"], rows


def _cmd_norm_identity(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    f = parse_function(cfg.params["f"])
    sigma = float(cfg.params["sigma"])
    cutoff = int(cfg.params["cutoff"]) if "cutoff" in cfg.params else None
    nr = sigma_norm(f, sigma, table, cutoff)
    zv = zeta(sigma, cfg.precision)
    Fv = dirichlet_F(f, sigma, None, table)
    lz, rz = zv.log_abs()
    lF, rF = Fv.log_abs()
    target = lz - lF
    budget = nr.tail_bound + rz + rF
    diff = abs(nr.squared - target)
    rows = [{
        "f": f.label, "sigma": sigma, "cutoff": nr.cutoff,
        "norm_sq": nr.squared, "tail_bound": nr.tail_bound,
        "log_zeta_over_F": target, "series_radius": rz + rF,
        "diff": diff, "within_budget": int(diff <= budget),
    }]
    header = ["f", "sigma", "cutoff", "norm_sq", "tail_bound",
              "log_zeta_over_F", "series_radius", "diff", "within_budget"]
    return header, rows


def _cmd_prop1(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    f = parse_function(cfg.params["f"])
    g = parse_function(cfg.params["g"])
    sigma = float(cfg.params["sigma"])
    r1, r2 = check_prop1(f, g, sigma, table)
    return _INEQ_HEADER, [_report_row(r1), _report_row(r2)]


def _cmd_cor2(cfg: RunConfig):
    prec = cfg.precision
    if "grid" in cfg.params:
        grids = _parse_grid(str(cfg.params["grid"]))
        sigmas = grids.get("sigma", [float(cfg.params.get("sigma", 1.5))])
        ts = grids.get("t")
        t1s = grids.get("t1", ts)
        t2s = grids.get("t2", ts)
        if t1s is None or t2s is None:
            raise PretentiousError("cor2 grid needs t=... or t1=...,t2=...")
        points = [
            (s, t1, t2, prec) for s in sigmas for t1 in t1s for t2 in t2s
        ]
    else:
        points = [(float(cfg.params.get("sigma", 1.5)),
                   float(cfg.params.get("t1", 0.0)),
                   float(cfg.params.get("t2", 0.0)), prec)]
    rows = _map_points(_cor2_point, points, cfg.jobs)
    return _INEQ_HEADER, rows


def _cmd_341(cfg: RunConfig):
    prec = cfg.precision
    if "grid" in cfg.params:
        grids = _parse_grid(str(cfg.params["grid"]))
        sigmas = grids.get("sigma", [float(cfg.params.get("sigma", 1.5))])
        ts = grids.get("t", [float(cfg.params.get("t", 0.0))])
        points = [(s, t, prec) for s in sigmas for t in ts]
    else:
        points = [(float(cfg.params.get("sigma", 1.5)),
                   float(cfg.params.get("t", 0.0)), prec)]
    rows = _map_points(_341_point, points, cfg.jobs)
    return _INEQ_HEADER, rows


def _cmd_lfun_triangle(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    chi = parse_character(cfg.params["chi"])
    psi = parse_character(cfg.params["psi"])
    rep = check_lfun_triangle(
        chi, psi,
        float(cfg.params.get("sigma", 1.5)),
        float(cfg.params.get("t1", 0.0)),
        float(cfg.params.get("t2", 0.0)),
        table,
        primitive_product=str(cfg.params.get("primitive_product", "0")) in ("1", "true", "True"),
    )
    row = _report_row(rep)
    row["name"] = f"{rep.name}[{rep.params['chi']};{rep.params['psi']}->{rep.params['product']}]"
    return _INEQ_HEADER, [row]


def _cmd_deriv_ineq(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    f = parse_function(cfg.params["f"])
    sigma = float(cfg.params.get("sigma", 1.5))
    sign = int(cfg.params.get("sign", 1))
    main, comp = check_derivative_ineq(f, sigma, sign, table)
    return _INEQ_HEADER, [_report_row(main), _report_row(comp)]


def _cmd_pv_scan(cfg: RunConfig):
    if "q" in cfg.params:
        chi = parse_character(str(cfg.params["q"]) + ":" + str(cfg.params.get("chi", "")))
        profiles = [pv_profile(chi)]
    else:
        profiles = pv_scan(int(cfg.params.get("q_max", 100)))
    rows = [{
        "q": p.q, "chi": p.chi, "max_abs": p.max_abs, "argmax_N": p.argmax_N,
        "pv_bound": p.pv_bound, "ratio": p.ratio,
    } for p in profiles]
    header = ["q", "chi", "max_abs", "argmax_N", "pv_bound", "ratio"]
    if "t" in cfg.params and "x" in cfg.params:
        t, x = float(cfg.params["t"]), int(cfg.params["x"])
        header += ["twisted_max", "twisted_ratio"]
        for row in rows:
            m, _, r = twisted_partial_max(parse_character(row["chi"]), x, t)
            row["twisted_max"] = m
            row["twisted_ratio"] = r
    return header, rows


def _cmd_dchi(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    chi = parse_character(cfg.params["chi"])
    x = int(cfg.params["x"])
    t = float(cfg.params.get("t", 0.0))
    s = d_chi_sum(chi, x, t, table)
    row = {"q": chi.modulus, "chi": chi.label, "x": x, "t": t,
           "sum_re": s.real, "sum_im": s.imag}
    if chi.modulus >= 3:
        row["bound_ratio"] = d_chi_bound_ratio(chi, x, t, table)
    else:
        row["bound_ratio"] = ""
    return ["q", "chi", "x", "t", "sum_re", "sum_im", "bound_ratio"], [row]


def _cmd_prop6_scan(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    q_min = int(cfg.params.get("q_min", 3))
    q_max = int(cfg.params.get("q_max", 50))
    t = float(cfg.params.get("t", 0.0))
    xs = [int(float(tok)) for tok in str(cfg.params.get("x_values", cfg.sieve_limit)).split(";")]
    rows_raw = prop6_scan(range(q_min, q_max + 1), xs, table, t=t)
    rows = [{
        "q": r.q, "chi": r.chi, "x": r.x, "D2": r.distance_squared,
        "bound": r.bound_value, "implied_c": r.implied_c,
    } for r in rows_raw]
    if rows_raw:
        print(f"min implied_c over scan: {min_implied_c(rows_raw)!r}", file=sys.stderr)
    return ["q", "chi", "x", "D2", "bound", "implied_c"], rows


def _cmd_lemma_scan(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    lemma = int(cfg.params["lemma"])
    y = int(float(cfg.params.get("y", cfg.sieve_limit)))
    kwargs = {}
    if "g" in cfg.params:
        kwargs["order_g"] = int(cfg.params["g"])
    if "q_max" in cfg.params:
        kwargs["chi_q_max"] = int(cfg.params["q_max"])
    if "cond_max" in cfg.params:
        kwargs["cond_max"] = int(cfg.params["cond_max"])
    if "A" in cfg.params:
        kwargs["top_j"] = int(cfg.params["A"])
    if "chi" in cfg.params:
        kwargs["chi"] = parse_character(str(cfg.params["chi"]))
    if "max_rows" in cfg.params:
        kwargs["max_rows"] = int(cfg.params["max_rows"])
    rows_raw = lemma_distance_scan(lemma, y, table, **kwargs)
    # exploratory: o(1) terms in the lemma shapes rule out pass/fail here
    print("lemma scan is exploratory; rows are diagnostic only", file=sys.stderr)
    rows = [{
        "lemma": r.lemma, "params": r.params, "lhs": r.lhs,
        "loglogy": r.loglogy, "ratio": r.ratio, "main_coeff": r.main_coeff,
    } for r in rows_raw]
    return ["lemma", "params", "lhs", "loglogy", "ratio", "main_coeff"], rows


_HALASZ_HEADER = ["f", "x", "T", "mean_re", "mean_im", "heuristic", "M",
                  "t_star", "halasz_rhs", "ratio_heur", "ratio_halasz"]


def _cmd_halasz(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    f = parse_function(cfg.params["f"])
    x = int(cfg.params["x"])
    T = float(cfg.params.get("T", 10.0))
    spacing = float(cfg.params["spacing"]) if "spacing" in cfg.params else None
    rep = halasz_report(f, x, T, table, HalaszGrid(spacing=spacing))
    rows = [{
        "f": rep.f, "x": rep.x, "T": rep.T,
        "mean_re": rep.mean.real, "mean_im": rep.mean.imag,
        "heuristic": rep.heuristic, "M": rep.M, "t_star": rep.t_star,
        "halasz_rhs": rep.halasz_rhs, "ratio_heur": rep.ratio_heuristic,
        "ratio_halasz": rep.ratio_halasz,
    }]
    return _HALASZ_HEADER, rows


def _cmd_hall(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    header = ["f", "x", "kappa", "mean_abs", "damped_heuristic", "ratio"]
    if "family" in cfg.params:
        reports, max_ratio = hall_family_scan(
            int(cfg.params["family"]), int(cfg.params["x"]), cfg.seed, table
        )
        print(f"max hall ratio over family: {max_ratio!r}", file=sys.stderr)
    else:
        reports = [hall_real_diagnostic(parse_function(cfg.params["f"]),
                                        int(cfg.params["x"]), table)]
    rows = [{
        "f": r.f, "x": r.x, "kappa": r.kappa, "mean_abs": r.mean_abs,
        "damped_heuristic": r.damped_heuristic, "ratio": r.ratio,
    } for r in reports]
    return header, rows


def _cmd_mean(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    f = parse_function(cfg.params["f"])
    x = int(cfg.params["x"])
    m = mean_value(f, x, table)
    heur = heuristic_value(f, x, table, allow_complex=True)
    rows = [{"f": f.label, "x": x, "mean_re": m.real, "mean_im": m.imag,
             "mean_abs": abs(m), "heuristic": heur}]
    return ["f", "x", "mean_re", "mean_im", "mean_abs", "heuristic"], rows


def _cmd_progression(cfg: RunConfig):
    table = build_prime_table(cfg.sieve_limit)
    f = parse_function(cfg.params["f"])
    x, q, a = int(cfg.params["x"]), int(cfg.params["q"]), int(cfg.params["a"])
    m = progression_mean(f, x, q, a, table)
    rows = [{"f": f.label, "x": x, "q": q, "a": a,
             "mean_re": m.real, "mean_im": m.imag, "mean_abs": abs(m)}]
    return ["f", "x", "q", "a", "mean_re", "mean_im", "mean_abs"], rows


_DISPATCH = {
    "sieve-info": _cmd_sieve_info,
    "char-list": _cmd_char_list,
    "distance": _cmd_distance,
    "norm-identity": _cmd_norm_identity,
    "prop1": _cmd_prop1,
    "cor2": _cmd_cor2,
    "three-four-one": _cmd_341,
    "lfun-triangle": _cmd_lfun_triangle,
    "deriv-ineq": _cmd_deriv_ineq,
    "pv-scan": _cmd_pv_scan,
    "dchi": _cmd_dchi,
    "prop6-scan": _cmd_prop6_scan,
    "lemma-scan": _cmd_lemma_scan,
    "halasz": _cmd_halasz,
    "hall": _cmd_hall,
    "mean": _cmd_mean,
    "progression": _cmd_progression,
}


def run(cfg: RunConfig) -> int:
    """Execute one config: artifact + manifest, returning the exit status."""
    if cfg.command not in _DISPATCH:
        raise PretentiousError(f"unknown command {cfg.command!r}; valid: {', '.join(COMMANDS)}")
    started = time.time()
    header, rows = _DISPATCH[cfg.command](cfg)
    _write_rows(cfg.out, cfg.fmt, header, rows)
    wall = time.time() - started
    manifest = {
        "command": cfg.command,
        "config": cfg.to_lines(),
        "version": __version__,
        "wall_time_s": wall,
        "artifact": cfg.out,
        "rows": len(rows),
    }
    with open(cfg.out + ".manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=1)
        fh.write("\n")
    if cfg.command in _VERIFICATION_COMMANDS:
        if any(row.get("verdict") == VERDICT_FAILS for row in rows):
            return 2
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pretentious",
        description="distance machinery for multiplicative functions: "
                    "evaluations, inequality verdicts, scans",
    )
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--sieve-limit", type=int, default=10**6)
    ap.add_argument("--precision", type=float, default=1e-8)
    ap.add_argument("--out", default=None)
    ap.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    # command parameters (each command reads the subset it needs)
    ap.add_argument("--sigma", type=float)
    ap.add_argument("--t", type=float)
    ap.add_argument("--t1", type=float)
    ap.add_argument("--t2", type=float)
    ap.add_argument("--x", type=int)
    ap.add_argument("--q", type=int)
    ap.add_argument("--q-min", type=int, dest="q_min")
    ap.add_argument("--q-max", type=int, dest="q_max")
    ap.add_argument("--chi")
    ap.add_argument("--psi")
    ap.add_argument("--f")
    ap.add_argument("--g")
    ap.add_argument("--T", type=float)
    ap.add_argument("--grid")
    ap.add_argument("--cutoff", type=int)
    ap.add_argument("--sign", type=int, choices=(-1, 1))
    ap.add_argument("--x-values", dest="x_values",
                    help="semicolon-separated x list for scans, e.g. '1e5;1e6'")
    ap.add_argument("--lemma", type=int, choices=(3, 4, 5))
    ap.add_argument("--y", type=float)
    ap.add_argument("--g-order", type=int, dest="g_order",
                    help="tuple length / character order g in lemma scans")
    ap.add_argument("--cond-max", type=int, dest="cond_max")
    ap.add_argument("--A", type=int, help="rank count for ranked-distance scans")
    ap.add_argument("--max-rows", type=int, dest="max_rows")
    ap.add_argument("--family", type=int, help="size of the random family for hall")
    ap.add_argument("--a", type=int)
    ap.add_argument("--spacing", type=float, help="grid spacing override for halasz")
    ap.add_argument("--mode", help="sieve mode for sieve-info (primes|spf)")
    ap.add_argument("--primitive-product", action="store_true",
                    help="replace the product character by its primitive inducer")
    return ap


_PARAM_KEYS = (
    "sigma", "t", "t1", "t2", "x", "q", "q_min", "q_max", "chi", "psi", "f",
    "g", "T", "grid", "cutoff", "sign", "x_values", "lemma", "y", "cond_max",
    "A", "max_rows", "family", "a", "spacing", "mode",
)


def _config_from_args(argv: list[str]) -> RunConfig:
    ap = _build_parser()
    ns = ap.parse_args(argv)
    params: dict = {}
    for key in _PARAM_KEYS:
        val = getattr(ns, key, None)
        if val is not None:
            params[key] = val
    if ns.g_order is not None:
        params["g"] = ns.g_order
    if ns.y is not None:
        params["y"] = int(ns.y)
    if ns.primitive_product:
        params["primitive_product"] = 1
    cfg = RunConfig(
        command=ns.command,
        params=params,
        sieve_limit=ns.sieve_limit,
        precision=ns.precision,
        out=ns.out or f"{ns.command}.csv",
        fmt=ns.fmt,
        seed=ns.seed,
        jobs=ns.jobs,
    )
    return cfg


def _config_from_file(path: str) -> RunConfig:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        manifest = json.loads(text)
        return RunConfig.from_lines(manifest["config"])
    return RunConfig.from_lines(text.splitlines())


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and argv[0] == "--config":
            if len(argv) < 2:
                raise PretentiousError("--config needs a file path")
            cfg = _config_from_file(argv[1])
        else:
            cfg = _config_from_args(argv)
        return run(cfg)
    except PretentiousError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SystemExit as exc:  # argparse: keep --help at 0, errors at 3
        return 0 if exc.code in (0, None) else 3


if __name__ == "__main__":
    sys.exit(main())
