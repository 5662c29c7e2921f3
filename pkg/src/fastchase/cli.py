"""Command-line interface: simulation sweeps, single-shot decoding, benches.

Subcommands
-----------
sim     Monte-Carlo sweep over a channel parameter; CSV on stdout or --output.
decode  Decode one received word from symbols + per-coordinate reliabilities.
bench   Measure worst-case field multiplications per tree edge against the
        closed-form per-kernel bounds.

Configuration is an INI-style file (any section names; keys are merged
flat) plus command-line flag overrides.  Every CSV starts with a
``# config:`` comment echoing the canonical configuration, so a run can be
reproduced from its output alone.

Exit codes: 0 success; 1 decode produced an empty candidate list;
2 configuration error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import configparser
import random
import sys
import time
from typing import Optional

from .channel import QSymmetricChannel, ReliabilityInfo, SoftSymmetricChannel, select_best
from .gf import DEFAULT_POLYS, FieldCtx
from .grs import GrsCode, encode, hamming_distance, syndrome, unit_multipliers
from .groebner import solve_key_equation
from .kernels import KERNEL_ALIASES, KERNELS, CoeffKernel, EdgeMod, get_kernel
from .pipeline import decode_frame
from .tree import gmd_traverse, hard_decision_estimate
from .channel import pick_unreliable  # noqa: F401  (re-export convenience)

CSV_HEADER = "sweep_param,fer,ser,avg_candidates,avg_edges,avg_mults,wall_ms"

SIM_DEFAULTS = {
    "m": 4,
    "prim_poly": None,
    "d": 5,
    "multipliers": "ones",
    "channel": "qsym",
    "sweep": "0.05",
    "eta": 4,
    "mu": 2,
    "r_max": 3,
    "kernel": "pairs",
    "trials": 100,
    "seed": 0,
    "jobs": 1,
}


class ConfigError(Exception):
    """Invalid configuration; message names the offending field."""


def _parse_int(field: str, value, lo: Optional[int] = None, hi: Optional[int] = None) -> int:
    try:
        out = int(str(value), 0)
    except ValueError:
        raise ConfigError(f"{field}: expected an integer, got {value!r}")
    if lo is not None and out < lo:
        raise ConfigError(f"{field}: must be >= {lo}, got {out}")
    if hi is not None and out > hi:
        raise ConfigError(f"{field}: must be <= {hi}, got {out}")
    return out


def _parse_sweep(field: str, value) -> list[float]:
    points = []
    for item in str(value).split(","):
        item = item.strip()
        if not item:
            continue
        try:
            p = float(item)
        except ValueError:
            raise ConfigError(f"{field}: expected comma-separated floats, got {item!r}")
        if not 0.0 < p < 1.0:
            raise ConfigError(f"{field}: sweep points must lie in (0, 1), got {p}")
        points.append(p)
    if not points:
        raise ConfigError(f"{field}: at least one sweep point required")
    return points


def _canonical_kernel(field: str, name: str) -> str:
    key = str(name).lower()
    key = KERNEL_ALIASES.get(key, key)
    if key not in KERNELS:
        raise ConfigError(
            f"{field}: unknown kernel {name!r}; choose from "
            f"{sorted(KERNELS)} or aliases {sorted(KERNEL_ALIASES)}"
        )
    return key


def load_config(path: Optional[str], overrides: dict, defaults: dict) -> dict:
    """Merge defaults <- INI file (all sections, flat) <- flag overrides."""
    merged = dict(defaults)
    if path is not None:
        parser = configparser.ConfigParser()
        read = parser.read(path)
        if not read:
            raise ConfigError(f"config: cannot read file {path!r}")
        for section in parser.sections():
            for key, value in parser.items(section):
                key = key.replace("-", "_")
                if key not in defaults:
                    raise ConfigError(f"{key}: unknown configuration key")
                merged[key] = value
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value
    return merged


def canonical_config(cfg: dict) -> str:
    return " ".join(f"{k}={cfg[k]}" for k in sorted(cfg))


def build_code(cfg: dict) -> GrsCode:
    m = _parse_int("m", cfg["m"], 2, 20)
    prim = cfg.get("prim_poly")
    if prim is not None:
        prim = _parse_int("prim_poly", prim, 1)
    elif m not in DEFAULT_POLYS:
        raise ConfigError(f"m: no default primitive polynomial for m={m}; pass prim_poly")
    try:
        ctx = FieldCtx(m, prim_poly=prim)
    except ValueError as exc:
        raise ConfigError(f"prim_poly: {exc}")
    n = ctx.q - 1
    d = _parse_int("d", cfg["d"], 3, n)
    if d % 2 == 0:
        raise ConfigError(f"d: must be odd, got {d}")
    spec = str(cfg.get("multipliers", "ones")).strip()
    if spec == "ones":
        mult = unit_multipliers(ctx)
    else:
        try:
            mult = tuple(int(x.strip(), 0) for x in spec.split(","))
        except ValueError:
            raise ConfigError(f"multipliers: expected 'ones' or {n} comma-separated symbols")
        if len(mult) != n:
            raise ConfigError(f"multipliers: expected {n} entries, got {len(mult)}")
        if any(not 0 < x < ctx.q for x in mult):
            raise ConfigError("multipliers: entries must be nonzero field elements")
    return GrsCode(ctx, d, mult)


def _validate_sim(cfg: dict) -> dict:
    """Normalize and validate a sim configuration; returns plain types."""
    code = build_code(cfg)
    out = {
        "m": code.ctx.m,
        "prim_poly": code.ctx.prim_poly,
        "d": code.d,
        "multipliers": cfg.get("multipliers", "ones"),
        "sweep": _parse_sweep("sweep", cfg["sweep"]),
        "eta": _parse_int("eta", cfg["eta"], 1, code.n),
        "mu": _parse_int("mu", cfg["mu"], 2, code.ctx.q),
        "r_max": _parse_int("r_max", cfg["r_max"], 0),
        "kernel": _canonical_kernel("kernel", cfg["kernel"]),
        "trials": _parse_int("trials", cfg["trials"], 0),
        "seed": _parse_int("seed", cfg["seed"]),
        "jobs": _parse_int("jobs", cfg["jobs"], 1),
    }
    channel = str(cfg["channel"]).lower()
    if channel not in ("qsym", "soft"):
        raise ConfigError(f"channel: expected 'qsym' or 'soft', got {cfg['channel']!r}")
    out["channel"] = channel
    if out["r_max"] > out["eta"]:
        raise ConfigError(f"r_max: must be <= eta ({out['eta']}), got {out['r_max']}")
    return out


def _sim_code(cfg: dict) -> GrsCode:
    ctx = FieldCtx(cfg["m"], prim_poly=cfg["prim_poly"])
    spec = str(cfg["multipliers"]).strip()
    if spec == "ones":
        mult = unit_multipliers(ctx)
    else:
        mult = tuple(int(x.strip(), 0) for x in spec.split(","))
    return GrsCode(ctx, cfg["d"], mult)


def _sim_trials(cfg: dict, p: float, trials) -> tuple:
    """Run the given trial indices; returns summed per-frame statistics.

    Each trial draws from its own Random seeded by (seed, p, index), so
    the totals are independent of how trials are split across workers.
    """
    code = _sim_code(cfg)
    ctx = code.ctx
    channel = QSymmetricChannel(p) if cfg["channel"] == "qsym" else SoftSymmetricChannel(p)
    frame_errs = sym_errs = n_cands = n_edges = n_mults = 0
    for trial in trials:
        rng = random.Random(f"{cfg['seed']}:{p!r}:{trial}")
        msg = [rng.randrange(ctx.q) for _ in range(code.k)]
        cw = tuple(encode(code, msg))
        y, info = channel.transmit(code, cw, rng)
        before = ctx.counter.mults
        report = decode_frame(
            code, y, info, cfg["eta"], cfg["mu"], cfg["r_max"], kernel=cfg["kernel"]
        )
        n_mults += ctx.counter.mults - before
        if report.hd_success:
            n_cands += 1
        else:
            n_cands += len(report.candidates)
            n_edges += report.stats.edges
        decoded = report.decoded if report.decoded is not None else tuple(y)
        dist = hamming_distance(decoded, cw)
        sym_errs += dist
        frame_errs += 1 if dist else 0
    return frame_errs, sym_errs, n_cands, n_edges, n_mults


def _sim_worker(args) -> tuple:
    cfg, p, trials = args
    return _sim_trials(cfg, p, trials)


def cmd_sim(cfg: dict, stream) -> int:
    cfg = _validate_sim(cfg)
    echo = dict(cfg)
    echo["sweep"] = ",".join(f"{p:g}" for p in cfg["sweep"])
    stream.write(f"# config: {canonical_config(echo)}\n")
    stream.write(CSV_HEADER + "\n")
    trials = cfg["trials"]
    jobs = cfg["jobs"]
    for p in cfg["sweep"]:
        if trials == 0:
            continue
        start = time.perf_counter()
        if jobs == 1:
            totals = _sim_trials(cfg, p, range(trials))
        else:
            chunks = [
                (cfg, p, list(range(w, trials, jobs))) for w in range(min(jobs, trials))
            ]
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_sim_worker, chunks))
            totals = tuple(sum(part[i] for part in parts) for i in range(5))
        frame_errs, sym_errs, n_cands, n_edges, n_mults = totals
        wall_ms = (time.perf_counter() - start) * 1000.0
        n = (1 << cfg["m"]) - 1
        stream.write(
            f"{p:g},{frame_errs / trials:.6g},{sym_errs / (trials * n):.6g},"
            f"{n_cands / trials:.6g},{n_edges / trials:.6g},"
            f"{n_mults / trials:.6g},{wall_ms:.3f}\n"
        )
    return 0


DECODE_DEFAULTS = {
    "m": 4,
    "prim_poly": None,
    "d": 5,
    "multipliers": "ones",
    "eta": 4,
    "mu": 2,
    "r_max": 3,
    "kernel": "pairs",
}


def _parse_symbols(field: str, text: str, q: int) -> list[int]:
    out = []
    for item in str(text).split(","):
        item = item.strip()
        try:
            val = int(item, 0)
        except ValueError:
            raise ConfigError(f"{field}: malformed symbol {item!r}")
        if not 0 <= val < q:
            raise ConfigError(f"{field}: symbol {val} outside field of size {q}")
        out.append(val)
    return out


def _reliability_info(code: GrsCode, y, reliabilities) -> ReliabilityInfo:
    """Synthetic posterior matrix from one reliability score per coordinate.

    The received symbol gets the stated probability; the remaining mass is
    spread uniformly over the other symbols.
    """
    q = code.ctx.q
    posteriors = []
    scores = []
    for yi, rel in zip(y, reliabilities):
        rest = (1.0 - rel) / (q - 1)
        row = [rest] * q
        row[yi] = rel
        posteriors.append(row)
        scores.append(rel - rest)
    return ReliabilityInfo(hard=list(y), posteriors=posteriors, scores=scores)


def cmd_decode(cfg: dict, received: str, reliability: str, gmd: bool, stream) -> int:
    code = build_code(cfg)
    ctx = code.ctx
    eta = _parse_int("eta", cfg["eta"], 1, code.n)
    mu = _parse_int("mu", cfg["mu"], 2, ctx.q)
    r_max = _parse_int("r_max", cfg["r_max"], 0, eta)
    kernel = _canonical_kernel("kernel", cfg["kernel"])
    y = _parse_symbols("received", received, ctx.q)
    if len(y) != code.n:
        raise ConfigError(f"received: expected {code.n} symbols, got {len(y)}")
    try:
        rel = [float(x) for x in str(reliability).split(",")]
    except ValueError:
        raise ConfigError("reliability: expected comma-separated floats")
    if len(rel) != code.n:
        raise ConfigError(f"reliability: expected {code.n} entries, got {len(rel)}")
    if any(not 0.0 <= x <= 1.0 for x in rel):
        raise ConfigError("reliability: entries must lie in [0, 1]")

    info = _reliability_info(code, y, rel)
    S = syndrome(code, y)
    basis = solve_key_equation(code, S)
    hd = hard_decision_estimate(code, S, basis)
    if hd is not None:
        evec = hd.vector(code)
        decoded = tuple(ctx.sub(yi, ei) for yi, ei in zip(y, evec))
        stream.write(f"hard-decision: success, {hd.weight()} error(s)\n")
        stream.write("decoded: " + ",".join(str(c) for c in decoded) + "\n")
        return 0
    stream.write("hard-decision: failure\n")

    if gmd:
        erased = [code.locator_of(i) for i, x in enumerate(rel) if x <= 0.0]
        if not erased:
            raise ConfigError("reliability: GMD mode needs at least one zero-reliability coordinate")
        cands = gmd_traverse(code, S, erased, kernel_name=kernel, basis=basis)
        stream.write(f"gmd: {len(erased)} erasure(s)\n")
    else:
        I, A_sets = pick_unreliable(code, info, eta, mu)
        from .tree import ChaseConfig, traverse

        cands, _stats = traverse(code, S, I, A_sets, ChaseConfig(r_max=r_max, kernel=kernel), basis=basis)
    for idx, cand in enumerate(cands):
        locs = ",".join(str(a) for a in cand.estimate.locators)
        vals = ",".join(str(v) for v in cand.estimate.values)
        stream.write(f"candidate {idx}: depth={cand.depth} locators=[{locs}] values=[{vals}]\n")
    if len(cands) == 0:
        stream.write("no candidates\n")
        return 1
    best = select_best(code, y, cands, info)
    stream.write("selected: " + ",".join(str(c) for c in best) + "\n")
    return 0


BENCH_DEFAULTS = {
    "m": 4,
    "prim_poly": None,
    "d": 5,
    "multipliers": "ones",
    "kernel": "compact",
    "r_max": 3,
    "trials": 200,
    "seed": 0,
}

BENCH_BOUNDS = {
    "compact": lambda code, r: 12 * code.t + 12 * r + 3,
    "evals": lambda code, r: 12 * code.n,
    "coeffs": lambda code, r: 20 * r + 3,
}


def measure_edge_mults(code: GrsCode, kernel_name: str, r_max: int, trials: int, seed: int) -> dict:
    """Max multiplications per edge at each depth, nonzero-discrepancy edges only.

    Walks random edge chains (random locations, random wrong values) on
    frames with t + r_max planted errors; an edge sample counts only when
    both the root and derivative discrepancies of both basis rows are
    nonzero, the regime the closed-form bounds describe.
    """
    ctx = code.ctx
    kernel = CoeffKernel(footnote_scaling=True) if kernel_name == "coeffs" else get_kernel(kernel_name)
    rng = random.Random(seed)
    maxima = {r: 0 for r in range(1, r_max + 1)}
    for _ in range(trials):
        msg = [rng.randrange(ctx.q) for _ in range(code.k)]
        y = list(encode(code, msg))
        for i in rng.sample(range(code.n), code.t + r_max):
            y[i] = ctx.add(y[i], rng.randrange(1, ctx.q))
        S = syndrome(code, y)
        basis = solve_key_equation(code, S)
        coords = rng.sample(range(code.n), r_max)
        chain = [
            (code.locator_of(i), rng.randrange(1, ctx.q), code.multipliers[i]) for i in coords
        ]
        state = kernel.start(code, S, basis, locators=tuple(alpha for alpha, _, _ in chain))
        for depth, (alpha, beta, a) in enumerate(chain, start=1):
            before = ctx.counter.mults
            state, report = kernel.apply_edge(state, EdgeMod(alpha, beta, a))
            used = ctx.counter.mults - before
            deltas = list(report.delta_root) + list(report.delta_der or (0, 0))
            if all(dv != 0 for dv in deltas):
                maxima[depth] = max(maxima[depth], used)
    return maxima


def cmd_bench(cfg: dict, stream) -> int:
    code = build_code(cfg)
    kernel = _canonical_kernel("kernel", cfg["kernel"])
    if kernel not in BENCH_BOUNDS:
        raise ConfigError(f"kernel: bench supports compact/evals/coeffs (A2/B/C), got {cfg['kernel']!r}")
    r_max = _parse_int("r_max", cfg["r_max"], 1, code.n - code.t)
    trials = _parse_int("trials", cfg["trials"], 1)
    seed = _parse_int("seed", cfg["seed"])
    echo = {k: cfg.get(k) for k in BENCH_DEFAULTS}
    echo.update(kernel=kernel, r_max=r_max, trials=trials, seed=seed)
    stream.write(f"# config: {canonical_config(echo)}\n")
    stream.write("depth,measured_max_mults,bound,status\n")
    maxima = measure_edge_mults(code, kernel, r_max, trials, seed)
    violations = 0
    for r in range(1, r_max + 1):
        bound = BENCH_BOUNDS[kernel](code, r)
        status = "ok" if maxima[r] <= bound else "VIOLATION"
        violations += status != "ok"
        stream.write(f"{r},{maxima[r]},{bound},{status}\n")
    if violations:
        stream.write(f"# {violations} bound violation(s)\n")
    return 0


def _add_common_code_flags(sub) -> None:
    sub.add_argument("--m", type=str, help="field extension degree over GF(2)")
    sub.add_argument("--prim-poly", dest="prim_poly", type=str, help="primitive polynomial bitmask")
    sub.add_argument("--d", type=str, help="design distance (odd)")
    sub.add_argument("--multipliers", type=str, help="'ones' or comma-separated column multipliers")
    sub.add_argument("--kernel", type=str, help="pairs/compact/evals/coeffs or A/A2/B/C")
    sub.add_argument("--config", type=str, default=None, help="INI configuration file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fastchase")
    subs = parser.add_subparsers(dest="command", required=True)

    sim = subs.add_parser("sim", help="Monte-Carlo channel sweep, CSV output")
    _add_common_code_flags(sim)
    sim.add_argument("--channel", type=str, help="qsym or soft")
    sim.add_argument("--sweep", type=str, help="comma-separated channel parameters")
    sim.add_argument("--eta", type=str)
    sim.add_argument("--mu", type=str)
    sim.add_argument("--r-max", dest="r_max", type=str)
    sim.add_argument("--trials", type=str)
    sim.add_argument("--seed", type=str)
    sim.add_argument("--jobs", type=str, help="worker processes for trial fan-out")
    sim.add_argument("--output", type=str, default=None, help="CSV file (default stdout)")

    dec = subs.add_parser("decode", help="decode one received word")
    _add_common_code_flags(dec)
    dec.add_argument("--received", type=str, required=True, help="comma-separated symbols (dec or 0x hex)")
    dec.add_argument("--reliability", type=str, required=True, help="comma-separated scores in [0,1]")
    dec.add_argument("--eta", type=str)
    dec.add_argument("--mu", type=str)
    dec.add_argument("--r-max", dest="r_max", type=str)
    dec.add_argument("--gmd", action="store_true", help="erasure-only decoding of zero-reliability coordinates")

    ben = subs.add_parser("bench", help="per-edge multiplication counts vs bounds")
    _add_common_code_flags(ben)
    ben.add_argument("--r-max", dest="r_max", type=str)
    ben.add_argument("--trials", type=str)
    ben.add_argument("--seed", type=str)
    ben.add_argument("--output", type=str, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sim":
            overrides = {
                k: getattr(args, k)
                for k in SIM_DEFAULTS
                if hasattr(args, k)
            }
            cfg = load_config(args.config, overrides, SIM_DEFAULTS)
            if args.output:
                with open(args.output, "w") as fh:
                    return cmd_sim(cfg, fh)
            return cmd_sim(cfg, sys.stdout)
        if args.command == "decode":
            overrides = {k: getattr(args, k) for k in DECODE_DEFAULTS if hasattr(args, k)}
            cfg = load_config(args.config, overrides, DECODE_DEFAULTS)
            return cmd_decode(cfg, args.received, args.reliability, args.gmd, sys.stdout)
        if args.command == "bench":
            overrides = {k: getattr(args, k) for k in BENCH_DEFAULTS if hasattr(args, k)}
            cfg = load_config(args.config, overrides, BENCH_DEFAULTS)
            if args.output:
                with open(args.output, "w") as fh:
                    return cmd_bench(cfg, fh)
            return cmd_bench(cfg, sys.stdout)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
