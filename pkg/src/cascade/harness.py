"""Experiment orchestration: configs, Monte-Carlo sweeps, CSV output.

Configuration files are flat ``key = value`` text ('#' comments, blank
lines allowed). The recognised keys form a closed set:

  common    n, reps, seed, workers, out
  model     alpha, t_w, t_f, graph (er | config),
            dist_w.kind (poisson | powerlaw_cutoff | explicit),
            dist_w.mean, dist_w.exponent, dist_w.cutoff, dist_w.pmf_file,
            and the same under dist_f.*
  sweep     sweep.param (t_lambda_both | t_beta_both | t_f | t_w | alpha),
            sweep.values   -- "a,b,c" or "start:stop:step"
  boundary  boundary.mode (er | general), boundary.alphas, boundary.axis
  bound     bound.gamma, bound.complete_f (true | false), bound.lambda_f
  kernel    kernel.file, or kernel.alpha_f, kernel.alpha_t,
            kernel.strength_w, kernel.strength_f, kernel.strength_t

Per-replicate RNG streams derive from (master seed, grid index,
replicate index), so results are independent of worker count and
execution order; CSV output is byte-stable for a fixed config + seed.
Floats are written with 10 significant digits, '.' decimal separator.
"""

from __future__ import annotations

import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernel as kernelmod
from . import netgen, percolate, theory
from .dist import DegreeDistribution, beta
from .errors import ConfigError, InvariantViolation

DEFAULT_N = 200_000
DEFAULT_REPS = 200
DEFAULT_SEED = 1
GIANT_LEVEL = 0.01  # empirical threshold: first grid point with mean c1/n above this
MAX_EDGES_PER_GRAPH = 50_000_000  # memory guard: ~1.2 GB of edge arrays

SWEEP_PARAMS = ("t_lambda_both", "t_beta_both", "t_f", "t_w", "alpha")

_COMMON_KEYS = {"n", "reps", "seed", "workers", "out"}
_MODEL_KEYS = {"alpha", "t_w", "t_f", "graph"} | {
    f"dist_{side}.{k}"
    for side in ("w", "f")
    for k in ("kind", "mean", "exponent", "cutoff", "pmf_file")
}
_SWEEP_KEYS = {"sweep.param", "sweep.values"}
_BOUNDARY_KEYS = {"boundary.mode", "boundary.alphas", "boundary.axis"}
_BOUND_KEYS = {"bound.gamma", "bound.complete_f", "bound.lambda_f"}
_KERNEL_KEYS = {"kernel.file", "kernel.alpha_f", "kernel.alpha_t",
                "kernel.strength_w", "kernel.strength_f", "kernel.strength_t"}

_ALLOWED_KEYS = {
    "analyze": _COMMON_KEYS | _MODEL_KEYS,
    "simulate": _COMMON_KEYS | _MODEL_KEYS,
    "sweep": _COMMON_KEYS | _MODEL_KEYS | _SWEEP_KEYS,
    "boundary": _COMMON_KEYS | _MODEL_KEYS | _BOUNDARY_KEYS,
    "check-bound": _COMMON_KEYS | _MODEL_KEYS | _BOUND_KEYS,
    "kernel": _COMMON_KEYS | _KERNEL_KEYS,
}

MODES = tuple(_ALLOWED_KEYS)


# -- config parsing -----------------------------------------------------


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    """Parse flat ``key = value`` lines into a dict; duplicates are errors."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {line!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.split("#", 1)[0].strip()
        if not key or not val:
            raise ConfigError(f"{source}:{lineno}: empty key or value")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        values[key] = val
    return values


def load_config(path) -> dict[str, str]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read(), source=str(path))


def parse_value_grid(text: str) -> np.ndarray:
    """Parse "a,b,c" or "start:stop:step" (stop inclusive up to rounding)."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"range syntax is start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0.0:
            raise ConfigError("range step must be positive")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        if count < 1:
            raise ConfigError(f"empty range {text!r}")
        values = start + step * np.arange(count)
    else:
        values = np.array([float(p) for p in text.split(",") if p.strip() != ""])
    if values.size == 0:
        raise ConfigError(f"empty value grid {text!r}")
    return values.astype(np.float64)


def _parse_bool(text: str, key: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ConfigError(f"{key} must be true/false, got {text!r}")


def _build_dist(kv: dict[str, str], side: str) -> DegreeDistribution | None:
    prefix = f"dist_{side}."
    kind = kv.get(prefix + "kind")
    if kind is None:
        return None
    if kind == "poisson":
        if prefix + "mean" not in kv:
            raise ConfigError(f"{prefix}mean required for poisson")
        return DegreeDistribution.poisson(float(kv[prefix + "mean"]))
    if kind == "powerlaw_cutoff":
        for suffix in ("exponent", "cutoff"):
            if prefix + suffix not in kv:
                raise ConfigError(f"{prefix}{suffix} required for powerlaw_cutoff")
        return DegreeDistribution.powerlaw_cutoff(
            float(kv[prefix + "exponent"]), float(kv[prefix + "cutoff"]))
    if kind == "explicit":
        if prefix + "pmf_file" not in kv:
            raise ConfigError(f"{prefix}pmf_file required for explicit")
        return DegreeDistribution.from_pmf_file(kv[prefix + "pmf_file"])
    raise ConfigError(f"unknown distribution kind {kind!r}")


@dataclass
class ExperimentConfig:
    """One fully-resolved experiment: mode plus everything it needs."""

    mode: str
    n: int = DEFAULT_N
    reps: int = DEFAULT_REPS
    seed: int = DEFAULT_SEED
    workers: int = 1
    out: str | None = None
    alpha: float = 1.0
    t_w: float = 1.0
    t_f: float = 1.0
    graph: str = "er"
    dist_w: DegreeDistribution | None = None
    dist_f: DegreeDistribution | None = None
    sweep_param: str | None = None
    sweep_values: np.ndarray | None = None
    boundary_mode: str = "er"
    boundary_alphas: list = field(default_factory=list)
    boundary_axis: np.ndarray | None = None
    bound_gamma: float = 0.5
    bound_complete_f: bool = False
    bound_lambda_f: float | None = None
    kernel_file: str | None = None
    kernel_params: dict | None = None


def build_config(mode: str, kv: dict[str, str],
                 overrides: dict | None = None) -> ExperimentConfig:
    """Validate raw key-values for a mode and resolve an ExperimentConfig.

    ``overrides`` (CLI flags) take precedence over the file.
    """
    if mode not in _ALLOWED_KEYS:
        raise ConfigError(f"unknown mode {mode!r}")
    unknown = set(kv) - _ALLOWED_KEYS[mode]
    if unknown:
        raise ConfigError(f"keys not recognised for mode {mode}: {sorted(unknown)}")

    cfg = ExperimentConfig(mode=mode)
    if "n" in kv:
        cfg.n = int(kv["n"])
    if "reps" in kv:
        cfg.reps = int(kv["reps"])
    if "seed" in kv:
        cfg.seed = int(kv["seed"])
    if "workers" in kv:
        cfg.workers = int(kv["workers"])
    else:
        cfg.workers = max(1, min(4, os.cpu_count() or 1))
    if "out" in kv:
        cfg.out = kv["out"]
    if "alpha" in kv:
        cfg.alpha = float(kv["alpha"])
    if "t_w" in kv:
        cfg.t_w = float(kv["t_w"])
    if "t_f" in kv:
        cfg.t_f = float(kv["t_f"])
    if "graph" in kv:
        if kv["graph"] not in ("er", "config"):
            raise ConfigError(f"graph must be 'er' or 'config', got {kv['graph']!r}")
        cfg.graph = kv["graph"]
    cfg.dist_w = _build_dist(kv, "w")
    cfg.dist_f = _build_dist(kv, "f")

    if mode == "sweep":
        if "sweep.param" not in kv or "sweep.values" not in kv:
            raise ConfigError("sweep mode requires sweep.param and sweep.values")
        if kv["sweep.param"] not in SWEEP_PARAMS:
            raise ConfigError(
                f"sweep.param must be one of {SWEEP_PARAMS}, got {kv['sweep.param']!r}")
        cfg.sweep_param = kv["sweep.param"]
        cfg.sweep_values = parse_value_grid(kv["sweep.values"])
    if mode == "boundary":
        if "boundary.alphas" not in kv or "boundary.axis" not in kv:
            raise ConfigError("boundary mode requires boundary.alphas and boundary.axis")
        cfg.boundary_mode = kv.get("boundary.mode", "er")
        if cfg.boundary_mode not in ("er", "general"):
            raise ConfigError("boundary.mode must be 'er' or 'general'")
        cfg.boundary_alphas = [float(a) for a in kv["boundary.alphas"].split(",")]
        cfg.boundary_axis = parse_value_grid(kv["boundary.axis"])
    if mode == "check-bound":
        if "bound.gamma" in kv:
            cfg.bound_gamma = float(kv["bound.gamma"])
        if "bound.complete_f" in kv:
            cfg.bound_complete_f = _parse_bool(kv["bound.complete_f"], "bound.complete_f")
        if "bound.lambda_f" in kv:
            cfg.bound_lambda_f = float(kv["bound.lambda_f"])
    if mode == "kernel":
        if "kernel.file" in kv:
            cfg.kernel_file = kv["kernel.file"]
        else:
            triple_keys = ("kernel.alpha_f", "kernel.alpha_t", "kernel.strength_w",
                           "kernel.strength_f", "kernel.strength_t")
            missing = [k for k in triple_keys if k not in kv]
            if missing:
                raise ConfigError(
                    f"kernel mode needs kernel.file or all of {triple_keys}; "
                    f"missing {missing}")
            cfg.kernel_params = {k.split(".", 1)[1]: float(kv[k]) for k in triple_keys}

    for key, value in (overrides or {}).items():
        if value is not None:
            setattr(cfg, key, value)

    _validate_mode_requirements(cfg)
    return cfg


def _validate_mode_requirements(cfg: ExperimentConfig) -> None:
    if cfg.reps < 1:
        raise ConfigError(f"reps must be >= 1, got {cfg.reps}")
    if cfg.n < 1:
        raise ConfigError(f"n must be >= 1, got {cfg.n}")
    needs_model = cfg.mode in ("analyze", "simulate", "sweep")
    if needs_model or (cfg.mode == "boundary" and cfg.boundary_mode == "general"):
        if cfg.dist_w is None or cfg.dist_f is None:
            raise ConfigError(f"mode {cfg.mode} requires dist_w.* and dist_f.*")
    if cfg.mode in ("simulate", "sweep"):
        # conservative alpha = 1 bound, so a swept alpha cannot outgrow it
        expected = 0.5 * cfg.n * (cfg.dist_w.mean() + cfg.dist_f.mean())
        if expected > MAX_EDGES_PER_GRAPH:
            raise ConfigError(
                f"expected edge count {expected:.3g} exceeds the "
                f"{MAX_EDGES_PER_GRAPH:.3g} per-graph cap")
    if cfg.mode == "check-bound" and cfg.dist_w is not None:
        social_pairs = (0.5 * float(cfg.n) ** (2.0 * cfg.bound_gamma)
                        if cfg.bound_complete_f
                        else 0.5 * float(cfg.n) ** cfg.bound_gamma
                        * (cfg.bound_lambda_f or 0.0))
        expected = 0.5 * cfg.n * cfg.dist_w.mean() + social_pairs
        if expected > MAX_EDGES_PER_GRAPH:
            raise ConfigError(
                f"expected edge count {expected:.3g} exceeds the "
                f"{MAX_EDGES_PER_GRAPH:.3g} per-graph cap")
    if cfg.mode == "check-bound":
        if cfg.dist_w is None:
            raise ConfigError("check-bound requires dist_w.*")
        if not cfg.bound_complete_f and cfg.bound_lambda_f is None:
            raise ConfigError(
                "check-bound with an ER social layer needs bound.lambda_f "
                "(or set bound.complete_f = true)")
        if not 0.0 < cfg.bound_gamma < 1.0:
            raise ConfigError(f"bound.gamma must lie in (0, 1), got {cfg.bound_gamma}")
    if cfg.graph == "er" and (needs_model or cfg.mode == "check-bound"):
        for side, dist in (("dist_w", cfg.dist_w), ("dist_f", cfg.dist_f)):
            if dist is not None and dist.kind != "poisson":
                raise ConfigError(
                    f"graph = er requires poisson layer distributions ({side} "
                    f"is {dist.kind})")


# -- CSV helpers ---------------------------------------------------------


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.10g}"


def write_csv(header: list[str], rows: list[list], out: str | None) -> str:
    """Render CSV text; write to ``out`` or stdout. Returns the text."""
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text


# -- replicate engine ----------------------------------------------------


def _rng_for(seed: int, grid_idx: int, rep: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(grid_idx, rep)))


def _run_replicates(fn, reps: int, workers: int) -> list:
    """Run fn(rep) for rep in range(reps); order-stable regardless of workers."""
    if workers <= 1 or reps == 1:
        return [fn(rep) for rep in range(reps)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(reps)))


@dataclass(frozen=True)
class PointSetting:
    """Effective parameters at one grid point."""

    alpha: float
    t_w: float
    t_f: float


def _apply_axis(cfg: ExperimentConfig, value: float) -> PointSetting:
    alpha, t_w, t_f = cfg.alpha, cfg.t_w, cfg.t_f
    param = cfg.sweep_param
    if param == "t_lambda_both":
        lam_w, lam_f = cfg.dist_w.mean(), cfg.dist_f.mean()
        t_w, t_f = value / lam_w, value / lam_f
    elif param == "t_beta_both":
        t_w, t_f = value / beta(cfg.dist_w), value / beta(cfg.dist_f)
    elif param == "t_w":
        t_w = value
    elif param == "t_f":
        t_f = value
    elif param == "alpha":
        alpha = value
    else:
        raise ConfigError(f"unknown sweep parameter {param!r}")
    for name, t in (("t_w", t_w), ("t_f", t_f)):
        if not 0.0 <= t <= 1.0:
            raise ConfigError(
                f"sweep value {value:g} drives {name} to {t:g}, outside [0, 1]")
    return PointSetting(alpha=alpha, t_w=t_w, t_f=t_f)


def _replicate_metrics(cfg: ExperimentConfig, setting: PointSetting,
                       grid_idx: int, rep: int) -> tuple[float, float]:
    """One graph -> percolation -> (giant fraction, avg outbreak size)."""
    rng = _rng_for(cfg.seed, grid_idx, rep)
    if cfg.graph == "er":
        graph = netgen.er_coupled(cfg.n, setting.alpha, cfg.dist_w.mean(),
                                  cfg.dist_f.mean(), rng)
    else:
        spec = netgen.CoupledSpec(n=cfg.n, alpha=setting.alpha, dist_w=cfg.dist_w,
                                  dist_f=cfg.dist_f, t_w=setting.t_w, t_f=setting.t_f)
        graph = netgen.config_model_coupled(spec, rng)
    occupied = percolate.percolate(graph, setting.t_w, setting.t_f, rng)
    stats = percolate.components(occupied)
    return percolate.epidemic_fraction(stats), percolate.avg_outbreak_size(stats)


@dataclass(frozen=True)
class SweepRow:
    """Analytic plus empirical summaries at one grid point."""

    param: str
    value: float
    sigma_star: float
    size_theory: float
    mean_outbreak_theory: float | None
    emp_giant_mean: float
    emp_giant_std: float
    emp_outbreak_mean: float
    emp_outbreak_std: float
    reps: int


def _point_row(cfg: ExperimentConfig, setting: PointSetting, grid_idx: int,
               param: str, value: float) -> SweepRow:
    result = theory.analyze(setting.alpha, cfg.dist_f, cfg.dist_w,
                            setting.t_f, setting.t_w)
    metrics = _run_replicates(
        lambda rep: _replicate_metrics(cfg, setting, grid_idx, rep),
        cfg.reps, cfg.workers)
    giants = np.array([m[0] for m in metrics])
    outbreaks = np.array([m[1] for m in metrics])
    ddof = 1 if cfg.reps > 1 else 0
    return SweepRow(
        param=param,
        value=value,
        sigma_star=result.sigma_star,
        size_theory=result.epidemic_size,
        mean_outbreak_theory=result.mean_outbreak,
        emp_giant_mean=float(giants.mean()),
        emp_giant_std=float(giants.std(ddof=ddof)),
        emp_outbreak_mean=float(outbreaks.mean()),
        emp_outbreak_std=float(outbreaks.std(ddof=ddof)),
        reps=cfg.reps,
    )


_SWEEP_HEADER = ["param", "value", "sigma_star", "epidemic_size_theory",
                 "mean_outbreak_theory", "emp_giant_mean", "emp_giant_std",
                 "emp_outbreak_mean", "emp_outbreak_std", "reps"]


def _sweep_csv_rows(rows: list[SweepRow]) -> list[list]:
    return [[r.param, r.value, r.sigma_star, r.size_theory, r.mean_outbreak_theory,
             r.emp_giant_mean, r.emp_giant_std, r.emp_outbreak_mean,
             r.emp_outbreak_std, r.reps] for r in rows]


def empirical_threshold(values, giant_means, level: float = GIANT_LEVEL):
    """First grid value whose mean giant fraction exceeds ``level``."""
    for value, mean in zip(values, giant_means):
        if mean > level:
            return float(value)
    return None


# -- mode runners --------------------------------------------------------


def run_analyze(cfg: ExperimentConfig) -> theory.TheoryResult:
    result = theory.analyze(cfg.alpha, cfg.dist_f, cfg.dist_w, cfg.t_f, cfg.t_w)
    for name in ("sigma_star", "supercritical", "near_critical", "h1", "h2",
                 "epidemic_size", "s1", "s2", "mean_outbreak"):
        value = getattr(result, name)
        print(f"{name} = {_fmt(value) if value is not None else 'n/a'}")
    if cfg.out is not None:
        header = ["sigma_star", "supercritical", "near_critical", "h1", "h2",
                  "epidemic_size", "s1", "s2", "mean_outbreak"]
        row = [result.sigma_star, result.supercritical, result.near_critical,
               result.h1, result.h2, result.epidemic_size, result.s1, result.s2,
               result.mean_outbreak]
        write_csv(header, [row], cfg.out)
    return result


def run_simulate(cfg: ExperimentConfig) -> list[SweepRow]:
    setting = PointSetting(alpha=cfg.alpha, t_w=cfg.t_w, t_f=cfg.t_f)
    rows = [_point_row(cfg, setting, 0, "none", math.nan)]
    write_csv(_SWEEP_HEADER, _sweep_csv_rows(rows), cfg.out)
    return rows


def run_sweep(cfg: ExperimentConfig) -> list[SweepRow]:
    rows = []
    for grid_idx, value in enumerate(cfg.sweep_values):
        setting = _apply_axis(cfg, float(value))
        rows.append(_point_row(cfg, setting, grid_idx, cfg.sweep_param, float(value)))
    write_csv(_SWEEP_HEADER, _sweep_csv_rows(rows), cfg.out)
    return rows


def run_boundary(cfg: ExperimentConfig) -> list[list]:
    rows = []
    for alpha in cfg.boundary_alphas:
        ys = theory.phase_boundary(alpha, cfg.boundary_axis, cfg.boundary_mode,
                                   dist_f=cfg.dist_f, dist_w=cfg.dist_w)
        rows.extend([alpha, float(x), float(y)]
                    for x, y in zip(cfg.boundary_axis, ys))
    write_csv(["alpha", "x", "y"], rows, cfg.out)
    return rows


def _bound_replicate(cfg: ExperimentConfig, rep: int) -> dict:
    rng = _rng_for(cfg.seed, 0, rep)
    if cfg.graph == "er":
        w_graph = netgen.er_coupled(cfg.n, 1.0, cfg.dist_w.mean(), 0.0, rng)
    else:
        w_graph = netgen.single_layer_w(cfg.n, cfg.dist_w, rng)
    members = netgen.sublinear_membership(cfg.n, cfg.bound_gamma, rng)
    if cfg.bound_complete_f:
        fu, fv = netgen.complete_edges(members)
    elif members.size >= 2:
        p = cfg.bound_lambda_f / members.size
        if p > 1.0:
            raise ConfigError(
                f"bound.lambda_f/|N_F| = {p:g} exceeds 1 at |N_F|={members.size}")
        fu, fv = netgen.er_edges(members, p, rng)
    else:
        fu = fv = np.empty(0, dtype=np.int64)

    w_stats = percolate.components(w_graph)
    union = netgen.LayeredGraph(
        n=cfg.n,
        edge_u=np.concatenate([w_graph.edge_u, fu]),
        edge_v=np.concatenate([w_graph.edge_v, fv]),
        edge_layer=np.concatenate([w_graph.edge_layer,
                                   np.full(fu.size, netgen.LAYER_F, dtype=np.int8)]),
        members_f=members,
    )
    h_stats = percolate.components(union)
    rhs = w_stats.c1 + w_stats.c2 * max(members.size - 1, 0)
    return {
        "rep": rep,
        "n_f": int(members.size),
        "c1_w": w_stats.c1,
        "c2_w": w_stats.c2,
        "c1_h": h_stats.c1,
        "bound_rhs": int(rhs),
        "holds": h_stats.c1 <= rhs,
        "ratio": h_stats.c1 / w_stats.c1 if w_stats.c1 else math.nan,
    }


def run_check_bound(cfg: ExperimentConfig) -> dict:
    """Verify C1(H) <= C1(W) + C2(W)(|N_F|-1) on every replicate."""
    results = _run_replicates(lambda rep: _bound_replicate(cfg, rep),
                              cfg.reps, cfg.workers)
    header = ["rep", "n_f", "c1_w", "c2_w", "c1_h", "bound_rhs", "holds", "ratio"]
    rows = [[r[k] for k in header] for r in results]
    write_csv(header, rows, cfg.out)
    ratios = np.array([r["ratio"] for r in results])
    summary = {
        "reps": cfg.reps,
        "all_hold": all(r["holds"] for r in results),
        "ratio_mean": float(ratios.mean()),
        "ratio_max": float(ratios.max()),
    }
    print(f"bound_holds = {_fmt(summary['all_hold'])}")
    print(f"ratio_mean = {_fmt(summary['ratio_mean'])}")
    print(f"ratio_max = {_fmt(summary['ratio_max'])}")
    violations = [r["rep"] for r in results if not r["holds"]]
    if violations:
        raise InvariantViolation(
            f"component bound violated on replicates {violations}")
    return summary


def run_kernel(cfg: ExperimentConfig) -> dict:
    if cfg.kernel_file is not None:
        model = kernelmod.load_kernel_model(cfg.kernel_file)
    else:
        p = cfg.kernel_params
        model = kernelmod.triple_network_kernel(
            p["alpha_f"], p["alpha_t"], p["strength_w"], p["strength_f"],
            p["strength_t"])
    sigma = kernelmod.spectral_radius(model.m_matrix)
    rho, fraction = kernelmod.survival_probability(model)
    print(f"sigma_m = {_fmt(sigma)}")
    print(f"rho = [{', '.join(_fmt(v) for v in rho)}]")
    print(f"fraction = {_fmt(fraction)}")
    header = ["sigma_m", "fraction"] + [f"rho_{i + 1}" for i in range(model.r)]
    write_csv(header, [[sigma, fraction, *rho]], cfg.out)
    return {"sigma_m": sigma, "fraction": fraction, "rho": rho}


_RUNNERS = {
    "analyze": run_analyze,
    "simulate": run_simulate,
    "sweep": run_sweep,
    "boundary": run_boundary,
    "check-bound": run_check_bound,
    "kernel": run_kernel,
}


def run(cfg: ExperimentConfig):
    return _RUNNERS[cfg.mode](cfg)
