"""Seeded fuzz campaigns over random states, shifted Hermitian matrices or grids."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import engine, scalar, states
from .report import SLACK_RTOL
from .rng import derive_seed

MODES = ("density", "hermitian", "scalar")


@dataclass(frozen=True)
class CampaignSpec:
    dim: int
    n: int
    m: int
    p_list: tuple[float, ...]
    trials: int
    rank: int | None = None
    seed: int = 0
    mode: str = "density"
    shift_margin: float = 0.1
    tol: float = SLACK_RTOL

    def __post_init__(self):
        object.__setattr__(self, "p_list", tuple(float(p) for p in self.p_list))
        if self.rank is None:
            object.__setattr__(self, "rank", self.dim)
        problems = []
        if self.dim < 1:
            problems.append("dim must be positive")
        if self.n < 1 or self.m < 1 or self.n * self.m < self.dim:
            problems.append(f"partition ({self.n}, {self.m}) cannot hold dimension {self.dim}")
        if self.trials < 1:
            problems.append("trials must be at least 1")
        if not self.p_list or any(not p > 0 for p in self.p_list):
            problems.append("p_list must be a nonempty list of positive reals")
        if self.mode not in MODES:
            problems.append(f"mode must be one of {MODES}")
        if self.mode == "density" and not 1 <= self.rank <= self.dim:
            problems.append(f"rank must lie in 1..{self.dim}")
        if self.shift_margin < 0:
            problems.append("shift_margin must be nonnegative")
        if not 0 <= self.seed < 2**64:
            problems.append("seed must be an unsigned 64-bit integer")
        if problems:
            raise ValueError("; ".join(problems))


@dataclass
class CampaignSummary:
    trials: int
    evaluations: int
    violations: int
    min_margin: float
    argmin_trial: int
    argmin_seed: int
    argmin_p: float
    violating_seeds: list[int] = field(default_factory=list)

    def as_record(self) -> dict:
        return asdict(self)


def run_trial(spec: CampaignSpec, trial: int):
    """Reports for one trial, one per exponent in ``spec.p_list``."""
    seed = derive_seed(spec.seed, trial)
    part = (spec.n, spec.m)
    if spec.mode == "density":
        rho = states.random_density_matrix(spec.dim, spec.rank, seed)
        return engine.scan_p(rho, part, spec.p_list, tol=spec.tol)
    if spec.mode == "hermitian":
        a = states.random_hermitian(spec.dim, 1.0, seed)
        _, x = engine.shift_to_nonnegative(a, spec.shift_margin)
        return engine.scan_p_hermitian(a, part, spec.p_list, x, tol=spec.tol)
    weights = states.random_grid(1, spec.dim, seed).values
    grid = scalar.pad_vector(weights, spec.n, spec.m)
    return [scalar.verify_vector(grid, p, tol=spec.tol) for p in spec.p_list]


def _trial_worker(args):
    return run_trial(*args)


def run_campaign(spec: CampaignSpec, jobs: int = 1):
    """Run every trial; return ``(summary, per_trial)``.

    ``per_trial`` is a list of ``(trial, seed, reports)`` ordered by trial
    index whatever the execution order.
    """
    work = [(spec, t) for t in range(spec.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_trial_worker, work, chunksize=max(1, spec.trials // (4 * jobs))))
    else:
        results = [run_trial(spec, t) for t in range(spec.trials)]

    per_trial = []
    evaluations = violations = 0
    best = (float("inf"), 0, derive_seed(spec.seed, 0), spec.p_list[0])
    bad_seeds = []
    for t, reports in enumerate(results):
        seed = derive_seed(spec.seed, t)
        per_trial.append((t, seed, reports))
        for rep in reports:
            evaluations += 1
            if not rep.satisfied:
                violations += 1
                if not bad_seeds or bad_seeds[-1] != seed:
                    bad_seeds.append(seed)
            if rep.margin < best[0]:
                best = (rep.margin, t, seed, rep.p)
    summary = CampaignSummary(
        trials=spec.trials,
        evaluations=evaluations,
        violations=violations,
        min_margin=best[0],
        argmin_trial=best[1],
        argmin_seed=best[2],
        argmin_p=best[3],
        violating_seeds=bad_seeds,
    )
    return summary, per_trial
