"""Monte Carlo estimates of the parametric period integral of 1/Psi_G^2.

Three samplers are available:

* ``simplex-uniform``: alpha uniform on the simplex sum(alpha) = 1, weight
  1 / ((N-1)! Psi^2).
* ``affine-gauge``: alpha_N = 1, alpha_i = u_i / (1 - u_i) with u_i uniform,
  weight prod (1 - u_i)^-2 / Psi^2.
* ``hepp-sector``: a uniformly random ordering of the edges (Hepp sector),
  the largest alpha fixed to 1 and the rest written as running products of
  uniforms, weight N! * Jacobian / Psi^2. For primitive graphs this weight is
  bounded, whereas the first two have infinite variance (1/Psi^4 is not
  integrable near one-loop subgraphs), so it is the default.

Each worker draws from its own stream spawned from the seed, and contributes
a partial sum to every batch; batch means are combined by median of means.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import GraphError
from .graph import Multigraph, loop_number
from .kirchhoff import log_psi_batch, max_edges_default

SAMPLERS = ("simplex-uniform", "affine-gauge", "hepp-sector")
SAMPLER_ALIASES = {"simplex": "simplex-uniform", "affine": "affine-gauge", "sector": "hepp-sector"}
DEFAULT_MC_MAX_EDGES = 14
CHUNK = 1 << 16


@dataclass(frozen=True)
class McConfig:
    samples: int = 1_000_000
    seed: int = 0
    workers: int = 1
    sampler: str = "hepp-sector"
    batches: int = 16
    max_edges: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sampler", SAMPLER_ALIASES.get(self.sampler, self.sampler))
        if self.sampler not in SAMPLERS:
            raise GraphError(f"unknown sampler {self.sampler!r}; choose from {', '.join(SAMPLERS)}")
        for name in ("samples", "workers", "batches"):
            if getattr(self, name) < 1:
                raise GraphError(f"{name} must be positive")
        if self.batches < 2:
            raise GraphError("need at least 2 batches for an error estimate")
        if not 0 <= self.seed < 2**64:
            raise GraphError("seed must be a 64-bit unsigned integer")
        if self.samples % (self.workers * self.batches):
            raise GraphError("samples must be divisible by workers * batches")


@dataclass
class PeriodEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int
    sampler: str
    plain_mean: float
    plain_stderr: float
    workers: int
    batches: int
    min_sample: float
    batch_means: list[float] = field(default_factory=list)

    def record(self) -> dict:
        return asdict(self)


def _open_uniform(rng: np.random.Generator, shape) -> np.ndarray:
    """Uniform on the open interval (0, 1), on a grid of 2^53 midpoints."""
    return (rng.integers(0, 1 << 53, size=shape, dtype=np.int64) + 0.5) / float(1 << 53)


def _sample_chunk(sampler: str, rng: np.random.Generator, size: int, nedges: int):
    """Return (alphas, log weight factor) for one chunk; the estimator is
    exp(log_factor - 2 log Psi(alphas))."""
    N = nedges
    if sampler == "simplex-uniform":
        x = rng.standard_exponential((size, N))
        alphas = x / x.sum(axis=1, keepdims=True)
        return alphas, np.full(size, -math.lgamma(N))
    if sampler == "affine-gauge":
        u = _open_uniform(rng, (size, N - 1))
        alphas = np.ones((size, N))
        alphas[:, : N - 1] = u / (1.0 - u)
        return alphas, -2.0 * np.log1p(-u).sum(axis=1)
    # hepp-sector
    perm = np.argsort(rng.random((size, N)), axis=1)
    t = _open_uniform(rng, (size, N - 1))
    ordered = np.ones((size, N))
    ordered[:, 1:] = np.cumprod(t, axis=1)
    alphas = np.empty((size, N))
    np.put_along_axis(alphas, perm, ordered, axis=1)
    exponents = np.arange(N - 2, -1, -1, dtype=float)
    log_jac = np.log(t) @ exponents
    return alphas, math.lgamma(N + 1) + log_jac


def _worker(args):
    g, sampler, seed, worker, workers, per_batch, batches = args
    seq = np.random.SeedSequence(seed).spawn(workers)[worker]
    rng = np.random.default_rng(seq)
    order = [e.id for e in g.edges]
    sums = np.zeros(batches)
    sq = 0.0
    lowest = math.inf
    for b in range(batches):
        left = per_batch
        while left:
            size = min(CHUNK, left)
            alphas, log_factor = _sample_chunk(sampler, rng, size, len(order))
            f = np.exp(log_factor - 2.0 * log_psi_batch(g, alphas, order))
            sums[b] += math.fsum(f)
            sq += math.fsum(f * f)
            lowest = min(lowest, float(f.min()))
            left -= size
    return sums, sq, lowest


def check_period_graph(g: Multigraph, max_edges: int | None = None) -> None:
    h = loop_number(g)
    if g.num_edges != 2 * h:
        raise GraphError(
            f"not primitive log-divergent edge count: E = {g.num_edges}, loop number {h}"
        )
    cap = max_edges_default(DEFAULT_MC_MAX_EDGES) if max_edges is None else max_edges
    if g.num_edges > cap:
        raise GraphError(f"{g.num_edges} edges exceeds the Monte Carlo cap {cap}")


def estimate_period(g: Multigraph, cfg: McConfig = McConfig()) -> PeriodEstimate:
    check_period_graph(g, cfg.max_edges)
    per_batch = cfg.samples // (cfg.workers * cfg.batches)
    jobs = [
        (g, cfg.sampler, cfg.seed, w, cfg.workers, per_batch, cfg.batches)
        for w in range(cfg.workers)
    ]
    if cfg.workers == 1:
        results = [_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_worker, jobs))

    # fixed reduction order keeps results bit-identical
    sums = np.zeros(cfg.batches)
    sq = 0.0
    lowest = math.inf
    for s, q, lo in results:
        sums += s
        sq += q
        lowest = min(lowest, lo)
    n_batch = cfg.samples // cfg.batches
    means = sums / n_batch
    B = cfg.batches
    # asymptotic efficiency of the median relative to the mean is 2/pi
    stderr = math.sqrt(math.pi / 2) * float(np.std(means, ddof=1)) / math.sqrt(B)
    plain = float(sums.sum()) / cfg.samples
    var = max(sq / cfg.samples - plain * plain, 0.0) * cfg.samples / (cfg.samples - 1)
    return PeriodEstimate(
        mean=float(np.median(means)),
        stderr=stderr,
        samples=cfg.samples,
        seed=cfg.seed,
        sampler=cfg.sampler,
        plain_mean=plain,
        plain_stderr=math.sqrt(var / cfg.samples),
        workers=cfg.workers,
        batches=cfg.batches,
        min_sample=lowest,
        batch_means=[float(x) for x in means],
    )


def zscore(est: PeriodEstimate, reference: float) -> float:
    if not est.stderr > 0:
        raise GraphError("z-score needs a positive standard error")
    return (est.mean - reference) / est.stderr
