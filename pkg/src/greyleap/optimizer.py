"""Archive-guided multi-objective optimizer.

Each generation the population is sorted by front rank and crowding,
dealt round-robin into memeplexes, and every member is moved by a
three-leader position update: a leader drawn at random from the Pareto
archive plus the two best members of its own memeplex.  The move is
recombined with the member's previous position, perturbed by a
heavy-tailed Levy step, and replaces the member unconditionally; the
memeplexes are then gathered and reshuffled.  An external bounded
archive keeps the best non-dominated solutions found so far.

All randomness flows through one :class:`~greyleap.core.RandomSource`
with a frozen draw order, so a run is a pure function of (problem,
params, seed).
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import kernels
from .core import ContractError, RandomSource, repair_bounds
from .ranking import crowded_sort, crowding_by_front, nondominated_ranks
from .records import GenerationSnapshot, RunRecord

ALGORITHM_NAME = "MSGW-FLM"


@dataclass
class AlgorithmParams:
    """Tuning knobs for :func:`run`.

    ``levy_scale`` and ``shared_alpha_distance`` are compatibility
    switches: the first scales the Levy perturbation, the second makes
    the second and third leader updates reuse the first leader's
    distance term instead of their own.
    """

    population_size: int = 100
    archive_max: int = 100
    max_fitness_evals: int = 20000
    memeplex_count: int = 5
    crossover_rate: float = 0.4
    levy_beta: float = 1.4
    levy_scale: float = 0.01
    shared_alpha_distance: bool = False
    replacement: str = "rank_improving"

    def validate(self):
        if self.population_size <= 0:
            raise ContractError("population_size must be positive")
        if self.archive_max <= 0:
            raise ContractError("archive_max must be positive")
        if self.max_fitness_evals <= 0:
            raise ContractError("max_fitness_evals must be positive")
        if self.memeplex_count <= 0:
            raise ContractError("memeplex_count must be positive")
        if self.population_size % self.memeplex_count != 0:
            raise ContractError(
                "population_size must be divisible by memeplex_count, got "
                f"{self.population_size} / {self.memeplex_count}"
            )
        if self.population_size // self.memeplex_count < 2:
            raise ContractError(
                "each memeplex needs at least two members for its leader pair"
            )
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ContractError("crossover_rate must lie in [0, 1]")
        if not 1.0 < self.levy_beta <= 2.0:
            raise ContractError("levy_beta must lie in (1, 2]")
        if self.replacement not in (
            "elitist",
            "rank_improving",
            "improving",
            "non_worsening",
            "always",
        ):
            raise ContractError(
                "replacement must be 'elitist', 'rank_improving', "
                "'improving', 'non_worsening' or 'always'"
            )


def exploration_weight(evals_used, max_evals):
    """Leader-pull coefficient: decays linearly from 2 at no consumed
    evaluations to 0 at the full budget, clamped at 0 past it."""
    return max(0.0, 2.0 * (1.0 - evals_used / max_evals))


def mantegna_sigma(beta):
    """Scale of the numerator normal in Mantegna's Levy-stable sampler."""
    num = math.gamma(1.0 + beta) * math.sin(math.pi * beta / 2.0)
    den = math.gamma((1.0 + beta) / 2.0) * beta * 2.0 ** ((beta - 1.0) / 2.0)
    return (num / den) ** (1.0 / beta)


def partition_memeplexes(members, m):
    """Deal a best-first sequence round-robin into ``m`` memeplexes.

    Memeplex ``k`` (0-based) receives positions k, k+m, k+2m, ... so
    every memeplex gets an even share of good and bad members.
    """
    count = len(members)
    if count % m != 0:
        raise ContractError(
            f"cannot split {count} members into {m} equal memeplexes"
        )
    return [[members[s] for s in range(k, count, m)] for k in range(m)]


def wolf_update(
    x,
    alpha,
    beta,
    delta,
    a,
    rng,
    lower=None,
    upper=None,
    shared_alpha_distance=False,
):
    """Move ``x`` toward the three leaders; returns the averaged target.

    Each leader gets fresh coefficient draws: with radius vectors
    A = 2 a r1 - a and C = 2 r2, the per-leader target is
    L - A |C L - x|, and the move is the mean of the three targets,
    bounds-repaired when bounds are given.
    """
    x = np.asarray(x, dtype=float)
    leaders = np.stack(
        [np.asarray(v, dtype=float) for v in (alpha, beta, delta)]
    )
    if x.ndim != 1 or leaders.shape[1] != x.size:
        raise ContractError("leader positions must match the member dimension")
    r1 = rng.random((3, x.size))
    r2 = rng.random((3, x.size))
    A = 2.0 * a * r1 - a
    C = 2.0 * r2
    dist = np.abs(C * leaders - x)
    if shared_alpha_distance:
        dist = np.repeat(dist[:1], 3, axis=0)
    moved = (leaders - A * dist).mean(axis=0)
    if lower is not None:
        moved = repair_bounds(moved, lower, upper)
    return moved


def crossover(candidate, parent, cr, rng):
    """Binomial recombination: each coordinate comes from ``candidate``
    with probability ``cr``, otherwise from ``parent``, and one
    uniformly chosen coordinate is always taken from ``candidate``."""
    candidate = np.asarray(candidate, dtype=float)
    parent = np.asarray(parent, dtype=float)
    if candidate.shape != parent.shape or candidate.ndim != 1:
        raise ContractError("crossover arguments must be equal-length vectors")
    if not 0.0 <= cr <= 1.0:
        raise ContractError("crossover rate must lie in [0, 1]")
    take = rng.random(candidate.size) < cr
    take[rng.integers(0, candidate.size)] = True
    return np.where(take, candidate, parent)


def levy_step(dim, beta, rng):
    """Heavy-tailed step vector via Mantegna's method:
    u / |v|**(1/beta) with u ~ Normal(0, sigma_u**2), v ~ Normal(0, 1)."""
    if not 1.0 < beta <= 2.0:
        raise ContractError("levy_beta must lie in (1, 2]")
    u = mantegna_sigma(beta) * rng.normal(dim)
    v = rng.normal(dim)
    return u / np.abs(v) ** (1.0 / beta)


def update_archive(archive_X, archive_F, entrant_X, entrant_F, capacity):
    """Merge entrants into the archive and enforce its contract.

    Keeps the non-dominated subset of the union; while over capacity,
    evicts the member with the smallest crowding distance and recomputes
    crowding after every eviction.  Returns (X, F, truncated).
    """
    X = np.vstack([archive_X, entrant_X])
    F = np.vstack([archive_F, entrant_F])
    keep = nondominated_ranks(F) == 0
    X, F = X[keep], F[keep]
    truncated = F.shape[0] > capacity
    if truncated:
        kept = kernels.truncate_by_crowding(F, capacity)
        X, F = X[kept], F[kept]
    return X, F, truncated


def _archive_violations(archive_F, capacity):
    bad = int(archive_F.shape[0] > capacity)
    bad += int(np.count_nonzero(nondominated_ranks(archive_F) != 0))
    return bad


def _snapshot(generation, evals, archive_F, truncated, indicators):
    hv = igd = spread = None
    if indicators is not None:
        hv = float(indicators.hypervolume_of(archive_F))
        igd = float(indicators.igd_of(archive_F))
        spread = float(indicators.spread_of(archive_F))
    return GenerationSnapshot(
        generation=generation,
        evals=evals,
        archive_size=int(archive_F.shape[0]),
        truncated=bool(truncated),
        hv=hv,
        igd=igd,
        spread=spread,
    )


def run(
    problem,
    params=None,
    seed=0,
    indicators=None,
    check_invariants=False,
):
    """Execute one full optimization run; returns a :class:`RunRecord`.

    ``indicators`` is an optional
    :class:`~greyleap.indicators.IndicatorSettings`; when given, every
    generation snapshot carries hypervolume, inverted generational
    distance and spread of the archive.  ``check_invariants`` counts
    archive purity and capacity violations after every update (expected
    to stay 0) into the record.
    """
    if params is None:
        params = AlgorithmParams()
    params.validate()
    P = params.population_size
    m = params.memeplex_count
    D = problem.n_var
    budget = params.max_fitness_evals
    lower, upper = problem.lower, problem.upper
    sigma = mantegna_sigma(params.levy_beta)
    inv_beta = 1.0 / params.levy_beta
    rng = RandomSource(seed)

    X = lower + (upper - lower) * rng.random((P, D))
    F = problem.evaluate_batch(X)
    evals = P
    first = nondominated_ranks(F) == 0
    arch_X, arch_F, truncated = update_archive(
        np.empty((0, D)),
        np.empty((0, problem.n_obj)),
        X[first],
        F[first],
        params.archive_max,
    )
    violations = 0 if check_invariants else None
    if check_invariants:
        violations += _archive_violations(arch_F, params.archive_max)
    snapshots = [_snapshot(0, evals, arch_F, truncated, indicators)]

    slots = np.arange(P)
    generation = 0
    while evals < budget:
        generation += 1
        a = exploration_weight(evals, budget)
        order = crowded_sort(F)
        Xs = X[order]
        # member at sorted slot s sits in memeplex s % m, whose first
        # and second members are sorted slots s % m and s % m + m
        beta_X = Xs[slots % m]
        delta_X = Xs[slots % m + m]
        if arch_F.shape[0] == 0:
            raise ContractError("archive unexpectedly empty during a run")
        alpha_X = arch_X[rng.integers(0, arch_F.shape[0], P)]

        r1 = rng.random((P, 3, D))
        r2 = rng.random((P, 3, D))
        A = 2.0 * a * r1 - a
        C = 2.0 * r2
        leaders = np.stack([alpha_X, beta_X, delta_X], axis=1)
        dist = np.abs(C * leaders - Xs[:, None, :])
        if params.shared_alpha_distance:
            dist = np.repeat(dist[:, :1, :], 3, axis=1)
        cand = (leaders - A * dist).mean(axis=1)
        cand = repair_bounds(cand, lower, upper)

        take = rng.random((P, D)) < params.crossover_rate
        take[slots, rng.integers(0, D, P)] = True
        child = np.where(take, cand, Xs)

        u = sigma * rng.normal((P, D))
        v = rng.normal((P, D))
        child = child + params.levy_scale * (u / np.abs(v) ** inv_beta) * (
            child - alpha_X
        )
        child = repair_bounds(child, lower, upper)
        child_F = problem.evaluate_batch(child)
        evals += P

        Fs = F[order]
        if params.replacement == "elitist":
            # survivors are the crowded-sort best P of members and children
            joint_X = np.vstack([Xs, child])
            joint_F = np.vstack([Fs, child_F])
            best = crowded_sort(joint_F)[:P]
            kept_X, kept_F = joint_X[best], joint_F[best]
        else:
            if params.replacement == "rank_improving":
                # child must beat the member on front rank, then crowding,
                # both measured in the joint member+child population
                joint = np.vstack([Fs, child_F])
                ranks = nondominated_ranks(joint)
                crowd = crowding_by_front(joint, ranks)
                rm, rc = ranks[:P], ranks[P:]
                cm, cc = crowd[:P], crowd[P:]
                accept = (rc < rm) | ((rc == rm) & (cc > cm))
            elif params.replacement == "improving":
                # child must dominate the member it came from
                accept = np.logical_and(
                    (child_F <= Fs).all(axis=1), (child_F < Fs).any(axis=1)
                )
            elif params.replacement == "non_worsening":
                # child kept unless its parent dominates it
                accept = ~np.logical_and(
                    (Fs <= child_F).all(axis=1), (Fs < child_F).any(axis=1)
                )
            else:
                accept = np.ones(P, dtype=bool)
            kept_X = np.where(accept[:, None], child, Xs)
            kept_F = np.where(accept[:, None], child_F, Fs)

        perm = rng.permutation(P)
        X, F = kept_X[perm], kept_F[perm]
        arch_X, arch_F, truncated = update_archive(
            arch_X, arch_F, X, F, params.archive_max
        )
        if check_invariants:
            violations += _archive_violations(arch_F, params.archive_max)
        snapshots.append(_snapshot(generation, evals, arch_F, truncated, indicators))

    return RunRecord(
        algorithm=ALGORITHM_NAME,
        problem=problem.name,
        seed=int(seed),
        params=asdict(params),
        evals_used=int(evals),
        snapshots=snapshots,
        archive_decisions=arch_X,
        archive_objectives=arch_F,
        invariant_violations=violations,
    )
