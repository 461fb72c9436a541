"""Elitist non-dominated-sorting genetic algorithm baseline.

The classic loop: binary tournament on the crowded comparison, simulated
binary crossover, polynomial mutation, then environmental selection of
the best half of parents plus children by front rank and crowding. Run
records use the same format as the memeplex grey-wolf optimizer so both
feed the same reporting pipeline.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .core import ContractError, RandomSource
from .ranking import crowding_by_front, crowding_distance, nondominated_ranks
from .records import GenerationSnapshot, RunRecord

ALGORITHM_NAME = "NSGA-II"


@dataclass
class Nsga2Params:
    """Canonical settings: even population of 100, a 20000-evaluation
    budget, SBX with probability 0.9 and distribution index 20, and
    polynomial mutation at rate 1/n_var (the ``None`` default) with
    distribution index 20."""

    population_size: int = 100
    max_fitness_evals: int = 20000
    crossover_probability: float = 0.9
    mutation_probability: float | None = None
    sbx_eta: float = 20.0
    mutation_eta: float = 20.0

    def validate(self):
        if self.population_size <= 0:
            raise ContractError("population_size must be positive")
        if self.population_size % 2 != 0:
            raise ContractError(
                "population_size must be even for pairwise recombination"
            )
        if self.max_fitness_evals <= 0:
            raise ContractError("max_fitness_evals must be positive")
        if not 0.0 <= self.crossover_probability <= 1.0:
            raise ContractError("crossover_probability must lie in [0, 1]")
        if self.mutation_probability is not None and not (
            0.0 <= self.mutation_probability <= 1.0
        ):
            raise ContractError("mutation_probability must lie in [0, 1]")
        if self.sbx_eta < 0 or self.mutation_eta < 0:
            raise ContractError("distribution indices must be non-negative")


def tournament_select(ranks, crowding, pairs):
    """Winner index per row of ``pairs``: lower front rank wins, equal
    ranks go to the larger crowding distance, full ties keep the second
    contender."""
    pairs = np.asarray(pairs)
    a, b = pairs[:, 0], pairs[:, 1]
    first = (ranks[a] < ranks[b]) | (
        (ranks[a] == ranks[b]) & (crowding[a] > crowding[b])
    )
    return np.where(first, a, b)


def sbx_crossover(parents_a, parents_b, lower, upper, eta, pc, rng):
    """Simulated binary crossover on paired parent rows (bounded form).

    Each pair recombines with probability ``pc``; within a recombining
    pair every coordinate is exchanged with probability one half, and the
    spread factor is drawn per coordinate from the polynomial density
    with index ``eta``.  Draw order: pair gate, coordinate gate, spread
    uniform, child-swap gate.
    """
    pa = np.atleast_2d(np.asarray(parents_a, dtype=float))
    pb = np.atleast_2d(np.asarray(parents_b, dtype=float))
    if pa.shape != pb.shape:
        raise ContractError("parent batches must have matching shapes")
    n, d = pa.shape
    do_pair = rng.random(n) < pc
    do_coord = rng.random((n, d)) < 0.5
    u = rng.random((n, d))
    swap = rng.random((n, d)) < 0.5

    y1 = np.minimum(pa, pb)
    y2 = np.maximum(pa, pb)
    diff = y2 - y1
    apply = do_pair[:, None] & do_coord & (diff > 1e-14)
    expo = 1.0 / (eta + 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        beta = 1.0 + 2.0 * (y1 - lower) / diff
        alpha = 2.0 - beta ** -(eta + 1.0)
        bq1 = np.where(
            u <= 1.0 / alpha,
            (u * alpha) ** expo,
            (1.0 / (2.0 - u * alpha)) ** expo,
        )
        beta = 1.0 + 2.0 * (upper - y2) / diff
        alpha = 2.0 - beta ** -(eta + 1.0)
        bq2 = np.where(
            u <= 1.0 / alpha,
            (u * alpha) ** expo,
            (1.0 / (2.0 - u * alpha)) ** expo,
        )
        c1 = np.clip(0.5 * ((y1 + y2) - bq1 * diff), lower, upper)
        c2 = np.clip(0.5 * ((y1 + y2) + bq2 * diff), lower, upper)
    low_child = np.where(swap, c2, c1)
    high_child = np.where(swap, c1, c2)
    out_a = np.where(apply, low_child, pa)
    out_b = np.where(apply, high_child, pb)
    return out_a, out_b


def polynomial_mutation(X, lower, upper, eta, pm, rng):
    """Bounded polynomial mutation applied coordinate-wise at rate ``pm``.

    Draw order: mutation gate then the polynomial uniform, both of the
    batch shape.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n, d = X.shape
    do = rng.random((n, d)) < pm
    u = rng.random((n, d))
    span = np.broadcast_to(np.asarray(upper, dtype=float) - lower, (n, d))
    d1 = (X - lower) / span
    d2 = (np.asarray(upper, dtype=float) - X) / span
    expo = 1.0 / (eta + 1.0)
    val_low = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1) ** (eta + 1.0)
    val_high = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2) ** (eta + 1.0)
    dq = np.where(u < 0.5, val_low**expo - 1.0, 1.0 - val_high**expo)
    return np.clip(np.where(do, X + dq * span, X), lower, upper)


def environmental_selection(F, count):
    """Indices of the ``count`` survivors of a joint population.

    Whole fronts are taken best-first; the last front that does not fit
    is cut by crowding distance, largest first, earlier index on ties.
    Survivors come back grouped by front in ascending index order.
    """
    F = np.asarray(F, dtype=float)
    if not 0 < count <= F.shape[0]:
        raise ContractError("survivor count must lie in (0, population size]")
    ranks = nondominated_ranks(F)
    selected = []
    for r in range(int(ranks.max()) + 1):
        front = np.flatnonzero(ranks == r)
        if len(selected) + front.size <= count:
            selected.extend(front.tolist())
            if len(selected) == count:
                break
        else:
            need = count - len(selected)
            d = crowding_distance(F[front])
            take = front[np.argsort(-d, kind="stable")[:need]]
            selected.extend(np.sort(take).tolist())
            break
    return np.asarray(selected, dtype=np.int64)


def _snapshot(generation, evals, front_F, indicators):
    hv = igd = spread = None
    if indicators is not None:
        hv = float(indicators.hypervolume_of(front_F))
        igd = float(indicators.igd_of(front_F))
        spread = float(indicators.spread_of(front_F))
    return GenerationSnapshot(
        generation=generation,
        evals=evals,
        archive_size=int(front_F.shape[0]),
        truncated=False,
        hv=hv,
        igd=igd,
        spread=spread,
    )


def nsga2_run(
    problem,
    params=None,
    seed=0,
    indicators=None,
    check_invariants=False,
):
    """Execute one baseline run; returns a :class:`RunRecord` whose
    archive rows are the non-dominated subset of the final population.

    ``check_invariants`` counts violations of the selection contracts
    each generation (survivor count exact, no rejected individual
    dominating a survivor); the total is stored on the record and is
    expected to stay 0.
    """
    if params is None:
        params = Nsga2Params()
    params.validate()
    P = params.population_size
    D = problem.n_var
    budget = params.max_fitness_evals
    lower, upper = problem.lower, problem.upper
    pm = (
        params.mutation_probability
        if params.mutation_probability is not None
        else 1.0 / D
    )
    rng = RandomSource(seed)

    X = lower + (upper - lower) * rng.random((P, D))
    F = problem.evaluate_batch(X)
    evals = P
    ranks = nondominated_ranks(F)
    crowd = crowding_by_front(F, ranks)
    violations = 0 if check_invariants else None
    snapshots = [_snapshot(0, evals, F[ranks == 0], indicators)]

    generation = 0
    while evals < budget:
        generation += 1
        contenders = rng.integers(0, P, (P, 2))
        parents = tournament_select(ranks, crowd, contenders)
        pa = X[parents[0::2]]
        pb = X[parents[1::2]]
        ca, cb = sbx_crossover(
            pa, pb, lower, upper, params.sbx_eta,
            params.crossover_probability, rng,
        )
        children = np.empty((P, D))
        children[0::2] = ca
        children[1::2] = cb
        children = polynomial_mutation(
            children, lower, upper, params.mutation_eta, pm, rng
        )
        child_F = problem.evaluate_batch(children)
        evals += P

        joint_X = np.vstack([X, children])
        joint_F = np.vstack([F, child_F])
        survivors = environmental_selection(joint_F, P)
        if check_invariants:
            violations += int(survivors.size != P)
            joint_ranks = nondominated_ranks(joint_F)
            rejected = np.setdiff1d(np.arange(2 * P), survivors)
            if rejected.size:
                violations += int(
                    joint_ranks[rejected].min() < joint_ranks[survivors].max()
                )
        X, F = joint_X[survivors], joint_F[survivors]
        ranks = nondominated_ranks(F)
        crowd = crowding_by_front(F, ranks)
        snapshots.append(_snapshot(generation, evals, F[ranks == 0], indicators))

    keep = ranks == 0
    return RunRecord(
        algorithm=ALGORITHM_NAME,
        problem=problem.name,
        seed=int(seed),
        params=asdict(params),
        evals_used=int(evals),
        snapshots=snapshots,
        archive_decisions=X[keep],
        archive_objectives=F[keep],
        invariant_violations=violations,
    )
