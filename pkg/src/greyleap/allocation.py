"""Rolling-horizon emergency supply allocation.

A scenario holds randomly placed distribution centers and disaster
sites with per-cycle supplies and demands. Each planning cycle encodes
a two-objective shipment problem over a short look-ahead window,
optimizes it, executes only the first cycle of the chosen plan, carries
unmet demand forward as a deficit, and records the per-cycle system
loss.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import ContractError, RandomSource
from .optimizer import AlgorithmParams, run
from .problems.base import Problem

OVERSHOOT_PENALTY = 1000.0

DEMAND_RANGE = (20.0, 60.0)
SUPPLY_RANGE = (30.0, 80.0)
DEFICIT_RANGE = (30.0, 90.0)
AREA_SIDE = 100.0


@dataclass
class Scenario:
    """Geometry and per-cycle quantities of one allocation instance.

    ``demands`` has shape (cycles, n_sites) and ``supplies`` shape
    (cycles, n_centers); row t is revealed when cycle t begins.
    """

    center_locations: np.ndarray
    site_locations: np.ndarray
    supplies: np.ndarray
    demands: np.ndarray
    initial_deficits: np.ndarray
    cycles: int
    seed: int

    @property
    def n_centers(self):
        return self.center_locations.shape[0]

    @property
    def n_sites(self):
        return self.site_locations.shape[0]

    def distances(self):
        """Euclidean center-to-site distance matrix (n_centers, n_sites)."""
        delta = self.center_locations[:, None, :] - self.site_locations[None, :, :]
        return np.sqrt((delta**2).sum(axis=2))


@dataclass
class CycleState:
    """Carried-over situation at the start of a cycle."""

    cycle_index: int = 0
    deficits: np.ndarray = field(default_factory=lambda: np.zeros(0))
    cumulative_loss: float = 0.0


@dataclass
class RollingResult:
    """Outcome of one rolling-horizon run."""

    losses: list
    executed: list
    final_deficits: np.ndarray

    @property
    def zero_attained_cycle(self):
        """1-based first cycle with zero loss, or None if never attained."""
        for i, loss in enumerate(self.losses):
            if loss == 0.0:
                return i + 1
        return None


def generate_scenario(
    n_centers,
    n_sites,
    cycles,
    seed,
    demand_range=DEMAND_RANGE,
    supply_range=SUPPLY_RANGE,
    initial_deficit_range=DEFICIT_RANGE,
):
    """Deterministic-in-seed random scenario on a 100 by 100 square.

    Per-cycle demands are uniform in ``demand_range`` units per site,
    supplies uniform in ``supply_range`` units per center, and the
    disaster's initial backlog uniform in ``initial_deficit_range``
    units per site.  Draw order: center locations, site locations,
    demands, supplies, initial deficits.
    """
    if n_centers <= 0 or n_sites <= 0 or cycles <= 0:
        raise ContractError("scenario counts must all be positive")
    rng = RandomSource(seed)
    centers = AREA_SIDE * rng.random((n_centers, 2))
    sites = AREA_SIDE * rng.random((n_sites, 2))
    d_lo, d_hi = demand_range
    s_lo, s_hi = supply_range
    b_lo, b_hi = initial_deficit_range
    demands = d_lo + (d_hi - d_lo) * rng.random((cycles, n_sites))
    supplies = s_lo + (s_hi - s_lo) * rng.random((cycles, n_centers))
    backlog = b_lo + (b_hi - b_lo) * rng.random(n_sites)
    return Scenario(
        center_locations=centers,
        site_locations=sites,
        supplies=supplies,
        demands=demands,
        initial_deficits=backlog,
        cycles=cycles,
        seed=int(seed),
    )


def _initial_state(scenario):
    return CycleState(
        cycle_index=0,
        deficits=scenario.initial_deficits.astype(float).copy(),
        cumulative_loss=0.0,
    )


def repair_plan(plan, supplies):
    """Scale down any center row whose shipments exceed that center's
    supply; feasible rows come back unchanged."""
    plan = np.asarray(plan, dtype=float).copy()
    shipped = plan.sum(axis=1)
    supplies = np.asarray(supplies, dtype=float)
    over = shipped > supplies
    scale = np.where(shipped > 0, supplies / np.where(shipped > 0, shipped, 1.0), 1.0)
    plan[over] *= scale[over][:, None]
    return plan


def system_loss(plan, scenario, state):
    """Unmet demand of the executing cycle under ``plan`` (after repair),
    including deficits carried into it."""
    plan = repair_plan(plan, scenario.supplies[state.cycle_index])
    received = plan.sum(axis=0)
    demand = scenario.demands[state.cycle_index] + state.deficits
    return float(np.maximum(0.0, demand - received).sum())


def encode_cycle_problem(scenario, state, horizon, penalty=OVERSHOOT_PENALTY):
    """Box-bounded two-objective formulation of the next ``horizon``
    cycles (truncated at the scenario's end).

    The decision vector is the flattened (horizon, centers, sites)
    shipment tensor, each entry bounded by its center's supply in that
    cycle.  Objective one is total unmet demand over the window with
    deficits carried additively cycle to cycle; objective two is total
    shipment-weighted transport distance.  Shipping more than a center's
    supply adds ``penalty`` times the total overshoot to both
    objectives.
    """
    if horizon < 1:
        raise ContractError("planning horizon must cover at least one cycle")
    start = state.cycle_index
    if not 0 <= start < scenario.cycles:
        raise ContractError("cycle index outside the scenario")
    h = min(horizon, scenario.cycles - start)
    nc, ns = scenario.n_centers, scenario.n_sites
    # only the current cycle's quantities are revealed; later window
    # cycles use a persistence forecast of them
    supplies = np.repeat(scenario.supplies[start][None, :], h, axis=0)
    demands = np.repeat(scenario.demands[start][None, :], h, axis=0)
    dist = scenario.distances()
    carried0 = np.asarray(state.deficits, dtype=float)

    n_var = h * nc * ns
    lower = np.zeros(n_var)
    upper = np.repeat(supplies.reshape(h * nc), ns)

    def evaluate(X):
        N = X.shape[0]
        ship = X.reshape(N, h, nc, ns)
        sent = ship.sum(axis=3)
        overshoot = np.maximum(0.0, sent - supplies[None, :, :]).sum(axis=(1, 2))
        received = ship.sum(axis=2)
        carried = np.broadcast_to(carried0, (N, ns)).copy()
        unmet_total = np.zeros(N)
        for t in range(h):
            unmet = np.maximum(0.0, demands[t][None, :] + carried - received[:, t, :])
            unmet_total += unmet.sum(axis=1)
            carried = unmet
        transport = (ship * dist[None, None, :, :]).sum(axis=(1, 2, 3))
        infeasibility = penalty * overshoot
        return np.column_stack(
            [unmet_total + infeasibility, transport + infeasibility]
        )

    return Problem(
        name=f"ALLOC-{nc}x{ns}-cycle{start + 1}",
        n_var=n_var,
        n_obj=2,
        lower=lower,
        upper=upper,
        evaluator=evaluate,
    )


def _topped_up(plan, supplies):
    """The same shipping pattern pushed to full capacity: every row with
    any shipments is scaled so it sums to its center's supply."""
    plan = np.asarray(plan, dtype=float).copy()
    shipped = plan.sum(axis=1)
    active = shipped > 0
    plan[active] *= (supplies[active] / shipped[active])[:, None]
    return plan


def _select_plan(record, scenario, state):
    """Pick the executed first-cycle plan from a final archive: minimal
    executed-cycle loss, then minimal executed transport effort.

    Each archive plan is considered both as repaired and topped up to
    full capacity; topping up only wins while outstanding demand
    exceeds what the plan ships, since it trades transport for loss.
    """
    nc, ns = scenario.n_centers, scenario.n_sites
    supplies = scenario.supplies[state.cycle_index]
    dist = scenario.distances()
    best = None
    for row in np.asarray(record.archive_decisions):
        base = repair_plan(row[: nc * ns].reshape(nc, ns), supplies)
        for plan in (base, _topped_up(base, supplies)):
            loss = system_loss(plan, scenario, state)
            transport = float((plan * dist).sum())
            key = (loss, transport)
            if best is None or key < best[0]:
                best = (key, plan)
    if best is None:
        raise ContractError("optimizer returned an empty archive")
    return best[1]


def rolling_horizon_run(
    scenario, params=None, base_seed=0, horizon=2, penalty=OVERSHOOT_PENALTY
):
    """Optimize and execute every cycle of ``scenario`` in turn.

    Each cycle re-encodes the remaining window, runs the optimizer with
    a seed derived from ``base_seed`` and the cycle index, executes the
    selected plan's first cycle, and carries unmet demand forward.
    Returns a :class:`RollingResult` with the per-cycle loss trace.
    """
    if params is None:
        params = AlgorithmParams()
    seeder = RandomSource(base_seed)
    state = _initial_state(scenario)
    losses, executed = [], []
    for cycle in range(scenario.cycles):
        problem = encode_cycle_problem(scenario, state, horizon, penalty=penalty)
        record = run(problem, params, seed=seeder.child_seed(cycle))
        plan = _select_plan(record, scenario, state)
        received = plan.sum(axis=0)
        demand = scenario.demands[cycle] + state.deficits
        deficits = np.maximum(0.0, demand - received)
        loss = float(deficits.sum())
        losses.append(loss)
        executed.append(plan)
        state = CycleState(
            cycle_index=cycle + 1,
            deficits=deficits,
            cumulative_loss=state.cumulative_loss + loss,
        )
    return RollingResult(
        losses=losses,
        executed=executed,
        final_deficits=state.deficits,
    )
