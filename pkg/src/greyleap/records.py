"""Serializable results of a single optimizer run.

A record captures everything needed to audit or resume an experiment:
the configuration, the seed, the evaluation budget actually consumed,
per-generation archive snapshots, and the final archive itself.  The
JSON form is canonical (sorted keys, fixed separators, shortest float
round-trip), so identical runs serialize to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np


@dataclass
class GenerationSnapshot:
    """Archive state after one generation.

    Indicator fields stay ``None`` when the run was executed without
    indicator tracking.  ``truncated`` records whether the archive hit
    capacity and evicted members this generation.
    """

    generation: int
    evals: int
    archive_size: int
    truncated: bool
    hv: float | None = None
    igd: float | None = None
    spread: float | None = None

    def to_dict(self):
        return {
            "generation": self.generation,
            "evals": self.evals,
            "archive_size": self.archive_size,
            "truncated": self.truncated,
            "hv": self.hv,
            "igd": self.igd,
            "spread": self.spread,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass
class RunRecord:
    algorithm: str
    problem: str
    seed: int
    params: dict
    evals_used: int
    snapshots: list = field(default_factory=list)
    archive_decisions: np.ndarray = field(default_factory=lambda: np.empty((0, 0)))
    archive_objectives: np.ndarray = field(default_factory=lambda: np.empty((0, 0)))
    invariant_violations: int | None = None

    def to_json(self) -> str:
        payload = {
            "algorithm": self.algorithm,
            "problem": self.problem,
            "seed": self.seed,
            "params": self.params,
            "evals_used": self.evals_used,
            "snapshots": [s.to_dict() for s in self.snapshots],
            "archive": {
                "decisions": [[float(v) for v in row] for row in self.archive_decisions],
                "objectives": [[float(v) for v in row] for row in self.archive_objectives],
            },
            "invariant_violations": self.invariant_violations,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        d = json.loads(text)
        return cls(
            algorithm=d["algorithm"],
            problem=d["problem"],
            seed=d["seed"],
            params=d["params"],
            evals_used=d["evals_used"],
            snapshots=[GenerationSnapshot.from_dict(s) for s in d["snapshots"]],
            archive_decisions=np.asarray(d["archive"]["decisions"], dtype=float),
            archive_objectives=np.asarray(d["archive"]["objectives"], dtype=float),
            invariant_violations=d.get("invariant_violations"),
        )

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_json())
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "RunRecord":
        with open(path) as fh:
            return cls.from_json(fh.read())
