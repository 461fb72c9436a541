"""Published reference indicator values for comparison algorithms.

IBEA and MOEA/D are not reimplemented here; their reported mean HV,
IGD, and Spread values on the benchmark problems ship as a versioned
data file so campaign summaries can show them alongside measured
results.  Merged rows are always flagged ``published``.
"""

import csv
import io
from importlib import resources

PUBLISHED_ALGORITHMS = ("IBEA", "MOEA/D")

_FIELDS = ("algorithm", "problem", "indicator", "value")


def published_indicators():
    """All published rows as dicts with keys algorithm, problem,
    indicator, and (float) value, in data-file order."""
    ref = resources.files("greyleap.harness") / "data" / "published_indicators.csv"
    reader = csv.DictReader(io.StringIO(ref.read_text()))
    rows = []
    for row in reader:
        rows.append(
            {
                "algorithm": row["algorithm"],
                "problem": row["problem"],
                "indicator": row["indicator"],
                "value": float(row["value"]),
            }
        )
    return rows


def published_for(problems):
    """Published rows restricted to ``problems``, ordered by problem
    (input order), then algorithm, then indicator."""
    wanted = {p: i for i, p in enumerate(problems)}
    rows = [r for r in published_indicators() if r["problem"] in wanted]
    rows.sort(
        key=lambda r: (wanted[r["problem"]], r["algorithm"], r["indicator"])
    )
    return rows
