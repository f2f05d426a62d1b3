"""Name lookup for the distance functions exposed on the command line."""

from __future__ import annotations

import os

from .counterexamples import load_override_metric, metric_example_411, metric_example_412
from .errors import UnknownMetric
from .metrics import D2, HAMMING, TRUNCATED_HAMMING, T, DistanceFunction, LengthPenaltyMetric
from .words import Alphabet

FIXED_NAMES = ("hamming", "truncated-hamming", "T", "d2")
EXAMPLE_NAMES = ("example411", "example412")


def get_metric(name: str, alphabet: Alphabet | None = None) -> DistanceFunction:
    """Resolve a registry name (case-sensitive) or an override-file path."""
    fixed = {"hamming": HAMMING, "truncated-hamming": TRUNCATED_HAMMING, "T": T, "d2": D2}
    if name in fixed:
        return fixed[name]
    if name.startswith("dn:"):
        try:
            n = int(name[3:])
        except ValueError:
            raise UnknownMetric(f"bad dn parameter in {name!r}") from None
        if n < 1:
            raise UnknownMetric(f"dn requires n >= 1, got {name!r}")
        return LengthPenaltyMetric(n)
    if name == "example411":
        return metric_example_411(alphabet or Alphabet("01"))
    if name == "example412":
        return metric_example_412(alphabet or Alphabet("01"))
    if name.endswith(".json") or os.path.isfile(name):
        return load_override_metric(name, alphabet or Alphabet("01"), resolve=get_metric)
    raise UnknownMetric(f"unknown metric {name!r}")


def list_metrics(metric_only: bool = False) -> list[dict]:
    """Registry entries with their claimed flags.

    ``dn:<n>`` accepts any ``n >= 1``; the listing shows n = 1, 2, 3.
    ``metric_only`` drops entries that are not claimed metrics.
    """
    entries = [get_metric(n) for n in FIXED_NAMES]
    entries += [LengthPenaltyMetric(n) for n in (1, 2, 3)]
    entries += [get_metric(n) for n in EXAMPLE_NAMES]
    out = [m.describe() for m in entries]
    if metric_only:
        out = [d for d in out if d["claimed_metric"]]
    return out
