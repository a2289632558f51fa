"""Propagation verdicts shared by the toric, arrangement and Fox modules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


@dataclass
class PropagationVerdict:
    propagates: bool
    first_failure: Optional[tuple[int, Any]] = None
    note: str = ""

    def as_dict(self):
        out = {"propagates": self.propagates}
        if self.first_failure is not None:
            i, w = self.first_failure
            out["first_failure"] = {"degree": i, "witness": _jsonable(w)}
        if self.note:
            out["note"] = self.note
        return out


def _jsonable(w):
    if isinstance(w, (tuple, list, frozenset, set)):
        return [_jsonable(x) for x in (sorted(w) if isinstance(w, (set, frozenset)) else w)]
    if isinstance(w, (int, bool, str)) or w is None:
        return w
    return str(w)


def pointwise_propagation(dims, lo: int, hi: int) -> Optional[int]:
    """First ``p`` in ``[lo, hi)`` with ``dims[p] != 0`` but some later
    ``dims[q] == 0`` (``q <= hi``); ``None`` when the pattern propagates."""
    for p in range(lo, hi):
        if dims[p] and any(not dims[q] for q in range(p + 1, hi + 1)):
            return p
    return None
