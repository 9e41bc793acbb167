"""The record both the analysis pipeline and the oracle fill in.

Point sets are bitmasks and relations are tuples of row bitmasks, so two
records compare with plain ``==`` and diff field by field.
"""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Verdicts:
    n: int
    opens_count: int
    periodic: int
    nonwandering: int
    recurrent: int
    quasi_periodic: int
    almost_periodic: int
    transitive_points: int
    omega: tuple[int, ...]
    minimal_sets: tuple[int, ...]
    transitive: bool
    top_ergodic: bool | None
    weakly_mixing: bool | None
    strongly_mixing: bool | None
    prox: tuple[int, ...]
    asym: tuple[int, ...]
    syprox: tuple[int, ...]
    triangle: tuple[int, ...]
    stable: int
    sensitive: bool

    def diff(self, other: Verdicts) -> list[str]:
        """Names of fields that differ. ``None`` on either side means not evaluated."""
        out = []
        for fld in fields(self):
            a, b = getattr(self, fld.name), getattr(other, fld.name)
            if a is None or b is None:
                continue
            if a != b:
                out.append(fld.name)
        return out
