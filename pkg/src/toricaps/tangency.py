"""Tangency constraints as pure combinatorics.

A constraint in a manifold of (even) dimension ``dim`` is a list of points,
each carrying a nondecreasing list of nonnegative integers ``P^i_j``; the
surface meets the local divisor at point ``i`` with contact order
``P^i_j + 1`` at each of the corresponding marked points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidArgumentError


@dataclass(frozen=True)
class TangencyConstraint:
    points: tuple
    dim: int = 4

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 2 or self.dim % 2:
            raise InvalidArgumentError(f"dimension must be an even integer >= 2, got {self.dim!r}")
        pts = []
        for p in self.points:
            p = tuple(p)
            if not p:
                raise InvalidArgumentError("every point needs at least one tangency entry")
            for x in p:
                if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                    raise InvalidArgumentError(f"tangency entries must be nonnegative integers, got {x!r}")
            pts.append(tuple(sorted(p)))
        object.__setattr__(self, "points", tuple(pts))

    @property
    def num_points(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {"points": [list(p) for p in self.points], "dim": self.dim}

    @classmethod
    def from_json(cls, data) -> "TangencyConstraint":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "points" not in data:
            raise InvalidArgumentError("constraint JSON needs a 'points' field")
        return cls(tuple(tuple(p) for p in data["points"]), data.get("dim", 4))


def codim(p: TangencyConstraint) -> int:
    """Sum of ``dim - 2 + 2 P^i_j`` over all entries."""
    return sum(p.dim - 2 + 2 * x for pt in p.points for x in pt)


def is_lax(p: TangencyConstraint) -> bool:
    return all(len(pt) == 1 for pt in p.points)


def union(p: TangencyConstraint, q: TangencyConstraint) -> TangencyConstraint:
    """Impose ``p`` and ``q`` at disjoint sets of points."""
    if p.dim != q.dim:
        raise InvalidArgumentError("union needs constraints of equal dimension")
    return TangencyConstraint(p.points + q.points, p.dim)


def catenate(p: TangencyConstraint, q: TangencyConstraint) -> TangencyConstraint:
    """Merge the lists of ``p`` and ``q`` point by point."""
    if p.dim != q.dim:
        raise InvalidArgumentError("catenation needs constraints of equal dimension")
    if p.num_points != q.num_points:
        raise InvalidArgumentError("catenation needs the same number of points")
    return TangencyConstraint(tuple(a + b for a, b in zip(p.points, q.points)), p.dim)


def single_point(k: int, dim: int = 4) -> TangencyConstraint:
    """The one-point constraint ``((k))``."""
    return TangencyConstraint(((k,),), dim)


def lax_points(entries, dim: int = 4) -> TangencyConstraint:
    return TangencyConstraint(tuple((x,) for x in entries), dim)
