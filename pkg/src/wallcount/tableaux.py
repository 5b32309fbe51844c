"""Two-row Young tableaux with horizontal walls.

A tableau of shape (m, m) is determined by which labels sit in the row
holding the y-sequence. Labels in that row read as E steps, the others as
N steps, giving the lattice path of the tableau. Without a wall in column
i the column condition is x_i < y_i; a wall in column i drops it.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional

from .paths import (
    LatticePath,
    ReversePartition,
    count_weakly_above,
    path_to_reverse_partition,
)

__all__ = [
    "WallTableau",
    "YoungBuilding",
    "periodic_building",
    "enumerate_tableaux",
    "tableau_from_y",
    "yamanouchi_word",
    "tableau_path",
    "reverse_partition",
    "y_extremes",
    "partitions_inside",
    "verify_bijection",
    "BijectionReport",
    "bijection_counts",
    "random_wall_sets",
    "all_wall_sets",
    "mu_le",
    "path_above",
    "y_ge",
    "render",
    "max_width",
]

DEFAULT_MAX_WIDTH = 12


def max_width() -> int:
    """Enumeration guard, overridable through WALLCOUNT_MAX_WIDTH."""
    raw = os.environ.get("WALLCOUNT_MAX_WIDTH")
    return int(raw) if raw else DEFAULT_MAX_WIDTH


@dataclass(frozen=True)
class YoungBuilding:
    m: int
    walls: frozenset = frozenset()

    def __post_init__(self):
        walls = frozenset(self.walls)
        object.__setattr__(self, "walls", walls)
        if self.m < 1:
            raise ValueError("width must be positive")
        if not walls <= set(range(1, self.m + 1)):
            raise ValueError(f"walls {sorted(walls)} not inside 1..{self.m}")


def periodic_building(m: int, n: int) -> YoungBuilding:
    """n copies of B_m side by side: walls everywhere except each block's first column."""
    walls = {j * m + i for j in range(n) for i in range(2, m + 1)}
    return YoungBuilding(m * n, frozenset(walls))


@dataclass(frozen=True)
class WallTableau:
    m: int
    bottom: tuple[int, ...]
    top: tuple[int, ...]
    walls: frozenset = frozenset()

    def __post_init__(self):
        m = self.m
        if len(self.bottom) != m or len(self.top) != m:
            raise ValueError("both rows need m labels")
        if set(self.bottom) | set(self.top) != set(range(1, 2 * m + 1)):
            raise ValueError("labels must be exactly 1..2m")
        if list(self.bottom) != sorted(self.bottom) or list(self.top) != sorted(self.top):
            raise ValueError("rows must increase")
        for i in range(1, m + 1):
            if i not in self.walls and not self.bottom[i - 1] < self.top[i - 1]:
                raise ValueError(f"column {i} has no wall but x_i > y_i")

    @property
    def x(self) -> tuple[int, ...]:
        return self.bottom

    @property
    def y(self) -> tuple[int, ...]:
        return self.top


def _valid_split(ys: tuple[int, ...], xs: tuple[int, ...], walls) -> bool:
    return all(i + 1 in walls or xs[i] < ys[i] for i in range(len(ys)))


def tableau_from_y(y: Iterable[int], building: YoungBuilding) -> WallTableau:
    ys = tuple(sorted(y))
    xs = tuple(sorted(set(range(1, 2 * building.m + 1)) - set(ys)))
    return WallTableau(building.m, xs, ys, building.walls)


def enumerate_tableaux(b: YoungBuilding) -> list[WallTableau]:
    m = b.m
    if m > max_width():
        raise ValueError(f"width {m} exceeds enumeration guard {max_width()}")
    labels = range(1, 2 * m + 1)
    out = []
    for ys in combinations(labels, m):
        yset = set(ys)
        xs = tuple(v for v in labels if v not in yset)
        if _valid_split(ys, xs, b.walls):
            out.append(WallTableau(m, xs, ys, b.walls))
    return out


def yamanouchi_word(t: WallTableau) -> str:
    """0/1 word of length 2m, 1 where the label is in the y row."""
    ys = set(t.top)
    return "".join("1" if v in ys else "0" for v in range(1, 2 * t.m + 1))


def tableau_path(t: WallTableau) -> LatticePath:
    return LatticePath(yamanouchi_word(t).translate(str.maketrans("01", "NE")))


def reverse_partition(t: WallTableau) -> ReversePartition:
    return ReversePartition(tuple(x - i for i, x in enumerate(t.bottom, 1)), t.m)


def y_extremes(b: YoungBuilding) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(y_min, y_max) of the building.

    Careful with the names: y_min = (m+1, ..., 2m) is the componentwise
    *largest* y-sequence and y_max(S) the componentwise *smallest* one. They
    are the y-sequences of the bottom and top elements of the order in which
    a tableau is larger when its path sits lower.
    """
    m = b.m
    y_min = tuple(range(m + 1, 2 * m + 1))
    y_max = []
    last_free = 0
    for i in range(1, m + 1):
        if i in b.walls:
            y_max.append(i + last_free)
        else:
            y_max.append(2 * i)
            last_free = i
    return y_min, tuple(y_max)


def mu_le(t: WallTableau, u: WallTableau) -> bool:
    """mu(t) <= mu(u) componentwise."""
    return all(a <= b for a, b in zip(reverse_partition(t), reverse_partition(u)))


def path_above(t: WallTableau, u: WallTableau) -> bool:
    """The path of t never dips below the path of u (prefix N-counts dominate)."""
    nt = nu = 0
    for a, b in zip(tableau_path(t).steps, tableau_path(u).steps):
        nt += a == "N"
        nu += b == "N"
        if nt < nu:
            return False
    return True


def y_ge(t: WallTableau, u: WallTableau) -> bool:
    """y(t) >= y(u) componentwise."""
    return all(a >= b for a, b in zip(t.top, u.top))


def partitions_inside(mu: ReversePartition) -> int:
    """Brute-force count of reverse partitions nu with nu <= mu componentwise."""
    count = 0
    ranges = [range(p + 1) for p in mu]
    for nu in product(*ranges):
        if all(a <= b for a, b in zip(nu, nu[1:])):
            count += 1
    return count


@dataclass(frozen=True)
class BijectionReport:
    building: YoungBuilding
    tableaux: int
    paths: int
    partitions: int

    @property
    def ok(self) -> bool:
        return self.tableaux == self.paths == self.partitions


def bijection_counts(b: YoungBuilding) -> BijectionReport:
    _, y_top = y_extremes(b)
    top = tableau_from_y(y_top, b)
    boundary = tableau_path(top)
    return BijectionReport(
        building=b,
        tableaux=len(enumerate_tableaux(b)),
        paths=count_weakly_above(boundary, (b.m, b.m)),
        partitions=partitions_inside(path_to_reverse_partition(boundary, b.m)),
    )


def verify_bijection(b: YoungBuilding) -> bool:
    """Tableaux, paths above the top element's path, and partitions inside its
    reverse partition are equinumerous."""
    return bijection_counts(b).ok


def random_wall_sets(m: int, count: int, seed: Optional[int] = 0) -> list[frozenset]:
    rng = random.Random(seed)
    return [
        frozenset(i for i in range(1, m + 1) if rng.random() < 0.5) for _ in range(count)
    ]


def all_wall_sets(m: int) -> list[frozenset]:
    return [
        frozenset(i + 1 for i in range(m) if mask >> i & 1) for mask in range(1 << m)
    ]


def render(t: WallTableau) -> str:
    """Two aligned rows (y on top) with '|' under wall columns."""
    w = len(str(2 * t.m))
    top = " ".join(f"{v:>{w}}" for v in t.top)
    bot = " ".join(f"{v:>{w}}" for v in t.bottom)
    marks = " ".join(f"{'|' if i in t.walls else '':>{w}}" for i in range(1, t.m + 1))
    return "\n".join([top, bot, marks.rstrip()])
