"""North/east lattice paths and counting paths confined by a boundary path.

Coordinates are (x, y) = (#E, #N). A path stays *weakly below* a boundary
P when every lattice point it visits satisfies y <= ceiling_P(x), where
ceiling_P(x) is the largest height P reaches in column x. It stays *weakly
above* P when y >= floor_P(x), the height at which P enters column x.
These column-height vectors are the whole story: they are how the counting
DP and the reflection duality are defined.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

__all__ = [
    "LatticePath",
    "ReversePartition",
    "count_weakly_below",
    "count_weakly_above",
    "count_weakly_above_direct",
    "stays_weakly_below",
    "stays_weakly_above",
    "paths_to",
    "all_words",
    "path_to_reverse_partition",
    "reverse_partition_to_path",
    "staircase_boundary",
    "periodic_wall_boundary",
    "f_r_count",
    "q_count",
    "fbar_count",
]

_TOKEN = re.compile(r"([NE])(\d*)")


@dataclass(frozen=True)
class LatticePath:
    steps: str = ""

    def __post_init__(self):
        if any(c not in "NE" for c in self.steps):
            raise ValueError(f"path steps must be N or E, got {self.steps!r}")

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        """Read a literal such as ``"N3E2"`` (= NNNEE) or ``"NENE"``."""
        text = text.replace(" ", "").upper()
        pos, out = 0, []
        for match in _TOKEN.finditer(text):
            if match.start() != pos:
                break
            step, count = match.groups()
            out.append(step * (int(count) if count else 1))
            pos = match.end()
        if pos != len(text):
            raise ValueError(f"bad path literal {text!r}")
        return cls("".join(out))

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.steps.count("E"), self.steps.count("N")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: "LatticePath") -> "LatticePath":
        return LatticePath(self.steps + other.steps)

    def __mul__(self, n: int) -> "LatticePath":
        return LatticePath(self.steps * n)

    def __str__(self) -> str:
        return self.steps

    def compact(self) -> str:
        """Run-length form, e.g. NE3N3E3N2."""
        out, i = [], 0
        s = self.steps
        while i < len(s):
            j = i
            while j < len(s) and s[j] == s[i]:
                j += 1
            out.append(s[i] + (str(j - i) if j - i > 1 else ""))
            i = j
        return "".join(out)

    def reflect(self) -> "LatticePath":
        """Mirror in the diagonal: N <-> E."""
        return LatticePath(self.steps.translate(str.maketrans("NE", "EN")))

    def points(self) -> list[tuple[int, int]]:
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    def ceilings(self) -> list[int]:
        """Highest y reached in each column 0..#E."""
        h = [0] * (self.endpoint[0] + 1)
        for x, y in self.points():
            h[x] = y
        return h

    def floors(self) -> list[int]:
        """Height at which the path enters each column 0..#E."""
        f = [None] * (self.endpoint[0] + 1)
        for x, y in self.points():
            if f[x] is None:
                f[x] = y
        return f


@dataclass(frozen=True)
class ReversePartition:
    """Weakly increasing parts mu_1 <= ... <= mu_n, each at most ``width``."""

    parts: tuple[int, ...]
    width: int

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 or p > self.width for p in parts):
            raise ValueError(f"parts {parts} not within 0..{self.width}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly increasing")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def contained_in(self, other: "ReversePartition") -> bool:
        if len(self) != len(other):
            raise ValueError("partitions of different lengths")
        return all(a <= b for a, b in zip(self.parts, other.parts))


def _check_target(target) -> tuple[int, int]:
    tx, ty = target
    if tx < 0 or ty < 0:
        raise ValueError(f"target {target} is unreachable from (0, 0)")
    return tx, ty


def count_weakly_below(boundary: LatticePath, target) -> int:
    """Number of N/E paths from (0,0) to ``target`` never strictly above ``boundary``."""
    tx, ty = _check_target(target)
    ceil = boundary.ceilings()
    if tx >= len(ceil):
        raise ValueError(f"boundary {boundary} stops before column {tx}")
    if ty > ceil[tx]:
        raise ValueError(f"target {target} lies above the boundary")
    col = [1] * (min(ceil[0], ty) + 1)
    for x in range(1, tx + 1):
        top = min(ceil[x], ty)
        new = [0] * (top + 1)
        run = 0
        for y in range(top + 1):
            run += col[y] if y < len(col) else 0
            new[y] = run
        col = new
    return col[ty]


def count_weakly_above(boundary: LatticePath, target) -> int:
    """Number of paths to ``target`` never strictly below ``boundary``.

    Mirrors everything in the diagonal and counts paths weakly below the
    mirrored boundary.
    """
    tx, ty = _check_target(target)
    return count_weakly_below(boundary.reflect(), (ty, tx))


def count_weakly_above_direct(boundary: LatticePath, target) -> int:
    """Same count as :func:`count_weakly_above`, by a DP over column floors."""
    tx, ty = _check_target(target)
    floor = boundary.floors()
    if tx >= len(floor):
        raise ValueError(f"boundary {boundary} stops before column {tx}")
    if ty < floor[tx] or ty > boundary.endpoint[1]:
        raise ValueError(f"target {target} is outside the region above the boundary")
    # ways[y] for the current column, y in floor[x]..ty
    ways = {y: 1 for y in range(0, ty + 1)}
    for x in range(1, tx + 1):
        new = {}
        for y in range(floor[x], ty + 1):
            new[y] = ways.get(y, 0) + new.get(y - 1, 0)
        ways = new
    return ways[ty]


def paths_to(target) -> Iterator[LatticePath]:
    """Every N/E path from (0,0) to target (exponentially many)."""
    tx, ty = _check_target(target)
    n = tx + ty
    for npos in combinations(range(n), ty):
        s = ["E"] * n
        for i in npos:
            s[i] = "N"
        yield LatticePath("".join(s))


def all_words(length: int) -> Iterator[LatticePath]:
    for mask in range(1 << length):
        yield LatticePath("".join("N" if mask >> i & 1 else "E" for i in range(length)))


def stays_weakly_below(path: LatticePath, boundary: LatticePath) -> bool:
    ceil = boundary.ceilings()
    return all(x < len(ceil) and y <= ceil[x] for x, y in path.points())


def stays_weakly_above(path: LatticePath, boundary: LatticePath) -> bool:
    floor = boundary.floors()
    return all(x < len(floor) and y >= floor[x] for x, y in path.points())


def path_to_reverse_partition(p: LatticePath, rows: int) -> ReversePartition:
    """mu_i = number of E steps taken before the i-th N step.

    Equivalently mu_i counts the cells of the i-th row from the bottom that
    lie left of the path, so mu is weakly increasing.
    """
    if p.steps.count("N") != rows:
        raise ValueError(f"path {p} has {p.steps.count('N')} N steps, expected {rows}")
    parts, e = [], 0
    for s in p.steps:
        if s == "E":
            e += 1
        else:
            parts.append(e)
    return ReversePartition(tuple(parts), e)


def reverse_partition_to_path(mu: ReversePartition) -> LatticePath:
    out, e = [], 0
    for part in mu:
        out.append("E" * (part - e) + "N")
        e = part
    out.append("E" * (mu.width - e))
    return LatticePath("".join(out))


def staircase_boundary(k: int, ell: int, n: int, r: int = 0) -> LatticePath:
    """(N^k E^ell)^(n-1) N^k E^(ell-r); with r = 0 this is (N^k E^ell)^n."""
    if n == 0:
        return LatticePath()
    block = LatticePath("N" * k + "E" * ell)
    return block * (n - 1) + LatticePath("N" * k + "E" * (ell - r))


def periodic_wall_boundary(m: int, n: int) -> LatticePath:
    """N (E^m N^m)^(n-1) E^m N^(m-1): lower boundary of the periodic-wall paths."""
    if n == 0:
        return LatticePath()
    return (
        LatticePath("N")
        + LatticePath("E" * m + "N" * m) * (n - 1)
        + LatticePath("E" * m + "N" * (m - 1))
    )


def _check_kl(k: int, ell: int, n: int) -> None:
    if k < 1 or ell < 1:
        raise ValueError("k and l must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")


def f_r_count(k: int, ell: int, r: int, n: int) -> int:
    """Paths to (l*n - r, k*n) never above (N^k E^l)^(n-1) N^k E^(l-r); 1 at n = 0."""
    _check_kl(k, ell, n)
    if not 1 <= r <= ell:
        raise ValueError(f"r must lie in 1..{ell}, got {r}")
    if n == 0:
        return 1
    return count_weakly_below(staircase_boundary(k, ell, n, r), (ell * n - r, k * n))


def q_count(k: int, ell: int, n: int) -> int:
    """Paths to (l*n, k*n) never above (N^k E^l)^n."""
    _check_kl(k, ell, n)
    return count_weakly_below(staircase_boundary(k, ell, n), (ell * n, k * n))


def fbar_count(m: int, n: int) -> int:
    """Paths to (mn, mn) never below N (E^m N^m)^(n-1) E^m N^(m-1)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if n == 0:
        return 1
    return count_weakly_above(periodic_wall_boundary(m, n), (m * n, m * n))
