"""Exact set algebra over axis-aligned boxes in R^M.

Endpoints are extended reals (``math.inf`` allowed) with explicit open/closed
flags.  Every operation compares endpoint values and flags only; there is no
floating tolerance anywhere.  A :class:`Region` is a finite list of pairwise
disjoint, non-empty :class:`Hyperrectangle` objects.
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

INF = math.inf


@dataclass(frozen=True)
class Interval:
    """A possibly unbounded interval of the real line.

    Any combination of endpoints and flags that denotes the empty set is
    normalised to the canonical :data:`EMPTY` value, and infinite endpoints are
    always open, so structural equality coincides with set equality.
    """

    lo: float
    hi: float
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints cannot be NaN")
        lo_closed = bool(self.lo_closed) and not math.isinf(lo)
        hi_closed = bool(self.hi_closed) and not math.isinf(hi)
        if not (lo < hi or (lo == hi and lo_closed and hi_closed)):
            lo, hi, lo_closed, hi_closed = 0.0, 0.0, False, False
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "lo_closed", lo_closed)
        object.__setattr__(self, "hi_closed", hi_closed)

    @classmethod
    def open(cls, lo: float, hi: float) -> Interval:
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo: float, hi: float) -> Interval:
        return cls(lo, hi, True, True)

    @classmethod
    def point(cls, value: float) -> Interval:
        return cls(value, value, True, True)

    @classmethod
    def full(cls) -> Interval:
        return cls(-INF, INF)

    @property
    def is_empty(self) -> bool:
        return self.lo == self.hi and not self.lo_closed

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi and self.lo_closed

    @property
    def is_full(self) -> bool:
        return self.lo == -INF and self.hi == INF

    # Ordering keys: a larger lower key / smaller upper key is tighter.
    @property
    def lower_key(self) -> tuple[float, int]:
        return (self.lo, 0 if self.lo_closed else 1)

    @property
    def upper_key(self) -> tuple[float, int]:
        return (self.hi, 0 if self.hi_closed else -1)

    def __contains__(self, x: float) -> bool:
        if self.is_empty:
            return False
        return self.lower_key <= (x, 0) <= self.upper_key

    def contains_array(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.is_empty:
            return np.zeros(x.shape, dtype=bool)
        lo_ok = x >= self.lo if self.lo_closed else x > self.lo
        hi_ok = x <= self.hi if self.hi_closed else x < self.hi
        return lo_ok & hi_ok

    def issubset(self, other: Interval) -> bool:
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        return other.lower_key <= self.lower_key and self.upper_key <= other.upper_key

    def intersect(self, other: Interval) -> Interval:
        return interval_intersect(self, other)

    def difference(self, other: Interval) -> list[Interval]:
        """``self \\ other`` as at most two disjoint intervals, left to right."""
        if self.is_empty:
            return []
        cut = interval_intersect(self, other)
        if cut.is_empty:
            return [self]
        left = Interval(self.lo, cut.lo, self.lo_closed, not cut.lo_closed)
        right = Interval(cut.hi, self.hi, not cut.hi_closed, self.hi_closed)
        return [piece for piece in (left, right) if not piece.is_empty]

    def adjacent_to(self, other: Interval) -> bool:
        """True if ``self`` ends exactly where ``other`` starts with no gap or overlap."""
        if self.is_empty or other.is_empty:
            return False
        return self.hi == other.lo and self.hi_closed != other.lo_closed

    def __str__(self):
        if self.is_empty:
            return "{}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"

    @classmethod
    def parse(cls, text: str) -> Interval:
        """Inverse of ``str()``: ``"(-inf, 4.96]"``, ``"[2.0, 2.0]"`` or ``"{}"``."""
        text = text.strip()
        if text == "{}":
            return EMPTY
        m = _INTERVAL_RE.fullmatch(text)
        if m is None:
            raise ValueError(f"malformed interval {text!r}")
        lo, hi = float(m.group(2)), float(m.group(3))
        iv = cls(lo, hi, m.group(1) == "[", m.group(4) == "]")
        if iv.is_empty:
            raise ValueError(f"interval {text!r} is empty; write {{}} instead")
        return iv


def _fmt(v: float) -> str:
    if v == INF:
        return "+inf"
    if v == -INF:
        return "-inf"
    return repr(v)


_NUM = r"\s*([+-]?(?:inf|[0-9.eE+-]+))\s*"
_INTERVAL_RE = re.compile(r"([\[(])" + _NUM + "," + _NUM + r"([\])])")

EMPTY = Interval(0.0, 0.0)


def interval_intersect(p: Interval, q: Interval) -> Interval:
    if p.is_empty or q.is_empty:
        return EMPTY
    lo, lo_flag = max(p.lower_key, q.lower_key)
    hi, hi_flag = min(p.upper_key, q.upper_key)
    return Interval(lo, hi, lo_flag == 0, hi_flag == 0)


@dataclass(frozen=True)
class Hyperrectangle:
    """Cartesian product of one :class:`Interval` per dimension."""

    dims: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))

    @classmethod
    def full(cls, m: int) -> Hyperrectangle:
        return cls((Interval.full(),) * m)

    @property
    def dim(self) -> int:
        return len(self.dims)

    @property
    def is_empty(self) -> bool:
        return any(iv.is_empty for iv in self.dims)

    def contains(self, x: Sequence[float]) -> bool:
        x = _check_point(x, self.dim)
        return all(xi in iv for xi, iv in zip(x, self.dims))

    def contains_points(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        mask = np.ones(points.shape[0], dtype=bool)
        for j, iv in enumerate(self.dims):
            if not iv.is_full:
                mask &= iv.contains_array(points[:, j])
        return mask

    def intersect(self, other: Hyperrectangle) -> Hyperrectangle:
        return box_intersect(self, other)

    def issubset(self, other: Hyperrectangle) -> bool:
        _check_dims(self.dim, other.dim)
        if self.is_empty:
            return True
        return all(p.issubset(q) for p, q in zip(self.dims, other.dims))

    def difference(self, other: Hyperrectangle) -> list[Hyperrectangle]:
        """``self \\ other`` as a list of pairwise-disjoint non-empty boxes.

        Slab splitting: along each dimension in turn, peel off the parts of the
        remaining box lying outside the overlap, then narrow that dimension to
        the overlap.
        """
        if self.is_empty:
            return []
        cut = box_intersect(self, other)
        if cut.is_empty:
            return [self]
        pieces = []
        rest = list(self.dims)
        for j in range(self.dim):
            for part in rest[j].difference(cut.dims[j]):
                pieces.append(Hyperrectangle(tuple(rest[:j]) + (part,) + tuple(rest[j + 1:])))
            rest[j] = cut.dims[j]
        return pieces

    def sort_key(self):
        return tuple((iv.lower_key, iv.upper_key) for iv in self.dims)

    def __str__(self):
        return " x ".join(str(iv) for iv in self.dims)


def box_intersect(a: Hyperrectangle, b: Hyperrectangle) -> Hyperrectangle:
    _check_dims(a.dim, b.dim)
    return Hyperrectangle(tuple(interval_intersect(p, q) for p, q in zip(a.dims, b.dims)))


@dataclass(frozen=True)
class Region:
    """A finite union of pairwise-disjoint non-empty boxes of dimension ``dim``.

    The constructor trusts the caller on disjointness (use
    :func:`disjoint_decomposition` for arbitrary boxes) but drops empty boxes.
    """

    dim: int
    boxes: tuple[Hyperrectangle, ...] = ()

    def __post_init__(self):
        boxes = tuple(b for b in self.boxes if not b.is_empty)
        for b in boxes:
            _check_dims(self.dim, b.dim)
        object.__setattr__(self, "boxes", boxes)

    @classmethod
    def from_box(cls, box: Hyperrectangle) -> Region:
        return cls(box.dim, (box,))

    @classmethod
    def empty(cls, m: int) -> Region:
        return cls(m, ())

    @property
    def is_empty(self) -> bool:
        return not self.boxes

    def contains(self, x: Sequence[float]) -> bool:
        x = _check_point(x, self.dim)
        return any(b.contains(x) for b in self.boxes)

    def contains_points(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=float)
        mask = np.zeros(points.shape[0], dtype=bool)
        for b in self.boxes:
            mask |= b.contains_points(points)
        return mask

    def union(self, other: Region) -> Region:
        return region_union(self, other)

    def difference(self, other: Region) -> Region:
        return region_difference(self, other)

    def intersect(self, other: Region) -> Region:
        return region_intersect(self, other)

    def canonical(self) -> Region:
        """Greedily merge exactly adjacent boxes and sort the result."""
        return Region(self.dim, tuple(sorted(merge_adjacent(self.boxes), key=Hyperrectangle.sort_key)))

    def __len__(self):
        return len(self.boxes)

    def __str__(self):
        if self.is_empty:
            return "{}"
        return " U ".join(str(b) for b in self.boxes)


def _as_region(a: Region | Hyperrectangle) -> Region:
    return Region.from_box(a) if isinstance(a, Hyperrectangle) else a


def region_difference(a: Region | Hyperrectangle, b: Region | Hyperrectangle) -> Region:
    a, b = _as_region(a), _as_region(b)
    _check_dims(a.dim, b.dim)
    pieces = list(a.boxes)
    for cutter in b.boxes:
        pieces = [part for box in pieces for part in box.difference(cutter)]
        if not pieces:
            break
    return Region(a.dim, tuple(pieces)).canonical()


def region_union(a: Region | Hyperrectangle, b: Region | Hyperrectangle) -> Region:
    a, b = _as_region(a), _as_region(b)
    _check_dims(a.dim, b.dim)
    extra = region_difference(b, a)
    return Region(a.dim, a.boxes + extra.boxes).canonical()


def region_intersect(a: Region | Hyperrectangle, b: Region | Hyperrectangle) -> Region:
    a, b = _as_region(a), _as_region(b)
    _check_dims(a.dim, b.dim)
    boxes = tuple(box_intersect(p, q) for p in a.boxes for q in b.boxes)
    return Region(a.dim, boxes).canonical()


def region_is_empty(a: Region | Hyperrectangle) -> bool:
    return _as_region(a).is_empty


def region_contains(a: Region | Hyperrectangle, x: Sequence[float]) -> bool:
    return _as_region(a).contains(x)


def same_point_set(a: Region | Hyperrectangle, b: Region | Hyperrectangle) -> bool:
    """Exact set equality; box lists of equal regions need not coincide."""
    return region_difference(a, b).is_empty and region_difference(b, a).is_empty


def union_of_boxes(boxes: Iterable[Hyperrectangle], m: int) -> Region:
    out = Region.empty(m)
    for box in boxes:
        out = region_union(out, box)
    return out


def merge_adjacent(boxes: Iterable[Hyperrectangle]) -> list[Hyperrectangle]:
    """Merge boxes that agree on all but one dimension and touch exactly there.

    Sweeps dimension by dimension until a full round makes no change.  Input
    boxes must be pairwise disjoint; the point set is preserved.
    """
    boxes = [b for b in boxes if not b.is_empty]
    if not boxes:
        return []
    m = boxes[0].dim
    changed = True
    while changed:
        changed = False
        for j in range(m):
            groups = defaultdict(list)
            for b in boxes:
                groups[b.dims[:j] + b.dims[j + 1:]].append(b)
            merged = []
            for group in groups.values():
                group.sort(key=lambda b: (b.dims[j].lower_key, b.dims[j].upper_key))
                current = group[0]
                for nxt in group[1:]:
                    if current.dims[j].adjacent_to(nxt.dims[j]):
                        p, q = current.dims[j], nxt.dims[j]
                        joined = Interval(p.lo, q.hi, p.lo_closed, q.hi_closed)
                        current = Hyperrectangle(current.dims[:j] + (joined,) + current.dims[j + 1:])
                        changed = True
                    else:
                        merged.append(current)
                        current = nxt
                merged.append(current)
            boxes = merged
    return boxes


def elementary_intervals(endpoints: Iterable[float]) -> list[Interval]:
    """Split the line at the given finite values into singletons and open gaps."""
    values = sorted({float(v) for v in endpoints if math.isfinite(v)})
    if not values:
        return [Interval.full()]
    cells = [Interval.open(-INF, values[0])]
    for left, right in zip(values, values[1:]):
        cells.append(Interval.point(left))
        cells.append(Interval.open(left, right))
    cells.append(Interval.point(values[-1]))
    cells.append(Interval.open(values[-1], INF))
    return cells


def elementary_cells(boxes: Sequence[Hyperrectangle]) -> dict[Hyperrectangle, frozenset[int]]:
    """Map every elementary grid cell covered by ``boxes`` to the indices covering it.

    The grid is induced, per dimension, by all finite endpoints of all boxes,
    so each cell lies entirely inside or entirely outside each input box.
    """
    boxes = list(boxes)
    if not boxes:
        return {}
    m = boxes[0].dim
    for b in boxes:
        _check_dims(m, b.dim)
    axes = []
    for j in range(m):
        ends = [v for b in boxes if not b.is_empty for v in (b.dims[j].lo, b.dims[j].hi)]
        axes.append(elementary_intervals(ends))
    cover: dict[tuple[int, ...], set[int]] = defaultdict(set)
    for k, box in enumerate(boxes):
        if box.is_empty:
            continue
        ranges = [[i for i, cell in enumerate(axes[j]) if cell.issubset(box.dims[j])] for j in range(m)]
        for idx in product(*ranges):
            cover[idx].add(k)
    return {
        Hyperrectangle(tuple(axes[j][i] for j, i in enumerate(idx))): frozenset(ks)
        for idx, ks in sorted(cover.items())
    }


def decompose_by_cover(boxes: Sequence[Hyperrectangle]) -> list[tuple[frozenset[int], list[Hyperrectangle]]]:
    """Disjoint boxes grouped by the exact set of input boxes that contain them.

    Cells with identical cover sets are merged greedily; cells with different
    cover sets are never merged.  Groups are sorted by their cover set.
    """
    groups: dict[frozenset[int], list[Hyperrectangle]] = defaultdict(list)
    for cell, ks in elementary_cells(boxes).items():
        groups[ks].append(cell)
    out = []
    for ks in sorted(groups, key=lambda s: tuple(sorted(s))):
        out.append((ks, sorted(merge_adjacent(groups[ks]), key=Hyperrectangle.sort_key)))
    return out


def disjoint_decomposition(boxes: Sequence[Hyperrectangle]) -> Region:
    """Pairwise-disjoint boxes covering exactly the union of ``boxes``."""
    boxes = list(boxes)
    if not boxes:
        raise ValueError("need at least one box to infer the dimension")
    cells = list(elementary_cells(boxes))
    return Region(boxes[0].dim, tuple(cells)).canonical()


def _check_dims(m: int, n: int) -> None:
    if m != n:
        raise ValueError(f"dimension mismatch: {m} vs {n}")


def _check_point(x: Sequence[float], m: int) -> tuple[float, ...]:
    x = tuple(float(v) for v in x)
    if len(x) != m:
        raise ValueError(f"point has {len(x)} coordinates, expected {m}")
    if any(math.isnan(v) for v in x):
        raise ValueError("point coordinates cannot be NaN")
    return x
