"""Segments and segment sets.

A segment [p0, ..., pk] is a chain of k consecutive adjacencies on distinct
points; it equals its own reversal, so we store the orientation with the
smaller endpoint first. A segment set is a union of pairwise strongly
disjoint segments (no shared points) over an ambient [n]; it is exactly a
subset of some permutation's adjacency set. Conventions:

    |I|  = number of adjacencies  (sum of segment lengths)
    ||I|| = number of segments

Points split into end points (segment extremities, freedom 1), intrinsic
points (strict interior, freedom 0) and isolated points (freedom 2).

Counting and sampling here are always relative to a fixed base permutation
(the identity): the m-adjacency, k-segment subsets of A_id number
C(m-1, k-1) * C(n-m, k), and the conditional sampler draws segment lengths
and gaps as uniform compositions of that product form, so no rejection loop
is involved.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DuplicateValue, InvalidRange, NotContained, OutOfRange, TooShort
from .perms import Adjacency, Permutation, adjacency_set

Segment = tuple[int, ...]


def canonical_segment(points: Sequence[int]) -> Segment:
    """Orient a segment with the smaller endpoint first."""
    pts = tuple(points)
    if len(pts) < 2:
        raise TooShort(f"segment needs at least 2 points, got {list(points)}")
    return pts if pts[0] <= pts[-1] else pts[::-1]


def segment_adjacencies(seg: Segment) -> frozenset[Adjacency]:
    return frozenset((a, b) if a < b else (b, a) for a, b in zip(seg, seg[1:]))


@dataclass(frozen=True)
class SegmentSet:
    """Pairwise strongly disjoint segments over the ambient [n]."""

    n: int
    segments: tuple[Segment, ...]

    def __post_init__(self):
        if self.n < 2:
            raise TooShort(f"ambient size must be >= 2, got {self.n}")
        seen: set[int] = set()
        for seg in self.segments:
            if len(seg) < 2:
                raise TooShort(f"segment {list(seg)} has fewer than 2 points")
            for p in seg:
                if not (1 <= p <= self.n):
                    raise OutOfRange(f"point {p} outside [1..{self.n}]")
                if p in seen:
                    raise DuplicateValue(f"point {p} used by more than one segment")
                seen.add(p)
        canon = tuple(sorted((canonical_segment(s) for s in self.segments), key=min))
        if canon != self.segments:
            object.__setattr__(self, "segments", canon)

    @classmethod
    def empty(cls, n: int) -> "SegmentSet":
        return cls(n, ())

    @property
    def size(self) -> int:
        """|I|: total number of adjacencies."""
        return sum(len(s) - 1 for s in self.segments)

    @property
    def num_segments(self) -> int:
        """||I||: number of segments."""
        return len(self.segments)

    @property
    def adjacencies(self) -> frozenset[Adjacency]:
        out: set[Adjacency] = set()
        for s in self.segments:
            out |= segment_adjacencies(s)
        return frozenset(out)

    @property
    def points(self) -> frozenset[int]:
        return frozenset(p for s in self.segments for p in s)

    @property
    def text(self) -> str:
        return ";".join("[" + ",".join(str(p) for p in s) + "]" for s in self.segments)

    def __str__(self) -> str:
        return self.text or "(empty)"


def parse_segment_set(text: str, n: int) -> SegmentSet:
    """Parse "[2,3,9,4];[5,6]" over ambient [n]; whitespace ignored, "" is empty."""
    stripped = "".join(text.split())
    if not stripped:
        return SegmentSet.empty(n)
    segments = []
    for part in stripped.split(";"):
        if not (part.startswith("[") and part.endswith("]")):
            raise OutOfRange(f"segment {part!r} is not bracketed like [a,b,c]")
        body = part[1:-1]
        if not body:
            raise TooShort(f"segment {part!r} is empty")
        pts = []
        for tok in body.split(","):
            try:
                pts.append(int(tok))
            except ValueError:
                raise OutOfRange(f"token {tok!r} is not a positive integer") from None
        segments.append(tuple(pts))
    return SegmentSet(n, tuple(segments))


@dataclass(frozen=True)
class PointClasses:
    """End/intrinsic/isolated partition of [n] with per-point freedom factors."""

    n: int
    end: frozenset[int]
    intrinsic: frozenset[int]
    isolated: frozenset[int]

    @property
    def freedom(self) -> tuple[int, ...]:
        """freedom[p] for p in 1..n; index 0 is a -1 sentinel."""
        out = [-1] * (self.n + 1)
        for p in self.end:
            out[p] = 1
        for p in self.intrinsic:
            out[p] = 0
        for p in self.isolated:
            out[p] = 2
        return tuple(out)


def point_classes(I: SegmentSet) -> PointClasses:
    """Partition [n] by role in I; empty I makes every point isolated."""
    end: set[int] = set()
    intr: set[int] = set()
    for s in I.segments:
        end.update((s[0], s[-1]))
        intr.update(s[1:-1])
    iso = frozenset(range(1, I.n + 1)) - end - intr
    return PointClasses(I.n, frozenset(end), frozenset(intr), iso)


def decompose(pi: Permutation, subset: Iterable[Adjacency]) -> SegmentSet:
    """Maximal runs of pi induced by a subset of its adjacency set."""
    chosen = frozenset(tuple(sorted(e)) for e in subset)
    extra = chosen - adjacency_set(pi)
    if extra:
        raise NotContained(f"adjacencies {sorted(extra)} not in the base permutation")
    segments = []
    run_start = None
    vals = pi.values
    for i in range(pi.n - 1):
        pair = (vals[i], vals[i + 1]) if vals[i] < vals[i + 1] else (vals[i + 1], vals[i])
        if pair in chosen:
            if run_start is None:
                run_start = i
        elif run_start is not None:
            segments.append(vals[run_start : i + 1])
            run_start = None
    if run_start is not None:
        segments.append(vals[run_start :])
    return SegmentSet(pi.n, tuple(segments))


def complement_in(pi: Permutation, I: SegmentSet) -> SegmentSet:
    """The runs of pi left after removing I's adjacencies; I must lie in A_pi."""
    if not I.adjacencies <= adjacency_set(pi):
        raise NotContained(f"{I.text or '(empty)'} is not contained in {pi.text}")
    return decompose(pi, adjacency_set(pi) - I.adjacencies)


def _check_count_range(n: int, m: int, k: int) -> None:
    if n < 2 or not (1 <= k <= m <= n - 1):
        raise InvalidRange(f"need 1 <= k <= m <= n-1, got n={n} m={m} k={k}")


def count_segment_sets(n: int, m: int, k: int) -> int:
    """Segment sets of a fixed permutation with m adjacencies in k segments.

    Stars and bars twice: segment lengths are a composition of m into k
    positive parts, gaps a composition of n-1-m with free outer parts.

    >>> count_segment_sets(5, 2, 1)
    3
    """
    _check_count_range(n, m, k)
    return comb(m - 1, k - 1) * comb(n - m, k)


def prob_A_mk(n: int, m: int, k: int) -> Fraction:
    """Probability that a uniform m-subset of A_id falls into k segments."""
    _check_count_range(n, m, k)
    return Fraction(comb(m - 1, k - 1) * comb(n - m, k), comb(n - 1, m))


def _composition(total: int, parts: int, rng: np.random.Generator) -> list[int]:
    """Uniform composition of `total` into `parts` positive parts."""
    if parts == 1:
        return [total]
    cuts = np.sort(rng.choice(total - 1, size=parts - 1, replace=False)) + 1
    bounds = [0, *map(int, cuts), total]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def sample_segment_set(n: int, m: int, k: int | None, rng: np.random.Generator) -> SegmentSet:
    """Uniform segment set of the identity: over all m-subsets of A_id, or over
    the m-adjacency k-segment ones when k is given."""
    if not (2 <= n) or not (1 <= m <= n - 1):
        raise InvalidRange(f"need 1 <= m <= n-1, got n={n} m={m}")
    if k is None:
        idxs = rng.choice(n - 1, size=m, replace=False) + 1
        chosen = {(int(i), int(i) + 1) for i in idxs}
        return decompose(Permutation(tuple(range(1, n + 1))), chosen)
    if count_segment_sets(n, m, k) == 0:
        raise InvalidRange(f"no segment sets with n={n} m={m} k={k}")
    lengths = _composition(m, k, rng)
    # gaps between runs are >= 1 adjacency; the two outer gaps may be 0
    slack = _composition(n - m + 1, k + 1, rng)
    gaps = [slack[0] - 1, *slack[1:-1], slack[-1] - 1]
    segments = []
    point = 1 + gaps[0]
    for length, gap in zip(lengths, gaps[1:]):
        segments.append(tuple(range(point, point + length + 1)))
        point += length + gap
    return SegmentSet(n, tuple(segments))


def enumerate_segment_sets(n: int, m: int | None = None, k: int | None = None) -> Iterator[SegmentSet]:
    """All segment sets of the identity, optionally fixed to m adjacencies
    and/or k segments. Includes the empty set only when m is None or 0."""
    id_n = Permutation(tuple(range(1, n + 1)))
    sizes = range(0, n) if m is None else [m]
    for size in sizes:
        for idxs in itertools.combinations(range(1, n), size):
            ss = decompose(id_n, {(i, i + 1) for i in idxs})
            if k is None or ss.num_segments == k:
                yield ss
