"""Classify the adjacencies of a permutation against a segment set.

Each adjacency {x_i, x_{i+1}} gets exactly one of four types, decided by the
point classes of its two endpoints with respect to I:

    2-free-end       both endpoints isolated
    1-free-end       one isolated, one end point
    trivial-segment  both end points
    0-free-end       either endpoint intrinsic

The 2-free-end adjacencies form the free core F(x, I): the part of x that any
permutation containing I and completing itself inside x can keep wholesale.
The deficiency Q(x, I) = n - 1 - |I| - |F(x, I)| counts the connector
adjacencies still missing after laying down I and the free core.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import SizeMismatch
from .perms import Permutation, adjacency_set
from .segments import SegmentSet, decompose, point_classes


class AdjacencyType(enum.Enum):
    TWO_FREE_END = "2-free-end"
    ONE_FREE_END = "1-free-end"
    TRIVIAL_SEGMENT = "trivial-segment"
    ZERO_FREE_END = "0-free-end"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClassCounts:
    alpha: int   # 2-free-end
    beta: int    # 1-free-end
    gamma: int   # trivial-segment
    delta: int   # 0-free-end

    @property
    def total(self) -> int:
        return self.alpha + self.beta + self.gamma + self.delta

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta)


def _check(x: Permutation, I: SegmentSet) -> None:
    if x.n != I.n:
        raise SizeMismatch(f"permutation has n={x.n}, segment set has n={I.n}")


def classify(x: Permutation, I: SegmentSet) -> tuple[tuple[AdjacencyType, ...], ClassCounts]:
    """Label every adjacency of x by position and tally the four counts."""
    _check(x, I)
    freedom = point_classes(I).freedom
    labels = []
    counts = [0, 0, 0, 0]
    vals = x.values
    for i in range(x.n - 1):
        fa, fb = freedom[vals[i]], freedom[vals[i + 1]]
        if fa == 0 or fb == 0:
            t = AdjacencyType.ZERO_FREE_END
            counts[3] += 1
        elif fa == 2 and fb == 2:
            t = AdjacencyType.TWO_FREE_END
            counts[0] += 1
        elif fa == 1 and fb == 1:
            t = AdjacencyType.TRIVIAL_SEGMENT
            counts[2] += 1
        else:
            t = AdjacencyType.ONE_FREE_END
            counts[1] += 1
        labels.append(t)
    return tuple(labels), ClassCounts(*counts)


def free_core(x: Permutation, I: SegmentSet) -> SegmentSet:
    """F(x, I): the 2-free-end adjacencies of x, as a segment set of x."""
    _check(x, I)
    freedom = point_classes(I).freedom
    chosen = {e for e in adjacency_set(x) if freedom[e[0]] == 2 and freedom[e[1]] == 2}
    return decompose(x, chosen)


def deficiency(x: Permutation, I: SegmentSet) -> int:
    """Q(x, I) = n - 1 - |I| - |F(x, I)|; never negative."""
    return x.n - 1 - I.size - free_core(x, I).size
