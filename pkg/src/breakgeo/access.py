"""Accessibility closures and brute-force medians on permutation classes.

Everything here lives on the metric quotient: inputs are canonicalised to
class representatives on entry. The closure of a class set X is the least
fixed point of taking all pairwise geodesic sets; its order is how many
iterations that takes. The chain-based variant grows reachability one
geodesic hop at a time toward points of X; over a finite space both reach
the same fixed point, which the tests exercise.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SizeMismatch, TooLarge
from .geodesic import SCAN_BOUND, enumerate_geodesic_points
from .perms import Permutation, bp_distance, canonical_class, class_representatives


@dataclass(frozen=True)
class ClassSet:
    n: int
    classes: frozenset[Permutation]


def _as_class_set(X: ClassSet | Iterable[Permutation]) -> ClassSet:
    if isinstance(X, ClassSet):
        return ClassSet(X.n, frozenset(canonical_class(p) for p in X.classes))
    members = [canonical_class(p) for p in X]
    if not members:
        raise SizeMismatch("need at least one permutation")
    n = members[0].n
    if any(p.n != n for p in members):
        raise SizeMismatch("permutations have mixed sizes")
    return ClassSet(n, frozenset(members))


@lru_cache(maxsize=65536)
def _geodesic_classes(xv: tuple[int, ...], yv: tuple[int, ...], bound: int) -> frozenset[Permutation]:
    return enumerate_geodesic_points(Permutation(xv), Permutation(yv), bound)


def _pair_geodesics(x: Permutation, y: Permutation, bound: int) -> frozenset[Permutation]:
    a, b = sorted((x.values, y.values))
    return _geodesic_classes(a, b, bound)


def geodesic_closure_step(X: ClassSet | Iterable[Permutation], bound: int = SCAN_BOUND) -> ClassSet:
    """Union of the geodesic sets over all pairs of X (pairs x = y included)."""
    cs = _as_class_set(X)
    if cs.n > bound:
        raise TooLarge(f"n={cs.n} exceeds the exhaustive bound {bound}")
    out: set[Permutation] = set(cs.classes)
    members = sorted(cs.classes, key=lambda p: p.values)
    for i, x in enumerate(members):
        for y in members[i:]:
            out |= _pair_geodesics(x, y, bound)
    return ClassSet(cs.n, frozenset(out))


def accessible_closure(X: ClassSet | Iterable[Permutation], bound: int = SCAN_BOUND) -> tuple[ClassSet, int]:
    """Least fixed point of the closure step and the number of iterations
    needed to reach it (0 when X is already closed)."""
    current = _as_class_set(X)
    order = 0
    while True:
        nxt = geodesic_closure_step(current, bound)
        if nxt.classes == current.classes:
            return current, order
        current = nxt
        order += 1


def one_step_accessible(X: ClassSet | Iterable[Permutation], bound: int = SCAN_BOUND) -> ClassSet:
    """Chain reachability: starting anywhere in X, repeatedly hop to any
    geodesic point of (current, y) for y in X. BFS over classes."""
    cs = _as_class_set(X)
    if cs.n > bound:
        raise TooLarge(f"n={cs.n} exceeds the exhaustive bound {bound}")
    targets = sorted(cs.classes, key=lambda p: p.values)
    reached: set[Permutation] = set(cs.classes)
    frontier = list(targets)
    while frontier:
        z = frontier.pop()
        for y in targets:
            for w in _pair_geodesics(z, y, bound):
                if w not in reached:
                    reached.add(w)
                    frontier.append(w)
    return ClassSet(cs.n, frozenset(reached))


@dataclass(frozen=True)
class MedianReport:
    medians: ClassSet
    value: int
    totals: dict[Permutation, int]


def medians_bruteforce(A: Sequence[Permutation], bound: int = SCAN_BOUND) -> MedianReport:
    """Exact median set of the multiset A by scanning every class of S_n."""
    if not A:
        raise SizeMismatch("need at least one permutation")
    n = A[0].n
    if any(p.n != n for p in A):
        raise SizeMismatch("permutations have mixed sizes")
    if n > bound:
        raise TooLarge(f"n={n} exceeds the exhaustive bound {bound}")
    totals: dict[Permutation, int] = {}
    best = None
    for z in class_representatives(n):
        total = sum(bp_distance(z, a) for a in A)
        totals[z] = total
        if best is None or total < best:
            best = total
    medians = frozenset(z for z, t in totals.items() if t == best)
    return MedianReport(ClassSet(n, medians), int(best), totals)
