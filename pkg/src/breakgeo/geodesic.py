"""Geodesic points and the membership machinery for X_n(I).

z is a geodesic point of (x, y) when bp(x, z) + bp(z, y) = bp(x, y);
equivalently when A_{x,y} is contained in A_z and A_z in A_x union A_y. The
first form is the cheap test, the second drives enumeration through the path
assembler; the test suite checks the two characterisations against each other.

X_n(I) is the set of permutations x that contain a segment set J, disjoint
from I, with I union J the adjacency set of some permutation pi. Membership
is decided constructively: lay down I plus the whole free core F(x, I)
(2-free-end adjacencies; a witness of that shape always exists when any
does), then search connector adjacencies of x (1-free-end and trivial
segment) for a completion into a single simple path. The complement-shape
conditions of the three witness cases are checked verbatim on every witness,
but they alone admit cycles (see tests for the counterexample), so the path
check stays authoritative.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .classify import free_core
from .errors import InvalidRange, SizeMismatch, TooLarge
from .pathfind import hamiltonian_paths
from .perms import (Permutation, adjacency_set, all_permutations, bp_distance,
                    canonical_class)
from .segments import SegmentSet, complement_in, point_classes

SCAN_BOUND = 8      # default ceiling for full S_n scans
SEARCH_BOUND = 12   # default ceiling for branch-and-bound searches


def _check_scan(n: int, bound: int) -> None:
    if n > bound:
        raise TooLarge(f"n={n} exceeds the exhaustive bound {bound}")


def is_geodesic_point(pi: Permutation, x: Permutation, y: Permutation) -> bool:
    """Additive-distance test; sizes must agree."""
    return bp_distance(x, pi) + bp_distance(pi, y) == bp_distance(x, y)


def enumerate_geodesic_points(x: Permutation, y: Permutation, bound: int = SCAN_BOUND) -> frozenset[Permutation]:
    """All geodesic-point classes of (x, y), by assembling every permutation
    whose adjacencies sit between the common set and the union."""
    bp_distance(x, y)   # size check
    _check_scan(x.n, bound)
    common = adjacency_set(x) & adjacency_set(y)
    pool = (adjacency_set(x) | adjacency_set(y)) - common
    return frozenset(Permutation(p) for p in hamiltonian_paths(x.n, common, pool))


@dataclass(frozen=True)
class WitnessGeodesic:
    """A permutation pi certifying x in X_n(I): A_pi = I + j_set, j_set in A_x."""

    pi: Permutation
    j_set: SegmentSet
    case_tag: str   # 'i', 'ii' or 'iii' by ||J|| - ||I|| = -1, 0, +1


def complementary_case(I: SegmentSet, J: SegmentSet) -> str | None:
    """Which of the three complement-shape cases (I, J) satisfies, if any.

    These are the End/Int/Iso conditions a complementary pair must meet; they
    are necessary for I + J to be one simple path but not sufficient (a cycle
    can slip through), so callers still need a path check.
    """
    pi_, pj = point_classes(I), point_classes(J)
    diff = J.num_segments - I.num_segments
    if diff == -1:
        qr = pi_.end & pj.isolated
        if (len(qr) == 2 and pj.intrinsic == pi_.isolated
                and pj.isolated - qr == pi_.intrinsic and pj.end == pi_.end - qr):
            return "i"
    elif diff == 0:
        r = pj.end & pi_.isolated
        q = pi_.end & pj.isolated
        if (len(r) == 1 and len(q) == 1 and pj.intrinsic == pi_.isolated - r
                and pj.isolated - q == pi_.intrinsic and pj.end - r == pi_.end - q):
            return "ii"
    elif diff == 1:
        qr = pj.end & pi_.isolated
        if (len(qr) == 2 and pj.intrinsic == pi_.isolated - qr
                and pj.isolated == pi_.intrinsic and pj.end - qr == pi_.end):
            return "iii"
    return None


def validate_witness(x: Permutation, I: SegmentSet, w: WitnessGeodesic) -> None:
    """Assert every invariant a witness must carry; raises AssertionError."""
    a_pi = adjacency_set(w.pi)
    assert I.adjacencies <= a_pi, "witness does not contain I"
    assert w.j_set.adjacencies == a_pi - I.adjacencies, "j_set is not the complement"
    assert w.j_set.adjacencies <= adjacency_set(x), "j_set is not contained in x"
    assert not (I.adjacencies & w.j_set.adjacencies), "I and J overlap"
    assert complementary_case(I, w.j_set) == w.case_tag, "case conditions fail"


def xn_membership(x: Permutation, I: SegmentSet) -> WitnessGeodesic | None:
    """A witness that x lies in X_n(I), or None.

    Seeds the required edges with I plus the free core of x and branches only
    over connector adjacencies, so the search space stays tiny; completion
    into a single simple path is what the assembler guarantees.
    """
    if x.n != I.n:
        raise SizeMismatch(f"permutation has n={x.n}, segment set has n={I.n}")
    core = free_core(x, I)
    intrinsic = point_classes(I).intrinsic
    required = I.adjacencies | core.adjacencies
    connectors = {
        e for e in adjacency_set(x) - required
        if e[0] not in intrinsic and e[1] not in intrinsic
    }
    for path in hamiltonian_paths(x.n, required, connectors):
        pi = Permutation(path)
        j_set = complement_in(pi, I)
        tag = {-1: "i", 0: "ii", 1: "iii"}[j_set.num_segments - I.num_segments]
        w = WitnessGeodesic(pi, j_set, tag)
        validate_witness(x, I, w)
        return w
    return None


def xn_exact_count(I: SegmentSet, bound: int = SCAN_BOUND) -> int:
    """|X_n(I)| by deciding membership for every permutation of S_n."""
    _check_scan(I.n, bound)
    return sum(1 for x in all_permutations(I.n) if xn_membership(x, I) is not None)


def containing_permutations(I: SegmentSet) -> Iterator[Permutation]:
    """Every permutation whose adjacency set contains I, each exactly once:
    all orderings of the segments (in both directions) and isolated points."""
    iso = sorted(point_classes(I).isolated)
    items: list[tuple[int, ...]] = [tuple(s) for s in I.segments] + [(p,) for p in iso]
    k = I.num_segments
    for order in itertools.permutations(items):
        for flips in itertools.product((False, True), repeat=k):
            flip_iter = iter(flips)
            vals: list[int] = []
            for item in order:
                if len(item) > 1 and next(flip_iter):
                    vals.extend(reversed(item))
                else:
                    vals.extend(item)
            yield Permutation(tuple(vals))


def _component_count(edges: frozenset[tuple[int, int]]) -> int:
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    seen: set[int] = set()
    comps = 0
    for v in nbrs:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        while stack:
            u = stack.pop()
            if u not in seen:
                seen.add(u)
                stack.extend(nbrs[u])
    return comps


def xn_pair_count_oracle(I: SegmentSet, bound: int = SCAN_BOUND) -> int:
    """Sum over the distinct complements J of I of how many permutations
    contain J. Counts (J, x) pairs, so it upper-bounds |X_n(I)|; the closed
    form below is compared against it in REPORT.md."""
    _check_scan(I.n, bound)
    n = I.n
    i_adj = I.adjacencies
    complements = {adjacency_set(pi) - i_adj for pi in containing_permutations(I)}
    total = 0
    for J in complements:
        total += 2 ** _component_count(J) * math.factorial(n - len(J))
    return total


def xn_closed_form(n: int, m: int, k: int) -> int:
    """The product-form count of X_n(I) for |I| = m, ||I|| = k, evaluated
    verbatim in exact arithmetic:

        2^k (m+1)! (n-m-2)! / k! * (k^2(k-1) + 2k(n-m-k) + (n-m-k)(n-m-k-1)/(k+1))

    The bracket vanishes when m = n-1, which sidesteps the (n-m-2)! factor
    there. Exhaustive oracles refute this count at small sizes (first at
    n=4, m=1, k=1: formula 20, pair oracle 32, true members 24); it is kept
    verbatim because downstream bounds only need its shape, and REPORT.md
    tracks the comparison.
    """
    if not (1 <= k <= m <= n - k):
        raise InvalidRange(f"need 1 <= k <= m <= n-k, got n={n} m={m} k={k}")
    r = n - m - k
    bracket = Fraction(k * k * (k - 1)) + Fraction(2 * k * r) + Fraction(r * (r - 1), k + 1)
    if bracket == 0:
        return 0
    if n - m - 2 < 0:
        raise InvalidRange(f"(n-m-2)! undefined for n={n} m={m} with nonzero bracket")
    lead = Fraction(2 ** k * math.factorial(m + 1) * math.factorial(n - m - 2), math.factorial(k))
    value = lead * bracket
    assert value.denominator == 1, f"closed form not integral at n={n} m={m} k={k}"
    return int(value)


def count_containing(n: int, m: int, k: int) -> int:
    """Number of permutations of S_n containing a fixed I with |I| = m,
    ||I|| = k: directions times orderings, 2^k (n-m)!."""
    if not (1 <= k <= m <= n - k):
        raise InvalidRange(f"need 1 <= k <= m <= n-k, got n={n} m={m} k={k}")
    return 2 ** k * math.factorial(n - m)


def far_geodesic_exists(x: Permutation, epsilon: float, bound: int = SEARCH_BOUND) -> tuple[bool, Permutation | None]:
    """Is there a geodesic point of (id, x) at distance >= ceil(epsilon * n)
    from both endpoints? Returns the first witness found.

    A geodesic point keeps all common adjacencies and splits the rest of its
    n-1 slots between id-only and x-only adjacencies, so both distance
    constraints become quota bounds for the path assembler.
    """
    if not (0 < epsilon < 1):
        raise InvalidRange(f"need 0 < epsilon < 1, got {epsilon}")
    n = x.n
    if n > bound:
        raise TooLarge(f"n={n} exceeds the search bound {bound}")
    t = math.ceil(epsilon * n)
    a_id = adjacency_set(Permutation(tuple(range(1, n + 1))))
    a_x = adjacency_set(x)
    common = a_id & a_x
    d = n - 1 - len(common)
    if d < 2 * t:
        return False, None
    only_id = a_id - common
    only_x = a_x - common
    quotas = [(only_id, t, d - t), (only_x, t, d - t)]
    for path in hamiltonian_paths(n, common, only_id | only_x, quotas):
        return True, canonical_class(Permutation(path))
    return False, None
