"""Assembly of permutations from adjacency constraints.

The one search primitive behind geodesic-point enumeration, X_n(I)
membership and the far-geodesic test: enumerate simple paths on the vertex
set [n] whose n-1 edges contain every *required* edge, draw the rest from an
*optional* pool, and respect per-class lower/upper bounds on how many
optional edges of each class get used.

The search walks the path vertex by vertex. Required edges prune hard: a
path endpoint with an untraversed required edge has no choice but to follow
it, and a required edge whose endpoint has already been passed by can never
be placed, so entire required segments are traversed deterministically once
touched. Remaining-step budgets prune the quota classes.

Paths are yielded with the smaller endpoint first, which is exactly the
canonical representative of the resulting permutation class.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]
Quota = tuple[Iterable[Edge], int, int]   # (edges, lo, hi)


def _norm(edges: Iterable[Edge]) -> set[Edge]:
    return {(a, b) if a < b else (b, a) for a, b in edges}


def hamiltonian_paths(
    n: int,
    required: Iterable[Edge],
    optional: Iterable[Edge],
    quotas: Sequence[Quota] = (),
) -> Iterator[tuple[int, ...]]:
    """Yield each simple path on {1..n} (as a value tuple, first < last) whose
    edge set contains all of `required` inside `required | optional`.

    Quota classes must be disjoint subsets of the optional pool.
    """
    required = _norm(required)
    optional = _norm(optional) - required

    # required edges must form disjoint simple chains: degree <= 2, acyclic
    req_deg = [0] * (n + 1)
    for a, b in required:
        req_deg[a] += 1
        req_deg[b] += 1
        if req_deg[a] > 2 or req_deg[b] > 2:
            return
    parent = list(range(n + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in required:
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        parent[ra] = rb

    cls_of: dict[Edge, int] = {}
    lo, hi = [], []
    for ci, (edges, qlo, qhi) in enumerate(quotas):
        for e in _norm(edges):
            cls_of[e] = ci
        lo.append(qlo)
        hi.append(qhi)
    nq = len(quotas)

    adj: list[list[tuple[int, bool, int]]] = [[] for _ in range(n + 1)]
    for a, b in required:
        adj[a].append((b, True, -1))
        adj[b].append((a, True, -1))
    for a, b in optional:
        ci = cls_of.get((a, b), -1)
        adj[a].append((b, False, ci))
        adj[b].append((a, False, ci))

    used = [0] * nq
    path: list[int] = []
    on_path = [False] * (n + 1)

    def extend(u: int, req_left: int) -> Iterator[tuple[int, ...]]:
        if len(path) == n:
            if req_left == 0 and all(used[i] >= lo[i] for i in range(nq)) and path[0] < path[-1]:
                yield tuple(path)
            return
        steps_left = n - len(path)
        if req_left > steps_left:
            return
        deficit = sum(max(0, lo[i] - used[i]) for i in range(nq))
        if deficit > steps_left - req_left:
            return
        prev = path[-2] if len(path) >= 2 else 0
        forced = None
        for v, is_req, _ in adj[u]:
            if not is_req or v == prev:
                continue
            if on_path[v]:
                return   # this required edge can never be placed now
            if forced is not None:
                return   # two pending required edges at an endpoint: dead
            forced = v
        if forced is not None:
            v = forced
            path.append(v)
            on_path[v] = True
            yield from extend(v, req_left - 1)
            on_path[v] = False
            path.pop()
            return
        for v, _, ci in adj[u]:
            if on_path[v] or (ci >= 0 and used[ci] >= hi[ci]):
                continue
            if ci >= 0:
                used[ci] += 1
            path.append(v)
            on_path[v] = True
            yield from extend(v, req_left)
            on_path[v] = False
            path.pop()
            if ci >= 0:
                used[ci] -= 1

    for start in range(1, n + 1):
        if req_deg[start] == 2:
            continue
        path.append(start)
        on_path[start] = True
        yield from extend(start, len(required))
        on_path[start] = False
        path.pop()
