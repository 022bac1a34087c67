"""Permutations of [n] = {1..n}, their adjacency sets, and the breakpoint distance.

A permutation is stored in word form as a tuple of 1-based values. An
adjacency is an unordered pair of consecutive values, normalised to a sorted
tuple (a, b) with a < b; the adjacency set of a word of length n has exactly
n - 1 such pairs. The breakpoint distance

    bp(x, y) = n - 1 - |A_x  intersect  A_y|

is a left-invariant pseudometric: it vanishes exactly between a word and its
reversal, so the quotient by reversal ("classes") is a metric space.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import DuplicateValue, OutOfRange, SizeMismatch, TooShort

Adjacency = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A bijection on [n] in word form, values 1-based, n >= 2."""

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if n < 2:
            raise TooShort(f"need at least 2 values, got {n}")
        seen = set()
        for v in self.values:
            if not (1 <= v <= n):
                raise OutOfRange(f"value {v} outside [1..{n}]")
            if v in seen:
                raise DuplicateValue(f"value {v} repeated")
            seen.add(v)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def text(self) -> str:
        return " ".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.text


def parse_permutation(text: str) -> Permutation:
    """Parse whitespace- or comma-separated values.

    >>> parse_permutation("2, 1, 4, 3").values
    (2, 1, 4, 3)
    """
    tokens = [t for t in text.replace(",", " ").split() if t]
    if len(tokens) < 2:
        raise TooShort(f"need at least 2 values, got {len(tokens)} in {text!r}")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise OutOfRange(f"token {tok!r} is not a positive integer") from None
    n = len(values)
    seen = set()
    for tok, v in zip(tokens, values):
        if not (1 <= v <= n):
            raise OutOfRange(f"token {tok!r} outside [1..{n}]")
        if v in seen:
            raise DuplicateValue(f"token {tok!r} repeated")
        seen.add(v)
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reverse(x: Permutation) -> Permutation:
    return Permutation(x.values[::-1])


def adjacency_pairs(values: Iterable[int]) -> frozenset[Adjacency]:
    """Adjacency set of a raw word (no validation)."""
    vals = tuple(values)
    return frozenset((a, b) if a < b else (b, a) for a, b in zip(vals, vals[1:]))


@lru_cache(maxsize=200_000)
def _adjacency_set_cached(values: tuple[int, ...]) -> frozenset[Adjacency]:
    return adjacency_pairs(values)


def adjacency_set(x: Permutation) -> frozenset[Adjacency]:
    """All unordered pairs of consecutive values of x; always n - 1 pairs.

    >>> sorted(adjacency_set(parse_permutation("2 1 4 3")))
    [(1, 2), (1, 4), (3, 4)]
    """
    return _adjacency_set_cached(x.values)


def common_adjacencies(*xs: Permutation) -> frozenset[Adjacency]:
    its = iter(xs)
    acc = adjacency_set(next(its))
    for x in its:
        acc = acc & adjacency_set(x)
    return acc


def _check_sizes(x: Permutation, y: Permutation) -> None:
    if x.n != y.n:
        raise SizeMismatch(f"sizes differ: {x.n} vs {y.n}")


def bp_distance(x: Permutation, y: Permutation) -> int:
    """Breakpoint distance: n - 1 minus the number of shared adjacencies."""
    _check_sizes(x, y)
    return x.n - 1 - len(adjacency_set(x) & adjacency_set(y))


def canonical_class(x: Permutation) -> Permutation:
    """Representative of {x, reverse(x)}: the lexicographically smaller word.

    Two permutations share a representative exactly when their distance is 0.
    """
    rev = x.values[::-1]
    return x if x.values <= rev else Permutation(rev)


def compose(z: Permutation, x: Permutation) -> Permutation:
    """(z o x)_i = z_{x_i}; relabels x's values through z."""
    _check_sizes(z, x)
    return Permutation(tuple(z.values[v - 1] for v in x.values))


def sample_uniform(n: int, rng: np.random.Generator) -> Permutation:
    """Uniform draw from S_n via an unbiased shuffle of the given stream."""
    if n < 2:
        raise TooShort(f"need n >= 2, got {n}")
    return Permutation(tuple(int(v) + 1 for v in rng.permutation(n)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n in lexicographic order."""
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)


def class_representatives(n: int) -> Iterator[Permutation]:
    """One canonical representative per reversal class; n!/2 of them."""
    for vals in itertools.permutations(range(1, n + 1)):
        if vals <= vals[::-1]:
            yield Permutation(vals)
