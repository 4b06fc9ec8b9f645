"""Brute-force ground truth at small sizes: longest-sequence search and tuple scans."""

from __future__ import annotations

import time
from typing import Optional, Union

from .config import load_settings
from .core import Key, doubled_pseudoweight, iter_keys, negrev_key, require_modulus, reverse_key, trusted_sequence
from .errors import SearchCapExceeded, SequenceError
from .models import CountPredicate, HalfInt, Property, SearchResult

# Longest negative orientable sequence for q=3, n=3. The bound allows 11;
# exhaustive search finds nothing longer than 10, which matches the
# zero-free construction.
NOS_Q3_N3_MAX_PERIOD = 10


def _enforce_cap(q: int, n: int, cap: Optional[int]) -> None:
    limit = load_settings().oracle_state_cap if cap is None else cap
    if q**n > limit:
        raise SearchCapExceeded(f"q^n = {q**n} exceeds the state cap of {limit}; refusing to search")


class _LongestCycleSearch:
    """
    Depth-first search for the longest closed trail in the window graph.

    Arcs are n-tuples from key[:-1] to key[1:]. Each arc belongs to a class
    {u, partner(u)}; a trail may use at most one arc per class, and arcs that
    are their own partner are never used. Every cyclic sequence is counted
    once by fixing its lexicographically least window as the first arc.
    """

    def __init__(self, q: int, n: int, prop: Property):
        self.q = q
        self.n = n
        if prop is Property.NEGATIVE_ORIENTABLE:
            partner = lambda key: negrev_key(key, q)  # noqa: E731
        elif prop is Property.ORIENTABLE:
            partner = reverse_key
        else:
            partner = lambda key: key  # noqa: E731

        self.arcs: list[Key] = []
        self.klass: dict[Key, Key] = {}
        for key in iter_keys(q, n):
            mate = partner(key)
            if mate == key and prop is not Property.N_WINDOW:
                continue
            self.arcs.append(key)
            self.klass[key] = min(key, mate)

        self.out: dict[Key, list[Key]] = {}
        for key in self.arcs:
            self.out.setdefault(key[:-1], []).append(key)

        self.best = 0
        self.best_path: list[Key] = []
        self.nodes = 0

    def run(self) -> None:
        for first in self.arcs:
            eligible = [key for key in self.arcs if key >= first]
            open_classes = len({self.klass[key] for key in eligible})
            if open_classes <= self.best:
                continue
            self._start = first
            self._target = first[:-1]
            self._used = {self.klass[first]}
            self._path = [first]
            self._extend(first[1:], open_classes - 1)

    def _extend(self, vertex: Key, open_classes: int) -> None:
        self.nodes += 1
        if vertex == self._target and len(self._path) > self.best:
            self.best = len(self._path)
            self.best_path = list(self._path)
        if len(self._path) + open_classes <= self.best:
            return
        for key in self.out.get(vertex, []):
            if key <= self._start:
                continue
            c = self.klass[key]
            if c in self._used:
                continue
            self._used.add(c)
            self._path.append(key)
            self._extend(key[1:], open_classes - 1)
            self._path.pop()
            self._used.discard(c)


def exhaustive_max(q: int, n: int, prop: Property, cap: Optional[int] = None) -> SearchResult:
    """
    Longest period of a cyclic q-ary sequence with property `prop` at order n.

    Raises:
        SearchCapExceeded: If q**n exceeds the state cap
    """
    require_modulus(q)
    if n < 1:
        raise SequenceError(f"order must be at least 1, got n={n}")
    prop = Property(prop)
    if prop is Property.GOOD:
        raise SequenceError("exhaustive search covers n_window, orientable and negative_orientable")
    _enforce_cap(q, n, cap)

    began = time.perf_counter()
    search = _LongestCycleSearch(q, n, prop)
    search.run()
    witness = None
    if search.best_path:
        witness = trusted_sequence((key[0] for key in search.best_path), q)
    return SearchResult(
        q=q,
        n=n,
        kind=prop,
        max_period=search.best,
        witness=witness,
        nodes_explored=search.nodes,
        elapsed_seconds=time.perf_counter() - began,
    )


def matching_tuples(
    q: int,
    n: int,
    predicate: CountPredicate,
    value: Union[HalfInt, int, float, str, None] = None,
    cap: Optional[int] = None,
) -> list[Key]:
    """All n-tuples satisfying the predicate, in lexicographic order."""
    require_modulus(q)
    _enforce_cap(q, n, cap)
    predicate = CountPredicate(predicate)
    if predicate is CountPredicate.NEGASYMMETRIC:
        return [key for key in iter_keys(q, n) if key == negrev_key(key, q)]
    if value is None:
        raise SequenceError(f"predicate {predicate.value} needs a value")
    if predicate is CountPredicate.PSEUDOWEIGHT:
        doubled = HalfInt.of(value).doubled
        return [key for key in iter_keys(q, n) if doubled_pseudoweight(key, q) == doubled]
    w = int(value)
    return [key for key in iter_keys(q, n) if 0 not in key and sum(key) == w]


def exhaustive_count(
    q: int,
    n: int,
    predicate: CountPredicate,
    value: Union[HalfInt, int, float, str, None] = None,
    cap: Optional[int] = None,
) -> int:
    """Number of n-tuples satisfying the predicate, by direct scan."""
    return len(matching_tuples(q, n, predicate, value, cap))
