"""Verifiers for the n-window, orientable, negative orientable and good properties."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Optional

from .core import Key, negate_reverse, negrev_key, reverse_key, window_keys
from .errors import SequenceError
from .models import Property, RingSequence, RunProfile, VerificationVerdict


def _first_repeat(keys: list[Key]) -> Optional[tuple[int, int]]:
    """Smallest (i, j), i < j, with equal windows."""
    positions: dict[Key, list[int]] = {}
    for i, key in enumerate(keys):
        positions.setdefault(key, []).append(i)
    for i, key in enumerate(keys):
        hits = positions[key]
        if len(hits) > 1 and hits[0] == i:
            return (i, hits[1])
    return None


def _first_mirror(keys: list[Key], mirror: Callable[[Key], Key]) -> Optional[tuple[int, int]]:
    """Smallest i (then j) with window i equal to the mirror of window j; keys are distinct."""
    index = {key: i for i, key in enumerate(keys)}
    for i, key in enumerate(keys):
        j = index.get(mirror(key))
        if j is not None:
            return (i, j)
    return None


def is_n_window(seq: RingSequence, n: int) -> VerificationVerdict:
    """Holds iff all cyclic n-windows of one period are distinct."""
    witness = _first_repeat(window_keys(seq, n))
    if witness is None:
        return VerificationVerdict(kind=Property.N_WINDOW, holds=True)
    return VerificationVerdict(
        kind=Property.N_WINDOW,
        holds=False,
        witness=witness,
        detail=f"windows {witness[0]} and {witness[1]} are equal",
    )


def _mirror_check(seq: RingSequence, n: int, kind: Property, mirror: Callable[[Key], Key]) -> VerificationVerdict:
    keys = window_keys(seq, n)
    repeat = _first_repeat(keys)
    if repeat is not None:
        return VerificationVerdict(
            kind=kind,
            holds=False,
            witness=repeat,
            detail=f"windows {repeat[0]} and {repeat[1]} are equal",
        )
    witness = _first_mirror(keys, mirror)
    if witness is None:
        return VerificationVerdict(kind=kind, holds=True)
    i, j = witness
    if i == j:
        detail = f"window {i} is its own mirror image"
    else:
        detail = f"window {i} is the mirror image of window {j}"
    return VerificationVerdict(kind=kind, holds=False, witness=witness, detail=detail)


def is_orientable(seq: RingSequence, n: int) -> VerificationVerdict:
    """n-window and no window equals the reverse of any window, itself included."""
    return _mirror_check(seq, n, Property.ORIENTABLE, reverse_key)


def is_negative_orientable(seq: RingSequence, n: int) -> VerificationVerdict:
    """n-window and no window equals the negated reverse of any window, itself included."""
    q = seq.q
    return _mirror_check(seq, n, Property.NEGATIVE_ORIENTABLE, lambda key: negrev_key(key, q))


def run_profile(seq: RingSequence) -> RunProfile:
    """
    Cyclic maximal runs of every symbol in `seq`.

    Runs are reported as (start index, length), sorted by start; a run that
    wraps past the end of the period starts at its index near the end.

    Raises:
        SequenceError: If the sequence is constant (no bordered run exists)
    """
    symbols = seq.symbols
    m = len(symbols)
    origin = next((i for i in range(m) if symbols[i] != symbols[i - 1]), None)
    if origin is None:
        raise SequenceError("constant sequence has no bordered runs")

    runs: dict[int, list[tuple[int, int]]] = {}
    offset = 0
    while offset < m:
        start = (origin + offset) % m
        a = symbols[start]
        length = 1
        while offset + length < m and symbols[(start + length) % m] == a:
            length += 1
        runs.setdefault(a, []).append((start, length))
        offset += length

    for a in runs:
        runs[a].sort()
    return RunProfile(runs=runs, max_run={a: max(length for _, length in r) for a, r in runs.items()})


def is_good(seq: RingSequence, n: int) -> VerificationVerdict:
    """Holds iff every run of 0 has length at most n - 2."""
    if n < 2:
        raise SequenceError(f"goodness is defined for n >= 2, got n={n}")
    if 0 not in seq.symbols:
        return VerificationVerdict(kind=Property.GOOD, holds=True)
    if all(s == 0 for s in seq.symbols):
        return VerificationVerdict(
            kind=Property.GOOD,
            holds=False,
            witness=(0, seq.period),
            detail="sequence is all zeros",
        )
    for start, length in run_profile(seq).runs[0]:
        if length > n - 2:
            return VerificationVerdict(
                kind=Property.GOOD,
                holds=False,
                witness=(start, length),
                detail=f"run of 0 at {start} has length {length} > {n - 2}",
            )
    return VerificationVerdict(kind=Property.GOOD, holds=True)


_VERIFIERS = {
    Property.N_WINDOW: is_n_window,
    Property.ORIENTABLE: is_orientable,
    Property.NEGATIVE_ORIENTABLE: is_negative_orientable,
    Property.GOOD: is_good,
}


def verify(seq: RingSequence, n: int, prop: Property) -> VerificationVerdict:
    return _VERIFIERS[Property(prop)](seq, n)


def parity_check(seq: RingSequence, n: int) -> bool:
    """
    Even-count property of negative orientable sequences.

    For every negasymmetric (n-1)-tuple v, the windows of S together with the
    windows of -S^R that start with v must be even in number.

    Raises:
        SequenceError: If `seq` is not negative orientable at order n
    """
    if n < 2:
        raise SequenceError(f"parity check needs n >= 2, got n={n}")
    verdict = is_negative_orientable(seq, n)
    if not verdict:
        raise SequenceError(f"parity check needs a negative orientable sequence: {verdict.detail}")

    q = seq.q
    prefixes = Counter(key[:-1] for key in window_keys(seq, n))
    prefixes.update(key[:-1] for key in window_keys(negate_reverse(seq), n))
    # prefixes absent from both sequences count zero, which is even
    return all(count % 2 == 0 for v, count in prefixes.items() if v == negrev_key(v, q))
