"""Alphabet arithmetic, tuples, ring sequences and their elementary transforms.

Public functions take and return validated models (`QaryTuple`,
`RingSequence`). The `*_key` helpers work on plain ``tuple[int, ...]`` keys and
are what the verifiers, constructions and the oracle use in their inner loops.
"""

from __future__ import annotations

import re
from itertools import product
from math import gcd
from typing import Iterable, Iterator, Sequence

from pydantic import ValidationError

from .errors import SequenceError
from .models import Alphabet, HalfInt, QaryTuple, RingSequence, TransformKind

Key = tuple  # plain tuple of ints, used as a window / vertex key


def require_modulus(q: int, minimum: int = 2) -> int:
    """Reject moduli below `minimum` (constructions pass minimum=3)."""
    if q < minimum:
        if minimum > 2 and q == 2:
            raise SequenceError("q=2 is not supported: this construction needs q > 2")
        raise SequenceError(f"modulus must be at least {minimum}, got q={q}")
    return q


def make_tuple(symbols: Iterable[int], q: int) -> QaryTuple:
    try:
        return QaryTuple(q=q, symbols=tuple(symbols))
    except ValidationError as e:
        raise SequenceError(f"invalid {q}-ary tuple: {e}") from e


def make_sequence(symbols: Iterable[int], q: int) -> RingSequence:
    try:
        return RingSequence(q=q, symbols=tuple(symbols))
    except ValidationError as e:
        raise SequenceError(f"invalid ring sequence over Z_{q}: {e}") from e


def trusted_sequence(symbols: Iterable[int], q: int) -> RingSequence:
    """Wrap symbols already known to be valid, skipping validation."""
    return RingSequence.model_construct(q=q, symbols=tuple(symbols))


def _trusted_tuple(symbols: Iterable[int], q: int) -> QaryTuple:
    return QaryTuple.model_construct(q=q, symbols=tuple(symbols))


def sequence_from_string(text: str, q: int) -> RingSequence:
    """
    Parse a ring sequence written as digits or as a comma list.

    Brackets and whitespace are ignored, so "[0122 1201]", "01221201" and
    "0,1,2,2,1,2,0,1" all parse. Digit strings only make sense for q <= 10.
    """
    body = text.strip().strip("[]")
    if "," in body:
        parts = [p for p in re.split(r"[,\s]+", body) if p]
        symbols = [int(p) for p in parts]
    else:
        digits = re.sub(r"\s+", "", body)
        if not digits.isdigit():
            raise SequenceError(f"cannot parse ring sequence {text!r}")
        if q > 10:
            raise SequenceError("digit strings need q <= 10; use a comma list")
        symbols = [int(c) for c in digits]
    return make_sequence(symbols, q)


def is_unit(w: int, q: int) -> bool:
    return gcd(w % q, q) == 1


def iter_keys(q: int, n: int) -> Iterator[Key]:
    """All q-ary n-tuples as keys, in lexicographic order."""
    return product(range(q), repeat=n)


# Tuple transforms

def reverse_key(key: Key) -> Key:
    return key[::-1]


def negate_key(key: Key, q: int) -> Key:
    return tuple((-s) % q for s in key)


def negrev_key(key: Key, q: int) -> Key:
    """The negated reverse -u^R."""
    return tuple((-s) % q for s in reversed(key))


def doubled_pseudoweight(key: Sequence[int], q: int) -> int:
    """Twice the pseudoweight: symbol 0 counts q, any other symbol u counts 2u."""
    return sum(q if s == 0 else 2 * s for s in key)


def reverse(t: QaryTuple) -> QaryTuple:
    return _trusted_tuple(reverse_key(t.symbols), t.q)


def negate(t: QaryTuple) -> QaryTuple:
    alphabet = Alphabet(q=t.q)
    return _trusted_tuple((alphabet.neg(s) for s in t.symbols), t.q)


def is_negasymmetric(t: QaryTuple) -> bool:
    """True iff u_i = -u_{n-1-i} for every i."""
    return t.symbols == negrev_key(t.symbols, t.q)


def count_negasymmetric(q: int, n: int) -> int:
    """Number of q-ary negasymmetric n-tuples."""
    require_modulus(q)
    if n < 2:
        raise SequenceError(f"negasymmetric counts need n >= 2, got n={n}")
    if n % 2 == 0:
        return q ** (n // 2)
    if q % 2 == 1:
        return q ** ((n - 1) // 2)
    # middle symbol may be 0 or q/2
    return 2 * q ** ((n - 1) // 2)


def weight(t: QaryTuple) -> int:
    return sum(t.symbols)


def pseudoweight(t: QaryTuple) -> HalfInt:
    return HalfInt(doubled=doubled_pseudoweight(t.symbols, t.q))


# Ring sequences

def window_keys(seq: RingSequence, n: int) -> list[Key]:
    """The m cyclic n-windows of `seq` as keys, window i starting at s_i."""
    if n < 1:
        raise SequenceError(f"window length must be at least 1, got n={n}")
    symbols = seq.symbols
    m = len(symbols)
    extended = symbols * (1 + (n - 1 + m - 1) // m)
    return [extended[i:i + n] for i in range(m)]


def windows(seq: RingSequence, n: int) -> list[QaryTuple]:
    return [_trusted_tuple(key, seq.q) for key in window_keys(seq, n)]


def seq_weight(seq: RingSequence) -> int:
    return sum(seq.symbols)


def seq_weight_mod_q(seq: RingSequence) -> int:
    return seq_weight(seq) % seq.q


def transform(seq: RingSequence, kind: TransformKind, amount: int = 0) -> RingSequence:
    """
    Apply an elementary transform.

    Args:
        seq: Sequence to transform
        kind: NEGATE, REVERSE, TRANSLATE (add `amount` to every symbol) or
            SHIFT (rotate left by `amount` positions)
        amount: Translation constant or rotation offset

    Returns:
        New RingSequence over the same alphabet
    """
    q = seq.q
    symbols = seq.symbols
    kind = TransformKind(kind)
    if kind is TransformKind.NEGATE:
        return trusted_sequence(((-s) % q for s in symbols), q)
    if kind is TransformKind.REVERSE:
        return trusted_sequence(symbols[::-1], q)
    if kind is TransformKind.TRANSLATE:
        return trusted_sequence(((s + amount) % q for s in symbols), q)
    k = amount % len(symbols)
    return trusted_sequence(symbols[k:] + symbols[:k], q)


def negate_reverse(seq: RingSequence) -> RingSequence:
    """The sequence -S^R, whose windows are the negated reverses of those of S."""
    return transform(transform(seq, TransformKind.REVERSE), TransformKind.NEGATE)


def least_rotation_index(symbols: Sequence[int]) -> int:
    """Start of the lexicographically least rotation (minimum expression)."""
    m = len(symbols)
    i, j, k = 0, 1, 0
    while i < m and j < m and k < m:
        a = symbols[(i + k) % m]
        b = symbols[(j + k) % m]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def canonical_rotation(seq: RingSequence) -> RingSequence:
    """Lexicographically least rotation, for display and golden comparisons."""
    return transform(seq, TransformKind.SHIFT, least_rotation_index(seq.symbols))


def rotation_equivalent(a: RingSequence, b: RingSequence) -> bool:
    if a.q != b.q or a.period != b.period:
        return False
    return canonical_rotation(a).symbols == canonical_rotation(b).symbols


def least_period(seq: RingSequence) -> int:
    symbols = seq.symbols
    m = len(symbols)
    for p in range(1, m + 1):
        if m % p == 0 and symbols == symbols[:p] * (m // p):
            return p
    return m
