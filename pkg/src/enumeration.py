"""Counting tables for pseudoweight and zero-free weight classes, and period bounds."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

import sympy

from .core import count_negasymmetric, require_modulus
from .errors import SequenceError, VerificationError
from .models import CountKind, HalfInt, Method


class CountTable:
    """
    Row-by-row memo of r_{q,n,s} (pseudoweight) or k_{q,n,w} (zero-free weight).

    Row n maps doubled weights to tuple counts. Row n is built from row n-1 by
    adding one symbol of each allowed doubled weight, which is the recursion
    r_{q,n,s} = sum_i r_{q,n-1,s-i} + r_{q,n-1,s-q/2} (and its zero-free
    analogue) read forwards.
    """

    def __init__(self, kind: CountKind, q: int):
        require_modulus(q)
        self.kind = CountKind(kind)
        self.q = q
        if self.kind is CountKind.PSEUDOWEIGHT_R:
            self._steps = [q] + [2 * u for u in range(1, q)]
        else:
            self._steps = [2 * u for u in range(1, q)]
        self._rows: list[dict[int, int]] = [{0: 1}]

    def row(self, n: int) -> dict[int, int]:
        """Doubled weight -> count for length n."""
        if n < 0:
            raise SequenceError(f"tuple length must be non-negative, got n={n}")
        while len(self._rows) <= n:
            previous = self._rows[-1]
            current: dict[int, int] = {}
            for doubled, count in previous.items():
                for step in self._steps:
                    current[doubled + step] = current.get(doubled + step, 0) + count
            self._rows.append(dict(sorted(current.items())))
        return self._rows[n]

    def get(self, n: int, doubled: int) -> int:
        return self.row(n).get(doubled, 0)

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        """All filled cells keyed by (n, doubled weight)."""
        return {(n, d): c for n, row in enumerate(self._rows) for d, c in row.items()}


@lru_cache(maxsize=None)
def count_table(kind: CountKind, q: int) -> CountTable:
    return CountTable(kind, q)


def r_count(q: int, n: int, s: Union[HalfInt, int, float, str]) -> int:
    """Number of q-ary n-tuples with pseudoweight exactly s."""
    require_modulus(q)
    if n < 1:
        raise SequenceError(f"tuple length must be at least 1, got n={n}")
    try:
        target = HalfInt.of(s)
    except (TypeError, ValueError) as e:
        raise SequenceError(f"pseudoweight {s!r} is not on the half-integer grid") from e
    if q % 2 == 0 and not target.is_integer:
        raise SequenceError(f"pseudoweight {target} is off-grid for even q={q}")
    return count_table(CountKind.PSEUDOWEIGHT_R, q).get(n, target.doubled)


def k_count(q: int, n: int, w: int) -> int:
    """Number of zero-free q-ary n-tuples of weight w."""
    require_modulus(q)
    if n < 0:
        raise SequenceError(f"tuple length must be non-negative, got n={n}")
    return count_table(CountKind.ZEROFREE_K, q).get(n, 2 * w)


@lru_cache(maxsize=None)
def _power_coefficients(m: int, k: int) -> tuple[int, ...]:
    x = sympy.Symbol("x")
    poly = sympy.Poly(sum(x**i for i in range(m + 1)), x) ** k
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def polynomial_coefficient(m: int, r: int, k: int) -> int:
    """N_m(r, k): coefficient of x^r in (1 + x + ... + x^m)^k."""
    if m < 0 or k < 0:
        raise SequenceError(f"need m >= 0 and k >= 0, got m={m}, k={k}")
    if r < 0 or r > m * k:
        return 0
    return _power_coefficients(m, k)[r]


# Bounds

def _require_order(n: int) -> None:
    if n < 2:
        raise SequenceError(f"order must be at least 2, got n={n}")


def nos_bound(q: int, n: int) -> int:
    """Upper bound on the period of a negative orientable sequence of order n."""
    require_modulus(q)
    _require_order(n)
    if q % 2 == 1:
        return (q**n - q ** (n // 2) - q ** ((n - 1) // 2) + 1) // 2
    if n % 2 == 1:
        return (q**n - 2 * q ** ((n - 1) // 2)) // 2 - 1
    return (q**n - q ** (n // 2)) // 2 - 1


def simple_nos_bound(q: int, n: int) -> int:
    """Half of the non-negasymmetric n-tuples."""
    require_modulus(q)
    _require_order(n)
    return (q**n - count_negasymmetric(q, n)) // 2


def os2_max_period(q: int) -> int:
    """Longest orientable sequence of order 2."""
    require_modulus(q, 3)
    if q % 2 == 1:
        return q * (q - 1) // 2
    return q * (q - 2) // 2


def construction2_period(q: int, n: int) -> int:
    """Period of the pseudoweight construction: (q^n - r_{q,n,nq/2}) / 2."""
    require_modulus(q, 3)
    _require_order(n)
    return (q**n - r_count(q, n, HalfInt(doubled=n * q))) // 2


def construction3_period(q: int, n: int) -> int:
    """Period of the zero-free construction."""
    require_modulus(q, 3)
    _require_order(n)
    if q % 2 == 1 and n % 2 == 1:
        return (q - 1) ** n // 2
    return ((q - 1) ** n - k_count(q, n, n * q // 2)) // 2


def construction3_weight(q: int, n: int) -> int:
    """Symbol sum of the zero-free construction: total weight of its windows divided by n."""
    require_modulus(q, 3)
    _require_order(n)
    total = sum(w * k_count(q, n, w) for w in range(n, n * (q - 1) + 1) if 2 * w < n * q)
    if total % n:
        raise VerificationError(f"window weight total {total} is not divisible by n={n}")
    return total // n


def os3_period_lower_bound(q: int) -> int:
    """Guaranteed period of the order-3 orientable sequence lifted from Construction I."""
    require_modulus(q, 3)
    if q % 2 == 1:
        return q * (q * (q - 1) // 2 - 1)
    if q == 6:
        return q * (q * (q - 1) // 2 - 3)
    return q * (q * (q - 1) // 2 - 2)


def os_n_period_lower_bound(q: int, n: int) -> int:
    """Guaranteed period of the order-n orientable sequence lifted from the pseudoweight construction."""
    require_modulus(q, 3)
    if n < 3:
        raise SequenceError(f"lifted orientable sequences have order >= 3, got n={n}")
    removed = 4 if q == 6 else 2
    return q * (q ** (n - 1) - r_count(q, n - 1, HalfInt(doubled=(n - 1) * q)) - removed) // 2


def tower_seed_period_m2(q: int) -> int:
    """Guaranteed seed period from the zero-free construction at order 2."""
    require_modulus(q, 3)
    return (q - 1) * (q - 2) // 2 - (2 if q == 6 else 1)


def tower_seed_period_m3(q: int) -> int:
    """Guaranteed seed period from the zero-free construction at order 3."""
    require_modulus(q, 3)
    if q % 2 == 1:
        return (q - 1) ** 3 // 2 - 1
    central = (3 * q * q - 6 * q + 4) // 4
    return ((q - 1) ** 3 - central) // 2 - (2 if q == 6 else 1)


def gap_ratio(q: int, n: int, method: Method = Method.NOS_ZEROFREE) -> Fraction:
    """(bound - period) / bound for a negative orientable construction."""
    bound = nos_bound(q, n)
    if Method(method) is Method.NOS_PSEUDOWEIGHT:
        period = construction2_period(q, n)
    elif Method(method) is Method.NOS_ZEROFREE:
        period = construction3_period(q, n)
    else:
        raise SequenceError(f"no period formula for method {method}")
    return Fraction(bound - period, bound)
