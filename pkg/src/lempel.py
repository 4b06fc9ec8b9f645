"""Lempel difference map, inverse lifts, unit-weight adjustment, run extension and towers."""

from __future__ import annotations

from math import gcd
from typing import Optional

import click

from .construct import nos2_construction1, nos_construction2
from .core import is_unit, require_modulus, seq_weight_mod_q, trusted_sequence
from .enumeration import os3_period_lower_bound, os_n_period_lower_bound
from .errors import LiftError, SequenceError, VerificationError
from .graph import TieBreak, lexicographic
from .models import (
    ConstructionReport,
    LiftResult,
    Method,
    Parity,
    RecursionStep,
    RecursionTrace,
    RingSequence,
)
from .verify import is_good, is_negative_orientable, run_profile, verify


def _require_unit(beta: int, q: int) -> None:
    if not is_unit(beta, q):
        raise SequenceError(f"beta={beta} is not a unit modulo {q}")


def d_beta(seq: RingSequence, beta: int = 1) -> RingSequence:
    """Cyclic first difference scaled by beta: t_j = beta * (s_{j+1} - s_j) mod q."""
    q = seq.q
    _require_unit(beta, q)
    s = seq.symbols
    m = len(s)
    return trusted_sequence((beta * (s[(j + 1) % m] - s[j]) % q for j in range(m)), q)


def additive_order(w: int, q: int) -> int:
    """Least h >= 1 with h*w = 0 mod q."""
    return q // gcd(w % q, q)


def inverse_lift(
    seq: RingSequence,
    start: int = 0,
    beta: int = 1,
    order: Optional[int] = None,
    source: Parity = Parity.NOS,
    verify_input: bool = True,
) -> LiftResult:
    """
    Integrate `seq` one order up: a_{j+1} = a_j + beta^-1 * s_j.

    The walk runs for h*m steps, h being the additive order of the weight,
    so the output closes up into a ring sequence of period h*m.

    Args:
        seq: Sequence to lift
        start: Symbol a_0
        beta: Unit scaling of the difference map
        order: Order n of `seq`; when given the input is checked against
            `source` and, for unit weight, the output against the other parity at n+1
        source: Whether `seq` is negative orientable or orientable
        verify_input: Skip the input check when the caller already did it

    Raises:
        SequenceError: If beta is not a unit
        LiftError: If the input or the unit-weight output fails its verifier
    """
    q = seq.q
    _require_unit(beta, q)
    source = Parity(source)
    if order is not None and verify_input:
        verdict = verify(seq, order, source.target)
        if not verdict:
            raise LiftError(f"input is not {source.target.value} at n={order}: {verdict.detail}")

    w = seq_weight_mod_q(seq)
    h = additive_order(w, q)
    step = pow(beta, -1, q)
    s = seq.symbols
    m = len(s)

    a = start % q
    lifted = [a]
    for j in range(h * m - 1):
        a = (a + step * s[j % m]) % q
        lifted.append(a)
    out = trusted_sequence(lifted, q)

    verified = False
    if order is not None and h == q:
        verdict = verify(out, order + 1, source.flipped().target)
        if not verdict:
            raise LiftError(f"unit-weight lift fails {verdict.kind.value} at n={order + 1}: {verdict.detail}")
        verified = True

    return LiftResult(
        input_period=m,
        weight=w,
        order=h,
        start=start % q,
        beta=beta,
        sequence=out,
        verified=verified,
    )


# Deletions that turn the weight into a unit when q = 6
_Q6_ADJUSTMENTS = {0: [1], 2: [1], 3: [2], 4: [1, 2]}


def find_unit_adjustment(q: int, w: int) -> list[int]:
    """Symbols to delete (one occurrence each) so that the weight becomes a unit."""
    require_modulus(q, 3)
    w %= q
    if is_unit(w, q):
        return []
    if q == 6:
        return list(_Q6_ADJUSTMENTS[w])
    for i in range(1, q):
        if 2 * i >= q:
            break
        if is_unit(w - i, q):
            return [i]
    raise SequenceError(f"no single deletion makes weight {w} a unit modulo {q}")


def delete_from_uniform_run(seq: RingSequence, i: int, n: int, verify: bool = True) -> RingSequence:
    """
    Remove one `i` from the first run of `i` of length at least n.

    Raises:
        SequenceError: If no such run exists ("uniform tuple absent")
        VerificationError: If `verify` and the result is no longer negative orientable at order n
    """
    s = seq.symbols
    if seq.period == 1:
        raise SequenceError("cannot delete from a sequence of period 1")
    if all(x == i for x in s):
        position = 0
    else:
        if i not in s:
            raise SequenceError(f"uniform tuple absent: symbol {i} does not occur")
        runs = run_profile(seq).runs.get(i, [])
        position = next((start for start, length in runs if length >= n), None)
        if position is None:
            raise SequenceError(f"uniform tuple absent: no run of {i} with length >= {n}")

    out = trusted_sequence(s[:position] + s[position + 1:], seq.q)
    if verify:
        verdict = is_negative_orientable(out, n)
        if not verdict:
            raise VerificationError(f"deletion broke negative orientability: {verdict.detail}")
    return out


def adjust_to_unit_weight(seq: RingSequence, n: int, verify: bool = True) -> tuple[RingSequence, list[int]]:
    """Apply every deletion find_unit_adjustment asks for; returns the sequence and the deleted symbols."""
    deletions = find_unit_adjustment(seq.q, seq_weight_mod_q(seq))
    for i in deletions:
        seq = delete_from_uniform_run(seq, i, n, verify=verify)
    return seq, deletions


def extend_run_Ea(seq: RingSequence, a: int, occurrence: int = 0) -> RingSequence:
    """
    Lengthen one maximal run of `a` by a single symbol.

    By default the maximal run with the smallest start index is used;
    `occurrence` picks a later one.
    """
    if a not in seq.symbols:
        raise SequenceError(f"symbol {a} does not occur in {seq}")
    runs = run_profile(seq).maximal_runs(a)
    if not 0 <= occurrence < len(runs):
        raise SequenceError(f"symbol {a} has {len(runs)} maximal runs, no occurrence {occurrence}")
    start = runs[occurrence][0]
    s = seq.symbols
    return trusted_sequence(s[:start] + (a,) + s[start:], seq.q)


def predicted_tower_period(m: int, q: int, s: int) -> int:
    """Period after s lift-and-extend steps from period m: q^s*m + (q^s - 1)/(q - 1)."""
    if m < 1 or s < 0:
        raise SequenceError(f"need m >= 1 and s >= 0, got m={m}, s={s}")
    require_modulus(q)
    return q**s * m + (q**s - 1) // (q - 1)


def orientable_tower_period(m: int, q: int, s: int) -> int:
    """Period of the orientable stage 2s+1 steps above a negative orientable seed of period m."""
    return predicted_tower_period(m, q, 2 * s + 1)


def _seed_parity(seed: RingSequence, n: int, parity: Optional[Parity]) -> Parity:
    if parity is not None:
        parity = Parity(parity)
        verdict = verify(seed, n, parity.target)
        if not verdict:
            raise LiftError(f"seed is not {parity.target.value} at n={n}: {verdict.detail}")
        return parity
    for candidate in (Parity.NOS, Parity.OS):
        if verify(seed, n, candidate.target):
            return candidate
    raise LiftError(f"seed is neither negative orientable nor orientable at n={n}")


def recursive_tower(
    seed: RingSequence,
    seed_order: int,
    target_order: int,
    seed_parity: Optional[Parity] = None,
    start: int = 0,
    beta: int = 1,
    retry_starts: bool = True,
    verbose: bool = False,
) -> tuple[RingSequence, RecursionTrace]:
    """
    Alternate lifts and run extensions from `seed_order` up to `target_order`.

    Each stage lifts the current sequence, then inserts a = 1 - w_q(lift) into
    a maximal run of a, which brings the weight back to 1. Stages alternate
    between orientable and negative orientable. Candidates are tried in a
    fixed order (start symbols, then maximal runs by index) and the first one
    passing both its verifier and the goodness check is kept.

    Raises:
        SequenceError: If target_order < seed_order or q < 3
        LiftError: If the seed is rejected or no candidate passes at some stage
    """
    q = seed.q
    require_modulus(q, 3)
    if target_order < seed_order:
        raise SequenceError(f"target order {target_order} is below the seed order {seed_order}")

    def log(msg: str):
        if verbose:
            click.echo(msg, err=True)

    parity = _seed_parity(seed, seed_order, seed_parity)
    good = is_good(seed, seed_order)
    if not good:
        raise LiftError(f"seed is not good at n={seed_order}: {good.detail}")
    w = seq_weight_mod_q(seed)
    if not is_unit(w, q):
        raise LiftError(
            f"seed weight {w} is not a unit modulo {q}: unit-weight precondition gcd(w, q) = 1 fails "
            f"(gcd = {gcd(w, q)}); run adjust_to_unit_weight on the seed first"
        )

    trace = RecursionTrace(q=q, steps=[RecursionStep(order=seed_order, period=seed.period, weight=w, parity=parity)])
    log(f"🌱 Seed: {parity.value} of order {seed_order}, period {seed.period}, weight {w}")

    current = seed
    starts = [start % q] + ([x for x in range(q) if x != start % q] if retry_starts else [])
    for order in range(seed_order, target_order):
        next_parity = parity.flipped()
        chosen = None
        for lift_start in starts:
            lifted = inverse_lift(current, start=lift_start, beta=beta, order=order, source=parity, verify_input=False)
            a = (1 - seq_weight_mod_q(lifted.sequence)) % q
            if a not in lifted.sequence.symbols:
                continue
            for run_index in range(len(run_profile(lifted.sequence).maximal_runs(a))):
                candidate = extend_run_Ea(lifted.sequence, a, occurrence=run_index)
                if verify(candidate, order + 1, next_parity.target) and is_good(candidate, order + 1):
                    chosen = (candidate, a, lift_start, run_index)
                    break
                log(f"   ⚠️  order {order + 1}: start {lift_start}, run {run_index} rejected")
            if chosen:
                break
        if chosen is None:
            raise LiftError(f"no lift start or run extension gives a good {next_parity.value} at n={order + 1}")

        current, a, lift_start, run_index = chosen
        weight = seq_weight_mod_q(current)
        if weight != 1:
            raise LiftError(f"extended sequence has weight {weight}, expected 1")
        parity = next_parity
        trace.steps.append(
            RecursionStep(
                order=order + 1,
                period=current.period,
                weight=weight,
                parity=parity,
                inserted=a,
                lift_start=lift_start,
                run_index=run_index,
            )
        )
        log(f"   ✓ Order {order + 1}: {parity.value} period {current.period} (inserted {a})")

    return current, trace


def _lift_pipeline(
    seed: RingSequence,
    order: int,
    guaranteed: int,
    start: int,
    beta: int,
    verbose: bool,
) -> tuple[RingSequence, ConstructionReport]:
    def log(msg: str):
        if verbose:
            click.echo(msg, err=True)

    adjusted, deleted = adjust_to_unit_weight(seed, order)
    if deleted:
        log(f"   • Deleted {deleted} to reach weight {seq_weight_mod_q(adjusted)}")
    else:
        log(f"   • Weight {seq_weight_mod_q(adjusted)} is already a unit")

    result = inverse_lift(adjusted, start=start, beta=beta, order=order, source=Parity.NOS)
    out = result.sequence
    if out.period < guaranteed:
        raise VerificationError(f"lifted period {out.period} is below the guaranteed {guaranteed}")
    log(f"   ✓ Lifted to period {out.period} at order {order + 1}")

    report = ConstructionReport(
        method=Method.OS_LIFT,
        q=seed.q,
        n=order + 1,
        period=out.period,
        weight_mod_q=seq_weight_mod_q(out),
        predicted_period=result.order * adjusted.period,
        guaranteed_period=guaranteed,
        deleted=deleted,
    )
    return out, report


def build_os3(
    q: int,
    tie_break: TieBreak = lexicographic,
    start: int = 0,
    beta: int = 1,
    verbose: bool = False,
) -> tuple[RingSequence, ConstructionReport]:
    """Orientable sequence of order 3 lifted from the order-2 circuit construction."""
    seed, _ = nos2_construction1(q, tie_break=tie_break)
    if verbose:
        click.echo(f"\n🔧 Building OS_{q}(3) from a period-{seed.period} seed", err=True)
    return _lift_pipeline(seed, 2, os3_period_lower_bound(q), start, beta, verbose)


def build_os_n(
    q: int,
    n: int,
    tie_break: TieBreak = lexicographic,
    start: int = 0,
    beta: int = 1,
    verbose: bool = False,
) -> tuple[RingSequence, ConstructionReport]:
    """Orientable sequence of order n lifted from the pseudoweight construction at order n-1."""
    if n < 3:
        raise SequenceError(f"lifted orientable sequences have order >= 3, got n={n}")
    guaranteed = os_n_period_lower_bound(q, n)
    seed, _ = nos_construction2(q, n - 1, tie_break=tie_break)
    if verbose:
        click.echo(f"\n🔧 Building OS_{q}({n}) from a period-{seed.period} seed", err=True)
    return _lift_pipeline(seed, n - 1, guaranteed, start, beta, verbose)
