"""Generators for maximal orientable and negative orientable sequences.

Each generator builds a graph, extracts one Eulerian circuit, reads the ring
sequence off the circuit and checks it against its own verifier before
returning it with a ConstructionReport.
"""

from __future__ import annotations

from typing import Callable

from .core import doubled_pseudoweight, iter_keys, require_modulus, seq_weight, seq_weight_mod_q, trusted_sequence
from .enumeration import (
    construction2_period,
    construction3_period,
    construction3_weight,
    nos_bound,
    os2_max_period,
)
from .errors import SequenceError, VerificationError
from .graph import DirectedMultigraph, TieBreak, eulerian_circuit, lexicographic, undirected_euler
from .models import ConstructionReport, Method, RingSequence
from .verify import is_negative_orientable, is_orientable


def _report(method: Method, seq: RingSequence, n: int, predicted: int, bound: int) -> ConstructionReport:
    return ConstructionReport(
        method=method,
        q=seq.q,
        n=n,
        period=seq.period,
        weight_mod_q=seq_weight_mod_q(seq),
        predicted_period=predicted,
        bound=bound,
        gap=bound - seq.period,
    )


def _check(seq: RingSequence, n: int, predicted: int, verifier: Callable) -> None:
    if seq.period != predicted:
        raise VerificationError(f"period {seq.period} differs from the predicted {predicted}")
    verdict = verifier(seq, n)
    if not verdict:
        raise VerificationError(f"generated sequence fails {verdict.kind.value}: {verdict.detail}")


def _require_order(n: int) -> None:
    if n < 2:
        raise SequenceError(f"order must be at least 2, got n={n}")


def maximal_os2(q: int, tie_break: TieBreak = lexicographic) -> tuple[RingSequence, ConstructionReport]:
    """
    Longest orientable sequence of order 2.

    An Euler circuit of K_q (q odd) or of K_q minus the matching
    {(0,1), (2,3), ...} (q even) visits every unordered pair once, in one
    direction only.
    """
    require_modulus(q, 3)
    edges = [(i, j) for i in range(q) for j in range(i + 1, q) if not (q % 2 == 0 and i % 2 == 0 and j == i + 1)]
    circuit = undirected_euler(q, edges, start=0, tie_break=tie_break)
    seq = trusted_sequence(circuit.vertices[:-1], q)

    predicted = os2_max_period(q)
    _check(seq, 2, predicted, is_orientable)
    return seq, _report(Method.OS2, seq, 2, predicted, predicted)


def construction1_circuits(q: int) -> list[list[int]]:
    """
    Arc-disjoint closed walks whose union is a maximal order-2 negative orientable design.

    For q odd, with k = (q-1)/2: C_0 is (0, j, j) for j = 1..k and C_i
    (1 <= i < k) is (i, j, i, -j) for j = i+1..k. For q even, with
    k = (q-2)/2: C_0 is (0, j, j) for j = 1..k and C_i (1 <= i <= k) is
    (i, j, i, -j) for j = i+1..k followed by (i, q/2). Each list is one
    closed walk; the arc from its last vertex back to its first is implied.
    """
    require_modulus(q, 3)
    if q % 2 == 1:
        k = (q - 1) // 2
        last = k - 1
    else:
        k = (q - 2) // 2
        last = k

    circuits = [[x for j in range(1, k + 1) for x in (0, j, j)]]
    for i in range(1, last + 1):
        walk = [x for j in range(i + 1, k + 1) for x in (i, j, i, (-j) % q)]
        if q % 2 == 0:
            walk += [i, q // 2]
        circuits.append(walk)
    return circuits


def nos2_construction1(q: int, tie_break: TieBreak = lexicographic) -> tuple[RingSequence, ConstructionReport]:
    """Maximal order-2 negative orientable sequence from the union of the explicit circuits."""
    require_modulus(q, 3)
    g = DirectedMultigraph(range(q))
    seen: set[tuple[int, int]] = set()
    for walk in construction1_circuits(q):
        for k, x in enumerate(walk):
            y = walk[(k + 1) % len(walk)]
            if (x, y) in seen:
                raise VerificationError(f"circuits share the arc ({x}, {y})")
            if y == (-x) % q:
                raise VerificationError(f"circuit uses the forbidden arc ({x}, {y})")
            seen.add((x, y))
            g.add_arc(x, y)

    circuit = eulerian_circuit(g, start=0, tie_break=tie_break)
    seq = trusted_sequence(circuit.vertices[:-1], q)

    bound = nos_bound(q, 2)
    _check(seq, 2, bound, is_negative_orientable)
    return seq, _report(Method.NOS2_CIRCUITS, seq, 2, bound, bound)


def _de_bruijn_subgraph(q: int, n: int, keep: Callable[[tuple], bool]) -> DirectedMultigraph:
    """Subgraph of the order-(n-1) de Bruijn digraph whose arcs are the kept n-tuples."""
    g = DirectedMultigraph()
    for key in iter_keys(q, n):
        if keep(key):
            tail, head = key[:-1], key[1:]
            g.add_vertex(tail)
            g.add_vertex(head)
            g.add_arc(tail, head, label=key)
    return g


def construction2_graph(q: int, n: int) -> DirectedMultigraph:
    """Arcs are the n-tuples of pseudoweight below nq/2."""
    require_modulus(q, 3)
    _require_order(n)
    return _de_bruijn_subgraph(q, n, lambda key: doubled_pseudoweight(key, q) < n * q)


def construction3_graph(q: int, n: int) -> DirectedMultigraph:
    """Arcs are the zero-free n-tuples of weight below nq/2."""
    require_modulus(q, 3)
    _require_order(n)
    return _de_bruijn_subgraph(q, n, lambda key: 0 not in key and 2 * sum(key) < n * q)


def _read_circuit(g: DirectedMultigraph, q: int, tie_break: TieBreak) -> RingSequence:
    circuit = eulerian_circuit(g, tie_break=tie_break)
    return trusted_sequence((key[0] for key in circuit.labels), q)


def nos_construction2(q: int, n: int, tie_break: TieBreak = lexicographic) -> tuple[RingSequence, ConstructionReport]:
    """Negative orientable sequence whose windows are all n-tuples of pseudoweight below nq/2."""
    seq = _read_circuit(construction2_graph(q, n), q, tie_break)
    predicted = construction2_period(q, n)
    _check(seq, n, predicted, is_negative_orientable)
    return seq, _report(Method.NOS_PSEUDOWEIGHT, seq, n, predicted, nos_bound(q, n))


def nos_construction3(q: int, n: int, tie_break: TieBreak = lexicographic) -> tuple[RingSequence, ConstructionReport]:
    """Zero-free negative orientable sequence whose windows have weight below nq/2."""
    seq = _read_circuit(construction3_graph(q, n), q, tie_break)
    predicted = construction3_period(q, n)
    _check(seq, n, predicted, is_negative_orientable)
    expected_weight = construction3_weight(q, n)
    if seq_weight(seq) != expected_weight:
        raise VerificationError(f"weight {seq_weight(seq)} differs from the predicted {expected_weight}")
    return seq, _report(Method.NOS_ZEROFREE, seq, n, predicted, nos_bound(q, n))


GENERATORS: dict[Method, Callable[..., tuple[RingSequence, ConstructionReport]]] = {
    Method.OS2: maximal_os2,
    Method.NOS2_CIRCUITS: nos2_construction1,
    Method.NOS_PSEUDOWEIGHT: nos_construction2,
    Method.NOS_ZEROFREE: nos_construction3,
}

# Generators whose order is fixed; they take no n argument
FIXED_ORDER = {Method.OS2: 2, Method.NOS2_CIRCUITS: 2}


def generate(
    method: Method, q: int, n: int, tie_break: TieBreak = lexicographic
) -> tuple[RingSequence, ConstructionReport]:
    """
    Run the generator registered for `method`.

    Raises:
        SequenceError: If n does not match a fixed-order method, or q, n are out of range
        VerificationError: If the generated sequence fails its own checks
    """
    method = Method(method)
    if method not in GENERATORS:
        raise SequenceError(f"no generator for method {method.value}")
    if method in FIXED_ORDER:
        if n != FIXED_ORDER[method]:
            raise SequenceError(f"{method.value} builds order-{FIXED_ORDER[method]} sequences, got n={n}")
        return GENERATORS[method](q, tie_break=tie_break)
    return GENERATORS[method](q, n, tie_break=tie_break)
