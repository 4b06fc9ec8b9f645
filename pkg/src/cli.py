#!/usr/bin/env python3
"""
Orientseq CLI - Command-line interface for the tool.

Exit codes: 0 on success, 1 when a sequence fails verification or a
pipeline stage rejects its input, 2 on invalid arguments.
"""

import sys
from typing import Optional

import click
from pydantic import ValidationError

from src import __version__
from src.config import load_settings
from src.construct import FIXED_ORDER, generate as run_generator
from src.demo import TIE_BREAKS, run_worked_examples
from src.enumeration import (
    construction2_period,
    construction3_period,
    count_table,
    nos_bound,
    os2_max_period,
    simple_nos_bound,
)
from src.errors import SequenceError, VerificationError
from src.formatters import format_bound_table, format_checks, format_count_rows, format_report, format_trace, format_verdict
from src.lempel import adjust_to_unit_weight, inverse_lift, recursive_tower
from src.models import CountKind, HalfInt, Method, Parity, Property
from src.oracle import exhaustive_max
from src.seqfile import SequenceFile, read_sequence_file, write_sequence_file
from src.verify import verify as verify_property

METHODS = {
    "os2": Method.OS2,
    "nos2": Method.NOS2_CIRCUITS,
    "nos-pw": Method.NOS_PSEUDOWEIGHT,
    "nos-zf": Method.NOS_ZEROFREE,
}

PROPERTIES = {
    "n-window": Property.N_WINDOW,
    "orientable": Property.ORIENTABLE,
    "negative-orientable": Property.NEGATIVE_ORIENTABLE,
    "good": Property.GOOD,
}


def _fail(message: str) -> None:
    click.echo(f"❌ {message}", err=True)
    sys.exit(1)


def _load(path: str) -> SequenceFile:
    try:
        return read_sequence_file(path)
    except SequenceError as e:
        raise click.UsageError(f"{path}: {e}")


def _settings(**overrides):
    try:
        return load_settings(**overrides)
    except ValidationError as e:
        raise click.UsageError(str(e))


def _emit(sf: SequenceFile, out: Optional[str]) -> None:
    """Write the sequence file to `out`, or to stdout when no path is given."""
    if out:
        write_sequence_file(out, sf)
        click.echo(f"💾 Wrote {out}", err=True)
    else:
        click.echo(sf.to_text(), nl=False)


@click.group()
@click.version_option(version=__version__, prog_name="orientseq")
def cli():
    """
    Orientseq - orientable and negative orientable sequences over Z_q

    Generate, lift, extend and verify sequences whose windows can be read
    in either direction without ambiguity.
    """
    pass


@cli.command()
@click.option(
    "--method",
    type=click.Choice(list(METHODS)),
    required=True,
    help="Construction to run",
)
@click.option("--q", "q", type=int, required=True, help="Alphabet size")
@click.option("--n", "n", type=int, default=None, help="Order (fixed at 2 for os2 and nos2)")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="Write the sequence file here")
def generate(method, q, n, out):
    """
    Build a sequence and print its report line.

    The report reads `method period weight bound gap`.

    Examples:
        orientseq generate --method nos-zf --q 3 --n 3
        orientseq generate --method os2 --q 5
        orientseq generate --method nos-pw --q 4 --n 3 --out s43.txt
    """
    fixed = FIXED_ORDER.get(METHODS[method])
    if fixed is not None:
        if n not in (None, fixed):
            raise click.UsageError(f"--method {method} builds order-{fixed} sequences; drop --n or pass --n {fixed}")
        n = fixed
    elif n is None:
        raise click.UsageError(f"--method {method} needs --n")

    try:
        seq, report = run_generator(METHODS[method], q, n)
    except VerificationError as e:
        _fail(f"Generated sequence failed verification: {e}")
    except SequenceError as e:
        raise click.UsageError(str(e))

    _emit(SequenceFile(n=n, sequence=seq), out)
    click.echo(format_report(report))


@cli.command()
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True, help="Input sequence file")
@click.option("--start", type=int, default=None, help="First symbol of the lift (default 0)")
@click.option("--beta", type=int, default=None, help="Unit scaling of the difference map (default 1)")
@click.option("--ensure-unit", is_flag=True, help="Delete symbols first so the weight is a unit")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="Write the sequence file here")
def lift(in_path, start, beta, ensure_unit, out):
    """
    Lift a negative orientable sequence one order up.

    With a unit weight the result is orientable at n+1 and is verified.

    Examples:
        orientseq lift --in s32.txt
        orientseq lift --in s43.txt --ensure-unit
    """
    settings = _settings(lift_start=start, lift_beta=beta)
    sf = _load(in_path)

    try:
        seq = sf.sequence
        if ensure_unit:
            seq, deleted = adjust_to_unit_weight(seq, sf.n)
            if deleted:
                click.echo(f"✂️  Deleted {deleted}", err=True)
        result = inverse_lift(
            seq,
            start=settings.lift_start,
            beta=settings.lift_beta,
            order=sf.n,
            source=Parity.NOS,
        )
    except (SequenceError, VerificationError) as e:
        _fail(str(e))

    if not result.verified:
        click.echo(f"⚠️  Weight {result.weight} is not a unit; period {result.sequence.period} lift left unverified", err=True)
    _emit(SequenceFile(n=sf.n + 1, sequence=result.sequence), out)


@cli.command()
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True, help="Seed sequence file")
@click.option("--target-n", type=int, required=True, help="Order to stop at")
@click.option("--start", type=int, default=None, help="Preferred lift start symbol (default 0)")
@click.option("--beta", type=int, default=None, help="Unit scaling of the difference map (default 1)")
@click.option("--no-retry", is_flag=True, help="Use only the preferred start symbol at each stage")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="Write the final sequence file here")
@click.option("-v", "--verbose", is_flag=True, help="Print stage progress to stderr")
def recurse(in_path, target_n, start, beta, no_retry, out, verbose):
    """
    Alternate lifts and run extensions up to --target-n.

    Prints the final sequence file, then one `order period weight parity`
    row per stage.

    Examples:
        orientseq recurse --in s33zf.txt --target-n 6
    """
    settings = _settings(lift_start=start, lift_beta=beta, retry_lift_starts=False if no_retry else None)
    sf = _load(in_path)
    if target_n < sf.n:
        raise click.UsageError(f"--target-n {target_n} is below the seed order {sf.n}")

    try:
        seq, trace = recursive_tower(
            sf.sequence,
            sf.n,
            target_n,
            start=settings.lift_start,
            beta=settings.lift_beta,
            retry_starts=settings.retry_lift_starts,
            verbose=verbose,
        )
    except (SequenceError, VerificationError) as e:
        _fail(f"Seed rejected: {e}")

    _emit(SequenceFile(n=target_n, sequence=seq), out)
    click.echo(format_trace(trace))


@cli.command()
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True, help="Sequence file")
@click.option("--n", "n", type=int, default=None, help="Order to check at (default: the file's n)")
@click.option("--property", "prop", type=click.Choice(list(PROPERTIES)), required=True, help="Property to check")
def verify(in_path, n, prop):
    """
    Check one property and print the verdict with its witness.

    Examples:
        orientseq verify --in os34.txt --n 4 --property orientable
    """
    sf = _load(in_path)
    try:
        verdict = verify_property(sf.sequence, sf.n if n is None else n, PROPERTIES[prop])
    except SequenceError as e:
        raise click.UsageError(str(e))
    click.echo(format_verdict(verdict))
    if not verdict:
        sys.exit(1)


@cli.command()
@click.option("--q", "q", type=int, required=True, help="Alphabet size")
@click.option("--n", "n", type=int, default=2, help="Order")
@click.option(
    "--kind",
    type=click.Choice(["nos", "simple-nos", "os2", "nos-pw", "nos-zf"]),
    default="nos",
    help="Bound, or construction period, to print",
)
def bound(q, n, kind):
    """
    Print a period bound or a construction's predicted period.

    Examples:
        orientseq bound --q 4 --n 5 --kind nos
    """
    try:
        if kind == "nos":
            value = nos_bound(q, n)
        elif kind == "simple-nos":
            value = simple_nos_bound(q, n)
        elif kind == "os2":
            value = os2_max_period(q)
        elif kind == "nos-pw":
            value = construction2_period(q, n)
        else:
            value = construction3_period(q, n)
    except SequenceError as e:
        raise click.UsageError(str(e))
    click.echo(value)


@cli.command()
@click.option("--q", "q", type=int, required=True, help="Alphabet size")
@click.option("--n", "n", type=int, required=True, help="Tuple length")
@click.option("--weights", type=click.Choice(["pseudo", "zerofree"]), default="pseudo", help="Weight class to count")
def enum(q, n, weights):
    """
    Print `weight count` for every weight class of n-tuples.

    Examples:
        orientseq enum --q 3 --n 3 --weights pseudo
    """
    if n < 1:
        raise click.UsageError(f"--n must be at least 1, got {n}")
    kind = CountKind.PSEUDOWEIGHT_R if weights == "pseudo" else CountKind.ZEROFREE_K
    try:
        row = count_table(kind, q).row(n)
    except SequenceError as e:
        raise click.UsageError(str(e))
    click.echo(format_count_rows((str(HalfInt(doubled=d)), c) for d, c in row.items()))


@cli.command()
@click.option("--max-q", type=int, default=5, help="Largest alphabet size")
@click.option("--max-n", type=int, default=7, help="Largest order")
def table(max_q, max_n):
    """
    Print the grid of negative orientable period bounds.

    Examples:
        orientseq table --max-q 5 --max-n 7
    """
    if max_q < 2 or max_n < 2:
        raise click.UsageError("--max-q and --max-n must be at least 2")
    click.echo(format_bound_table(max_q, max_n))


@cli.command()
@click.option("--q", "q", type=int, required=True, help="Alphabet size")
@click.option("--n", "n", type=int, required=True, help="Order")
@click.option(
    "--property",
    "prop",
    type=click.Choice(["n-window", "orientable", "negative-orientable"]),
    default="negative-orientable",
    help="Property the sequence must have",
)
@click.option("--cap", type=int, default=None, help="Refuse when q^n exceeds this (default 256)")
def search(q, n, prop, cap):
    """
    Exhaustively find the longest sequence with a property (small q, n only).

    Examples:
        orientseq search --q 3 --n 3 --property negative-orientable
    """
    settings = _settings(oracle_state_cap=cap)
    try:
        result = exhaustive_max(q, n, PROPERTIES[prop], cap=settings.oracle_state_cap)
    except SequenceError as e:
        raise click.UsageError(str(e))
    click.echo(f"{result.kind.value} {result.max_period} {result.witness or '-'}")
    click.echo(f"⏱️  {result.nodes_explored} nodes in {result.elapsed_seconds:.2f}s", err=True)


@cli.command()
@click.option("--paper-examples", is_flag=True, help="Regenerate every worked example")
@click.option("--tie-break", type=click.Choice(list(TIE_BREAKS)), default="lex", hidden=True)
@click.option("-v", "--verbose", is_flag=True, help="Print progress to stderr")
def demo(paper_examples, tie_break, verbose):
    """
    Reproduce the worked examples and print `name expected actual status` per check.

    Examples:
        orientseq demo --paper-examples
    """
    if not paper_examples:
        raise click.UsageError("nothing to run; pass --paper-examples")

    if verbose:
        click.echo("=" * 70, err=True)
        click.echo("Worked examples", err=True)
        click.echo("=" * 70, err=True)
    results = run_worked_examples(TIE_BREAKS[tie_break], verbose=verbose)
    click.echo(format_checks(results))
    failed = [r.name for r in results if not r.passed]
    if failed:
        _fail(f"Failed checks: {', '.join(failed)}")


if __name__ == "__main__":
    cli()
