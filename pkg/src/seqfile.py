"""Plain-text sequence files.

    q=<int> n=<int> period=<int>
    <comma-separated symbols>
    compact=<digit string>          (only when q <= 10)
    canonical=<comma-separated least rotation>

ASCII, LF line endings, a final newline and no trailing whitespace.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from pydantic import BaseModel, Field, ValidationError

from .core import canonical_rotation, make_sequence
from .errors import SequenceError, SequenceFileError
from .models import RingSequence

_HEADER = re.compile(r"^q=(\d+) n=(\d+) period=(\d+)$")


def _commas(symbols: tuple[int, ...]) -> str:
    return ",".join(str(s) for s in symbols)


def _parse_commas(text: str, what: str) -> list[int]:
    if not re.fullmatch(r"\d+(,\d+)*", text):
        raise SequenceFileError(f"{what} must be comma-separated decimal integers, got {text!r}")
    return [int(p) for p in text.split(",")]


class SequenceFile(BaseModel):
    """A ring sequence together with the order it is meant to be read at."""

    n: int = Field(ge=1)
    sequence: RingSequence

    @property
    def q(self) -> int:
        return self.sequence.q

    @property
    def period(self) -> int:
        return self.sequence.period

    def to_text(self) -> str:
        symbols = self.sequence.symbols
        lines = [f"q={self.q} n={self.n} period={self.period}", _commas(symbols)]
        if self.q <= 10:
            lines.append("compact=" + "".join(str(s) for s in symbols))
        lines.append("canonical=" + _commas(canonical_rotation(self.sequence).symbols))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SequenceFile":
        """
        Parse and cross-check a sequence file.

        Raises:
            SequenceFileError: On any format violation or disagreement between lines
        """
        if "\r" in text:
            raise SequenceFileError("sequence files use LF line endings")
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if len(lines) < 2:
            raise SequenceFileError("expected a header line and a symbol line")
        for number, line in enumerate(lines, start=1):
            if line != line.rstrip():
                raise SequenceFileError(f"line {number} has trailing whitespace")

        header = _HEADER.match(lines[0])
        if not header:
            raise SequenceFileError(f"bad header {lines[0]!r}; expected 'q=<int> n=<int> period=<int>'")
        q, n, period = (int(g) for g in header.groups())

        symbols = _parse_commas(lines[1], "symbol line")
        if len(symbols) != period:
            raise SequenceFileError(f"header says period={period} but {len(symbols)} symbols follow")
        try:
            seq = make_sequence(symbols, q)
            result = cls(n=n, sequence=seq)
        except (SequenceError, ValidationError) as e:
            raise SequenceFileError(str(e)) from e

        for line in lines[2:]:
            tag, _, value = line.partition("=")
            if tag == "compact":
                if q > 10:
                    raise SequenceFileError("compact line is only allowed when q <= 10")
                if value != "".join(str(s) for s in symbols):
                    raise SequenceFileError("compact line disagrees with the symbol line")
            elif tag == "canonical":
                if tuple(_parse_commas(value, "canonical line")) != canonical_rotation(seq).symbols:
                    raise SequenceFileError("canonical line is not the least rotation of the sequence")
            else:
                raise SequenceFileError(f"unknown line {line!r}")
        return result


def read_sequence_file(path: Union[str, Path]) -> SequenceFile:
    try:
        text = Path(path).read_bytes().decode("ascii")
    except (OSError, UnicodeDecodeError) as e:
        raise SequenceFileError(f"cannot read {path}: {e}") from e
    return SequenceFile.from_text(text)


def write_sequence_file(path: Union[str, Path], sf: SequenceFile) -> None:
    Path(path).write_bytes(sf.to_text().encode("ascii"))
