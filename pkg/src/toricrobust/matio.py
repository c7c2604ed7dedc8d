"""Plain-text matrix files: a "rows cols" header line, then the entries.

The layout is the usual interchange format of exact-integer lattice tools:
whitespace-separated integers, row-major.  The writer is bit-exact (single
spaces, one row per line, trailing newline) so files can be hashed and
compared byte for byte.
"""

from __future__ import annotations

from pathlib import Path

from .errors import EntryCountMismatchError, MalformedHeaderError, NonIntegerTokenError
from .lattice import IntMatrix

__all__ = ["parse_matrix", "write_matrix", "read_matrix_file", "write_matrix_file"]


def parse_matrix(text: str) -> IntMatrix:
    """Parse matrix text; entries may be separated by arbitrary whitespace."""
    head, _, body = text.partition("\n")
    header = head.split()
    if len(header) != 2:
        raise MalformedHeaderError(f"header must be 'rows cols', got {head!r}")
    try:
        nrows, ncols = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedHeaderError(f"header must be 'rows cols', got {head!r}") from None
    if nrows < 1 or ncols < 1:
        raise MalformedHeaderError(f"dimensions must be positive, got {nrows} x {ncols}")
    tokens = body.split()
    if len(tokens) != nrows * ncols:
        raise EntryCountMismatchError(
            f"expected {nrows * ncols} entries, got {len(tokens)}"
        )
    entries = []
    for tok in tokens:
        try:
            entries.append(int(tok))
        except ValueError:
            raise NonIntegerTokenError(f"not an integer: {tok!r}") from None
    rows = tuple(
        tuple(entries[r * ncols : (r + 1) * ncols]) for r in range(nrows)
    )
    return IntMatrix(rows)


def write_matrix(A: IntMatrix) -> str:
    lines = [f"{A.nrows} {A.ncols}"]
    lines.extend(" ".join(str(a) for a in row) for row in A.rows)
    return "\n".join(lines) + "\n"


def read_matrix_file(path: str | Path) -> IntMatrix:
    return parse_matrix(Path(path).read_text())


def write_matrix_file(path: str | Path, A: IntMatrix) -> None:
    Path(path).write_text(write_matrix(A))
