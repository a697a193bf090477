"""Plain-text code files.

Line 1 is ``q n``.  Each further line is one codeword: its RREF rows joined
by ``;``, each row being n field symbols joined by ``,`` (symbols are the
base-p digit strings of :meth:`FieldSpec.to_digits`).  The zero subspace is
written as a single all-zero row.  Blank lines and lines starting with ``#``
are ignored by the parser; metadata is carried in a ``# metadata {json}``
comment after the header.
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import CodeFormatError, NotPrime
from .field import FieldSpec, gf
from .subspace import Subspace, canonicalize

META_PREFIX = "# metadata "


def format_subspace(s: Subspace) -> str:
    f = s.field
    rows = s.basis or (tuple([0] * s.n),)
    return ";".join(",".join(f.to_digits(x) for x in row) for row in rows)


def dump_code(field: FieldSpec, n: int, codewords: Iterable[Subspace], metadata: dict | None = None) -> str:
    lines = [f"{field.q} {n}"]
    if metadata:
        lines.append(META_PREFIX + json.dumps(metadata, sort_keys=True))
    lines.extend(format_subspace(s) for s in codewords)
    return "\n".join(lines) + "\n"


def load_code(text: str) -> tuple[FieldSpec, int, list[Subspace], dict]:
    """Parse a code file; returns (field, n, codewords, metadata)."""
    header = None
    metadata: dict = {}
    words: list[Subspace] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith(META_PREFIX):
            try:
                metadata = json.loads(line[len(META_PREFIX):])
            except json.JSONDecodeError as exc:
                raise CodeFormatError(f"line {lineno}: bad metadata ({exc})") from None
            continue
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise CodeFormatError(f"line {lineno}: expected header 'q n'")
            q, n = map(int, parts)
            try:
                field = gf(q)
            except NotPrime:
                raise CodeFormatError(f"line {lineno}: {q} is not a prime power") from None
            if n < 1:
                raise CodeFormatError(f"line {lineno}: ambient dimension must be positive")
            header = (field, n)
            continue
        field, n = header
        try:
            rows = [[field.from_digits(sym) for sym in row.split(",")] for row in line.split(";")]
            words.append(canonicalize(rows, field, n))
        except (ValueError, IndexError) as exc:
            raise CodeFormatError(f"line {lineno}: {exc}") from None
    if header is None:
        raise CodeFormatError("missing 'q n' header")
    return header[0], header[1], words, metadata
