"""Plain-text code files.

::

    # comments start with '#'
    metric hamming 5            | metric rank m n | metric sumrank m1 n1 m2 n2 ...
    field 2 1
    linear extension 2          (optional: rows are over F_{q^m}, length n)
    generator
    1 1 1 1 0
    0 0 0 1 1

Entries are canonical integer encodings of field elements; matrix blocks
are flattened row-major.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .code import HAMMING, RANK, SUMRANK, AmbientSpace, LinearCode
from .errors import CodeDistError, ParseError
from .field import extension_field, field_new


def _ints(tokens, line, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line, f"{what}: expected integers") from None


def parse_code(text: str) -> LinearCode:
    field, ambient, ext, G = parse_generator(text)
    if ext is not None:
        return LinearCode.from_extension(field, ext, G, ambient)
    return LinearCode(field, ambient, G)


def parse_generator(text: str):
    """(field, ambient, extension field or None, generator rows exactly as written)."""
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body.split()))
    if not lines:
        raise ParseError(1, "empty code file")
    it = iter(lines)
    no, tok = next(it)
    if tok[0] != "metric" or len(tok) < 2:
        raise ParseError(no, "first line must be 'metric ...'")
    kind, dims = tok[1], _ints(tok[2:], no, "metric")
    try:
        if kind == HAMMING and len(dims) == 1:
            ambient = AmbientSpace.hamming(dims[0])
        elif kind == RANK and len(dims) == 2:
            ambient = AmbientSpace.rank(*dims)
        elif kind == SUMRANK and dims and len(dims) % 2 == 0:
            ambient = AmbientSpace.sumrank(zip(dims[::2], dims[1::2]))
        else:
            raise ParseError(no, f"bad metric line {' '.join(tok[1:])!r}")
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(no, str(exc)) from None
    no, tok = next(it, (no + 1, ["<eof>"]))
    if tok[0] != "field" or len(tok) != 3:
        raise ParseError(no, "second line must be 'field p e'")
    p, e = _ints(tok[1:], no, "field")
    try:
        field = field_new(p, e)
    except CodeDistError as exc:
        raise ParseError(no, str(exc)) from None
    no, tok = next(it, (no + 1, ["<eof>"]))
    ext = None
    if tok[:2] == ["linear", "extension"]:
        if len(tok) != 3:
            raise ParseError(no, "expected 'linear extension m'")
        (m,) = _ints(tok[2:], no, "linear extension")
        if ambient.metric != RANK or ambient.shape[0] != m:
            raise ParseError(no, "linear extension needs 'metric rank m n' with the same m")
        try:
            ext = extension_field(field, m)
        except CodeDistError as exc:
            raise ParseError(no, str(exc)) from None
        no, tok = next(it, (no + 1, ["<eof>"]))
    if tok != ["generator"]:
        raise ParseError(no, "expected 'generator'")
    width = ambient.shape[1] if ext is not None else ambient.N
    top = ext.q if ext is not None else field.q
    rows = []
    for no, tok in it:
        row = _ints(tok, no, "generator row")
        if len(row) != width:
            raise ParseError(no, f"row has {len(row)} entries, expected {width}")
        if min(row) < 0 or max(row) >= top:
            raise ParseError(no, f"entries must lie in [0, {top})")
        rows.append(row)
    return field, ambient, ext, np.array(rows, dtype=np.int64).reshape(len(rows), width)


def read_code(path) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def format_code(C: LinearCode) -> str:
    out = [f"metric {C.ambient.describe()}", f"field {C.field.p} {C.field.e}"]
    rows = C.gen
    if C.extension is not None:
        out.append(f"linear extension {C.extension.m}")
        rows = C.extension.gen
    out.append("generator")
    out += [" ".join(str(int(x)) for x in row) for row in rows]
    return "\n".join(out) + "\n"


def write_code(C: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code(C))


def code_digest(C: LinearCode) -> str:
    return hashlib.sha256(format_code(C).encode()).hexdigest()
