"""Builders for the code families used throughout the package."""

from __future__ import annotations

import numpy as np

from .code import AmbientSpace, LinearCode, coordinate_table
from .errors import (
    BudgetExceeded,
    DependentPoints,
    DependentPolynomials,
    DimensionOrder,
    DuplicatePoints,
    KTooLarge,
    UnknownName,
)
from .field import Field, GF, extension_field
from .linalg import VectorSpace, kernel, rank


def _points(field: Field, points) -> np.ndarray:
    if points is None:
        return field.elements()
    pts = np.array(points, dtype=np.int64)
    if len(set(pts.tolist())) != pts.size:
        raise DuplicatePoints("evaluation points must be distinct")
    return pts


def evaluate(field: Field, poly, points) -> np.ndarray:
    """Evaluate a polynomial given by its coefficients (constant term first) at every point."""
    acc = np.zeros(len(points), dtype=np.int64)
    for c in reversed(list(poly)):
        acc = field.add(field.mul(acc, points), int(c))
    return acc


def evaluation_code(field: Field, polys, points=None) -> LinearCode:
    """Row space of the evaluation vectors f(A), one row per polynomial."""
    pts = _points(field, points)
    rows = np.array([evaluate(field, f, pts) for f in polys], dtype=np.int64)
    if rank(field, rows) < len(polys):
        raise DependentPolynomials("polynomials are dependent as functions on the points")
    return LinearCode(field, AmbientSpace.hamming(pts.size), rows)


def reed_solomon(field: Field, k: int, points=None) -> LinearCode:
    """RS(A, k): evaluations of 1, x, ..., x^(k-1) at the points (default: all of F_q, ascending)."""
    pts = _points(field, points)
    if not 1 <= k <= pts.size:
        raise KTooLarge(f"need 1 <= k <= n = {pts.size}, got k = {k}")
    return evaluation_code(field, [[0] * j + [1] for j in range(k)], pts)


def twisted_reed_solomon(field: Field | None = None, a: int | None = None) -> LinearCode:
    """Evaluations over F_9 of <1, x, x^2 - a x^6, x^3>, with a the field generator."""
    field = GF(9) if field is None else field
    a = field.gen if a is None else a
    x2 = [0, 0, 1, 0, 0, 0, field.neg(a)]
    return evaluation_code(field, [[1], [0, 1], x2, [0, 0, 0, 1]])


def gabidulin(base: Field, ext: Field, k: int, points=None) -> LinearCode:
    """Gabidulin code with rows (a_j^(q^i)), i < k, as an F_q-expanded rank-metric code.

    Default points are 1, b, ..., b^(m-1) for the generator b of F_{q^m}.
    """
    m = ext.e // base.e
    if points is None:
        points = [ext.gen_power(s) for s in range(m)]
    pts = np.array(points, dtype=np.int64)
    n = pts.size
    if not 1 <= k <= n <= m:
        raise DimensionOrder(f"need m >= n >= k >= 1, got m={m}, n={n}, k={k}")
    coords = coordinate_table(ext, base)[pts]
    if rank(base, coords) < n:
        raise DependentPoints("points are linearly dependent over the base field")
    rows = [ext.power(pts, base.q**i) for i in range(k)]
    return LinearCode.from_extension(base, ext, np.array(rows), AmbientSpace.rank(m, n))


def simplex(q: int, k: int, limit: int = 1 << 20) -> LinearCode:
    """Columns are one representative per line of F_q^k."""
    if q**k > limit:
        raise BudgetExceeded(q**k, limit, "simplex construction")
    field = GF(q)
    sp = VectorSpace(field, k)
    cols = sp.from_index(sp.projective_points())
    return LinearCode(field, AmbientSpace.hamming(cols.shape[0]), cols.T)


def even_weight(n: int) -> LinearCode:
    if n < 2:
        raise ValueError("even-weight code needs n >= 2")
    F2 = GF(2)
    return LinearCode(F2, AmbientSpace.hamming(n), kernel(F2, np.ones((1, n), dtype=np.int64)))


def full_space(field: Field, ambient: AmbientSpace) -> LinearCode:
    return LinearCode(field, ambient, np.eye(ambient.N, dtype=np.int64))


def hadamard_rank(q: int, m: int, k: int, limit: int = 1 << 22) -> LinearCode:
    """[mk, k, m] rank-metric code whose generator columns form an F_q-basis of F_{q^m}^k."""
    base = GF(q)
    if q ** (m * k) > limit:
        raise BudgetExceeded(q ** (m * k), limit, "hadamard construction")
    ext = extension_field(base, m)
    G = np.zeros((k, m * k), dtype=np.int64)
    for j in range(k):
        for s in range(m):
            G[j, j * m + s] = ext.gen_power(s)
    return LinearCode.from_extension(base, ext, G, AmbientSpace.rank(m, m * k))


# -- the named registry -----------------------------------------------------------------------

_BR17_C1 = [
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]],
    [[0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1], [1, 1, 0, 0]],
    [[0, 0, 1, 0], [0, 1, 1, 1], [1, 0, 1, 0], [1, 0, 0, 1]],
    [[0, 0, 0, 1], [1, 1, 1, 0], [0, 1, 0, 1], [0, 1, 1, 1]],
]


def _hamming(q, rows):
    rows = np.array(rows, dtype=np.int64)
    return LinearCode(GF(q), AmbientSpace.hamming(rows.shape[1]), rows)


def _f4(rows):
    # eta is the generator of F_4 (encoded 2) and eta^2 = eta + 1 (encoded 3)
    return LinearCode.from_extension(GF(2), GF(4), np.array(rows), AmbientSpace.rank(2, 4))


_REGISTRY = {
    "F2^3": lambda: full_space(GF(2), AmbientSpace.hamming(3)),
    "F2^4": lambda: full_space(GF(2), AmbientSpace.hamming(4)),
    "even-3": lambda: even_weight(3),
    "even-4": lambda: even_weight(4),
    "even-7": lambda: even_weight(7),
    "even-8": lambda: even_weight(8),
    "not-maximal": lambda: _hamming(2, [[1, 0, 0], [0, 1, 0]]),
    "ternary-422": lambda: _hamming(3, [[1, 1, 1, 0], [0, 1, 2, 0], [0, 0, 1, 1]]),
    "duality-C1": lambda: _hamming(2, [[1, 1, 1, 1, 0], [0, 0, 0, 1, 1]]),
    "duality-C2": lambda: _hamming(2, [[1, 1, 1, 1, 0], [0, 0, 1, 1, 0]]),
    "duality-C1-dual": lambda: _hamming(2, [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 1]]),
    "duality-C2-dual": lambda: _hamming(2, [[0, 0, 0, 0, 1], [1, 1, 0, 0, 0], [0, 0, 1, 1, 0]]),
    "nested-C1": lambda: _hamming(2, [[1, 1, 1, 0, 0]]),
    "nested-D1": lambda: _hamming(2, [[1, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1]]),
    "nested-C2": lambda: _hamming(2, [[1, 1, 0, 0, 0]]),
    "nested-D2": lambda: _hamming(2, [[1, 1, 1, 0, 0], [0, 0, 1, 1, 1], [1, 1, 0, 0, 0]]),
    "rs-9-4": lambda: reed_solomon(GF(9), 4),
    "twisted-rs-9": lambda: twisted_reed_solomon(),
    "BR17-C1": lambda: LinearCode(GF(2), AmbientSpace.rank(4, 4), np.array(_BR17_C1).reshape(4, 16)),
    "gabidulin-4x4": lambda: gabidulin(GF(2), GF(16), 1),
    "F4-C1": lambda: _f4([[1, 2, 0, 0], [0, 1, 3, 0]]),
    "F4-C2": lambda: _f4([[1, 2, 0, 0], [0, 0, 1, 2]]),
    "F4-C1-dual": lambda: _f4([[1, 3, 1, 0], [0, 0, 0, 1]]),
    "F4-C2-dual": lambda: _f4([[1, 3, 0, 0], [0, 0, 1, 3]]),
}


def builtin_names() -> list[str]:
    return list(_REGISTRY)


def builtin(name: str) -> LinearCode:
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise UnknownName(name) from None
