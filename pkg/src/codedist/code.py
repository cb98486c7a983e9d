"""Linear codes under the Hamming, rank and sum-rank metrics.

Every code, whatever its metric, is stored as an F_q-linear row space of
F_q^N in canonical RREF; the metric only changes how a vector's weight is
computed. Matrix coordinates are flattened row-major, block after block.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .budget import Budget, as_budget
from .errors import (
    BudgetExceeded,
    LengthMismatch,
    NoDependentSubset,
    PositionOutOfRange,
    UnsupportedDual,
)
from .field import Embedding, Field, extension_field
from .linalg import (
    VectorSpace,
    as_matrix,
    combine,
    kernel,
    projective_count,
    rank,
    row_basis,
)

HAMMING, RANK, SUMRANK = "hamming", "rank", "sumrank"
WEIGHT_TABLE_LIMIT = 1 << 22


def batch_rank(field: Field, A: np.ndarray) -> np.ndarray:
    """Rank of each matrix in a stack ``(B, m, n)``."""
    A = np.array(A, dtype=np.int64)
    B, m, n = A.shape
    rk = np.zeros(B, dtype=np.int64)
    if B == 0 or m == 0 or n == 0:
        return rk
    rows = np.arange(m)
    for col in range(n):
        cand = (A[:, :, col] != 0) & (rows[None, :] >= rk[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        pr = cand[b].argmax(axis=1)
        tr = rk[b]
        tmp = A[b, pr].copy()
        A[b, pr] = A[b, tr]
        A[b, tr] = tmp
        prow = field.mul(field.inv(A[b, tr, col])[:, None], A[b, tr])
        A[b, tr] = prow
        fac = A[b, :, col].copy()
        fac[rows[None, :] <= tr[:, None]] = 0
        A[b] = field.sub(A[b], field.mul(fac[:, :, None], prow[:, None, :]))
        rk[b] += 1
    return rk


@dataclass(frozen=True)
class AmbientSpace:
    """The metric space V: ``hamming`` (n,), ``rank`` (m, n) or ``sumrank`` ((m1, n1), ...).

    Rank-metric shapes with n > m are accepted; weights and bounds then use
    ``min(m, n)`` as the effective number of columns.
    """

    metric: str
    shape: tuple

    @classmethod
    def hamming(cls, n: int) -> "AmbientSpace":
        return cls(HAMMING, (int(n),))

    @classmethod
    def rank(cls, m: int, n: int) -> "AmbientSpace":
        return cls(RANK, (int(m), int(n)))

    @classmethod
    def sumrank(cls, blocks) -> "AmbientSpace":
        return cls(SUMRANK, tuple((int(m), int(n)) for m, n in blocks))

    def __post_init__(self):
        if self.metric not in (HAMMING, RANK, SUMRANK):
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.metric == HAMMING and (len(self.shape) != 1 or self.shape[0] < 1):
            raise ValueError("hamming ambient needs a positive length")
        if self.metric == RANK and (len(self.shape) != 2 or min(self.shape) < 1):
            raise ValueError("rank ambient needs positive m, n")
        if self.metric == SUMRANK and (not self.shape or min(min(b) for b in self.shape) < 1):
            raise ValueError("sumrank ambient needs at least one positive block")

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        if self.metric == HAMMING:
            return ((1, 1),) * self.shape[0]
        if self.metric == RANK:
            return (self.shape,)
        return self.shape

    @property
    def N(self) -> int:
        return sum(m * n for m, n in self.blocks)

    @property
    def length(self) -> int:
        """n for Hamming and rank, sum of n_h for sum-rank."""
        if self.metric == HAMMING:
            return self.shape[0]
        return sum(n for _, n in self.blocks)

    @property
    def max_weight(self) -> int:
        return sum(min(m, n) for m, n in self.blocks)

    def describe(self) -> str:
        if self.metric == HAMMING:
            return f"hamming {self.shape[0]}"
        if self.metric == RANK:
            return f"rank {self.shape[0]} {self.shape[1]}"
        return "sumrank " + " ".join(f"{m} {n}" for m, n in self.shape)

    def weights(self, field: Field, V) -> np.ndarray:
        """Weights of a batch of vectors with last axis of length N."""
        V = np.asarray(V, dtype=np.int64)
        if V.shape[-1] != self.N:
            raise LengthMismatch(f"vector length {V.shape[-1]} != N = {self.N}")
        lead = V.shape[:-1]
        flat = V.reshape(-1, self.N)
        if self.metric == HAMMING:
            w = np.count_nonzero(flat, axis=1)
        else:
            w = np.zeros(flat.shape[0], dtype=np.int64)
            off = 0
            for m, n in self.blocks:
                blk = flat[:, off : off + m * n].reshape(-1, m, n)
                if m * n == 1:
                    w += blk[:, 0, 0] != 0
                else:
                    w += batch_rank(field, blk)
                off += m * n
        return w.reshape(lead)

    def weight(self, field: Field, v) -> int:
        return int(self.weights(field, np.asarray(v).reshape(1, -1))[0])


@functools.lru_cache(maxsize=8)
def ambient_weight_table(field: Field, ambient: AmbientSpace) -> np.ndarray:
    """Weight of every vector of V by index; only for q^N within the table limit."""
    size = field.q**ambient.N
    if size > WEIGHT_TABLE_LIMIT:
        raise BudgetExceeded(size, WEIGHT_TABLE_LIMIT, "ambient weight table")
    space = VectorSpace(field, ambient.N)
    out = np.empty(size, dtype=np.int8)
    step = 1 << 16
    for s in range(0, size, step):
        idx = np.arange(s, min(size, s + step), dtype=np.int64)
        out[s : s + idx.size] = ambient.weights(field, space.from_index(idx))
    out.setflags(write=False)
    return out


def weight(v, ambient: AmbientSpace, field: Field) -> int:
    return ambient.weight(field, v)


# -- extension-linear codes --------------------------------------------------------


@functools.lru_cache(maxsize=None)
def coordinate_table(ext: Field, base: Field) -> np.ndarray:
    """Coordinates of every element of F_{q^m} in the basis 1, b, ..., b^(m-1)
    over F_q, where b is the Conway generator of F_{q^m}."""
    m = ext.e // base.e
    if base.e == 1:
        return ext.digits(ext.elements())
    emb = Embedding(base, ext)
    combos = VectorSpace(base, m).from_index(np.arange(base.q**m))
    powers = np.array([ext.gen_power(s) for s in range(m)], dtype=np.int64)
    vals = np.zeros(combos.shape[0], dtype=np.int64)
    for s in range(m):
        vals = ext.add(vals, ext.mul(emb(combos[:, s]), powers[s]))
    out = np.empty((ext.q, m), dtype=np.int64)
    out[vals] = combos
    return out


@dataclass(frozen=True, eq=False)
class ExtensionView:
    """Marks a code entered as F_{q^m}-linear of length n; ``gen`` is its RREF over F_{q^m}."""

    field: Field
    m: int
    gen: np.ndarray


def expand_rows(ext: Field, base: Field, rows) -> np.ndarray:
    """F_q-expansion of F_{q^m}-vectors: row c becomes the m x n matrix whose
    column j holds the coordinates of c_j, flattened row-major."""
    rows = as_matrix(rows)
    coords = coordinate_table(ext, base)[rows]  # (r, n, m)
    return np.transpose(coords, (0, 2, 1)).reshape(rows.shape[0], -1)


def expand_code_rows(ext: Field, base: Field, gen) -> np.ndarray:
    """F_q-spanning set of the F_{q^m}-span of ``gen``: all b^s * g."""
    gen = as_matrix(gen)
    m = ext.e // base.e
    out = [expand_rows(ext, base, ext.mul(ext.gen_power(s), gen)) for s in range(m)]
    return np.vstack(out) if out else np.zeros((0, gen.shape[1] * m), dtype=np.int64)


class LinearCode:
    """An F_q-linear subspace of an ambient metric space, held as its RREF generator."""

    def __init__(self, field: Field, ambient: AmbientSpace, rows, extension: ExtensionView | None = None):
        G = row_basis(field, as_matrix(rows, ambient.N))
        if G.shape[1] != ambient.N:
            raise LengthMismatch(f"generator has {G.shape[1]} columns, ambient N = {ambient.N}")
        G.setflags(write=False)
        self.field = field
        self.ambient = ambient
        self.gen = G
        self.extension = extension
        self._weights = None

    @classmethod
    def from_extension(cls, base: Field, ext: Field, ext_rows, ambient: AmbientSpace | None = None) -> "LinearCode":
        """F_q-expansion of the F_{q^m}-linear code spanned by ``ext_rows``."""
        m = ext.e // base.e
        eg = row_basis(ext, ext_rows)
        n = eg.shape[1]
        if ambient is None:
            ambient = AmbientSpace.rank(m, n)
        eg.setflags(write=False)
        view = ExtensionView(ext, m, eg)
        return cls(base, ambient, expand_code_rows(ext, base, eg), extension=view)

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def N(self) -> int:
        return self.ambient.N

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(r)[0]) for r in self.gen]

    @property
    def complement(self) -> list[int]:
        piv = set(self.pivots)
        return [j for j in range(self.N) if j not in piv]

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.gen.shape == other.gen.shape
            and np.array_equal(self.gen, other.gen)
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.gen.tobytes()))

    def __repr__(self):
        return f"LinearCode({self.field}, {self.ambient.describe()}, k={self.k})"

    @property
    def space(self) -> VectorSpace:
        """Coefficient space F_q^k; index x stands for the codeword x @ gen."""
        return VectorSpace(self.field, self.k)

    def codewords(self, coeff_idx=None) -> np.ndarray:
        if coeff_idx is None:
            coeff_idx = np.arange(self.q**self.k, dtype=np.int64)
        coeffs = self.space.from_index(coeff_idx)
        return combine(self.field, coeffs, self.gen)

    def weight_table(self, budget: Budget | None = None) -> np.ndarray:
        """Weight of every codeword, indexed by coefficient-vector index."""
        size = self.q**self.k
        # charged on every request so accounting does not depend on cache state
        if budget is not None:
            budget.charge(size, "codeword weight table")
        if self._weights is None:
            if budget is None and size > WEIGHT_TABLE_LIMIT:
                raise BudgetExceeded(size, WEIGHT_TABLE_LIMIT, "codeword weight table")
            out = np.empty(size, dtype=np.int64)
            step = 1 << 15
            for s in range(0, size, step):
                idx = np.arange(s, min(size, s + step), dtype=np.int64)
                out[s : s + idx.size] = self.ambient.weights(self.field, self.codewords(idx))
            out.setflags(write=False)
            self._weights = out
        return self._weights

    def contains(self, vectors) -> np.ndarray:
        V = as_matrix(vectors, self.N)
        return np.array([rank(self.field, np.vstack([self.gen, v])) == self.k for v in V], dtype=bool)

    def contains_code(self, other: "LinearCode") -> bool:
        return bool(self.contains(other.gen).all()) if other.k else True

    def weights_of(self, vectors) -> np.ndarray:
        return self.ambient.weights(self.field, vectors)


# -- distance and weight ----------------------------------------------------------


def _projective_weights(C: LinearCode, budget: Budget | None):
    if C.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if C._weights is not None:
        return C._weights[1:]
    n = projective_count(C.k, C.q)
    as_budget(budget).charge(n, "codeword scan")
    pts = C.space.projective_points()
    out = np.empty(n, dtype=np.int64)
    step = 1 << 15
    for s in range(0, n, step):
        out[s : s + step] = C.ambient.weights(C.field, C.codewords(pts[s : s + step]))
    return out


def min_distance(C: LinearCode, budget: Budget | None = None) -> int:
    """Least weight of a nonzero codeword (scans one representative per line)."""
    return int(_projective_weights(C, budget).min())


def max_weight(C: LinearCode, budget: Budget | None = None) -> int:
    if C.k == 0:
        return 0
    return int(_projective_weights(C, budget).max())


# -- duality ------------------------------------------------------------------------


def dual(C: LinearCode) -> LinearCode:
    """Dual under the standard inner product (over F_{q^m} for extension-linear codes)."""
    if C.extension is not None:
        ext = C.extension
        eg = kernel(ext.field, ext.gen, C.ambient.N // ext.m)
        return LinearCode.from_extension(C.field, ext.field, eg, C.ambient)
    if C.ambient.metric != HAMMING:
        raise UnsupportedDual("duals of matrix codes are only defined for extension-linear codes")
    return LinearCode(C.field, C.ambient, kernel(C.field, C.gen, C.N))


def parity_check(C: LinearCode) -> np.ndarray:
    """A parity check matrix; the full space gets the zero row."""
    if C.extension is not None:
        ext = C.extension
        H = kernel(ext.field, ext.gen, C.N // ext.m)
        n = C.N // ext.m
    elif C.ambient.metric == HAMMING:
        H = kernel(C.field, C.gen, C.N)
        n = C.N
    else:
        raise UnsupportedDual("parity checks of matrix codes need an extension-linear code")
    if H.shape[0] == 0:
        return np.zeros((1, n), dtype=np.int64)
    return H


def min_distance_via_parity(field: Field, H, budget: Budget | None = None) -> int:
    """Smallest number of linearly dependent columns of ``H``."""
    return min_ld_card(field, as_matrix(H).T, budget)


# -- strong linear dependence ---------------------------------------------------------


def _nonzero_tuples(field: Field, count: int, chunk: int = 1 << 16):
    nz = np.arange(1, field.q, dtype=np.int64)
    total = (field.q - 1) ** count
    for s in range(0, total, chunk):
        idx = np.arange(s, min(total, s + chunk), dtype=np.int64)
        digits = (idx[:, None] // (field.q - 1) ** np.arange(count)) % (field.q - 1)
        yield nz[digits]


def is_sld(field: Field, vectors, budget: Budget | None = None) -> bool:
    """True iff some combination with every coefficient nonzero vanishes."""
    V = as_matrix(vectors)
    if V.shape[0] == 0:
        raise ValueError("is_sld needs at least one vector")
    as_budget(budget).charge((field.q - 1) ** V.shape[0], "s.l.d. test")
    for coeffs in _nonzero_tuples(field, V.shape[0]):
        sums = combine(field, coeffs, V)
        if not sums.any(axis=1).all():
            return True
    return False


def _subsets_by_size(t: int, budget: Budget | None):
    b = as_budget(budget)
    for s in range(1, t + 1):
        b.charge(math.comb(t, s), "subset scan")
        yield s, itertools.combinations(range(t), s)


def min_ld_card(field: Field, vectors, budget: Budget | None = None) -> int:
    """Size of the smallest linearly dependent subset."""
    V = as_matrix(vectors)
    if rank(field, V) == V.shape[0]:
        raise NoDependentSubset("the vectors are linearly independent")
    for s, subsets in _subsets_by_size(V.shape[0], budget):
        for sub in subsets:
            if rank(field, V[list(sub)]) < s:
                return s
    raise AssertionError("unreachable")


def min_sld_card(field: Field, vectors, budget: Budget | None = None) -> int:
    """Size of the smallest strongly linearly dependent subset."""
    V = as_matrix(vectors)
    if rank(field, V) == V.shape[0]:
        raise NoDependentSubset("the vectors are linearly independent")
    for s, subsets in _subsets_by_size(V.shape[0], budget):
        for sub in subsets:
            if is_sld(field, V[list(sub)]):
                return s
    raise AssertionError("unreachable")


def sld_set(C: LinearCode, budget: Budget | None = None) -> set[int]:
    """Support sizes of the nonzero codewords (Hamming metric)."""
    if C.ambient.metric != HAMMING:
        raise ValueError("SLD sets are defined for Hamming-metric codes")
    if C.k == 0:
        return set()
    return {int(w) for w in np.unique(_projective_weights(C, budget))}


def sld_set_via_parity(field: Field, H, budget: Budget | None = None) -> set[int]:
    """{s : some s columns of H are strongly linearly dependent}, by subset scan."""
    cols = as_matrix(H).T
    out = set()
    for s, subsets in _subsets_by_size(cols.shape[0], budget):
        if any(is_sld(field, cols[list(sub)]) for sub in subsets):
            out.add(s)
    return out


# -- derived codes -------------------------------------------------------------------


def _check_position(C: LinearCode, position: int):
    if C.ambient.metric != HAMMING:
        raise ValueError("puncturing and shortening need a Hamming-metric code")
    if not 0 <= position < C.N:
        raise PositionOutOfRange(f"position {position} outside [0, {C.N})")


def puncture(C: LinearCode, position: int) -> LinearCode:
    _check_position(C, position)
    G = np.delete(C.gen, position, axis=1)
    return LinearCode(C.field, AmbientSpace.hamming(C.N - 1), G)


def shorten(C: LinearCode, position: int) -> LinearCode:
    _check_position(C, position)
    coeffs = kernel(C.field, C.gen[:, position].reshape(1, -1), C.k)
    G = combine(C.field, coeffs, C.gen) if coeffs.size else np.zeros((0, C.N), dtype=np.int64)
    return LinearCode(C.field, AmbientSpace.hamming(C.N - 1), np.delete(G, position, axis=1))


def extend_code(C: LinearCode, degree: int) -> LinearCode:
    """C tensored up to F_{q^degree}, same ambient shape."""
    if degree == 1:
        return C
    F = extension_field(C.field, degree)
    emb = Embedding(C.field, F)
    return LinearCode(F, C.ambient, emb(C.gen))
