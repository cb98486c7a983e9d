"""Dense linear algebra over a :class:`~codedist.field.Field`.

Matrices are plain 2-D ``int64`` numpy arrays of canonical field elements;
the field travels alongside as the first argument. Besides row reduction and
kernels this module enumerates subspaces canonically: every i-dimensional
subspace of F_q^k has exactly one RREF basis, and we walk those bases by
pivot-column set (lexicographic), then free entries in odometer order.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

import numpy as np

from .budget import Budget
from .errors import BudgetExceeded, LengthMismatch
from .field import Field


def as_matrix(M, ncols: int | None = None) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size or ncols is None else A.reshape(0, ncols)
    if A.size == 0 and ncols is not None:
        A = A.reshape(0, ncols)
    return A


# -- row reduction -------------------------------------------------------------


def _rref_gf2(A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    r, c = A.shape
    # bit (c-1-j) holds column j so the highest set bit is the leftmost entry
    rows = [int("".join(map(str, row)), 2) if c else 0 for row in A.tolist()]
    pivots = []
    top = 0
    for col in range(c):
        if top == r:
            break
        bit = 1 << (c - 1 - col)
        for j in range(top, r):
            if rows[j] & bit:
                rows[top], rows[j] = rows[j], rows[top]
                break
        else:
            continue
        pr = rows[top]
        for j in range(r):
            if j != top and rows[j] & bit:
                rows[j] ^= pr
        pivots.append(col)
        top += 1
    out = np.zeros((r, c), dtype=np.int64)
    for j, v in enumerate(rows):
        if v:
            out[j] = [(v >> (c - 1 - t)) & 1 for t in range(c)]
    return out, pivots


def _rref_generic(field: Field, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    r, c = A.shape
    pivots = []
    top = 0
    for col in range(c):
        if top == r:
            break
        nz = np.flatnonzero(A[top:, col])
        if nz.size == 0:
            continue
        j = top + int(nz[0])
        if j != top:
            A[[top, j]] = A[[j, top]]
        A[top] = field.mul(A[top], field.inv(int(A[top, col])))
        factors = A[:, col].copy()
        factors[top] = 0
        if factors.any():
            A = field.sub(A, field.mul(factors[:, None], A[top][None, :]))
        pivots.append(col)
        top += 1
    return A, pivots


def rref(field: Field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    The returned matrix has the same shape as ``M``; zero rows sit at the
    bottom.
    """
    A = as_matrix(M)
    if field.q == 2:
        return _rref_gf2(A % 2)
    return _rref_generic(field, A.copy())


def rref_generic(field: Field, M) -> tuple[np.ndarray, list[int]]:
    """Row reduction without the bit-packed GF(2) path (used as a cross-check)."""
    return _rref_generic(field, as_matrix(M).copy())


def row_basis(field: Field, M) -> np.ndarray:
    """RREF with zero rows removed."""
    R, piv = rref(field, M)
    return R[: len(piv)]


def rank(field: Field, M) -> int:
    A = as_matrix(M)
    if A.size == 0:
        return 0
    return len(rref(field, A)[1])


def is_rref(M) -> bool:
    A = as_matrix(M)
    last = -1
    for row in A:
        nz = np.flatnonzero(row)
        if nz.size == 0:
            continue
        p = int(nz[0])
        if p <= last or row[p] != 1 or np.count_nonzero(A[:, p]) != 1:
            return False
        last = p
    return True


def kernel(field: Field, M, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : M x^T = 0}``."""
    A = as_matrix(M, ncols)
    c = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(c, dtype=np.int64)
    R, piv = rref(field, A)
    free = [j for j in range(c) if j not in piv]
    K = np.zeros((len(free), c), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for r, pc in enumerate(piv):
            K[t, pc] = field.neg(int(R[r, f]))
    return K


def matmul(field: Field, A, B) -> np.ndarray:
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise LengthMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if field.e == 1:
        return (A @ B) % field.p
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        acc = field.add(acc, field.mul(A[:, t, None], B[None, t, :]))
    return acc


def combine(field: Field, coeffs: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Linear combinations ``coeffs @ G`` for a batch of coefficient rows.

    ``coeffs`` may have any leading shape; the last axis indexes rows of G.
    """
    coeffs = np.asarray(coeffs, dtype=np.int64)
    G = np.asarray(G, dtype=np.int64)
    lead = coeffs.shape[:-1]
    flat = coeffs.reshape(-1, coeffs.shape[-1])
    return matmul(field, flat, G).reshape(lead + (G.shape[1],))


def in_rowspace(field: Field, basis, vectors) -> np.ndarray:
    """Boolean per vector: does it lie in the row space of ``basis``?"""
    B = row_basis(field, basis)
    V = as_matrix(vectors, B.shape[1])
    r = B.shape[0]
    return np.array([rank(field, np.vstack([B, v])) == r for v in V], dtype=bool)


# -- counting ------------------------------------------------------------------


def gaussian_binomial(k: int, i: int, q: int) -> int:
    """Number of i-dimensional subspaces of F_q^k (exact integer)."""
    if i < 0 or i > k:
        return 0
    num = den = 1
    for j in range(i):
        num *= q ** (k - j) - 1
        den *= q ** (j + 1) - 1
    return num // den


def projective_count(i: int, q: int) -> int:
    return (q**i - 1) // (q - 1)


# -- index arithmetic on F_q^K ---------------------------------------------------


class VectorSpace:
    """F_q^K with vectors encoded as integers ``sum(v_t * q**t)``.

    Because each coordinate is itself ``sum(c_s * p**s)``, an index is a
    base-p numeral and vector addition is digit-wise addition mod p (plain
    XOR when p = 2).
    """

    TABLE_LIMIT = 1 << 22

    def __init__(self, field: Field, K: int):
        self.field = field
        self.K = K
        self.q = field.q
        self.size = field.q**K
        self._qpow = field.q ** np.arange(K, dtype=np.int64)
        self._ndig = K * field.e
        self._ppow = field.p ** np.arange(self._ndig, dtype=np.int64)
        self._smul = None
        self._orbit_min = None

    def to_index(self, V) -> np.ndarray:
        V = np.asarray(V, dtype=np.int64)
        return V @ self._qpow

    def from_index(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self._qpow) % self.q

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.field.p
        if p == 2:
            return a ^ b
        da = (a[..., None] // self._ppow) % p
        db = (b[..., None] // self._ppow) % p
        return ((da + db) % p) @ self._ppow

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        p = self.field.p
        if p == 2:
            return a
        da = (a[..., None] // self._ppow) % p
        return ((-da) % p) @ self._ppow

    def smul(self, lam: int, a):
        a = np.asarray(a, dtype=np.int64)
        if lam == 1:
            return a
        if self._smul is not None:
            return self._smul[lam][a]
        return self.to_index(self.field.mul(lam, self.from_index(a)))

    def smul_table(self) -> np.ndarray:
        if self._smul is None:
            all_idx = np.arange(self.size, dtype=np.int64)
            tab = np.empty((self.q, self.size), dtype=np.int64)
            for lam in range(self.q):
                tab[lam] = self.to_index(self.field.mul(lam, self.from_index(all_idx)))
            self._smul = tab
        return self._smul

    def orbit_min(self) -> np.ndarray:
        """For each vector, the smallest index among its nonzero scalar multiples."""
        if self._orbit_min is None:
            if self.q == 2:
                self._orbit_min = np.arange(self.size, dtype=np.int64)
            else:
                self._orbit_min = self.smul_table()[1:].min(axis=0)
        return self._orbit_min

    def projective_points(self) -> np.ndarray:
        """One representative (the first nonzero coordinate equal to 1) per line."""
        out = []
        for lead in range(self.K):
            tail = self.q ** (self.K - lead - 1)
            base = self.q**lead
            out.append(base + np.arange(tail, dtype=np.int64) * self.q ** (lead + 1))
        return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)

    def span(self, rows) -> np.ndarray:
        """All elements of the span of the given row indices, shape ``(..., q**i)``.

        ``rows`` has shape ``(..., i)``. Element order: coefficient vector
        ``(c_1..c_i)`` with ``c_i`` least significant.
        """
        rows = np.asarray(rows, dtype=np.int64)
        lead = rows.shape[:-1]
        acc = np.zeros(lead + (1,), dtype=np.int64)
        for r in range(rows.shape[-1]):
            b = rows[..., r]
            mults = np.stack([self.smul(lam, b) for lam in range(self.q)], axis=-1)
            acc = self.add(mults[..., None, :], acc[..., :, None]).reshape(lead + (-1,))
        return acc


# -- canonical subspace enumeration ------------------------------------------------


def free_positions(k: int, pivots) -> list[tuple[int, int]]:
    piv = set(pivots)
    return [(r, c) for r, pr in enumerate(pivots) for c in range(pr + 1, k) if c not in piv]


def rref_count(q: int, k: int, pivots) -> int:
    return q ** len(free_positions(k, pivots))


def rref_chunks(q: int, k: int, pivots, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """All RREF matrices with the given pivots, as arrays ``(batch, i, k)``."""
    i = len(pivots)
    free = free_positions(k, pivots)
    total = q ** len(free)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        M = np.zeros((idx.size, i, k), dtype=np.int64)
        for r, pc in enumerate(pivots):
            M[:, r, pc] = 1
        # odometer: the last free position varies fastest
        for u, (r, c) in enumerate(reversed(free)):
            M[:, r, c] = (idx // q**u) % q
        yield M


def rref_index_chunks(space: VectorSpace, pivots, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """Same enumeration as :func:`rref_chunks`, rows encoded as indices ``(batch, i)``."""
    for M in rref_chunks(space.q, space.K, pivots, chunk):
        yield space.to_index(M)


class SubspaceEnumerator:
    """Every i-dimensional subspace of the row space of ``basis`` (rank k).

    Iteration yields ``i x N`` generator matrices in ambient coordinates,
    each the coordinate RREF composed with ``basis``. The work splits into
    independent ranges by pivot-column set (see :meth:`pivot_sets`).
    """

    def __init__(self, field: Field, basis, i: int):
        self.field = field
        self.basis = row_basis(field, basis)
        self.k = self.basis.shape[0]
        if not 0 <= i <= self.k:
            raise ValueError(f"subspace dimension {i} outside [0, {self.k}]")
        self.i = i

    def __len__(self):
        return gaussian_binomial(self.k, self.i, self.field.q)

    def pivot_sets(self) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(self.k), self.i))

    def coordinate_chunks(self, pivots=None) -> Iterator[np.ndarray]:
        sets = self.pivot_sets() if pivots is None else [pivots]
        for piv in sets:
            yield from rref_chunks(self.field.q, self.k, piv)

    def __iter__(self) -> Iterator[np.ndarray]:
        for M in self.coordinate_chunks():
            for coeff in M:
                yield matmul(self.field, coeff, self.basis)


def enumerate_subspaces(field: Field, basis, i: int, budget: Budget | None = None) -> SubspaceEnumerator:
    en = SubspaceEnumerator(field, basis, i)
    if budget is not None:
        est = len(en) * projective_count(i, field.q)
        if not budget.fits(est):
            raise BudgetExceeded(est, budget.remaining, "subspace enumeration")
    return en


def enumerate_supercodes(field: Field, C_basis, i: int, budget: Budget | None = None) -> Iterator[np.ndarray]:
    """Every i-dimensional subspace containing the row space of ``C_basis``.

    Supercodes are parametrised by (i-k)-dimensional subspaces of the
    non-pivot coordinates of rref(C), lifted into the ambient space.
    """
    R, piv = rref(field, C_basis)
    R = R[: len(piv)]
    k, N = R.shape
    if not k <= i <= N:
        raise ValueError(f"supercode dimension {i} outside [{k}, {N}]")
    comp = [j for j in range(N) if j not in piv]
    count = gaussian_binomial(N - k, i - k, field.q)
    if budget is not None:
        est = count * projective_count(i, field.q)
        if not budget.fits(est):
            raise BudgetExceeded(est, budget.remaining, "supercode enumeration")

    def gen():
        if i == k:
            yield R.copy()
            return
        for piv_s in itertools.combinations(range(N - k), i - k):
            for S in rref_chunks(field.q, N - k, piv_s):
                for s in S:
                    lift = np.zeros((i - k, N), dtype=np.int64)
                    lift[:, comp] = s
                    yield np.vstack([R, lift])

    return gen()
