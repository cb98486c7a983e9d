"""Max-min problems over the subspace lattice of F_q^K.

Every distance-type invariant reduces to one question: given a scalar
invariant weight ``W`` on F_q^K (indexed as in :class:`VectorSpace`), find
the i-dimensional subspace S maximising ``min(W[x] for x in S, x != 0)``.
Subcode distances use the codeword weights over the coefficient space of C;
supercode distances and generalized radii use coset weights over the
quotient V/C.

Two exact routes are provided. ``exhaustive`` walks every canonical RREF
basis, optionally across worker processes. ``search`` answers "is there an
i-dimensional subspace whose nonzero vectors all have W >= d" by
branch-and-bound over canonical bases, trying d downward from an upper
bound.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .budget import Budget, as_budget
from .errors import LevelSetOverflow
from .field import field_new
from .linalg import VectorSpace, gaussian_binomial, projective_count, rref_index_chunks

EXHAUSTIVE_LIMIT = 2 * 10**7
DEFAULT_LEVEL_CAP = 10**6
_SPAN_BLOCK = 1 << 20


@dataclass(frozen=True)
class MaxMin:
    value: int
    basis: tuple[int, ...]  # indices of a witness basis
    route: str


def exhaustive_cost(K: int, i: int, q: int) -> int:
    return gaussian_binomial(K, i, q) * (q**i - 1)


def _scan_pivots(space: VectorSpace, W: np.ndarray, i: int, pivots, upper: int):
    best, best_rows, spent = -1, None, 0
    chunk = max(1, _SPAN_BLOCK // space.q**i)
    for rows in rref_index_chunks(space, pivots, chunk):
        vals = W[space.span(rows)[:, 1:]].min(axis=1)
        spent += vals.size * (space.q**i - 1)
        j = int(vals.argmax())
        if vals[j] > best:
            best, best_rows = int(vals[j]), tuple(int(r) for r in rows[j])
            if best >= upper:
                break
    return best, best_rows, spent


_WORKER = {}


def _worker_init(p, e, K, W):
    _WORKER["space"] = VectorSpace(field_new(p, e), K)
    _WORKER["W"] = W


def _worker_scan(args):
    i, pivots, upper = args
    return _scan_pivots(_WORKER["space"], _WORKER["W"], i, pivots, upper)


def exhaustive(space: VectorSpace, W, i: int, budget: Budget | None = None,
               upper: int | None = None, workers: int = 1) -> MaxMin:
    """Scan every i-dimensional subspace; the earliest maximiser in canonical order wins."""
    W = np.asarray(W, dtype=np.int64)
    b = as_budget(budget)
    cost = exhaustive_cost(space.K, i, space.q)
    b.require(cost, f"exhaustive scan of {i}-dim subspaces")
    upper = np.iinfo(np.int64).max if upper is None else upper
    sets = list(itertools.combinations(range(space.K), i))
    if workers > 1 and len(sets) > 1:
        f = space.field
        with ProcessPoolExecutor(workers, initializer=_worker_init, initargs=(f.p, f.e, space.K, W)) as ex:
            results = list(ex.map(_worker_scan, [(i, s, upper) for s in sets]))
    else:
        results = []
        for s in sets:
            results.append(_scan_pivots(space, W, i, s, upper))
            if results[-1][0] >= upper:
                break
    # merge in canonical order and stop where the serial scan would, so the
    # witness and the amount charged do not depend on the worker count
    best, rows = -1, None
    for val, r, spent in results:
        b.spent += spent
        if val > best:
            best, rows = val, r
        if best >= upper:
            break
    return MaxMin(best, rows, "exhaustive")


class _Search:
    def __init__(self, space: VectorSpace, W: np.ndarray, i: int, budget: Budget):
        self.space, self.W, self.i, self.budget = space, W, i, budget
        self.orbit = space.orbit_min()
        self.smul = space.smul_table() if space.q > 2 else None
        self.idx = np.arange(space.size, dtype=np.int64)

    def layer(self, y: int, span: np.ndarray) -> np.ndarray:
        if self.smul is None:
            return span ^ y
        mults = self.smul[1:, y]
        return self.space.add(mults[:, None], span[None, :]).ravel()

    def exists(self, d: int):
        good = self.W >= d
        good[0] = False
        cand = np.flatnonzero(good & (self.orbit == self.idx))
        self.good = good
        return self._rec(0, np.zeros(1, dtype=np.int64), cand, ())

    def _rec(self, j, span, cand, basis):
        if j == self.i:
            return basis
        need = projective_count(self.i - j, self.space.q)
        if cand.size < need:
            return None
        q = self.space.q
        for t in range(cand.size):
            if cand.size - t < need:
                break
            y = int(cand[t])
            if j + 1 == self.i:
                return basis + (y,)
            T = self.layer(y, span)
            rest = cand[t + 1 :]
            if rest.size < projective_count(self.i - j - 1, q):
                continue
            self.budget.charge(rest.size * T.size, "subspace search")
            Z = self.space.add(rest[:, None], T[None, :])
            keep = self.good[Z].all(axis=1) & (self.orbit[Z] > rest[:, None]).all(axis=1)
            found = self._rec(j + 1, np.concatenate([span, T]), rest[keep], basis + (y,))
            if found is not None:
                return found
        return None


def threshold_search(space: VectorSpace, W, i: int, upper: int, budget: Budget | None = None) -> MaxMin:
    """Largest d <= upper such that some i-dim subspace has every nonzero W >= d."""
    W = np.asarray(W, dtype=np.int64)
    s = _Search(space, W, i, as_budget(budget))
    floor = int(W[1:].min()) if space.size > 1 else 0
    d = int(upper)
    while d > floor:
        found = s.exists(d)
        if found is not None:
            return MaxMin(d, found, "search")
        d -= 1
    found = s.exists(floor)
    return MaxMin(floor, found, "search")


def max_min_subspace(space: VectorSpace, W, i: int, budget: Budget | None = None,
                     upper: int | None = None, route: str = "auto", workers: int = 1) -> MaxMin:
    """max over i-dim subspaces S of min W over S minus 0.

    W must be constant on nonzero scalar multiples, as every weight is.

    ``upper`` is a known bound used for early exit and as the search start.
    ``route`` is ``auto``, ``exhaustive`` or ``search``.
    """
    W = np.asarray(W, dtype=np.int64)
    if not 1 <= i <= space.K:
        raise ValueError(f"subspace dimension {i} outside [1, {space.K}]")
    if i == space.K:
        as_budget(budget).charge(space.size - 1, "full space")
        basis = tuple(int(space.q**t) for t in range(space.K))
        return MaxMin(int(W[1:].min()), basis, "direct")
    if upper is None:
        upper = int(W[1:].max())
    upper = min(int(upper), int(W[1:].max()))
    if route == "auto":
        route = "exhaustive" if exhaustive_cost(space.K, i, space.q) <= EXHAUSTIVE_LIMIT else "search"
    if route == "exhaustive":
        return exhaustive(space, W, i, budget, upper, workers)
    if route == "search":
        return threshold_search(space, W, i, upper, budget)
    raise ValueError(f"unknown route {route!r}")


# -- greedy level sets ------------------------------------------------------------------


@dataclass
class Level:
    value: int
    spans: list[np.ndarray]  # sorted element indices of each subspace
    bases: list[tuple[int, ...]]
    parents: list[int]  # index into the previous level


def greedy_levels(space: VectorSpace, W, depth: int, budget: Budget | None = None,
                  cap: int = DEFAULT_LEVEL_CAP) -> list[Level]:
    """All greedy subspaces of dimensions 1..depth.

    Level j holds every j-dimensional subspace that contains some member of
    level j-1 and attains the largest minimum weight among such extensions.
    """
    W = np.asarray(W, dtype=np.int64)
    b = as_budget(budget)
    big = np.iinfo(np.int64).max
    levels = [Level(big, [np.zeros(1, dtype=np.int64)], [()], [-1])]
    all_idx = np.arange(space.size, dtype=np.int64)
    orbit = space.orbit_min()
    for _ in range(depth):
        prev = levels[-1]
        best = -1
        found: dict[bytes, tuple] = {}
        for pi, (S, basis) in enumerate(zip(prev.spans, prev.bases)):
            b.charge(space.size * S.size, "greedy level extension")
            cos = space.add(all_idx[:, None], S[None, :])  # row y: the coset y + S
            cmin = W[cos].min(axis=1)
            cmin[S] = -1  # y inside S does not extend
            rep = orbit[cos].min(axis=1)
            ok = (rep == all_idx) & (cmin >= 0)
            vals = np.minimum(cmin, prev.value)
            vals[~ok] = -1
            top = int(vals.max())
            if top < best:
                continue
            if top > best:
                best = top
                found = {}
            for y in np.flatnonzero(vals == top):
                y = int(y)
                layer = space.add(space.smul_table()[1:, y][:, None], S[None, :]).ravel() if space.q > 2 else S ^ y
                span = np.sort(np.concatenate([S, layer]))
                key = span.tobytes()
                if key not in found:
                    found[key] = (span, basis + (y,), pi)
                    if len(found) > cap:
                        raise LevelSetOverflow(f"more than {cap} greedy subspaces at dimension {len(levels)}")
        entries = list(found.values())
        levels.append(Level(best, [e[0] for e in entries], [e[1] for e in entries], [e[2] for e in entries]))
    return levels[1:]


def greedy_chain(levels: list[Level]) -> list[tuple[int, ...]]:
    """A nested chain of greedy subspaces (bases of the first-found top member)."""
    chain = []
    j = 0
    for lvl in reversed(levels):
        chain.append(lvl.bases[j])
        j = lvl.parents[j]
    return chain[::-1]
