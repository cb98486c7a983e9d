"""Code distances and the invariants built around them.

Indices follow the usual 1-based convention: ``alpha[i]`` is the best
minimum distance of an i-dimensional subcode (i <= k) or supercode
(i >= k) of C. Dimensions are always counted over the base field F_q.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .budget import Budget, as_budget
from .code import (
    HAMMING,
    RANK,
    WEIGHT_TABLE_LIMIT,
    AmbientSpace,
    LinearCode,
    ambient_weight_table,
    extend_code,
    min_distance,
    sld_set,
)
from .errors import (
    AmbientMismatch,
    BudgetExceeded,
    NotABasis,
    NotApplicable,
    NotInvertible,
    RankDeficient,
    RouteDisagreement,
)
from .field import Field
from .linalg import (
    VectorSpace,
    as_matrix,
    combine,
    enumerate_supercodes,
    gaussian_binomial,
    rank,
    row_basis,
)
from .search import DEFAULT_LEVEL_CAP, greedy_chain, greedy_levels, max_min_subspace

CROSSCHECK_LIMIT = 2 * 10**6


# -- Singleton-type ceilings ------------------------------------------------------------


def _rank_dims(m: int, n: int) -> tuple[int, int]:
    """(rows, cols) with cols <= rows; rank weight is transpose invariant."""
    return max(m, n), min(m, n)


def _sumrank_allows(blocks, i: int, d: int) -> bool:
    """Whether the sum-rank Singleton bound admits an i-dim code of distance d."""
    ordered = sorted((_rank_dims(m, n) for m, n in blocks), key=lambda b: -b[0])
    rest = d - 1
    for j, (m, n) in enumerate(ordered):
        if rest < n:
            tail = sum(mm * nn for mm, nn in ordered[j:])
            return i <= tail - m * rest
        rest -= n
    return False


def singleton_ceiling(ambient: AmbientSpace, i: int) -> int:
    """Largest minimum distance an i-dimensional code in the ambient may have."""
    if ambient.metric == HAMMING:
        return ambient.N - i + 1
    if ambient.metric == RANK:
        m, n = _rank_dims(*ambient.shape)
        return n - math.ceil(i / m) + 1
    d = ambient.max_weight
    while d > 1 and not _sumrank_allows(ambient.blocks, i, d):
        d -= 1
    return d


def rank_ceiling_floor_form(ambient: AmbientSpace, i: int) -> int:
    """The per-index rank bound written with floor(i/m), capped at n."""
    m, n = _rank_dims(*ambient.shape)
    return min(n - i // m + 1, n)


@dataclass
class SingletonProfile:
    bounds: list[int]  # effective ceiling for i = 1..N
    floor_form: list[int] | None  # rank metric only
    flags: dict[str, bool]
    notes: list[str]


def singleton_profile(C: LinearCode, budget: Budget | None = None) -> SingletonProfile:
    amb = C.ambient
    bounds = [singleton_ceiling(amb, i) for i in range(1, C.N + 1)]
    flags = {"is_MDS": False, "is_MRD": False, "is_QMRD": False, "is_MSRD": False}
    notes = []
    floor_form = None
    meets = C.k >= 1 and min_distance(C, budget) == singleton_ceiling(amb, C.k)
    if amb.metric == HAMMING:
        flags["is_MDS"] = meets
    elif amb.metric == RANK:
        m, _ = _rank_dims(*amb.shape)
        flags["is_MRD"] = meets and C.k % m == 0
        flags["is_QMRD"] = meets and C.k % m != 0
        floor_form = [rank_ceiling_floor_form(amb, i) for i in range(1, C.N + 1)]
        if floor_form != bounds:
            notes.append("floor-form rank bound differs from the ceil-form bound; ceil form used")
    else:
        flags["is_MSRD"] = meets
    return SingletonProfile(bounds, floor_form, flags, notes)


# -- weights over the coefficient space and the quotient V/C ---------------------------


def _cache(C: LinearCode) -> dict:
    if not hasattr(C, "_inv_cache"):
        C._inv_cache = {}
    return C._inv_cache


def quotient_space(C: LinearCode) -> VectorSpace:
    return VectorSpace(C.field, C.N - C.k)


def quotient_index(C: LinearCode, V) -> np.ndarray:
    """Index in F_q^(N-k) of the class of each vector modulo C (non-pivot coordinates)."""
    V = as_matrix(V, C.N)
    if C.k:
        V = C.field.sub(V, combine(C.field, V[:, C.pivots], C.gen))
    return quotient_space(C).to_index(V[:, C.complement])


def quotient_lift(C: LinearCode, idx) -> np.ndarray:
    """Coset representatives supported on the non-pivot coordinates."""
    idx = np.atleast_1d(np.asarray(idx, dtype=np.int64))
    out = np.zeros((idx.size, C.N), dtype=np.int64)
    out[:, C.complement] = quotient_space(C).from_index(idx)
    return out


def _hamming_coset_weights(C: LinearCode, budget: Budget) -> np.ndarray:
    f = C.field
    size = f.q ** (C.N - C.k)
    out = np.full(size, -1, dtype=np.int64)
    out[0] = 0
    left = size - 1
    nz = np.arange(1, f.q, dtype=np.int64)
    for w in range(1, C.N + 1):
        if left == 0:
            break
        supports = np.array(list(itertools.combinations(range(C.N), w)), dtype=np.int64)
        vals = np.array(list(itertools.product(nz, repeat=w)), dtype=np.int64)
        budget.charge(len(supports) * len(vals), "coset leader scan")
        step = max(1, (1 << 16) // len(vals))
        for s in range(0, len(supports), step):
            sup = supports[s : s + step]
            V = np.zeros((len(sup), len(vals), C.N), dtype=np.int64)
            rows = np.arange(len(sup))[:, None, None]
            cols = np.arange(len(vals))[None, :, None]
            V[rows, cols, sup[:, None, :]] = vals[None, :, :]
            idx = quotient_index(C, V.reshape(-1, C.N))
            new = np.unique(idx[out[idx] < 0])
            out[new] = w
            left -= new.size
            if left == 0:
                break
    return out


def _table_coset_weights(C: LinearCode, budget: Budget) -> np.ndarray:
    size_v = C.q**C.N
    if size_v > WEIGHT_TABLE_LIMIT:
        raise BudgetExceeded(size_v, WEIGHT_TABLE_LIMIT, "coset weights need the ambient weight table")
    budget.charge(size_v, "coset weight scan")
    table = ambient_weight_table(C.field, C.ambient).astype(np.int64)
    out = np.full(C.q ** (C.N - C.k), C.ambient.max_weight + 1, dtype=np.int64)
    space = VectorSpace(C.field, C.N)
    step = 1 << 16
    for s in range(0, size_v, step):
        idx = np.arange(s, min(size_v, s + step), dtype=np.int64)
        np.minimum.at(out, quotient_index(C, space.from_index(idx)), table[idx])
    return out


def coset_weights(C: LinearCode, budget: Budget | None = None) -> np.ndarray:
    """Minimum weight of each coset of C, indexed by the quotient coordinates."""
    cache = _cache(C)
    b = as_budget(budget)
    if "coset" not in cache:
        before = b.spent
        if C.ambient.metric == HAMMING:
            cache["coset"] = _hamming_coset_weights(C, b)
        else:
            cache["coset"] = _table_coset_weights(C, b)
        cache["coset_cost"] = b.spent - before
    else:
        # replay the original charge so accounting does not depend on cache state
        b.charge(cache["coset_cost"], "coset weights")
    return cache["coset"]


def _dmin(C: LinearCode, budget: Budget | None) -> int:
    """d_min, or the largest possible weight for the zero code (no constraint)."""
    if C.k == 0:
        return C.ambient.max_weight
    return int(C.weight_table(budget)[1:].min())


def covering_radius(C: LinearCode, budget: Budget | None = None) -> int:
    return int(coset_weights(C, budget).max())


def _subcode_witness(C: LinearCode, basis) -> np.ndarray:
    coeffs = C.space.from_index(np.array(basis, dtype=np.int64))
    return row_basis(C.field, combine(C.field, coeffs, C.gen))


def _supercode_witness(C: LinearCode, basis) -> np.ndarray:
    lifts = quotient_lift(C, np.array(basis, dtype=np.int64)) if len(basis) else np.zeros((0, C.N), dtype=np.int64)
    return row_basis(C.field, np.vstack([C.gen, lifts]))


# -- code distances ----------------------------------------------------------------------


def _check_index(C: LinearCode, i: int, lo: int, hi: int):
    if not lo <= i <= hi:
        raise ValueError(f"index {i} outside [{lo}, {hi}]")


def subcode_distance(C: LinearCode, i: int, budget: Budget | None = None, route: str = "auto",
                     upper: int | None = None, workers: int = 1) -> tuple[int, np.ndarray]:
    """alpha_i for 1 <= i <= k, with an optimal i-dimensional subcode."""
    _check_index(C, i, 1, C.k)
    b = as_budget(budget)
    W = C.weight_table(b)
    cap = singleton_ceiling(C.ambient, i)
    upper = cap if upper is None else min(upper, cap)
    res = max_min_subspace(C.space, W, i, b, upper=upper, route=route, workers=workers)
    return res.value, _subcode_witness(C, res.basis)


def _quotient_weights(C: LinearCode, budget: Budget, capped: bool) -> np.ndarray:
    W = coset_weights(C, budget)
    return np.minimum(W, _dmin(C, budget)) if capped else W


def supercode_distance(C: LinearCode, i: int, budget: Budget | None = None, route: str = "auto",
                       upper: int | None = None, workers: int = 1) -> tuple[int, np.ndarray]:
    """alpha_i for k <= i <= N, with an optimal i-dimensional supercode.

    ``route="direct"`` enumerates every supercode; other routes work on the
    quotient V/C with coset weights capped at d_min(C).
    """
    _check_index(C, i, max(C.k, 1), C.N)
    b = as_budget(budget)
    if route == "direct":
        return supercode_distance_direct(C, i, b)
    if i == C.k:
        return _dmin(C, b), C.gen.copy()
    Wq = _quotient_weights(C, b, capped=True)
    cap = singleton_ceiling(C.ambient, i)
    upper = cap if upper is None else min(upper, cap)
    res = max_min_subspace(quotient_space(C), Wq, i - C.k, b, upper=upper, route=route, workers=workers)
    return res.value, _supercode_witness(C, res.basis)


def code_weights(field: Field, ambient: AmbientSpace, gen, budget: Budget | None = None) -> np.ndarray:
    """Weights of every element of the row space of ``gen`` (which must be a basis)."""
    gen = as_matrix(gen, ambient.N)
    r = gen.shape[0]
    size = field.q**r
    as_budget(budget).charge(size, "codeword weights")
    coeffs = VectorSpace(field, r).from_index(np.arange(size, dtype=np.int64))
    words = combine(field, coeffs, gen)
    if field.q**ambient.N <= WEIGHT_TABLE_LIMIT and ambient.metric != HAMMING:
        return ambient_weight_table(field, ambient)[VectorSpace(field, ambient.N).to_index(words)].astype(np.int64)
    return ambient.weights(field, words)


def supercode_distance_direct(C: LinearCode, i: int, budget: Budget | None = None) -> tuple[int, np.ndarray]:
    """Reference route: d_min of every i-dimensional supercode, one at a time."""
    b = as_budget(budget)
    best, wit = -1, None
    for D in enumerate_supercodes(C.field, C.gen if C.k else np.zeros((0, C.N), dtype=np.int64), i, b):
        d = int(code_weights(C.field, C.ambient, D, b)[1:].min())
        if d > best:
            best, wit = d, D
    return best, row_basis(C.field, wit)


def generalized_radius(C: LinearCode, i: int, budget: Budget | None = None, route: str = "auto",
                       workers: int = 1) -> int:
    """rho_i: max over i-dim D meeting C trivially of min weight in (C+D) minus C."""
    _check_index(C, i, 1, C.N - C.k)
    b = as_budget(budget)
    Wq = _quotient_weights(C, b, capped=False)
    return max_min_subspace(quotient_space(C), Wq, i, b, route=route, workers=workers).value


def supercode_via_radii(C: LinearCode, i: int, budget: Budget | None = None, route: str = "auto") -> int:
    """min(d_min(C), rho_{i-k}(C))."""
    _check_index(C, i, C.k + 1, C.N)
    b = as_budget(budget)
    return min(_dmin(C, b), generalized_radius(C, i - C.k, b, route=route))


def maximality_degree(C: LinearCode, budget: Budget | None = None) -> int:
    """mu(C) = d_min(C) - alpha_{k+1}(C); defined for 0 != C != V."""
    if C.k == 0 or C.k == C.N:
        raise NotApplicable("maximality degree needs 0 != C != V")
    b = as_budget(budget)
    d = _dmin(C, b)
    return d - min(d, covering_radius(C, b))


def is_maximal(C: LinearCode, budget: Budget | None = None) -> bool:
    if C.k == 0:
        return True
    if C.k == C.N:
        return True
    return maximality_degree(C, budget) > 0


# -- profiles ---------------------------------------------------------------------------


@dataclass
class InvariantProfile:
    q: int
    metric: str
    N: int
    k: int
    alpha: dict[int, int] = dc_field(default_factory=dict)
    witnesses: dict[int, np.ndarray] = dc_field(default_factory=dict)
    routes: dict[int, str] = dc_field(default_factory=dict)
    skipped: dict[int, str] = dc_field(default_factory=dict)
    filled: dict[int, str] = dc_field(default_factory=dict)
    crosschecked: list[int] = dc_field(default_factory=list)
    spent: int = 0

    def sequence(self, lo: int = 1, hi: int | None = None) -> list[int | None]:
        hi = self.N if hi is None else hi
        return [self.alpha.get(i) for i in range(lo, hi + 1)]


def distance_profile(C: LinearCode, indices=None, budget: int | None = None, route: str = "auto",
                     workers: int = 1, crosscheck: bool = True) -> InvariantProfile:
    """alpha_i for every requested index (default 1..N).

    Each index runs under its own budget of ``budget`` weight evaluations; an
    index that does not fit is recorded in ``skipped`` and the rest still run.
    A skipped index whose computed neighbours agree is filled in from
    monotonicity and listed in ``filled``. Supercode indices also run the
    direct enumeration when it is small and the two results must agree.
    """
    lo_default = 1
    idx = list(range(lo_default, C.N + 1)) if indices is None else sorted(set(indices))
    prof = InvariantProfile(C.q, C.ambient.metric, C.N, C.k)
    limit = as_budget(budget).limit
    prev = None
    for i in idx:
        if not 1 <= i <= C.N:
            raise ValueError(f"index {i} outside [1, {C.N}]")
        b = Budget(limit)
        upper = prev if (prev is not None and prof.alpha.get(i - 1) is not None) else None
        try:
            if i <= C.k:
                val, wit = subcode_distance(C, i, b, route=route, upper=upper, workers=workers)
                prof.routes[i] = "subcode"
            else:
                val, wit = supercode_distance(C, i, b, route=route, upper=upper, workers=workers)
                prof.routes[i] = "radii"
                cost = gaussian_binomial(C.N - C.k, i - C.k, C.q) * C.q**i
                if crosscheck and cost <= min(limit // 2, CROSSCHECK_LIMIT):
                    direct, _ = supercode_distance_direct(C, i, Budget(limit))
                    if direct != val:
                        raise RouteDisagreement(f"alpha_{i}: radii route {val}, direct route {direct}")
                    prof.crosschecked.append(i)
        except BudgetExceeded as exc:
            prof.skipped[i] = str(exc)
            prof.spent += b.spent
            prev = None
            continue
        prof.alpha[i] = int(val)
        prof.witnesses[i] = wit
        prof.spent += b.spent
        prev = int(val)
    for i in list(prof.skipped):
        a, c = prof.alpha.get(i - 1), prof.alpha.get(i + 1)
        if a is not None and c is not None and a == c:
            prof.alpha[i] = a
            prof.filled[i] = f"alpha_{i - 1} = alpha_{i + 1} = {a} and the sequence is non-increasing"
    return prof


@dataclass
class GreedyChain:
    """Nested generators D_1 < D_2 < ... < D_N with D_k = C."""

    generators: list[np.ndarray]


def _greedy_sub(C: LinearCode, b: Budget, cap: int):
    return greedy_levels(C.space, C.weight_table(b), C.k, b, cap)


def greedy_profile(C: LinearCode, budget: Budget | None = None,
                   cap: int = DEFAULT_LEVEL_CAP) -> tuple[list[int], GreedyChain]:
    """Greedy code distances alpha^g_1..alpha^g_N and one greedy chain."""
    b = as_budget(budget)
    gens = []
    values = []
    if C.k:
        levels = _greedy_sub(C, b, cap)
        values += [lvl.value for lvl in levels]
        chain = greedy_chain(levels)
        gens += [_subcode_witness(C, basis) for basis in chain]
    if C.N > C.k:
        Wq = _quotient_weights(C, b, capped=True)
        levels = greedy_levels(quotient_space(C), Wq, C.N - C.k, b, cap)
        values += [lvl.value for lvl in levels]
        gens += [_supercode_witness(C, basis) for basis in greedy_chain(levels)]
    return values, GreedyChain(gens)


# -- partial distances and the exponent ------------------------------------------------------


@dataclass
class PartialDistanceProfile:
    matrix: np.ndarray
    deltas: list[int]
    exponent: float | None
    ceiling: float | None


def _log_mean(values, n: int) -> float:
    if n == 1:
        return 0.0
    return sum(math.log(v) for v in values) / (n * math.log(n))


def partial_distances(field: Field, A, ambient: AmbientSpace | None = None,
                      budget: Budget | None = None) -> PartialDistanceProfile:
    """delta_i = min weight over a_i + <a_1, ..., a_{i-1}>."""
    A = as_matrix(A)
    k, n = A.shape
    if rank(field, A) < k:
        raise RankDeficient("rows of the matrix are linearly dependent")
    ambient = AmbientSpace.hamming(n) if ambient is None else ambient
    b = as_budget(budget)
    deltas = []
    for i in range(k):
        b.charge(field.q**i, "partial distance coset scan")
        coeffs = VectorSpace(field, i).from_index(np.arange(field.q**i, dtype=np.int64))
        coset = field.add(A[i][None, :], combine(field, coeffs, A[:i])) if i else A[i][None, :]
        deltas.append(int(ambient.weights(field, coset).min()))
    exp = ceil = None
    if k == n:
        exp = _log_mean(deltas, n)
        ceil = _log_mean(range(1, n + 1), n)
    return PartialDistanceProfile(A, deltas, exp, ceil)


def exponent(field: Field, A, budget: Budget | None = None) -> tuple[float, float]:
    """(E(A), Singleton ceiling on E for n x n matrices over F_q)."""
    A = as_matrix(A)
    if A.shape[0] != A.shape[1] or rank(field, A) < A.shape[0]:
        raise NotInvertible("exponent needs a square invertible matrix")
    prof = partial_distances(field, A, budget=budget)
    return prof.exponent, prof.ceiling


def greedy_generator(C: LinearCode, budget: Budget | None = None, cap: int = DEFAULT_LEVEL_CAP) -> np.ndarray:
    """Generator whose i-th row has weight alpha^g_i and whose partial distances are alpha^g.

    Starts from a greedy chain and repairs it position by position: row i is
    replaced by the lexicographically smallest minimum-weight vector of
    D_i outside D_{i-1}; if every minimum-weight vector lies in D_{i-1}, rows
    i-1 and i are swapped and the repair continues one position lower.
    """
    b = as_budget(budget)
    if C.k == 0:
        return np.zeros((0, C.N), dtype=np.int64)
    W = C.weight_table(b)
    space = C.space
    basis = list(greedy_chain(_greedy_sub(C, b, cap))[-1])
    for target in range(C.k):
        pos = target
        while True:
            inner = space.span(np.array(basis[:pos], dtype=np.int64))
            outer = space.span(np.array(basis[: pos + 1], dtype=np.int64))
            b.charge(outer.size, "greedy generator repair")
            d = W[outer[1:]].min()
            cand = np.setdiff1d(outer, inner)
            cand = cand[W[cand] == d]
            if cand.size:
                words = C.codewords(cand)
                basis[pos] = int(cand[np.lexsort(words.T[::-1])[0]])
                break
            basis[pos - 1], basis[pos] = basis[pos], basis[pos - 1]
            pos -= 1
    return C.codewords(np.array(basis, dtype=np.int64))


@dataclass
class GreedyLowerBound:
    order: list[int]  # basis rows sorted by weight, heaviest first
    prefix: list[int]  # d_min of each prefix span
    bound: list[int]  # valid lower bound on alpha^g_i


def greedy_lower_bound(C: LinearCode, basis, budget: Budget | None = None) -> GreedyLowerBound:
    """Lower bounds on the greedy distances from a basis of C.

    The span of the whole weight-sorted basis is C, so d_min(C) bounds every
    alpha^g_i. Prefix spans are reported too but are not bounds in general:
    <110, 011> has d_min 2 while alpha^g_2(F_2^3) = 1.
    """
    B = as_matrix(basis, C.N)
    if B.shape[0] != C.k or rank(C.field, B) != C.k or not C.contains(B).all():
        raise NotABasis("rows do not form a basis of the code")
    b = as_budget(budget)
    w = C.weights_of(B)
    order = sorted(range(C.k), key=lambda r: -int(w[r]))
    prefix = []
    for j in range(1, C.k + 1):
        sub = row_basis(C.field, B[order[:j]])
        prefix.append(int(code_weights(C.field, C.ambient, sub, b)[1:].min()))
    return GreedyLowerBound(order, prefix, [prefix[-1]] * C.k)


# -- extension to larger fields --------------------------------------------------------------


def code_distance(C: LinearCode, i: int, budget: Budget | None = None, route: str = "auto",
                  workers: int = 1) -> int:
    if i <= C.k:
        return subcode_distance(C, i, budget, route=route, workers=workers)[0]
    return supercode_distance(C, i, budget, route=route, workers=workers)[0]


def extended_distance(C: LinearCode, degree: int, i: int, budget: Budget | None = None,
                      route: str = "auto") -> int:
    """alpha_i of C extended to F_{q^degree}."""
    return code_distance(extend_code(C, degree), i, budget, route=route)


@dataclass
class AsymptoticResult:
    index: int
    value: int
    stabilized_at: int
    constant_tail: bool
    values: dict[int, int]
    degree_max: int
    certified: bool = False

    @property
    def marker(self) -> str:
        return f"uncertified, swept l <= {self.degree_max}"


def asymptotic_distance(C: LinearCode, i: int, degree_max: int, budget: Budget | None = None) -> AsymptoticResult:
    """max of alpha_i over extensions of degree 1..degree_max; never certified."""
    if degree_max < 1:
        raise ValueError("degree_max must be at least 1")
    values = {}
    for ell in range(1, degree_max + 1):
        values[ell] = extended_distance(C, ell, i, budget)
    best = max(values.values())
    first = min(ell for ell, v in values.items() if v == best)
    tail = list(values.values())[-math.ceil(degree_max / 2):]
    return AsymptoticResult(i, best, first, len(set(tail)) == 1, values, degree_max)


def generalized_covering_radius(C: LinearCode, degree: int, budget: Budget | None = None) -> int:
    """Covering radius of C extended to F_{q^degree}."""
    return covering_radius(extend_code(C, degree), budget)


# -- comparison ----------------------------------------------------------------------------


@dataclass
class Comparison:
    rows: list[tuple[str, object, object]]
    first_difference: str | None

    @property
    def inequivalent(self) -> bool:
        return self.first_difference is not None

    @property
    def verdict(self) -> str:
        if self.inequivalent:
            return f"provably inequivalent ({self.first_difference} differs)"
        return "indistinguishable by these invariants"


def compare_codes(A: LinearCode, B: LinearCode, indices=None, budget: int | None = None,
                  greedy: bool = False, radii: bool = False, mu: bool = False, sld: bool = False,
                  asymptotic: int | None = None) -> Comparison:
    """Side-by-side invariants; any difference certifies the codes are inequivalent."""
    if A.ambient != B.ambient or A.field != B.field:
        raise AmbientMismatch("codes live in different ambient spaces")
    rows: list[tuple[str, object, object]] = []
    rows.append(("dimension", A.k, B.k))
    pa = distance_profile(A, indices, budget)
    pb = distance_profile(B, indices, budget)
    for i in sorted(set(pa.alpha) | set(pb.alpha) | set(pa.skipped) | set(pb.skipped)):
        rows.append((f"alpha_{i}", pa.alpha.get(i), pb.alpha.get(i)))
    if greedy:
        ga, _ = greedy_profile(A, Budget(budget))
        gb, _ = greedy_profile(B, Budget(budget))
        for i, (x, y) in enumerate(zip(ga, gb), 1):
            rows.append((f"greedy_{i}", x, y))
    if radii:
        for i in range(1, A.N - A.k + 1):
            rows.append((f"rho_{i}", generalized_radius(A, i, Budget(budget)), generalized_radius(B, i, Budget(budget))))
    if mu and 0 < A.k < A.N:
        rows.append(("mu", maximality_degree(A, Budget(budget)), maximality_degree(B, Budget(budget))))
    if sld and A.ambient.metric == HAMMING:
        rows.append(("SLD", sorted(sld_set(A, Budget(budget))), sorted(sld_set(B, Budget(budget)))))
    if asymptotic:
        for i in range(1, A.N + 1):
            ra = asymptotic_distance(A, i, asymptotic, Budget(budget))
            rb = asymptotic_distance(B, i, asymptotic, Budget(budget))
            rows.append((f"alpha_inf_{i}", ra.value, rb.value))
    first = next((name for name, x, y in rows if x is not None and y is not None and x != y), None)
    return Comparison(rows, first)


__all__ = [
    "AsymptoticResult",
    "Comparison",
    "GreedyChain",
    "GreedyLowerBound",
    "InvariantProfile",
    "PartialDistanceProfile",
    "SingletonProfile",
    "asymptotic_distance",
    "code_distance",
    "compare_codes",
    "coset_weights",
    "covering_radius",
    "distance_profile",
    "exponent",
    "extended_distance",
    "generalized_covering_radius",
    "generalized_radius",
    "greedy_generator",
    "greedy_lower_bound",
    "greedy_profile",
    "is_maximal",
    "maximality_degree",
    "partial_distances",
    "singleton_ceiling",
    "singleton_profile",
    "subcode_distance",
    "supercode_distance",
    "supercode_distance_direct",
    "supercode_via_radii",
]
