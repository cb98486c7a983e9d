"""Arithmetic in small finite fields F_{p^e}.

Elements are encoded as integers in ``[0, q)``: the element
``sum(c_i * a**i)``, with ``a`` a root of the field's Conway polynomial, is
stored as ``sum(c_i * p**i)``. Every arithmetic method accepts Python ints or
numpy integer arrays and broadcasts like a numpy ufunc.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field
from importlib import resources

import numpy as np

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    IncompatibleFields,
    NoConwayPolynomial,
    NotPrime,
)

DEFAULT_MAX_ORDER = 2**20
LOG_TABLE_LIMIT = 2**16
ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def conway_table() -> dict[tuple[int, int], tuple[int, ...]]:
    """Bundled Conway polynomials keyed by ``(p, e)``, coefficients low to high."""
    text = resources.files("codedist").joinpath("data/conway.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        nums = [int(t) for t in line.split()]
        p, e, coeffs = nums[0], nums[1], tuple(nums[2:])
        table[(p, e)] = coeffs
    return table


# -- polynomials over F_p as coefficient lists, lowest degree first ----------


def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, b, p):
    """Remainder of ``a`` divided by ``b`` over F_p."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a = _poly_trim(a)
    return a


def is_irreducible(modulus, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(_poly_trim(modulus)) - 1
    for d in range(1, deg // 2 + 1):
        for tail in range(p**d):
            divisor = [(tail // p**i) % p for i in range(d)] + [1]
            if not poly_mod(modulus, divisor, p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class Field:
    """The finite field F_{p^e} built from the Conway polynomial for ``(p, e)``.

    Use :func:`field_new` rather than constructing directly; instances are
    cached and treated as immutable.
    """

    p: int
    e: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False)
    gen: int = dc_field(init=False)

    def __post_init__(self):
        p, e = self.p, self.e
        q = p**e
        object.__setattr__(self, "q", q)
        # the root of the modulus is the generator; for e == 1 it is -c_0
        gen = (-self.modulus[0]) % p if e == 1 else p
        object.__setattr__(self, "gen", gen)
        pw = p ** np.arange(e, dtype=np.int64)
        object.__setattr__(self, "_pw", pw)
        if q <= ADD_TABLE_LIMIT and p != 2 and e > 1:
            d = (np.arange(q)[:, None] // pw[None, :]) % p
            add = ((d[:, None, :] + d[None, :, :]) % p) @ pw
            object.__setattr__(self, "_add", add)
        else:
            object.__setattr__(self, "_add", None)
        if q <= LOG_TABLE_LIMIT:
            self._build_log_tables()
        else:
            object.__setattr__(self, "_exp", None)
            object.__setattr__(self, "_log", None)
            self._check_generator_order()

    # -- construction helpers ---------------------------------------------

    def _mul_by_gen_scalar(self, a: int) -> int:
        if self.e == 1:
            return a * self.gen % self.p
        p, e = self.p, self.e
        c = [(a // p**i) % p for i in range(e)]
        top = c[-1]
        c = [0] + c[:-1]
        if top:
            c = [(ci - top * mi) % p for ci, mi in zip(c, self.modulus[:e])]
        return sum(ci * p**i for i, ci in enumerate(c))

    def _build_log_tables(self):
        q = self.q
        exp = np.zeros(4 * q + 1, dtype=np.int64)
        log = np.full(q, 2 * q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            if i and x == 1:
                raise ValueError(f"generator of F_{q} has order {i}, not {q - 1}")
            exp[i] = x
            log[x] = i
            x = self._mul_by_gen_scalar(x)
        if x != 1 or np.any(log[1:] == 2 * q):
            raise ValueError(f"generator of F_{q} does not have order {q - 1}")
        exp[q - 1 : 2 * (q - 1)] = exp[: q - 1]
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    def _check_generator_order(self):
        for r in prime_factors(self.q - 1):
            if int(self.power(self.gen, (self.q - 1) // r)) == 1:
                raise ValueError(f"generator of F_{self.q} does not have order {self.q - 1}")

    # -- representation -----------------------------------------------------

    def __repr__(self):
        return f"Field({self.p}^{self.e})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __reduce__(self):
        return (field_new, (self.p, self.e, max(self.q, DEFAULT_MAX_ORDER)))

    @property
    def has_log_tables(self) -> bool:
        return self._exp is not None

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def digits(self, a) -> np.ndarray:
        """Coordinates over F_p, shape ``a.shape + (e,)``."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pw) % self.p

    def from_digits(self, d) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._pw

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a, b]
        return self.from_digits(self.digits(a) + self.digits(b))

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        return self.from_digits(-self.digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a * b) % self.p
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self.mul_poly(a, b)

    def mul_poly(self, a, b):
        """Schoolbook multiplication modulo the Conway polynomial.

        Used above the log-table limit and as an independent check on the
        table path.
        """
        p, e = self.p, self.e
        da = self.digits(a)
        db = self.digits(b)
        shape = np.broadcast_shapes(da.shape, db.shape)
        da = np.broadcast_to(da, shape)
        db = np.broadcast_to(db, shape)
        prod = np.zeros(shape[:-1] + (2 * e - 1,), dtype=np.int64)
        for i in range(e):
            for j in range(e):
                prod[..., i + j] += da[..., i] * db[..., j]
        prod %= p
        mod = self.modulus
        for d in range(2 * e - 2, e - 1, -1):
            top = prod[..., d].copy()
            prod[..., d] = 0
            for t in range(e):
                prod[..., d - e + t] = (prod[..., d - e + t] - top * mod[t]) % p
        return self.from_digits(prod[..., :e])

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        if self.e == 1:
            return self.power(a, self.p - 2)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.power(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n: int):
        """``a**n`` for a non-negative integer exponent."""
        a = np.asarray(a, dtype=np.int64)
        if n < 0:
            return self.power(self.inv(a), -n)
        if self._exp is not None:
            if n == 0:
                return np.ones_like(a)
            res = self._exp[(self._log[a] * n) % (self.q - 1)]
            return np.where(a == 0, 0, res)
        result = np.ones_like(a)
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def frobenius(self, a):
        return self.power(a, self.p)

    def gen_power(self, n: int) -> int:
        return int(self.power(self.gen, n % (self.q - 1)))

    def log(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("log of zero")
        if self._log is None:
            raise NotImplementedError("discrete log needs log tables")
        return self._log[a]


@functools.lru_cache(maxsize=None)
def field_new(p: int, e: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> Field:
    """Return the field F_{p^e} defined by the bundled Conway polynomial."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise DegreeTooLarge(f"extension degree must be positive, got {e}")
    if p**e > max_order:
        raise DegreeTooLarge(f"{p}^{e} exceeds the field size ceiling {max_order}")
    try:
        modulus = conway_table()[(p, e)]
    except KeyError:
        raise NoConwayPolynomial(f"no bundled Conway polynomial for p={p}, e={e}") from None
    if not is_irreducible(modulus, p):
        raise ValueError(f"Conway table entry for ({p},{e}) is reducible")
    return Field(p, e, modulus)


def GF(q: int) -> Field:
    """Field of order ``q`` (a prime power)."""
    for p in (2, 3, 5, 7, 11, 13):
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        if r == 1 and e:
            return field_new(p, e)
    if is_prime(q):
        return field_new(q, 1)
    raise NotPrime(f"{q} is not a prime power")


@dataclass(frozen=True)
class Embedding:
    """The ring homomorphism F_{p^a} -> F_{p^b}, a | b, sending the Conway
    generator of the source to ``target.gen ** ((p^b - 1)/(p^a - 1))``."""

    source: Field
    target: Field

    def __post_init__(self):
        s, t = self.source, self.target
        if s.p != t.p or t.e % s.e:
            raise IncompatibleFields(f"cannot embed {s} into {t}")

    @property
    def ratio(self) -> int:
        return (self.target.q - 1) // (self.source.q - 1)

    @property
    def image_of_gen(self) -> int:
        return self.target.gen_power(self.ratio)

    @functools.cached_property
    def table(self) -> np.ndarray:
        s, t = self.source, self.target
        out = np.zeros(s.q, dtype=np.int64)
        if s.has_log_tables and t.has_log_tables:
            i = np.arange(s.q - 1)
            out[s._exp[i]] = t._exp[(i * self.ratio) % (t.q - 1)]
            return out
        g = self.image_of_gen
        x = 1
        cur = s.gen_power(0)
        # walk the source's multiplicative group along powers of its generator
        for _ in range(s.q - 1):
            out[cur] = x
            cur = int(s.mul(cur, s.gen))
            x = int(self.target.mul(x, g))
        return out

    def __call__(self, a):
        return self.table[np.asarray(a, dtype=np.int64)]


def embed(a, source: Field, target: Field):
    """Image of ``a`` under the canonical embedding ``source -> target``."""
    return Embedding(source, target)(a)


def extension_field(base: Field, degree: int) -> Field:
    """F_{q^degree} for the base field F_q."""
    return field_new(base.p, base.e * degree)
