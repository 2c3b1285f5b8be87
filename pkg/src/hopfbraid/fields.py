"""Exact scalar fields: rationals, prime fields and cyclotomic fields.

Every field is a small immutable descriptor object.  Elements support the
ordinary Python arithmetic operators, so numpy ``dtype=object`` arrays of
elements behave like matrices over the field.

* ``QQ`` elements are ``gmpy2.mpq`` values (reduced, positive denominator).
* ``GF(p)`` elements are :class:`Mod` residues in ``[0, p)``.
* ``Cyclotomic(m)`` elements are :class:`Cyc` coefficient vectors over QQ,
  reduced modulo the m-th cyclotomic polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq, mpz

from .errors import FieldMismatch, ParseError

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "Cyclotomic",
    "QQ",
    "GF",
    "Mod",
    "Cyc",
    "cyclotomic_polynomial",
    "field_from_descriptor",
]

_MPQ = type(mpq(0))
_MPZ = type(mpz(0))


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _as_rational(x):
    """Coerce an int / Fraction / mpq into mpq, or return None."""
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, (int, _MPZ)) and not isinstance(x, bool):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return None


class Field:
    """Common interface of the three field kinds."""

    kind = None
    param = None
    characteristic = 0

    def __eq__(self, other):
        return isinstance(other, Field) and (self.kind, self.param) == (other.kind, other.param)

    def __hash__(self):
        return hash((self.kind, self.param))

    def __repr__(self):
        return str(self)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def sum(self, items):
        total = self.zero
        for x in items:
            total = total + x
        return total

    def descriptor(self):
        """JSON-ready description used by the file format."""
        raise NotImplementedError


class Rationals(Field):
    kind = "rationals"

    def __str__(self):
        return "QQ"

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        q = _as_rational(x)
        if q is None:
            raise FieldMismatch(f"cannot coerce {x!r} into QQ")
        return q

    def contains(self, x):
        return isinstance(x, _MPQ)

    def parse(self, text):
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ParseError(f"not a rational number: {text!r}")
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return mpq(int(num), int(den))
        return mpq(int(text))

    def format(self, x):
        x = self(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def inverse(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def random(self, rng, bound=5):
        return mpq(rng.randint(-bound, bound), rng.randint(1, bound))

    def descriptor(self):
        return {"type": "Q"}


QQ = Rationals()


class Mod:
    """Residue class modulo a prime."""

    __slots__ = ("v", "field")

    def __init__(self, v, field):
        self.v = v % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.field.p != self.field.p:
                raise FieldMismatch(f"GF({self.field.p}) vs GF({other.field.p})")
            return other.v
        if isinstance(other, (int, _MPZ)) and not isinstance(other, bool):
            return int(other) % self.field.p
        q = _as_rational(other)
        if q is not None:
            return self.field(q).v
        raise FieldMismatch(f"cannot combine GF({self.field.p}) with {other!r}")

    def __add__(self, other):
        try:
            return Mod(self.v + self._coerce(other), self.field)
        except FieldMismatch:
            return NotImplemented if not isinstance(other, (Mod, Cyc)) else _raise(other, self)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod(self.v - self._coerce(other), self.field)

    def __rsub__(self, other):
        return Mod(self._coerce(other) - self.v, self.field)

    def __mul__(self, other):
        return Mod(self.v * self._coerce(other), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.field)

    def __pos__(self):
        return self

    def __truediv__(self, other):
        return self * self.field.inverse(Mod(self._coerce(other), self.field))

    def __rtruediv__(self, other):
        return Mod(self._coerce(other), self.field) * self.field.inverse(self)

    def __pow__(self, k):
        if k < 0:
            return self.field.inverse(self) ** (-k)
        return Mod(pow(self.v, k, self.field.p), self.field)

    def __eq__(self, other):
        try:
            return self.v == self._coerce(other)
        except FieldMismatch:
            return False

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.field.p})"

    __str__ = lambda self: str(self.v)  # noqa: E731


def _raise(a, b):
    raise FieldMismatch(f"cannot combine {a!r} with {b!r}")


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.param = p
        self.characteristic = p

    def __str__(self):
        return f"GF({self.p})"

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.field.p != self.p:
                raise FieldMismatch(f"GF({x.field.p}) element in GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (int, _MPZ)) and not isinstance(x, bool):
            return Mod(int(x), self)
        q = _as_rational(x)
        if q is None:
            raise FieldMismatch(f"cannot coerce {x!r} into GF({self.p})")
        den = int(q.denominator)
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return Mod(int(q.numerator) * pow(den, -1, self.p), self)

    def contains(self, x):
        return isinstance(x, Mod) and x.field.p == self.p

    def parse(self, text):
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ParseError(f"not a residue: {text!r}")
        return Mod(int(text), self)

    def format(self, x):
        return str(self(x).v)

    def inverse(self, x):
        x = self(x)
        if x.v == 0:
            raise ZeroDivisionError("inverse of zero")
        return Mod(pow(x.v, -1, self.p), self)

    def random(self, rng, bound=None):
        return Mod(rng.randrange(self.p), self)

    def descriptor(self):
        return {"type": "GF", "p": self.p}


@lru_cache(maxsize=None)
def _prime_field(p):
    return PrimeField(p)


def GF(p):
    """The prime field with p elements (cached, so descriptors are shared)."""
    return _prime_field(p)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients (constant term first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_divide(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _exact_divide(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1] // den[-1]
        out[k] = coeff
        for i, c in enumerate(den):
            num[k + i] -= coeff * c
    assert not any(num), "inexact cyclotomic division"
    return out


class Cyc:
    """Element of a cyclotomic field as a coefficient tuple in powers of zeta."""

    __slots__ = ("c", "field")

    def __init__(self, coeffs, field):
        self.c = coeffs
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.field.m != self.field.m:
                raise FieldMismatch(f"Cyclotomic({self.field.m}) vs Cyclotomic({other.field.m})")
            return other.c
        q = _as_rational(other)
        if q is None:
            raise FieldMismatch(f"cannot combine Cyclotomic({self.field.m}) with {other!r}")
        return (q,) + self.field._zeros[1:]

    def __add__(self, other):
        o = self._coerce(other)
        return Cyc(tuple(a + b for a, b in zip(self.c, o)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Cyc(tuple(a - b for a, b in zip(self.c, o)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        return Cyc(tuple(b - a for a, b in zip(self.c, o)), self.field)

    def __neg__(self):
        return Cyc(tuple(-a for a in self.c), self.field)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Cyc):
            if other.field.m != self.field.m:
                raise FieldMismatch(f"Cyclotomic({self.field.m}) vs Cyclotomic({other.field.m})")
            return self.field._mul(self.c, other.c)
        q = _as_rational(other)
        if q is None:
            raise FieldMismatch(f"cannot combine Cyclotomic({self.field.m}) with {other!r}")
        return Cyc(tuple(a * q for a in self.c), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self.field.inverse(self.field(other))

    def __rtruediv__(self, other):
        return self.field(other) * self.field.inverse(self)

    def __pow__(self, k):
        if k < 0:
            return self.field.inverse(self) ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            return self.c == self._coerce(other)
        except FieldMismatch:
            return False

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return f"Cyc({self.field.format(self)}, m={self.field.m})"

    def __str__(self):
        return self.field.format(self)


class Cyclotomic(Field):
    """QQ(zeta_m), elements reduced modulo the m-th cyclotomic polynomial."""

    kind = "cyclotomic"

    def __init__(self, m):
        if m < 1:
            raise ValueError("m must be positive")
        self.m = m
        self.param = m
        self.phi = cyclotomic_polynomial(m)
        self.degree = len(self.phi) - 1
        self._zeros = (mpq(0),) * self.degree
        # x^k reduced mod phi for k < 2*degree - 1, stored sparsely
        red = []
        cur = [mpq(0)] * self.degree
        cur[0] = mpq(1)
        for k in range(max(2 * self.degree - 1, 1)):
            red.append([(i, c) for i, c in enumerate(cur) if c])
            cur = self._times_x(cur)
        self._red = red

    def _times_x(self, coeffs):
        top = coeffs[-1]
        shifted = [mpq(0)] + list(coeffs[:-1])
        if top:
            for i in range(self.degree):
                shifted[i] -= top * self.phi[i]
        return shifted

    def _mul(self, a, b):
        deg = self.degree
        conv = [mpq(0)] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        for k in range(deg, 2 * deg - 1):
            ck = conv[k]
            if ck:
                for i, c in self._red[k]:
                    out[i] += ck * c
        return Cyc(tuple(out), self)

    def __str__(self):
        return f"Cyclotomic({self.m})"

    def __call__(self, x):
        if isinstance(x, Cyc):
            if x.field.m != self.m:
                raise FieldMismatch(f"Cyclotomic({x.field.m}) element in Cyclotomic({self.m})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (list, tuple)):
            return self.from_coefficients(x)
        q = _as_rational(x)
        if q is None:
            raise FieldMismatch(f"cannot coerce {x!r} into Cyclotomic({self.m})")
        return Cyc((q,) + self._zeros[1:], self)

    def contains(self, x):
        return isinstance(x, Cyc) and x.field.m == self.m

    def from_coefficients(self, coeffs):
        """Element sum_k coeffs[k] zeta^k for a coefficient list of any length."""
        out = [mpq(0)] * self.degree
        cur = [mpq(0)] * self.degree
        cur[0] = mpq(1)
        for c in coeffs:
            c = QQ(c)
            if c:
                for i in range(self.degree):
                    out[i] += c * cur[i]
            cur = self._times_x(cur)
        return Cyc(tuple(out), self)

    def zeta(self, k=1):
        """zeta_m ** k (k may be negative)."""
        return self.from_coefficients([0] * (k % self.m) + [1])

    def parse(self, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            # plain rationals are accepted as constants
            return self(QQ.parse(text))
        body = text[1:-1].strip()
        parts = [p for p in body.split(",")] if body else []
        return self.from_coefficients([QQ.parse(p) for p in parts])

    def format(self, x):
        x = self(x)
        return "[" + ",".join(QQ.format(c) for c in x.c) + "]"

    def inverse(self, x):
        x = self(x)
        if not x:
            raise ZeroDivisionError("inverse of zero")
        deg = self.degree
        # solve (x * y) = 1 using the multiplication-by-x matrix
        cols = []
        basis = [mpq(0)] * deg
        for j in range(deg):
            e = list(basis)
            e[j] = mpq(1)
            cols.append(self._mul(x.c, tuple(e)).c)
        rows = [[cols[j][i] for j in range(deg)] + [mpq(1 if i == 0 else 0)] for i in range(deg)]
        for col in range(deg):
            piv = next(r for r in range(col, deg) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = 1 / rows[col][col]
            rows[col] = [v * inv for v in rows[col]]
            for r in range(deg):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return Cyc(tuple(rows[i][deg] for i in range(deg)), self)

    def random(self, rng, bound=5):
        return Cyc(tuple(QQ.random(rng, bound) for _ in range(self.degree)), self)

    def descriptor(self):
        return {"type": "Cyc", "m": self.m}


@lru_cache(maxsize=None)
def _cyclotomic(m):
    return Cyclotomic(m)


def cyclotomic(m):
    """Cached constructor so equal descriptors share reduction tables."""
    return _cyclotomic(m)


def field_from_descriptor(desc):
    """Inverse of ``Field.descriptor``; also accepts the kind names."""
    kind = desc.get("type")
    if kind in ("Q", "rationals"):
        return QQ
    if kind in ("GF", "prime-field"):
        return GF(int(desc["p"]))
    if kind in ("Cyc", "cyclotomic"):
        return cyclotomic(int(desc["m"]))
    raise ValueError(f"unknown field type {kind!r}")


def field_of(x):
    """Best-effort field of a scalar; plain ints and mpq are rational."""
    if isinstance(x, Mod):
        return x.field
    if isinstance(x, Cyc):
        return x.field
    if _as_rational(x) is not None:
        return QQ
    raise FieldMismatch(f"{x!r} is not a field element")

