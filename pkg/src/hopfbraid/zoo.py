"""Concrete finite groups and Hopf algebras used as test substrates."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import RootOrderMismatch, UnsupportedSpec
from .fields import QQ, cyclotomic
from .hopf import HopfAlgebra, dual

__all__ = [
    "FiniteGroup",
    "make_group",
    "group_from_elements",
    "group_algebra",
    "dual_group_algebra",
    "taft",
    "sweedler",
    "group_stats",
    "GROUP_NAMES",
    "find_group_isomorphism",
    "group_algebra_map",
    "algebra_from_spec",
]

GROUP_NAMES = ("C2", "C3", "C4", "C6", "D4", "S3", "S4", "Q8", "C2xC2", "C2xC3")


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    cayley: tuple  # cayley[a][b] = index of a*b
    identity: int
    inverse: tuple
    labels: tuple

    @property
    def order(self):
        return len(self.cayley)

    def mul(self, a, b):
        return self.cayley[a][b]

    def inv(self, a):
        return self.inverse[a]

    def validate(self):
        n = self.order
        t = self.cayley
        for a in range(n):
            if sorted(t[a]) != list(range(n)):
                raise UnsupportedSpec(f"{self.name}: row {a} is not a permutation")
            if t[self.identity][a] != a or t[a][self.identity] != a:
                raise UnsupportedSpec(f"{self.name}: bad identity")
            if t[a][self.inverse[a]] != self.identity:
                raise UnsupportedSpec(f"{self.name}: bad inverse of {a}")
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise UnsupportedSpec(f"{self.name}: not associative at {(a, b, c)}")
        return self


def group_from_elements(name, elements, op, labels=None):
    """Cayley table of a group given as hashable elements and a product."""
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
    n = len(elements)
    ident = next(e for e in range(n) if all(table[e][a] == a for a in range(n)))
    inverse = tuple(next(b for b in range(n) if table[a][b] == ident) for a in range(n))
    labels = tuple(labels) if labels is not None else tuple(str(x) for x in elements)
    return FiniteGroup(name, table, ident, inverse, labels).validate()


def _cyclic(n):
    labels = ["e"] + [("a" if k == 1 else f"a^{k}") for k in range(1, n)]
    return group_from_elements(f"C{n}", range(n), lambda a, b: (a + b) % n, labels)


def _dihedral(n):
    # elements (k, s) meaning r^k s^s, with s r = r^{-1} s; order 2n
    elems = [(k, s) for s in (0, 1) for k in range(n)]

    def op(x, y):
        k1, s1 = x
        k2, s2 = y
        return ((k1 + (-k2 if s1 else k2)) % n, (s1 + s2) % 2)

    def label(x):
        k, s = x
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        out = r + ("s" if s else "")
        return out or "e"

    return group_from_elements(f"D{n}", elems, op, [label(x) for x in elems])


def _symmetric(n):
    if not 1 <= n <= 4:
        raise UnsupportedSpec(f"symmetric groups are supported up to S4, got S{n}")
    elems = sorted(permutations(range(n)))

    def op(p, q):  # (p q)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(n))

    labels = ["".join(str(i + 1) for i in p) for p in elems]
    return group_from_elements(f"S{n}", elems, op, labels)


def _quaternion8():
    # (sign, unit) with unit in 1,i,j,k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]

    def op(x, y):
        sign, unit = table[(x[1], y[1])]
        return (x[0] * y[0] * sign, unit)

    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return group_from_elements("Q8", elems, op, labels)


def _product(g1, g2):
    elems = [(a, b) for a in range(g1.order) for b in range(g2.order)]

    def op(x, y):
        return (g1.mul(x[0], y[0]), g2.mul(x[1], y[1]))

    labels = [f"({g1.labels[a]},{g2.labels[b]})" for a, b in elems]
    return group_from_elements(f"{g1.name}x{g2.name}", elems, op, labels)


@lru_cache(maxsize=None)
def make_group(spec):
    """Build a group from a name such as ``C3``, ``D4``, ``S3``, ``Q8`` or ``C2xC3``.

    ``Dn`` is the dihedral group of order ``2n``.
    """
    spec = spec.strip()
    if "x" in spec:
        parts = spec.split("x")
        group = make_group(parts[0])
        for part in parts[1:]:
            group = _product(group, make_group(part))
        return group
    m = re.fullmatch(r"([CDS])(\d+)|Q8", spec)
    if not m:
        raise UnsupportedSpec(f"unknown group {spec!r}")
    if spec == "Q8":
        return _quaternion8()
    kind, n = m.group(1), int(m.group(2))
    if kind == "C" and n >= 1:
        return _cyclic(n)
    if kind == "D" and n >= 2:
        return _dihedral(n)
    if kind == "S":
        return _symmetric(n)
    raise UnsupportedSpec(f"unsupported parameter in {spec!r}")


def group_stats(G):
    """Number of conjugacy classes and of commuting pairs."""
    n = G.order
    seen = set()
    classes = 0
    for x in range(n):
        if x in seen:
            continue
        classes += 1
        for g in range(n):
            seen.add(G.mul(G.mul(g, x), G.inv(g)))
    commuting = sum(1 for a in range(n) for b in range(n) if G.mul(a, b) == G.mul(b, a))
    return {"conjClassCount": classes, "commutingPairCount": commuting}


def group_algebra(G, field=QQ):
    n = G.order
    mult = [[{G.mul(a, b): 1} for b in range(n)] for a in range(n)]
    comult = [{(a, a): 1} for a in range(n)]
    S = np.empty((n, n), dtype=object)
    S.fill(field.zero)
    for a in range(n):
        S[G.inv(a), a] = field.one
    return HopfAlgebra(field, n, mult, comult, [1] * n, S, unit={G.identity: 1},
                       labels=G.labels, name=f"k[{G.name}]")


def dual_group_algebra(G, field=QQ):
    A = dual(group_algebra(G, field), name=f"k^{G.name}")
    A.labels = [f"d_{lbl}" for lbl in G.labels]
    return A


def taft(n, omega=None, field=None):
    """Taft algebra of dimension n^2; basis g^i x^j at index j*n + i."""
    if n < 2:
        raise UnsupportedSpec("Taft algebras need n >= 2")
    if field is None:
        field = QQ if n == 2 else cyclotomic(n)
    if omega is None:
        omega = field(-1) if n == 2 else field.zeta(1)
    omega = field(omega)
    if omega ** n != 1 or any(omega ** k == 1 for k in range(1, n)):
        raise RootOrderMismatch(f"{omega} does not have multiplicative order {n}")

    d = n * n
    idx = lambda i, j: j * n + i  # noqa: E731
    pw = [omega ** k for k in range(n)]
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for j in range(n):
        for i in range(n):
            for l in range(n):
                for k in range(n):
                    if j + l < n:
                        mult[idx(i, j)][idx(k, l)] = {idx((i + k) % n, j + l): pw[(j * k) % n]}
    unit = {idx(0, 0): field.one}
    A0 = HopfAlgebra(field, d, mult, [{} for _ in range(d)], [0] * d,
                     np.zeros((d, d), dtype=object), unit=unit)

    x = A0.basis(idx(0, 1))
    one = A0.basis(idx(0, 0))
    dg = {(idx(1, 0), idx(1, 0)): field.one}
    dx = {(idx(0, 0), idx(0, 1)): field.one, (idx(0, 1), idx(1, 0)): field.one}
    Sg = A0.basis(idx(n - 1, 0))
    Sx = {k: -v for k, v in A0.mul(x, Sg).items()}

    comult, counit = [None] * d, [field.zero] * d
    S = np.empty((d, d), dtype=object)
    S.fill(field.zero)
    for j in range(n):
        for i in range(n):
            D = {(idx(0, 0), idx(0, 0)): field.one}
            for _ in range(i):
                D = A0.tensor_mul(D, dg)
            for _ in range(j):
                D = A0.tensor_mul(D, dx)
            comult[idx(i, j)] = D
            counit[idx(i, j)] = field.one if j == 0 else field.zero
            s = dict(one)
            for _ in range(j):
                s = A0.mul(s, Sx)
            for _ in range(i):
                s = A0.mul(s, Sg)
            for k, v in s.items():
                S[k, idx(i, j)] = v
    labels = []
    for j in range(n):
        for i in range(n):
            gp = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            xp = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            labels.append((gp + xp) or "1")
    name = "Sweedler" if n == 2 else f"Taft({n})"
    return HopfAlgebra(field, d, mult, comult, counit, S, unit=unit, labels=labels, name=name)


def sweedler(field=QQ):
    return taft(2, field(-1), field)


def find_group_isomorphism(G, H):
    """A bijection phi (as a tuple of indices) with phi(ab) = phi(a)phi(b), or None.

    Backtracking over images of a generating set; fine for the small groups here.
    """
    if G.order != H.order:
        return None
    gens = []
    span = {G.identity}
    for x in range(G.order):
        if x not in span:
            gens.append(x)
            span = _closure(G, gens)
    order_g = [_element_order(G, x) for x in range(G.order)]
    order_h = [_element_order(H, y) for y in range(H.order)]

    def extend(k, images):
        if k == len(gens):
            phi = _extend_hom(G, H, gens, images)
            return phi
        for y in range(H.order):
            if order_h[y] == order_g[gens[k]]:
                phi = extend(k + 1, images + [y])
                if phi is not None:
                    return phi
        return None

    return extend(0, [])


def _element_order(G, x):
    k, y = 1, x
    while y != G.identity:
        y = G.mul(y, x)
        k += 1
    return k


def _closure(G, gens):
    span = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in span:
                    span.add(b)
                    nxt.append(b)
        frontier = nxt
    return span


def _extend_hom(G, H, gens, images):
    phi = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g, h in zip(gens, images):
                b, img = G.mul(a, g), H.mul(phi[a], h)
                if b in phi:
                    if phi[b] != img:
                        return None
                else:
                    phi[b] = img
                    nxt.append(b)
        frontier = nxt
    if len(set(phi.values())) != G.order:
        return None
    if any(phi[G.mul(a, b)] != H.mul(phi[a], phi[b]) for a in range(G.order) for b in range(G.order)):
        return None
    return tuple(phi[a] for a in range(G.order))


def group_algebra_map(phi, field=QQ):
    """Permutation matrix of the algebra map k[G] -> k[H] induced by phi."""
    n = len(phi)
    F = np.empty((n, n), dtype=object)
    F.fill(field.zero)
    for a, b in enumerate(phi):
        F[b, a] = field.one
    return F


def algebra_from_spec(spec, field=None):
    """Builtin algebras by name: ``group:S3``, ``dualgroup:S3``, ``sweedler``, ``taft:3``."""
    spec = spec.strip()
    kind, _, arg = spec.partition(":")
    if kind == "group" and arg:
        return group_algebra(make_group(arg), field or QQ)
    if kind == "dualgroup" and arg:
        return dual_group_algebra(make_group(arg), field or QQ)
    if kind == "sweedler" and not arg:
        return sweedler(field or QQ)
    if kind == "taft" and arg:
        if not arg.isdigit():
            raise UnsupportedSpec(f"bad Taft parameter {arg!r}")
        return taft(int(arg), field=field)
    raise UnsupportedSpec(f"unknown algebra spec {spec!r}")
