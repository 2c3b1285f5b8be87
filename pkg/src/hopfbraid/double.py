"""The Drinfeld double D(A), its R-matrix and Drinfeld element, and the
isomorphisms D(f) and phi_A.

The basis element ``e_i^* |><| e_j`` of D(A) sits at index ``i*d + j``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InverseCheckFailed, NotHopfMap, NotIsomorphism, SingularMatrix
from .hopf import (
    HopfAlgebra,
    ValidationReport,
    _add_into,
    algebra_map_witness,
    coalgebra_map_witness,
    dual,
)
from .linalg import invert, sparse_columns, zeros

__all__ = [
    "QuasitriangularData",
    "build_double",
    "validate_qt",
    "drinfeld_elements",
    "phi_iso",
    "double_of_iso",
    "check_hopf_map",
    "antipode_by_factorization",
]


@dataclass
class DrinfeldElements:
    u: dict
    u_inv: dict
    Su: dict
    z: dict


class QuasitriangularData:
    """A Hopf algebra with an R-matrix kept as a list of factor pairs."""

    def __init__(self, H, rfactors, base=None):
        self.H = H
        self.rfactors = [(dict(a), dict(b)) for a, b in rfactors]
        self.base = base
        self._elements = None

    @property
    def field(self):
        return self.H.field

    def index(self, i, j):
        return i * self.base.dim + j

    def unindex(self, k):
        return divmod(k, self.base.dim)

    def R(self):
        """The R-matrix as a dict keyed by basis pairs."""
        out = {}
        for a, b in self.rfactors:
            for i, x in a.items():
                for j, y in b.items():
                    _add_into(out, (i, j), x * y)
        return out

    def R_inverse_factors(self):
        return [(self.H.S(a), b) for a, b in self.rfactors]

    def R_inverse(self):
        out = {}
        for a, b in self.R_inverse_factors():
            for i, x in a.items():
                for j, y in b.items():
                    _add_into(out, (i, j), x * y)
        return out

    @property
    def elements(self):
        if self._elements is None:
            self._elements = drinfeld_elements(self)
        return self._elements

    def __repr__(self):
        return f"QuasitriangularData({self.H.name}, dim={self.H.dim})"


def _embed_dual(A, p):
    """p |><| 1 as a sparse vector in D(A)."""
    d = A.dim
    out = {}
    for i, a in p.items():
        for t, c in A.unit.items():
            _add_into(out, i * d + t, a * c)
    return out


def _embed_alg(A, x):
    """eps |><| x as a sparse vector in D(A)."""
    d = A.dim
    out = {}
    for s, e in enumerate(A.counit):
        if e:
            for j, a in x.items():
                _add_into(out, s * d + j, a * e)
    return out


def build_double(A):
    f, d = A.field, A.dim
    A.antipode_inverse
    Ad = dual(A)

    # conj[t][r] = sparse list over y of S^{-1}(e_t) e_y e_r, stored as {k: {y: c}}
    sinv = [A.Sinv(A.basis(t)) for t in range(d)]
    conj = [[None] * d for _ in range(d)]
    for t in range(d):
        for r in range(d):
            by_k = {}
            for y in range(d):
                prod = A.mul(A.mul(sinv[t], A.basis(y)), A.basis(r))
                for k, c in prod.items():
                    by_k.setdefault(k, {})[y] = c
            conj[t][r] = by_k

    D = d * d
    mult = [[None] * D for _ in range(D)]
    for j in range(d):
        d3 = A.delta_n(A.basis(j), 3)
        for k in range(d):
            # functionals q(y) = e_k^*(S^{-1}(a_3) y a_1) with middle leg a_2
            terms = []
            for (t1, t2, t3), c in d3.items():
                q = conj[t3][t1].get(k)
                if q:
                    terms.append((q, t2, c))
            for i in range(d):
                # (e_i^* q) |><| a_2, accumulated as {(m, t2): coeff}
                left = {}
                for q, t2, c in terms:
                    for y, qy in q.items():
                        for m, w in Ad.mult[i][y].items():
                            _add_into(left, (m, t2), c * qy * w)
                for l in range(d):
                    out = {}
                    for (m, t2), c in left.items():
                        for n, w in A.mult[t2][l].items():
                            _add_into(out, m * d + n, c * w)
                    mult[i * d + j][k * d + l] = out

    comult = [None] * D
    for i in range(d):
        for j in range(d):
            out = {}
            for (x, y), c in Ad.comult[i].items():
                for (a1, a2), c2 in A.comult[j].items():
                    _add_into(out, (y * d + a1, x * d + a2), c * c2)
            comult[i * d + j] = out

    counit = [A.unit.get(i, f.zero) * A.counit[j] for i in range(d) for j in range(d)]
    unit = _embed_alg(A, A.unit)

    H0 = HopfAlgebra(f, D, mult, comult, counit, zeros(f, D), unit=unit,
                     labels=[f"{Ad.labels[i]}#{A.labels[j]}" for i in range(d) for j in range(d)])
    S = _double_antipode(A)
    H = HopfAlgebra(f, D, H0.mult, H0.comult, H0.counit, S, unit=unit, labels=H0.labels,
                    name=f"D({A.name})")
    rfactors = [(_embed_alg(A, A.basis(i)), _embed_dual(A, {i: f.one})) for i in range(d)]
    return QuasitriangularData(H, rfactors, base=A)


def _double_antipode(A):
    """S(p |><| a) = sum <p_1, a_3> <S*^{-1}(p_3), a_1> S*^{-1}(p_2) |><| S(a_2)."""
    f, d = A.field, A.dim
    D = d * d
    S = zeros(f, D)
    Sinv = A.antipode_inverse
    for j in range(d):
        d3 = A.delta_n(A.basis(j), 3)
        for i in range(d):
            out = {}
            for (a1, a2, a3), c in d3.items():
                # r(y) = e_i^*(a_3 y S^{-1}(a_1)), then precompose with S^{-1}
                right = A.Sinv(A.basis(a1))
                r = {}
                for y in range(d):
                    v = A.mul(A.mul(A.basis(a3), A.basis(y)), right).get(i)
                    if v:
                        r[y] = v
                rs = {}
                for y, v in r.items():
                    for m in range(d):
                        w = Sinv[y, m]
                        if w:
                            _add_into(rs, m, v * w)
                sa2 = A.S(A.basis(a2))
                for m, v in rs.items():
                    for n, w in sa2.items():
                        _add_into(out, m * d + n, c * v * w)
            for k, v in out.items():
                S[k, i * d + j] = v
    return S


def antipode_by_factorization(Q):
    """S_D(p |><| a) recomputed as (eps |><| S(a)) (S*^{-1}(p) |><| 1)."""
    A, H = Q.base, Q.H
    f, d = A.field, A.dim
    Sinv = A.antipode_inverse
    out = zeros(f, H.dim)
    for i in range(d):
        pinv = {m: Sinv[i, m] for m in range(d) if Sinv[i, m]}
        right = _embed_dual(A, pinv)
        for j in range(d):
            left = _embed_alg(A, A.S(A.basis(j)))
            for k, v in H.mul(left, right).items():
                out[k, i * d + j] = v
    return out


# -- quasitriangular axioms ---------------------------------------------


def _tensor_from_factors(factors):
    out = {}
    for a, b in factors:
        for i, x in a.items():
            for j, y in b.items():
                _add_into(out, (i, j), x * y)
    return out


def _leg(T, positions, n, unit):
    """Place a tensor with len(positions) legs into an n-fold tensor, padding with 1."""
    out = {}
    for key, c in T.items():
        partial = {(): c}
        for slot in range(n):
            nxt = {}
            if slot in positions:
                idx = key[positions.index(slot)]
                for k2, v in partial.items():
                    _add_into(nxt, k2 + (idx,), v)
            else:
                for k2, v in partial.items():
                    for u, w in unit.items():
                        _add_into(nxt, k2 + (u,), v * w)
            partial = nxt
        for k2, v in partial.items():
            _add_into(out, k2, v)
    return out


def validate_qt(Q, rfactors=None):
    H = Q.H
    factors = Q.rfactors if rfactors is None else rfactors
    rep = ValidationReport(f"quasitriangular {H.name}")
    R = _tensor_from_factors(factors)
    Rinv = _tensor_from_factors([(H.S(a), b) for a, b in factors])
    one2 = _leg_unit(H, 2)

    rep.add("R invertible via (S x id)R",
            None if H.tensor_mul(R, Rinv) == one2 and H.tensor_mul(Rinv, R) == one2 else "R R^-1 != 1")

    witness = None
    for x in range(H.dim):
        dx = H.comult[x]
        dcop = {(b, a): v for (a, b), v in dx.items()}
        if H.tensor_mul(dcop, R) != H.tensor_mul(R, dx):
            witness = x
            break
    rep.add("Delta^cop = R Delta R^-1", witness)

    # (Delta x id)R = R13 R23
    lhs = {}
    for (i, j), c in R.items():
        for (a, b), c2 in H.comult[i].items():
            _add_into(lhs, (a, b, j), c * c2)
    R13 = _leg(R, [0, 2], 3, H.unit)
    R23 = _leg(R, [1, 2], 3, H.unit)
    R12 = _leg(R, [0, 1], 3, H.unit)
    rep.add("(Delta x id)R = R13 R23", None if lhs == H.tensor_mul(R13, R23) else "mismatch")
    lhs = {}
    for (i, j), c in R.items():
        for (a, b), c2 in H.comult[j].items():
            _add_into(lhs, (i, a, b), c * c2)
    rep.add("(id x Delta)R = R13 R12", None if lhs == H.tensor_mul(R13, R12) else "mismatch")
    ybe_l = H.tensor_mul(H.tensor_mul(R12, R13), R23)
    ybe_r = H.tensor_mul(H.tensor_mul(R23, R13), R12)
    rep.add("Yang-Baxter", None if ybe_l == ybe_r else "mismatch")
    return rep


def _leg_unit(H, n):
    return _leg({(): H.field.one}, [], n, H.unit)


def drinfeld_elements(Q):
    H = Q.H
    u, u_inv = {}, {}
    for a, b in Q.rfactors:
        for k, v in H.mul(H.S(b), a).items():
            _add_into(u, k, v)
        for k, v in H.mul(b, H.S(H.S(a))).items():
            _add_into(u_inv, k, v)
    if H.mul(u, u_inv) != H.unit or H.mul(u_inv, u) != H.unit:
        raise InverseCheckFailed("u * u^-1 != 1")
    # R21 R = Delta(u^-1)(u x u)
    R = Q.R()
    R21 = {(j, i): v for (i, j), v in R.items()}
    uu = {(i, j): x * y for i, x in u.items() for j, y in u.items()}
    if H.tensor_mul(R21, R) != H.tensor_mul(H.delta(u_inv), uu):
        raise InverseCheckFailed("R21 R != Delta(u^-1)(u x u)")
    Su = H.S(u)
    return DrinfeldElements(u, u_inv, Su, H.mul(u, Su))


# -- isomorphisms ---------------------------------------------------------


def check_hopf_map(F, A, B, flip=False):
    """Raise NotHopfMap unless F: A -> B is an invertible bialgebra map."""
    w = algebra_map_witness(F, A, B)
    if w is not None:
        raise NotHopfMap(f"not multiplicative at {w}")
    w = coalgebra_map_witness(F, A, B, flip=flip)
    if w is not None:
        raise NotHopfMap(f"not comultiplicative at {w}")
    try:
        invert(F, A.field)
    except SingularMatrix as exc:
        raise NotHopfMap("map is not invertible") from exc


def double_of_iso(F, A, B, QA=None, QB=None):
    """D(f) = (f^{-1})^* x f as a matrix D(A) -> D(B), validated."""
    check_hopf_map(F, A, B)
    Finv = invert(F, A.field)
    M = np.kron(Finv.T, F)
    QA = QA or build_double(A)
    QB = QB or build_double(B)
    try:
        check_hopf_map(M, QA.H, QB.H)
    except NotHopfMap as exc:
        raise NotHopfMap(f"D(f) failed: {exc}") from exc
    RA = QA.R()
    image = {}
    cols = sparse_columns(M)
    for (i, j), c in RA.items():
        for a, x in cols[i].items():
            for b, y in cols[j].items():
                _add_into(image, (a, b), c * x * y)
    if image != QB.R():
        raise NotHopfMap("D(f) does not carry R to R")
    return M


def phi_iso(A, QA=None, QAd=None):
    """phi_A: D(A) -> D(A*)^cop, (p |><| a) -> (iota(1) |><| p)(iota(a) |><| eps).

    Returns ``(matrix, Q_of_dual)``; the matrix is checked to be an algebra
    map, a coalgebra map to the opposite coproduct, invertible, and to carry
    R to the flipped R of D(A*).
    """
    f, d = A.field, A.dim
    QA = QA or build_double(A)
    Ad = dual(A)
    QAd = QAd or build_double(Ad)
    H2 = QAd.H
    # in D(A*), e_x** |><| e_y* sits at x*d + y; iota(1) = sum unit[t] e_t**
    # and eps_{A*} = unit of A* = sum counit[s] e_s*
    Phi = zeros(f, d * d)
    for i in range(d):
        left = {t * d + i: c for t, c in A.unit.items()}
        for j in range(d):
            right = {j * d + s: c for s, c in enumerate(A.counit) if c}
            for k, v in H2.mul(left, right).items():
                Phi[k, i * d + j] = v
    w = algebra_map_witness(Phi, QA.H, H2)
    if w is not None:
        raise NotIsomorphism(f"phi_A not multiplicative at {w}")
    w = coalgebra_map_witness(Phi, QA.H, H2, flip=True)
    if w is not None:
        raise NotIsomorphism(f"phi_A not a coalgebra map to the cop structure at {w}")
    try:
        invert(Phi, f)
    except SingularMatrix as exc:
        raise NotIsomorphism("phi_A is singular") from exc
    cols = sparse_columns(Phi)
    image = {}
    for (i, j), c in QA.R().items():
        for a, x in cols[i].items():
            for b, y in cols[j].items():
                _add_into(image, (a, b), c * x * y)
    R21 = {(j, i): v for (i, j), v in QAd.R().items()}
    if image != R21:
        raise NotIsomorphism("phi_A does not carry R to R21")
    return Phi, QAd
