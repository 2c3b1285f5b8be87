"""Finite-dimensional Hopf algebras given by structure constants.

A :class:`HopfAlgebra` stores

* ``mult[i][j]``: sparse dict ``{k: c}`` for the product ``e_i e_j``;
* ``unit``: sparse dict for ``1``;
* ``comult[i]``: sparse dict ``{(j, k): c}`` for ``Delta(e_i)``;
* ``counit``: list of ``eps(e_i)``;
* ``antipode``: dense matrix whose column ``i`` is ``S(e_i)``.

Elements are passed around as sparse dicts ``{basis index: coefficient}``,
elements of tensor powers as dicts keyed by index tuples, and covectors
(elements of the dual) as sparse dicts as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import DimensionMismatch, IntegralSpaceNotOneDimensional, InvalidAlgebra, SingularMatrix
from .linalg import invert, nullspace_rows, sparse_add, sparse_columns, trace

__all__ = [
    "HopfAlgebra",
    "AxiomResult",
    "ValidationReport",
    "IntegralData",
    "Predicates",
    "validate_hopf",
    "dual",
    "op",
    "cop",
    "antipode_inverse",
    "structural_variants",
    "integrals",
    "semisimplicity_predicates",
    "trace_s_squared",
    "solve_unit",
]


def _add_into(acc, key, val):
    nv = acc[key] + val if key in acc else val
    if nv:
        acc[key] = nv
    else:
        acc.pop(key, None)


class HopfAlgebra:
    def __init__(self, field, dim, mult, comult, counit, antipode, unit=None, labels=None, name=""):
        self.field = field
        self.dim = dim
        self.name = name
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(dim)]
        self._check_shapes(mult, comult, counit, antipode)
        self.mult = [[{k: field(c) for k, c in mult[i][j].items() if c} for j in range(dim)] for i in range(dim)]
        self.comult = [{jk: field(c) for jk, c in comult[i].items() if c} for i in range(dim)]
        self.counit = [field(c) for c in counit]
        S = np.empty((dim, dim), dtype=object)
        for i in range(dim):
            for j in range(dim):
                S[i, j] = field(antipode[i, j])
        self.antipode = S
        self._S_cols = sparse_columns(S)
        self._Sinv = None
        self._Sinv_cols = None
        if unit is None:
            unit = solve_unit(field, dim, self.mult)
        self.unit = {k: field(c) for k, c in unit.items() if c}

    def _check_shapes(self, mult, comult, counit, antipode):
        d = self.dim
        if len(self.labels) != d:
            raise DimensionMismatch(f"{len(self.labels)} labels for dimension {d}")
        if len(mult) != d or any(len(row) != d for row in mult):
            raise DimensionMismatch("mult table must be d x d")
        if len(comult) != d or len(counit) != d:
            raise DimensionMismatch("comult and counit must have d entries")
        if np.shape(antipode) != (d, d):
            raise DimensionMismatch("antipode must be a d x d matrix")
        for row in mult:
            for entry in row:
                if any(not 0 <= k < d for k in entry):
                    raise DimensionMismatch("mult index out of range")
        for entry in comult:
            if any(not (0 <= j < d and 0 <= k < d) for j, k in entry):
                raise DimensionMismatch("comult index out of range")

    def __repr__(self):
        return f"HopfAlgebra({self.name or '?'}, dim={self.dim}, field={self.field})"

    # -- basic element operations ---------------------------------------

    def basis(self, i):
        return {i: self.field.one}

    def zero_vec(self):
        return {}

    def one(self):
        return dict(self.unit)

    def mul(self, x, y):
        out = {}
        mult = self.mult
        for i, a in x.items():
            row = mult[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j].items():
                    _add_into(out, k, ab * c)
        return out

    def mul_many(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    def power(self, x, k):
        out = self.one()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def delta(self, x):
        out = {}
        for i, a in x.items():
            for jk, c in self.comult[i].items():
                _add_into(out, jk, a * c)
        return out

    def delta_n(self, x, n):
        """Iterated coproduct with ``n`` legs, nested on the left."""
        if n == 1:
            return {(i,): a for i, a in x.items()}
        cur = self.delta(x)
        for _ in range(n - 2):
            nxt = {}
            for key, a in cur.items():
                for jk, c in self.comult[key[0]].items():
                    _add_into(nxt, jk + key[1:], a * c)
            cur = nxt
        return cur

    def eps(self, x):
        total = self.field.zero
        for i, a in x.items():
            total = total + a * self.counit[i]
        return total

    def _apply_cols(self, cols, x):
        out = {}
        for i, a in x.items():
            for k, c in cols[i].items():
                _add_into(out, k, a * c)
        return out

    def S(self, x):
        return self._apply_cols(self._S_cols, x)

    @property
    def antipode_inverse(self):
        if self._Sinv is None:
            try:
                self._Sinv = invert(self.antipode, self.field)
            except SingularMatrix as exc:
                raise SingularMatrix(f"antipode of {self.name or 'algebra'} is not invertible") from exc
            self._Sinv_cols = sparse_columns(self._Sinv)
        return self._Sinv

    def Sinv(self, x):
        self.antipode_inverse
        return self._apply_cols(self._Sinv_cols, x)

    def pair(self, p, x):
        """Evaluate the covector ``p`` (sparse dict) on the element ``x``."""
        total = self.field.zero
        for i, a in x.items():
            b = p.get(i)
            if b:
                total = total + a * b
        return total

    def tensor_mul(self, X, Y):
        """Product in the tensor power, factorwise, for tuple-keyed dicts."""
        out = {}
        mult = self.mult
        if all(len(k) == 2 for k in X) and all(len(k) == 2 for k in Y):
            for (x0, x1), a in X.items():
                r0, r1 = mult[x0], mult[x1]
                for (y0, y1), b in Y.items():
                    p0 = r0[y0]
                    if not p0:
                        continue
                    p1 = r1[y1]
                    if not p1:
                        continue
                    ab = a * b
                    for k0, c0 in p0.items():
                        t = ab * c0
                        for k1, c1 in p1.items():
                            _add_into(out, (k0, k1), t * c1)
            return out
        for kx, a in X.items():
            for ky, b in Y.items():
                coeff_terms = {(): a * b}
                for i, j in zip(kx, ky):
                    nxt = {}
                    prod = self.mult[i][j]
                    for key, c in coeff_terms.items():
                        for k, m in prod.items():
                            _add_into(nxt, key + (k,), c * m)
                    coeff_terms = nxt
                    if not coeff_terms:
                        break
                for key, c in coeff_terms.items():
                    _add_into(out, key, c)
        return out

    def dual_product(self, p, q):
        """Convolution product of covectors: (pq)(x) = p(x_1) q(x_2)."""
        out = {}
        for x in range(self.dim):
            total = None
            for (j, k), c in self.comult[x].items():
                a, b = p.get(j), q.get(k)
                if a and b:
                    t = c * a * b
                    total = t if total is None else total + t
            if total:
                out[x] = total
        return out

    def matrix_of(self, func):
        """Dense matrix of a linear map given on sparse elements."""
        f = self.field
        out = np.empty((self.dim, self.dim), dtype=object)
        out.fill(f.zero)
        for j in range(self.dim):
            for i, v in func(self.basis(j)).items():
                out[i, j] = v
        return out

    def left_mult_matrix(self, x):
        return self.matrix_of(lambda y: self.mul(x, y))

    def same_tensors(self, other):
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and self.comult == other.comult
            and self.counit == other.counit
            and self.unit == other.unit
            and all(a == b for a, b in zip(self.antipode.flat, other.antipode.flat))
        )


def solve_unit(field, dim, mult):
    """Find the two-sided unit of a multiplication table."""
    # unknowns u_0..u_{d-1} plus t at index d; require u e_j = t e_j = e_j u
    rows = []
    for j in range(dim):
        for side in (0, 1):
            eq = {}
            for i in range(dim):
                prod = mult[i][j] if side == 0 else mult[j][i]
                for k, c in prod.items():
                    eq.setdefault(k, {})
                    _add_into(eq[k], i, c)
            for k in range(dim):
                row = dict(eq.get(k, {}))
                if k == j:
                    _add_into(row, dim, -field.one)
                rows.append(row)
    for sol in nullspace_rows(rows, dim + 1, field):
        t = sol.get(dim)
        if t:
            inv = field.inverse(t)
            return {i: v * inv for i, v in sol.items() if i < dim}
    raise InvalidAlgebra("multiplication has no unit")


# -- validation ---------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    ok: bool
    witness: object = None

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        extra = "" if self.ok or self.witness is None else f" (witness {self.witness})"
        return f"{self.name}: {status}{extra}"


@dataclass
class ValidationReport:
    subject: str
    results: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def add(self, name, witness=None, ok=None):
        self.results.append(AxiomResult(name, witness is None if ok is None else ok, witness))

    def failures(self):
        return [r for r in self.results if not r.ok]

    def raise_if_failed(self):
        if not self.ok:
            first = self.failures()[0]
            raise InvalidAlgebra(f"{self.subject}: {first}", report=self)
        return self

    def __str__(self):
        return "\n".join([f"[{self.subject}]"] + [f"  {r}" for r in self.results])


def _check_unit(A):
    for j in range(A.dim):
        e = A.basis(j)
        if A.mul(A.unit, e) != e or A.mul(e, A.unit) != e:
            return j
    return None


def _check_assoc(A):
    d = A.dim
    mult = A.mult
    for i in range(d):
        for j in range(d):
            ij = mult[i][j]
            for k in range(d):
                lhs = {}
                for m, c in ij.items():
                    for l, c2 in mult[m][k].items():
                        _add_into(lhs, l, c * c2)
                rhs = {}
                for m, c in mult[j][k].items():
                    for l, c2 in mult[i][m].items():
                        _add_into(rhs, l, c * c2)
                if lhs != rhs:
                    return (i, j, k)
    return None


def _check_counit(A):
    for i in range(A.dim):
        left, right = {}, {}
        for (j, k), c in A.comult[i].items():
            e = A.counit[j]
            if e:
                _add_into(left, k, c * e)
            e = A.counit[k]
            if e:
                _add_into(right, j, c * e)
        target = A.basis(i)
        if left != target or right != target:
            return i
    return None


def _check_coassoc(A):
    for i in range(A.dim):
        lhs, rhs = {}, {}
        for (j, k), c in A.comult[i].items():
            for (a, b), c2 in A.comult[j].items():
                _add_into(lhs, (a, b, k), c * c2)
            for (a, b), c2 in A.comult[k].items():
                _add_into(rhs, (j, a, b), c * c2)
        if lhs != rhs:
            return i
    return None


def _check_delta_mult(A):
    unit2 = {}
    for a, x in A.unit.items():
        for b, y in A.unit.items():
            _add_into(unit2, (a, b), x * y)
    if A.delta(A.unit) != unit2:
        return "unit"
    deltas = [A.comult[i] for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = A.delta(A.mult[i][j])
            rhs = A.tensor_mul(deltas[i], deltas[j])
            if lhs != rhs:
                return (i, j)
    return None


def _check_eps_mult(A):
    if A.eps(A.unit) != 1:
        return "unit"
    for i in range(A.dim):
        for j in range(A.dim):
            if A.eps(A.mult[i][j]) != A.counit[i] * A.counit[j]:
                return (i, j)
    return None


def _check_antipode(A):
    for i in range(A.dim):
        left, right = {}, {}
        for (j, k), c in A.comult[i].items():
            sparse_add(left, A.mul(A.S(A.basis(j)), A.basis(k)), c)
            sparse_add(right, A.mul(A.basis(j), A.S(A.basis(k))), c)
        target = {k: v * A.counit[i] for k, v in A.unit.items() if A.counit[i]}
        if left != target or right != target:
            return i
    return None


def validate_hopf(A, subject=None):
    """Check every Hopf algebra axiom on all basis tuples."""
    rep = ValidationReport(subject or (A.name or "algebra"))
    rep.add("unit", _check_unit(A))
    rep.add("associativity", _check_assoc(A))
    rep.add("counit", _check_counit(A))
    rep.add("coassociativity", _check_coassoc(A))
    rep.add("comultiplication is multiplicative", _check_delta_mult(A))
    rep.add("counit is multiplicative", _check_eps_mult(A))
    rep.add("antipode", _check_antipode(A))
    try:
        A.antipode_inverse
        rep.add("antipode invertible")
    except SingularMatrix:
        rep.add("antipode invertible", "singular")
    return rep


# -- duals and variants ---------------------------------------------------


def dual(A, name=None):
    """The dual Hopf algebra on the dual basis."""
    d = A.dim
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for k in range(d):
        for (i, j), c in A.comult[k].items():
            mult[i][j][k] = c
    comult = [{} for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k, c in A.mult[i][j].items():
                comult[k][(i, j)] = c
    unit = {i: c for i, c in enumerate(A.counit) if c}
    counit = [A.unit.get(i, A.field.zero) for i in range(d)]
    labels = [_dual_label(lbl) for lbl in A.labels]
    return HopfAlgebra(A.field, d, mult, comult, counit, A.antipode.T.copy(), unit=unit,
                       labels=labels, name=name or _dual_name(A.name))


def _dual_label(lbl):
    return lbl[:-1] if lbl.endswith("*") else lbl + "*"


def _dual_name(name):
    if not name:
        return ""
    return name[:-1] if name.endswith("*") else name + "*"


def op(A):
    d = A.dim
    mult = [[A.mult[j][i] for j in range(d)] for i in range(d)]
    return HopfAlgebra(A.field, d, mult, A.comult, A.counit, A.antipode_inverse, unit=A.unit,
                       labels=A.labels, name=f"{A.name}^op")


def cop(A):
    d = A.dim
    comult = [{(k, j): c for (j, k), c in A.comult[i].items()} for i in range(d)]
    return HopfAlgebra(A.field, d, A.mult, comult, A.counit, A.antipode_inverse, unit=A.unit,
                       labels=A.labels, name=f"{A.name}^cop")


def antipode_inverse(A):
    return A.antipode_inverse


def structural_variants(A, which):
    if which == "op":
        return op(A)
    if which == "cop":
        return cop(A)
    if which == "antipode_inverse":
        return antipode_inverse(A)
    raise ValueError(f"unknown variant {which!r}")


def trace_s_squared(A):
    return trace(A.antipode @ A.antipode, A.field)


# -- integrals ------------------------------------------------------------


@dataclass
class IntegralData:
    left_integral: dict
    right_dual_integral: dict
    alpha: list
    g: dict
    normalized: bool

    def alpha_inverse(self, A):
        """alpha composed with S, the convolution inverse of alpha."""
        return [A.pair(dict(enumerate(self.alpha)), A.S(A.basis(i))) for i in range(A.dim)]


def _one_dim(sols, what):
    if len(sols) != 1:
        raise IntegralSpaceNotOneDimensional(f"space of {what} has dimension {len(sols)}")
    return sols[0]


def _leading_one(vec, field):
    lead = vec[min(vec)]
    inv = field.inverse(lead)
    return {i: v * inv for i, v in vec.items()}


def integrals(A):
    f, d = A.field, A.dim
    # left integral: e_a L = eps(a) L
    rows = []
    for a in range(d):
        eqs = [{} for _ in range(d)]
        for x in range(d):
            for k, c in A.mult[a][x].items():
                _add_into(eqs[k], x, c)
        if A.counit[a]:
            for k in range(d):
                _add_into(eqs[k], k, -A.counit[a])
        rows.extend(eqs)
    Lam = _leading_one(_one_dim(nullspace_rows(rows, d, f), "left integrals"), f)

    # right integral in the dual: lambda p = p(1) lambda for p = e_b^*
    rows = []
    for b in range(d):
        eqs = [{} for _ in range(d)]
        for x in range(d):
            for (j, k), c in A.comult[x].items():
                if k == b:
                    _add_into(eqs[x], j, c)
        ub = A.unit.get(b)
        if ub:
            for x in range(d):
                _add_into(eqs[x], x, -ub)
        rows.extend(eqs)
    lam = _leading_one(_one_dim(nullspace_rows(rows, d, f), "right integrals of the dual"), f)

    pairing = A.pair(lam, Lam)
    normalized = bool(pairing)
    if normalized:
        inv = f.inverse(pairing)
        lam = {i: v * inv for i, v in lam.items()}

    # alpha: L e_a = alpha(a) L
    piv = min(Lam)
    alpha = []
    for a in range(d):
        prod = A.mul(Lam, A.basis(a))
        val = prod.get(piv, f.zero) * f.inverse(Lam[piv])
        if prod != {i: v * val for i, v in Lam.items() if v * val}:
            raise InvalidAlgebra(f"right multiple of the integral by e{a} is not proportional")
        alpha.append(val)

    # g: p lambda = <p, g> lambda, read off coordinate-wise
    x0 = min(lam)
    g = {}
    for b in range(d):
        prod = A.dual_product({b: f.one}, lam)
        val = prod.get(x0, f.zero) * f.inverse(lam[x0])
        if prod != {i: v * val for i, v in lam.items() if v * val}:
            raise InvalidAlgebra(f"left multiple of the dual integral by e{b}* is not proportional")
        if val:
            g[b] = val
    return IntegralData(Lam, lam, alpha, g, normalized)


@dataclass
class Predicates:
    unimodular: bool
    semisimple: bool
    cosemisimple: bool
    trace_consistent: object  # True/False in characteristic 0, None otherwise


def semisimplicity_predicates(A, data=None):
    data = data or integrals(A)
    unimodular = list(data.alpha) == list(A.counit)
    semisimple = bool(A.eps(data.left_integral))
    cosemisimple = bool(A.pair(data.right_dual_integral, A.unit))
    consistent = None
    if A.field.characteristic == 0:
        consistent = bool(trace_s_squared(A)) == (semisimple and cosemisimple)
    return Predicates(unimodular, semisimple, cosemisimple, consistent)


# -- linear maps between algebras ----------------------------------------


def apply_map(F, x):
    """Apply the matrix ``F`` (columns are images) to a sparse vector."""
    out = {}
    for j, a in x.items():
        col = F[:, j]
        for i, c in enumerate(col):
            if c:
                _add_into(out, i, a * c)
    return out


def map_columns(F):
    return sparse_columns(F)


def _apply_cols(cols, x):
    out = {}
    for j, a in x.items():
        for i, c in cols[j].items():
            _add_into(out, i, a * c)
    return out


def algebra_map_witness(F, A, B):
    """First basis pair where ``F: A -> B`` fails to be multiplicative, else None."""
    cols = map_columns(F)
    if _apply_cols(cols, A.unit) != B.unit:
        return "unit"
    images = [cols[i] for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            if _apply_cols(cols, A.mult[i][j]) != B.mul(images[i], images[j]):
                return (i, j)
    return None


def coalgebra_map_witness(F, A, B, flip=False):
    """First basis index where ``F`` fails to intertwine the coproducts.

    With ``flip`` the target coproduct is taken opposite.
    """
    cols = map_columns(F)
    for i in range(A.dim):
        if B.eps(cols[i]) != A.counit[i]:
            return ("counit", i)
        lhs = {}
        for (j, k), c in A.comult[i].items():
            for a, x in cols[j].items():
                for b, y in cols[k].items():
                    _add_into(lhs, (a, b), c * x * y)
        rhs = B.delta(cols[i])
        if flip:
            rhs = {(b, a): v for (a, b), v in rhs.items()}
        if lhs != rhs:
            return ("comult", i)
    return None
