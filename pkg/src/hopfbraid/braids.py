"""Braid words, braid group representations on tensor powers of modules over
a quasitriangular Hopf algebra, partial braided traces and braided dimensions.

Conventions
-----------
* ``c_{M,N}(m (x) n) = sum beta_j . n (x) alpha_j . m`` for ``R = sum alpha_j (x) beta_j``.
* The left dual of ``X`` is the dual space with ``(h . f)(x) = f(S(h) x)``,
  evaluation ``e_X(f (x) x) = f(x)`` and coevaluation ``1 -> sum e_i (x) e_i^*``.
* Letters of a braid word act in the order written: the first letter is
  applied first.
* The reversed braiding ``c_bar_{X,Y} = c_{Y,X}^{-1}`` is the braiding of the
  R-matrix ``R21^{-1}``, so every "reversed" computation runs on
  :func:`reversed_structure`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .double import QuasitriangularData
from .errors import (
    BadParameter,
    ClosedFormMismatch,
    DimensionMismatch,
    LetterOutOfRange,
    ParseError,
    ResourceLimitExceeded,
    ZeroLetter,
)
from .hopf import _add_into
from .linalg import dense_from_columns, invert, local_apply_sparse, zeros
from .modules import dual_module

__all__ = [
    "BraidWord",
    "parse_braid",
    "torus_braid",
    "reversed_structure",
    "braiding_map",
    "braiding_columns",
    "BraidedOperator",
    "MatrixOperator",
    "braid_operator",
    "partial_trace",
    "partial_trace_step",
    "braided_dim",
    "closed_form_trace",
    "t2q_closed_form",
    "transpose_partial_trace_sides",
    "MAX_TENSOR_DIM",
    "DENSE_LIMIT",
]

MAX_TENSOR_DIM = 10 ** 6
DENSE_LIMIT = 256


# -- braid words -------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BadParameter(f"a braid needs at least one strand, got {self.strands}")
        for w in self.letters:
            if w == 0:
                raise ZeroLetter("letter 0 is not a generator")
            if not 1 <= abs(w) <= self.strands - 1:
                raise LetterOutOfRange(f"letter {w} out of range for {self.strands} strands")

    def inverse(self):
        return BraidWord(self.strands, tuple(-w for w in reversed(self.letters)))

    def mirror(self):
        return BraidWord(self.strands, tuple(-w for w in self.letters))

    def __str__(self):
        return f"{self.strands}:" + "".join(f" {w}" for w in self.letters)


_BRAID_RE = re.compile(r"\s*(\d+)\s*:(.*)", re.DOTALL)
_LETTER_RE = re.compile(r"[+-]?\d+")


def parse_braid(text):
    """Parse ``"n: l1 l2 ..."``; letters are separated by spaces or commas."""
    if not isinstance(text, str):
        raise ParseError("braid must be given as text")
    m = _BRAID_RE.fullmatch(text)
    if not m:
        raise ParseError(f"expected 'n: letters', got {text!r}")
    n = int(m.group(1))
    body = m.group(2).strip()
    tokens = [t for t in re.split(r"[\s,]+", body) if t] if body else []
    letters = []
    for tok in tokens:
        if not _LETTER_RE.fullmatch(tok):
            raise ParseError(f"bad letter {tok!r}")
        letters.append(int(tok))
    if n < 1:
        raise ParseError("strand count must be positive")
    return BraidWord(n, tuple(letters))


def torus_braid(p, q):
    """(sigma_1 ... sigma_{p-1})^q."""
    if p < 2:
        raise BadParameter(f"torus braids need p >= 2, got {p}")
    block = tuple(range(1, p))
    if q >= 0:
        return BraidWord(p, block * q)
    return BraidWord(p, tuple(-w for w in reversed(block)) * (-q))


# -- braiding ----------------------------------------------------------------


def reversed_structure(Q):
    """The same Hopf algebra with R-matrix R21^{-1} = sum beta (x) S(alpha)."""
    cached = getattr(Q, "_reversed", None)
    if cached is None:
        H = Q.H
        cached = QuasitriangularData(H, [(b, H.S(a)) for a, b in Q.rfactors], base=Q.base)
        cached._reversed = Q
        Q._reversed = cached
    return cached


def _rmatrix_columns(M, N, factors, swap):
    """Sparse columns of sum a (x) b on M (x) N, optionally followed by the flip."""
    m, n = M.dim, N.dim
    out = [{} for _ in range(m * n)]
    for a, b in factors:
        ca, cb = M.element_columns(a), N.element_columns(b)
        for x in range(m):
            colx = ca[x]
            if not colx:
                continue
            for y in range(n):
                coly = cb[y]
                target = out[x * n + y]
                for i, u in colx.items():
                    for j, v in coly.items():
                        _add_into(target, j * m + i if swap else i * n + j, u * v)
    return out


def _cached(Q, M, N, key, build):
    cache = Q.__dict__.setdefault("_braid_cache", {})
    k = (id(M), id(N), key)
    if k not in cache:
        cache[k] = (M, N, build())
    return cache[k][2]


def braiding_columns(Q, M, N, variant="standard"):
    """Sparse columns of :func:`braiding_map`."""
    if variant == "standard":
        return _cached(Q, M, N, variant, lambda: _rmatrix_columns(M, N, Q.rfactors, True))
    if variant == "inverse":
        # c^{-1}(y (x) x) = R^{-1} (x (x) y): permute the input index, then act
        def build():
            act = _rmatrix_columns(M, N, Q.R_inverse_factors(), False)
            m, n = M.dim, N.dim
            return [act[x * n + y] for y in range(n) for x in range(m)]

        return _cached(Q, M, N, variant, build)
    if variant == "reversed":
        return braiding_columns(Q, N, M, "inverse")
    raise BadParameter(f"unknown braiding variant {variant!r}")


def braiding_map(Q, M, N, variant="standard"):
    """Braiding matrices between M (x) N and N (x) M.

    ``standard``: c_{M,N}: M (x) N -> N (x) M.
    ``inverse``: c_{M,N}^{-1}: N (x) M -> M (x) N, built from (S (x) id)R.
    ``reversed``: c_bar_{M,N} = c_{N,M}^{-1}: M (x) N -> N (x) M.
    """
    cols = braiding_columns(Q, M, N, variant)
    return dense_from_columns(cols, M.dim * N.dim, Q.field)


def _orient(Q, orientation):
    if orientation == "standard":
        return Q
    if orientation == "reversed":
        return reversed_structure(Q)
    raise BadParameter(f"unknown orientation {orientation!r}")


# -- operators on tensor powers ---------------------------------------------


class MatrixOperator:
    """An endomorphism of M^{(x) n} stored as a dense matrix."""

    def __init__(self, module, n, matrix):
        self.module = module
        self.n = n
        self.matrix = np.asarray(matrix, dtype=object)
        if self.matrix.shape != (module.dim ** n,) * 2:
            raise DimensionMismatch("operator matrix has the wrong size")

    @property
    def size(self):
        return self.module.dim ** self.n

    def apply(self, vec):
        out = {}
        for j, a in vec.items():
            col = self.matrix[:, j]
            for i in np.nonzero(col)[0]:
                _add_into(out, int(i), a * col[i])
        return out

    def column(self, j):
        col = self.matrix[:, j]
        return {int(i): col[i] for i in np.nonzero(col)[0]}

    def columns(self):
        for j in range(self.size):
            yield j, self.column(j)

    def to_matrix(self):
        return self.matrix

    def scalar(self):
        if self.n != 0:
            raise DimensionMismatch("operator is not a scalar")
        return self.matrix[0, 0]


class BraidedOperator:
    """rho(b) on M^{(x) n}, applied letter by letter through local operators."""

    def __init__(self, Q, module, word):
        self.Q = Q
        self.module = module
        self.word = word
        self.n = word.strands
        d = module.dim
        if d ** self.n > MAX_TENSOR_DIM:
            raise ResourceLimitExceeded(f"{d}^{self.n} exceeds the tensor size limit {MAX_TENSOR_DIM}")
        self._local = {}
        self._matrix = None

    @property
    def size(self):
        return self.module.dim ** self.n

    def _local_cols(self, sign):
        if sign not in self._local:
            variant = "standard" if sign > 0 else "inverse"
            self._local[sign] = braiding_columns(self.Q, self.module, self.module, variant)
        return self._local[sign]

    def apply(self, vec):
        d = self.module.dim
        for w in self.word.letters:
            vec = local_apply_sparse(self._local_cols(1 if w > 0 else -1), d, self.n, abs(w), vec)
        return vec

    def column(self, j):
        if self._matrix is not None:
            col = self._matrix[:, j]
            return {int(i): col[i] for i in np.nonzero(col)[0]}
        return self.apply({j: self.module.field.one})

    def columns(self):
        for j in range(self.size):
            yield j, self.column(j)

    def to_matrix(self):
        """Dense matrix; only materialized for small tensor powers."""
        if self._matrix is None:
            if self.size > DENSE_LIMIT:
                raise ResourceLimitExceeded(f"refusing to materialize a {self.size}-dim operator")
            cols = [self.apply({j: self.module.field.one}) for j in range(self.size)]
            self._matrix = dense_from_columns(cols, self.size, self.module.field)
        return self._matrix


def braid_operator(Q, M, word):
    return BraidedOperator(Q, M, word)


# -- partial traces ------------------------------------------------------------


def _dual(X):
    if getattr(X, "_left_dual", None) is None:
        X._left_dual = dual_module(X)
    return X._left_dual


def _left_weights(Q, X):
    """w[a, b] with c^{-1}_{X*,X}(n_X) = sum w[a, b] e_a^* (x) e_b."""
    d = X.dim
    cols = braiding_columns(Q, _dual(X), X, "inverse")  # X (x) X* -> X* (x) X
    w = zeros(Q.field, d * d, 1)
    for i in range(d):
        for k, v in cols[i * d + i].items():
            w[k, 0] = w[k, 0] + v
    return w.reshape(d, d)


def _right_weights(Q, X):
    """w[a, i] = e_X(c_{X,X*}(e_a (x) e_i^*))."""
    d = X.dim
    cols = braiding_columns(Q, X, _dual(X), "standard")  # X (x) X* -> X* (x) X
    w = zeros(Q.field, d * d, 1)
    for j, col in enumerate(cols):
        for i in range(d):
            v = col.get(i * d + i)
            if v:
                w[j, 0] = w[j, 0] + v
    return w.reshape(d, d)


def partial_trace(Q, columns, X, other, side, orientation="standard"):
    """Partial braided trace over X of a map given by its sparse columns.

    ``side == "left"``: the map is X (x) Y -> X (x) Z with ``other = (dim Y, dim Z)``.
    ``side == "right"``: the map is Y (x) X -> Z (x) X.
    Returns the dense dim Z x dim Y matrix of the trace.
    """
    Qo = _orient(Q, orientation)
    f = Q.field
    d = X.dim
    ny, nz = other
    out = zeros(f, nz, ny)
    if side == "left":
        w = _left_weights(Qo, X)
        for j, col in columns:
            b, y = divmod(j, ny)
            for i, v in col.items():
                a, z = divmod(i, nz)
                wt = w[a, b]
                if wt:
                    out[z, y] = out[z, y] + wt * v
    elif side == "right":
        w = _right_weights(Qo, X)
        for j, col in columns:
            y, b = divmod(j, d)
            for i, v in col.items():
                z, a = divmod(i, d)
                wt = w[a, b]
                if wt:
                    out[z, y] = out[z, y] + wt * v
    else:
        raise BadParameter(f"unknown side {side!r}")
    return out


def partial_trace_step(Q, op, side, orientation="standard"):
    """Trace out the first (left) or last (right) factor of an operator on M^{(x) n}."""
    M = op.module
    rest = M.dim ** (op.n - 1)
    mat = partial_trace(Q, op.columns(), M, (rest, rest), side, orientation)
    return MatrixOperator(M, op.n - 1, mat)


def _u_matrix(Q, M, side):
    el = Q.elements
    return M.element_matrix(el.u if side == "right" else el.u_inv)


def closed_form_trace(Q, op, side, orientation="standard"):
    """Tr((u^{-1})^{(x) n} f) on the left, Tr(u^{(x) n} f) on the right."""
    Qo = _orient(Q, orientation)
    U = _u_matrix(Qo, op.module, side)
    d, n = op.module.dim, op.n
    total = Q.field.zero
    for j, col in op.columns():
        jd = _digits(j, d, n)
        for i, v in col.items():
            w = Q.field.one
            for a, b in zip(jd, _digits(i, d, n)):
                w = w * U[a, b]
                if not w:
                    break
            if w:
                total = total + w * v
    return total


@lru_cache(maxsize=4096)
def _digits(k, d, n):
    out = []
    for _ in range(n):
        k, r = divmod(k, d)
        out.append(r)
    return tuple(reversed(out))


def braided_dim(Q, M, word, side="left", orientation="standard", check=True):
    """Iterated partial braided trace of rho(word) on M^{(x) n}.

    With ``check`` the value is compared with the Drinfeld-element closed
    form and :class:`ClosedFormMismatch` is raised on disagreement.
    """
    if isinstance(word, str):
        word = parse_braid(word)
    if side not in ("left", "right"):
        raise BadParameter(f"unknown side {side!r}")
    Qo = _orient(Q, orientation)
    op = braid_operator(Qo, M, word)
    cur = op
    for _ in range(word.strands):
        cur = partial_trace_step(Qo, cur, side)
    value = cur.scalar()
    if check:
        expected = closed_form_trace(Qo, op, side)
        if expected != value:
            raise ClosedFormMismatch(
                f"iterated trace {value} != closed form {expected} for {word} ({side}, {orientation})"
            )
    return value


# -- torus braids t_{2,q} ------------------------------------------------------


def _power(H, x, k):
    return H.power(x, k)


def t2q_closed_form(Q, M, q, side="left", orientation="standard"):
    """Drinfeld-element formula for the t_{2,q} braided dimension."""
    if q < 0:
        raise BadParameter("q must be non-negative")
    Qo = _orient(Q, orientation)
    H = Qo.H
    el = Qo.elements
    m, odd = divmod(q, 2)
    e = m - 1 if side == "left" else m + 1
    if side not in ("left", "right"):
        raise BadParameter(f"unknown side {side!r}")
    ue = _power(H, el.u, e) if e >= 0 else _power(H, el.u_inv, -e)
    dm = H.delta(_power(H, el.u_inv, m))
    ue2 = {(i, j): x * y for i, x in ue.items() for j, y in ue.items()}
    E = H.tensor_mul(ue2, dm)
    f = Q.field
    total = f.zero
    traces = {}

    def tr(h):
        if h not in traces:
            traces[h] = sum((M.action(h)[k, k] for k in range(M.dim)), f.zero)
        return traces[h]

    if not odd:
        for (i, j), c in E.items():
            total = total + c * tr(i) * tr(j)
        return total
    R21 = {(j, i): v for (i, j), v in Qo.R().items()}
    E = H.tensor_mul(E, R21)
    for (i, j), c in E.items():
        for k, v in H.mul(H.basis(i), H.basis(j)).items():
            total = total + c * v * tr(k)
    return total


# -- transpose relation between left and right traces ------------------------


def _j_perm(field, dx, dy):
    """j_{X,Y}: Y* (x) X* -> (X (x) Y)*, as a permutation in dual bases."""
    out = zeros(field, dx * dy)
    for b in range(dy):
        for a in range(dx):
            out[a * dy + b, b * dx + a] = field.one
    return out


def transpose_partial_trace_sides(Q, F, X, dy, dz):
    """Both sides of the left/right transpose relation for f: X (x) Y -> X (x) Z.

    Returns ``(lhs, rhs)`` where ``lhs`` is the right partial trace over X* of
    ``j_{X,Y}^{-1} o f^t o j_{X,Z}`` and ``rhs`` is the transpose of the left
    partial trace over X of f for the reversed braiding.  Both are dim Y x dim Z
    matrices representing maps Z* -> Y*.
    """
    f = Q.field
    dx = X.dim
    F = np.asarray(F, dtype=object)
    if F.shape != (dx * dz, dx * dy):
        raise DimensionMismatch("f has the wrong shape")
    jy, jz = _j_perm(f, dx, dy), _j_perm(f, dx, dz)
    G = invert(jy, f) @ F.T @ jz  # Z* (x) X* -> Y* (x) X*
    lhs = partial_trace(Q, _dense_columns(G), _dual(X), (dz, dy), "right")
    rhs = partial_trace(Q, _dense_columns(F), X, (dy, dz), "left", "reversed").T
    return lhs, rhs


def _dense_columns(m):
    for j in range(m.shape[1]):
        col = m[:, j]
        yield j, {int(i): col[i] for i in np.nonzero(col)[0]}
