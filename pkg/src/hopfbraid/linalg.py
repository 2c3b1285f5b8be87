"""Exact dense and sparse linear algebra over the fields in :mod:`hopfbraid.fields`.

Dense matrices are numpy ``dtype=object`` arrays whose entries are field
elements.  Column ``j`` of a matrix holds the image of the ``j``-th basis
vector, so applying a map is ``M @ v``.  Sparse vectors are plain dicts
``{index: value}`` with no zero values stored.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, SingularMatrix
from .fields import QQ, field_of

__all__ = [
    "matrix",
    "identity",
    "zeros",
    "infer_field",
    "matmul",
    "invert",
    "nullspace",
    "nullspace_rows",
    "rank",
    "trace",
    "is_identity",
    "equal",
    "local_apply",
    "local_apply_sparse",
    "sparse_columns",
    "dense_from_columns",
    "sparse_add",
    "sparse_scale",
    "to_sparse",
    "to_dense",
    "permutation_swap",
]


def zeros(field, rows, cols=None):
    cols = rows if cols is None else cols
    out = np.empty((rows, cols), dtype=object)
    out.fill(field.zero)
    return out


def identity(field, n):
    out = zeros(field, n)
    for i in range(n):
        out[i, i] = field.one
    return out


def matrix(field, rows):
    """Build an object matrix from nested lists, coercing every entry."""
    rows = [list(r) for r in rows]
    if not rows:
        return np.empty((0, 0), dtype=object)
    width = len(rows[0])
    out = np.empty((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        if len(r) != width:
            raise DimensionMismatch("ragged matrix rows")
        for j, x in enumerate(r):
            out[i, j] = field(x)
    return out


def infer_field(m, default=QQ):
    """Field of the entries of ``m``; raises FieldMismatch if they disagree."""
    found = None
    for x in np.asarray(m, dtype=object).flat:
        if isinstance(x, (int, np.integer)):
            continue
        f = field_of(x)
        if f is QQ and not hasattr(x, "denominator"):
            continue
        if found is None:
            found = f
        elif f != found and f != QQ and found != QQ:
            raise FieldMismatch(f"entries from {found} and {f}")
        elif found == QQ and f != QQ:
            found = f
    return found if found is not None else default


def matmul(a, b):
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def equal(a, b):
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def is_identity(m):
    n, k = m.shape
    if n != k:
        return False
    for i in range(n):
        for j in range(n):
            if m[i, j] != (1 if i == j else 0):
                return False
    return True


def trace(m, field=None):
    field = field or infer_field(m)
    total = field.zero
    for i in range(min(m.shape)):
        total = total + m[i, i]
    return total


def invert(m, field=None):
    """Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting."""
    m = np.asarray(m, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"cannot invert a {m.shape} matrix")
    field = field or infer_field(m)
    n = m.shape[0]
    rows = [[field(x) for x in m[i]] + [field.one if i == j else field.zero for j in range(n)]
            for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise SingularMatrix(f"matrix is singular (no pivot in column {col})")
        rows[col], rows[piv] = rows[piv], rows[col]
        prow = rows[col]
        inv = field.inverse(prow[col])
        prow = [x * inv if x else x for x in prow]
        rows[col] = prow
        for r in range(n):
            if r != col:
                f = rows[r][col]
                if f:
                    rows[r] = [x - f * y if y else x for x, y in zip(rows[r], prow)]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        out[i, :] = rows[i][n:]
    return out


def nullspace_rows(rows, ncols, field):
    """Nullspace of a system given as sparse rows ``{col: coeff}``.

    Returns a list of sparse solution vectors, one per free variable, in
    increasing order of the free column.
    """
    pivots = []  # (pivot column, normalized row) in insertion order
    pivot_cols = set()
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        if not r:
            continue
        for pc, prow in pivots:
            f = r.get(pc)
            if f:
                for c, v in prow.items():
                    nv = r.get(c, field.zero) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
        if not r:
            continue
        pc = min(r)
        inv = field.inverse(r[pc])
        r = {c: v * inv for c, v in r.items()}
        pivots.append((pc, r))
        pivot_cols.add(pc)

    # express every pivot variable in terms of free variables
    expr = {}
    for pc, prow in reversed(pivots):
        e = {}
        for c, v in prow.items():
            if c == pc:
                continue
            if c in pivot_cols:
                for fcol, w in expr[c].items():
                    nv = e.get(fcol, field.zero) - v * w
                    if nv:
                        e[fcol] = nv
                    else:
                        e.pop(fcol, None)
            else:
                nv = e.get(c, field.zero) - v
                if nv:
                    e[c] = nv
                else:
                    e.pop(c, None)
        expr[pc] = e

    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: field.one}
        for pc, e in expr.items():
            w = e.get(free)
            if w:
                vec[pc] = w
        basis.append(vec)
    return basis


def nullspace(m, field=None):
    """Basis (list of dense vectors) of the kernel of ``m``."""
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise DimensionMismatch("nullspace needs a matrix")
    field = field or infer_field(m)
    rows = []
    for i in range(m.shape[0]):
        rows.append({j: field(x) for j, x in enumerate(m[i]) if x})
    return [to_dense(v, m.shape[1], field) for v in nullspace_rows(rows, m.shape[1], field)]


def rank(m, field=None):
    m = np.asarray(m, dtype=object)
    return m.shape[1] - len(nullspace(m, field))


def to_dense(vec, n, field):
    out = np.empty(n, dtype=object)
    out.fill(field.zero)
    for i, v in vec.items():
        out[i] = v
    return out


def to_sparse(v):
    return {i: x for i, x in enumerate(v) if x}


def sparse_add(acc, vec, scale=None):
    """In-place ``acc += scale * vec`` on sparse dicts, dropping zeros."""
    for i, v in vec.items():
        w = v if scale is None else v * scale
        nv = acc[i] + w if i in acc else w
        if nv:
            acc[i] = nv
        else:
            acc.pop(i, None)
    return acc


def sparse_scale(vec, c):
    if not c:
        return {}
    return {i: v * c for i, v in vec.items() if v * c}


def sparse_columns(m):
    """Column j of ``m`` as a sparse dict."""
    return [{i: m[i, j] for i in range(m.shape[0]) if m[i, j]} for j in range(m.shape[1])]


def dense_from_columns(cols, nrows, field):
    out = zeros(field, nrows, len(cols))
    for j, col in enumerate(cols):
        for i, v in col.items():
            out[i, j] = v
    return out


def _check_local(op_dim, d, n, i, vlen):
    if op_dim != d * d:
        raise DimensionMismatch(f"operator of size {op_dim} does not act on two factors of dim {d}")
    if not 1 <= i <= n - 1:
        raise DimensionMismatch(f"factor pair ({i},{i + 1}) out of range for {n} factors")
    if vlen != d ** n:
        raise DimensionMismatch(f"vector length {vlen} != {d}^{n}")


def local_apply(op, d, n, i, v):
    """Apply ``id^(i-1) (x) op (x) id^(n-i-1)`` to a dense vector of length d^n.

    ``op`` is a d^2 x d^2 matrix acting on factors ``i, i+1`` (1-based).
    """
    op = np.asarray(op, dtype=object)
    v = np.asarray(v, dtype=object)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionMismatch("operator must be square")
    _check_local(op.shape[0], d, n, i, v.shape[0])
    left, right = d ** (i - 1), d ** (n - i - 1)
    blocks = v.reshape(left, d * d, right)
    out = np.empty_like(blocks)
    for a in range(left):
        out[a] = op @ blocks[a]
    return out.reshape(-1)


def local_apply_sparse(op_cols, d, n, i, vec):
    """Sparse analogue of :func:`local_apply`.

    ``op_cols`` lists the d^2 columns of the operator as sparse dicts, and
    ``vec`` is a sparse dict over ``range(d**n)``.
    """
    _check_local(len(op_cols), d, n, i, d ** n)
    right = d ** (n - i - 1)
    block = d * d * right
    out = {}
    for idx, val in vec.items():
        a, rest = divmod(idx, block)
        mid, c = divmod(rest, right)
        base = a * block + c
        for row, coeff in op_cols[mid].items():
            k = base + row * right
            nv = out[k] + coeff * val if k in out else coeff * val
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def permutation_swap(field, m, n):
    """Matrix of the flip V (x) W -> W (x) V with dim V = m, dim W = n."""
    out = zeros(field, m * n)
    for x in range(m):
        for y in range(n):
            out[y * m + x, x * n + y] = field.one
    return out


# -- modular screening -----------------------------------------------------

_SCREEN_BITS = 30


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_REDUCTIONS = {}


def _reduction(field):
    """(p, map scalar -> residue or None) for screening, cached per field."""
    key = (field.kind, field.param)
    if key in _REDUCTIONS:
        return _REDUCTIONS[key]
    if field.kind == "prime-field":
        p = field.p
        red = (p, lambda x: x.v)
    else:
        m = field.param if field.kind == "cyclotomic" else 1
        p = (1 << _SCREEN_BITS) + 1
        while not (p % m == 1 % m and _is_probable_prime(p)):
            p += 2 if p % 2 else 1
        if field.kind == "rationals":
            def red(x, p=p):
                den = int(x.denominator) % p
                return None if den == 0 else int(x.numerator) * pow(den, -1, p) % p
        else:
            phi = field.phi
            root = None
            for g in range(2, 1000):
                r = pow(g, (p - 1) // m, p)
                if sum(c * pow(r, k, p) for k, c in enumerate(phi)) % p == 0:
                    root = r
                    break
            powers = [pow(root, k, p) for k in range(field.degree)]

            def red(x, p=p, powers=powers):
                total = 0
                for c, w in zip(x.c, powers):
                    if c:
                        den = int(c.denominator) % p
                        if den == 0:
                            return None
                        total += int(c.numerator) * pow(den, -1, p) * w
                return total % p
        red = (p, red)
    _REDUCTIONS[key] = red
    return red


def _reduce_matrix(m, field):
    p, red = _reduction(field)
    n, k = m.shape
    a = np.zeros((n, k), dtype=np.int64)
    for i in range(n):
        for j in range(k):
            x = m[i, j]
            if x:
                r = red(field(x))
                if r is None:
                    return None
                a[i, j] = r
    return a


def _full_rank_mod(a, p):
    a = a.copy()
    n = a.shape[0]
    for col in range(n):
        nz = np.nonzero(a[col:, col])[0]
        if nz.size == 0:
            return False
        piv = col + nz[0]
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
        inv = pow(int(a[col, col]), -1, p)
        a[col] = (a[col] * inv) % p
        below = a[col + 1:, col].copy()
        if below.any():
            a[col + 1:] = (a[col + 1:] - (below[:, None] * a[col][None, :]) % p) % p
    return True


def reduce_stack(mats, field):
    """Reductions of several square matrices modulo the screening prime, or None."""
    p, _ = _reduction(field)
    out = []
    for m in mats:
        a = _reduce_matrix(m, field)
        if a is None:
            return None
        out.append(a)
    return p, np.stack(out)


def modular_invertible(stack, coeffs):
    """Is sum c_i B_i invertible modulo the screening prime?"""
    p, mats = stack
    acc = np.zeros(mats.shape[1:], dtype=np.int64)
    for c, B in zip(coeffs, mats):
        if c:
            acc = (acc + (c % p) * B) % p
    return _full_rank_mod(acc, p)


def surely_invertible(m, field):
    """True if the reduction of ``m`` modulo a screening prime is invertible.

    A True answer is a proof of invertibility; False means "unknown".
    """
    p, _ = _reduction(field)
    a = _reduce_matrix(m, field)
    return a is not None and _full_rank_mod(a, p)
