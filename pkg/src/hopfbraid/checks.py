"""Named verification checks grouped into suites, used by ``hopfbraid verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .braids import (
    BraidWord,
    braid_operator,
    braided_dim,
    parse_braid,
    t2q_closed_form,
    torus_braid,
    transpose_partial_trace_sides,
)
from .double import build_double, double_of_iso, phi_iso, validate_qt
from .errors import HopfBraidError
from .hopf import integrals, trace_s_squared, validate_hopf
from .modules import (
    canonical_module,
    coaction_of,
    coinduced_trivial,
    comodule_tensor,
    dual_module,
    dual_schrodinger,
    find_iso,
    induce_from_comodule,
    induce_from_module,
    is_intertwiner,
    is_invertible,
    induced_tensor_map,
    coinduced_tensor_map,
    pullback_module,
    regular_comodule,
    restrict_to_base,
    schrodinger,
    su_action_closed_form,
    tensor_module,
    trivial_comodule,
    u_action_closed_form,
    validate_module,
    z_action_closed_form,
)
from .oracle import fy_fixed_points
from .zoo import (
    algebra_from_spec,
    find_group_isomorphism,
    group_algebra_map,
    group_stats,
    make_group,
)

__all__ = ["CheckResult", "SUITES", "run_suite", "run_checks", "BUILTINS", "BRAID_SUITE"]

BUILTINS = ("group:C2", "group:S3", "dualgroup:S3", "sweedler", "taft:3")
BRAID_SUITE = ("1:", "2: 1", "2: -1", "2: 1 1", "2: 1 1 1", "3: 1 -2")


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self):
        tag = "PASS" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{tag} {self.name}{tail} ({self.seconds:.2f}s)"


@lru_cache(maxsize=None)
def algebra(spec):
    return algebra_from_spec(spec)


@lru_cache(maxsize=None)
def double(spec):
    return build_double(algebra(spec))


@lru_cache(maxsize=None)
def schr(spec):
    return schrodinger(double(spec))


def _iso(T, M, N):
    return is_intertwiner(T, M, N) and is_invertible(T, M.field)


def _expect(pairs):
    bad = [f"{label}: got {got}, expected {want}" for label, got, want in pairs if got != want]
    return "; ".join(bad) or None


# -- axioms --------------------------------------------------------------------


def _hopf_axioms(spec):
    def check():
        rep = validate_hopf(algebra(spec))
        return None if rep.ok else str(rep.failures()[0])

    return check


def _double_axioms(spec):
    def check():
        Q = double(spec)
        for rep in (validate_hopf(Q.H), validate_qt(Q)):
            if not rep.ok:
                return str(rep.failures()[0])
        Q.elements  # raises on a failed Drinfeld-element identity
        return None

    return check


# -- modules ---------------------------------------------------------------------


def _module_axioms(spec):
    def check():
        Q = double(spec)
        for M in (schr(spec), dual_schrodinger(Q)):
            rep = validate_module(M)
            if not rep.ok:
                return f"{M.name}: {rep.failures()[0]}"
        return None

    return check


def _radford(spec):
    def check():
        A, Q = algebra(spec), double(spec)
        triv = canonical_module(A, "trivial")
        if not _iso(A.antipode_inverse, schr(spec), induce_from_module(Q, triv)):
            return "S^-1 is not an isomorphism onto I_A(k)"
        if not _iso(A.antipode_inverse.T, dual_schrodinger(Q), dual_module(coinduced_trivial(Q))):
            return "S^-1 transposed is not an isomorphism onto the dual of I^A(k)"
        return None

    return check


def _phi_pullback(spec):
    def check():
        A, Q = algebra(spec), double(spec)
        Phi, Qd = phi_iso(A, Q)
        back = pullback_module(Phi, dual_schrodinger(Qd), Q.H)
        if not _iso(A.antipode, back, schr(spec)):
            return "S is not an isomorphism from the pulled-back dual Schroedinger module"
        Phi2, _ = phi_iso(Qd.base, Qd)
        if not linalg.is_identity(Phi2 @ Phi):
            return "phi_{A*} phi_A is not D(iota_A)"
        ds = pullback_module(linalg.invert(Phi, A.field), dual_schrodinger(Q), Qd.H)
        if not _iso(Qd.base.antipode, ds, schrodinger(Qd)):
            return "dual-side statement fails"
        return None

    return check


def _induction_tensor(spec):
    def check():
        A, Q = algebra(spec), double(spec)
        Sch, DS = schr(spec), dual_schrodinger(Q)
        for V in (canonical_module(A, "trivial"), canonical_module(A, "regular")):
            for M in (Sch, DS):
                left = tensor_module(induce_from_module(Q, V), M)
                right = induce_from_module(Q, tensor_module(V, restrict_to_base(Q, M)))
                if not _iso(induced_tensor_map(Q, V, M), left, right):
                    return f"Phi fails for V={V.name}, M={M.name}"
        for N in (trivial_comodule(A), regular_comodule(A)):
            left = induce_from_comodule(Q, comodule_tensor(N, coaction_of(Q, Sch)))
            right = tensor_module(induce_from_comodule(Q, N), Sch)
            if not _iso(coinduced_tensor_map(Q, N, Sch), left, right):
                return f"Psi fails for N={N.name}"
        return None

    return check


def _schr_tensor(spec):
    def check():
        A, Q = algebra(spec), double(spec)
        Sch = schr(spec)
        target = induce_from_module(Q, canonical_module(A, "adjoint"))
        T = induced_tensor_map(Q, canonical_module(A, "trivial"), Sch) @ np.kron(
            A.antipode_inverse, linalg.identity(A.field, A.dim)
        )
        if not _iso(T, tensor_module(Sch, Sch), target):
            return "explicit map Schr (x) Schr -> I_A(A_ad) is not an isomorphism"
        res = find_iso(tensor_module(Sch, dual_schrodinger(Q)), canonical_module(Q.H, "regular"))
        return None if res.found else f"no isomorphism Schr (x) dualSchr -> D(A) ({res.status})"

    return check


def _drinfeld_actions(spec):
    def check():
        A, Q = algebra(spec), double(spec)
        M, el = schr(spec), Q.elements
        data = integrals(A)
        if not linalg.equal(M.element_matrix(el.u), u_action_closed_form(A, data)):
            return "u action differs from closed form"
        if not linalg.equal(M.element_matrix(el.Su), su_action_closed_form(A)):
            return "S(u) action differs from closed form"
        z = M.element_matrix(el.z)
        if not linalg.equal(z, z_action_closed_form(A, data)):
            return "z action differs from closed form"
        unimodular = all(a == e for a, e in zip(data.alpha, A.counit))
        if linalg.is_identity(z) != unimodular:
            return "z acts trivially exactly when A is unimodular: violated"
        return None

    return check


# -- traces ------------------------------------------------------------------------


def _quantum_dim(spec):
    def check():
        A, Q = algebra(spec), double(spec)
        want = trace_s_squared(A)
        got = braided_dim(Q, schr(spec), BraidWord(1), "right")
        return _expect([("1-dim right", got, want)])

    return check


def _braid_relations(spec):
    def check():
        Q, M = double(spec), schr(spec)
        a = braid_operator(Q, M, parse_braid("3: 1 2 1")).to_matrix()
        b = braid_operator(Q, M, parse_braid("3: 2 1 2")).to_matrix()
        if not linalg.equal(a, b):
            return "sigma1 sigma2 sigma1 != sigma2 sigma1 sigma2"
        M3 = tensor_module(tensor_module(M, M), M)
        if not is_intertwiner(a, M3, M3):
            return "braid operator is not D(A)-linear"
        if not linalg.is_identity(braid_operator(Q, M, parse_braid("2: 1 -1")).to_matrix()):
            return "sigma1 sigma1^-1 != id"
        return None

    return check


def _dual_vs_reversed(spec):
    def check():
        Q, M = double(spec), schr(spec)
        Md = dual_module(M)
        pairs = []
        for w in BRAID_SUITE[:5]:
            b = parse_braid(w)
            pairs.append((w, braided_dim(Q, Md, b, "right"), braided_dim(Q, M, b, "left", "reversed")))
        return _expect(pairs)

    return check


def _transpose_relation(spec, seed=0, trials=3):
    def check():
        Q, M = double(spec), schr(spec)
        rng = random.Random(seed)
        d = M.dim
        for _ in range(trials):
            letters = tuple(rng.choice((1, -1)) for _ in range(rng.randint(0, 4)))
            F = braid_operator(Q, M, BraidWord(2, letters)).to_matrix()
            lhs, rhs = transpose_partial_trace_sides(Q, F, M, d, d)
            if not linalg.equal(lhs, rhs):
                return f"transpose relation fails for letters {letters}"
        return None

    return check


def _iso_invariance():
    G, H = make_group("C6"), make_group("C2xC3")
    A, B = algebra("group:C6"), algebra("group:C2xC3")
    F = group_algebra_map(find_group_isomorphism(G, H))
    QA, QB = double("group:C6"), double("group:C2xC3")
    DF = double_of_iso(F, A, B, QA, QB)
    SA, SB = schr("group:C6"), schr("group:C2xC3")
    P = pullback_module(DF, SB, QA.H)
    if not _iso(F, SA, P):
        return "f is not an isomorphism Schr(A) -> D(f)^* Schr(B)"
    pairs = []
    for w in BRAID_SUITE:
        b = parse_braid(w)
        for side in ("left", "right"):
            x = braided_dim(QA, SA, b, side)
            pairs.append((f"{w} {side} B", braided_dim(QB, SB, b, side), x))
            pairs.append((f"{w} {side} pullback", braided_dim(QA, P, b, side), x))
    return _expect(pairs)


def _phi_invariance(spec):
    def check():
        A, Q = algebra(spec), double(spec)
        Phi, Qd = phi_iso(A, Q)
        P = pullback_module(Phi, dual_schrodinger(Qd), Q.H)
        pairs = []
        for w in BRAID_SUITE[:5]:
            b = parse_braid(w)
            for side in ("left", "right"):
                pairs.append((f"{w} {side}", braided_dim(Q, P, b, side), braided_dim(Q, schr(spec), b, side)))
        return _expect(pairs)

    return check


# -- theorems --------------------------------------------------------------------


T22_GROUPS = ("C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8")


def _t22():
    pairs = []
    t22 = torus_braid(2, 2)
    for g in T22_GROUPS:
        spec = f"group:{g}"
        st = group_stats(make_group(g))
        want = make_group(g).order * st["conjClassCount"]
        for side in ("left", "right"):
            pairs.append((f"{g} {side}", braided_dim(double(spec), schr(spec), t22, side), want))
    return _expect(pairs)


def random_braids(count, seed, max_strands=3, max_letters=6):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_strands)
        length = rng.randint(0, max_letters) if n > 1 else 0
        out.append(BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))))
    return out


def _oracle():
    pairs = []
    for g in ("C2", "S3"):
        spec = f"group:{g}"
        G = make_group(g)
        for b in random_braids(20, seed=2024):
            want = fy_fixed_points(G, b)
            for side in ("left", "right"):
                pairs.append((f"{g} [{b}] {side}", braided_dim(double(spec), schr(spec), b, side), want))
    return _expect(pairs)


def _dual_group():
    spec = "dualgroup:S3"
    got = braided_dim(double(spec), schr(spec), torus_braid(2, 2), "left")
    group = braided_dim(double("group:S3"), schr("group:S3"), torus_braid(2, 2), "left")
    if group == got:
        return "k^G and k[G] are not separated"
    return _expect([("k^S3 t22", got, make_group("S3").order ** 2)])


def _vanishing(spec):
    def check():
        Q, M = double(spec), schr(spec)
        pairs = []
        for w in BRAID_SUITE:
            for side in ("left", "right"):
                for orient in ("standard", "reversed"):
                    pairs.append((f"{w} {side} {orient}", braided_dim(Q, M, parse_braid(w), side, orient), 0))
        return _expect(pairs)

    return check


def _torus_closed_forms(spec):
    def check():
        Q, M = double(spec), schr(spec)
        pairs = []
        for q in range(6):
            for side in ("left", "right"):
                pairs.append((f"q={q} {side}", t2q_closed_form(Q, M, q, side),
                              braided_dim(Q, M, torus_braid(2, q), side)))
        return _expect(pairs)

    return check


def _involutory_unimodular(spec):
    def check():
        Q, M = double(spec), schr(spec)
        pairs = []
        for w in BRAID_SUITE:
            b = parse_braid(w)
            tr = linalg.trace(braid_operator(Q, M, b).to_matrix(), M.field)
            for side in ("left", "right"):
                pairs.append((f"{w} {side}", braided_dim(Q, M, b, side), tr))
        return _expect(pairs)

    return check


SUITES = {
    "axioms": (
        [(f"hopf axioms {s}", _hopf_axioms(s)) for s in BUILTINS + ("group:C6", "group:C2xC3")]
        + [(f"double axioms D({s})", _double_axioms(s)) for s in BUILTINS]
    ),
    "schrodinger": (
        [(f"module axioms {s}", _module_axioms(s)) for s in BUILTINS]
        + [(f"Radford induction isos {s}", _radford(s)) for s in ("group:C2", "sweedler", "group:S3")]
        + [(f"phi_A pullback iso {s}", _phi_pullback(s)) for s in ("group:C2", "sweedler")]
        + [(f"induction tensor isos {s}", _induction_tensor(s)) for s in ("group:C2", "sweedler")]
        + [(f"Schr tensor isos {s}", _schr_tensor(s)) for s in ("group:C2", "sweedler")]
        + [(f"Drinfeld element actions {s}", _drinfeld_actions(s)) for s in BUILTINS]
    ),
    "traces": (
        [(f"quantum dimension {s}", _quantum_dim(s)) for s in BUILTINS]
        + [(f"braid relations {s}", _braid_relations(s)) for s in ("group:S3", "sweedler")]
        + [(f"dual module vs reversed braiding {s}", _dual_vs_reversed(s)) for s in ("sweedler", "group:S3", "dualgroup:S3")]
        + [("transpose relation sweedler", _transpose_relation("sweedler"))]
        + [("isomorphism invariance C6 vs C2xC3", _iso_invariance)]
        + [(f"phi_A invariance {s}", _phi_invariance(s)) for s in ("group:C2", "sweedler")]
    ),
    "theorems": (
        [("t22 = |G| #Conj(G)", _t22), ("Freyd-Yetter oracle", _oracle), ("dual group algebra |G|^2", _dual_group)]
        + [(f"vanishing {s}", _vanishing(s)) for s in ("sweedler", "taft:3")]
        + [(f"torus closed forms {s}", _torus_closed_forms(s)) for s in ("sweedler", "group:C3")]
        + [(f"involutory unimodular {s}", _involutory_unimodular(s)) for s in ("group:S3", "group:C3")]
    ),
}


def run_checks(checks):
    results = []
    for name, fn in checks:
        t0 = time.perf_counter()
        try:
            detail = fn()
            ok = detail is None
        except HopfBraidError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, detail or "", time.perf_counter() - t0))
    return results


def run_suite(name):
    if name == "all":
        checks = [c for suite in SUITES.values() for c in suite]
    elif name in SUITES:
        checks = SUITES[name]
    else:
        raise KeyError(name)
    return run_checks(checks)
