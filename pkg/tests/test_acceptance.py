"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import random

import numpy as np

from hopfbraid import linalg
from hopfbraid.braids import (
    BraidWord,
    braid_operator,
    braided_dim,
    parse_braid,
    t2q_closed_form,
    torus_braid,
    transpose_partial_trace_sides,
)
from hopfbraid.checks import random_braids
from hopfbraid.double import double_of_iso, phi_iso, validate_qt
from hopfbraid.hopf import integrals, trace_s_squared, validate_hopf
from hopfbraid.modules import (
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
    su_action_closed_form,
    tensor_module,
    trivial_comodule,
    u_action_closed_form,
    z_action_closed_form,
)
from hopfbraid.oracle import fy_fixed_points
from hopfbraid.zoo import find_group_isomorphism, group_algebra_map, group_stats, make_group

BUILTINS = ["group:C2", "group:S3", "dualgroup:S3", "sweedler", "taft:3"]
SUITE = ["1:", "2: 1", "2: -1", "2: 1 1", "2: 1 1 1", "3: 1 -2"]


def mismatches(pairs):
    return [f"{label}: {got} != {want}" for label, got, want in pairs if got != want]


def iso(T, M, N):
    return is_intertwiner(T, M, N) and is_invertible(T, M.field)


def test_c01_quantum_dimension(zoo, record):
    expected = dict(zip(BUILTINS, (2, 6, 6, 0, 0)))
    pairs = []
    for spec, want in expected.items():
        got = braided_dim(zoo.double(spec), zoo.schr(spec), BraidWord(1), "right")
        pairs.append((spec, got, want))
        pairs.append((f"{spec} TrS2", trace_s_squared(zoo.algebra(spec)), want))
    bad = mismatches(pairs)
    record(1, "quantum dimension equals Tr(S^2)", not bad, "; ".join(bad))
    assert not bad


def test_c02_hopf_link_counts_commuting_pairs(zoo, record):
    expected = {"C2": 4, "C3": 9, "C4": 16, "C2xC2": 16, "S3": 18, "D4": 40, "Q8": 40}
    pairs = []
    for g, want in expected.items():
        G = make_group(g)
        assert G.order * group_stats(G)["conjClassCount"] == want
        spec = f"group:{g}"
        for side in ("left", "right"):
            pairs.append((f"{g} {side}", braided_dim(zoo.double(spec), zoo.schr(spec), torus_braid(2, 2), side), want))
    bad = mismatches(pairs)
    record(2, "t22 of Schr(kG) is |G| #Conj(G)", not bad, "; ".join(bad))
    assert not bad


def test_c03_oracle_equivalence(zoo, record):
    braids = random_braids(20, seed=2024)
    assert all(b.strands <= 3 and len(b.letters) <= 6 for b in braids)
    pairs = []
    for g in ("C2", "S3"):
        G, spec = make_group(g), f"group:{g}"
        for b in braids:
            want = fy_fixed_points(G, b)
            for side in ("left", "right"):
                pairs.append((f"{g} [{b}] {side}", braided_dim(zoo.double(spec), zoo.schr(spec), b, side), want))
    bad = mismatches(pairs)
    record(3, "braided dims match Freyd-Yetter fixed points", not bad, "; ".join(bad))
    assert not bad


def test_c04_dual_group_algebra(zoo, record):
    t22 = torus_braid(2, 2)
    dual = braided_dim(zoo.double("dualgroup:S3"), zoo.schr("dualgroup:S3"), t22)
    group = braided_dim(zoo.double("group:S3"), zoo.schr("group:S3"), t22)
    ok = dual == 36 and group == 18 and dual != group
    record(4, "k^S3 gives |G|^2 = 36 and is separated from k[S3]", ok, f"{dual} vs {group}")
    assert ok


def test_c05_vanishing(zoo, record):
    pairs = []
    for spec in ("sweedler", "taft:3"):
        Q, M = zoo.double(spec), zoo.schr(spec)
        for w in SUITE:
            for side in ("left", "right"):
                for orient in ("standard", "reversed"):
                    pairs.append((f"{spec} [{w}] {side} {orient}", braided_dim(Q, M, w, side, orient), 0))
    bad = mismatches(pairs)
    record(5, "non-cosemisimple braided dims vanish", not bad, "; ".join(bad))
    assert not bad


def test_c06_z_action_detects_unimodularity(zoo, record):
    A = zoo.algebra("sweedler")
    z_sw = zoo.schr("sweedler").element_matrix(zoo.double("sweedler").elements.z)
    z_s3 = zoo.schr("group:S3").element_matrix(zoo.double("group:S3").elements.z)
    checks = {
        "sweedler closed form": linalg.equal(z_sw, z_action_closed_form(A)),
        "sweedler z is not the identity": not linalg.is_identity(z_sw),
        "S3 z is the identity": linalg.is_identity(z_s3),
    }
    bad = [k for k, v in checks.items() if not v]
    record(6, "z = uS(u) action on Schr", not bad, "; ".join(bad))
    assert not bad


def test_c07_u_and_su_actions(zoo, record):
    bad = []
    for spec in BUILTINS:
        A, Q, M = zoo.algebra(spec), zoo.double(spec), zoo.schr(spec)
        el = Q.elements
        U = linalg.sparse_columns(u_action_closed_form(A, integrals(A)))
        SU = linalg.sparse_columns(su_action_closed_form(A))
        for b in range(A.dim):
            e = {b: A.field.one}
            if M.act(el.u, e) != U[b]:
                bad.append(f"{spec} u on {A.labels[b]}")
            if M.act(el.Su, e) != SU[b]:
                bad.append(f"{spec} S(u) on {A.labels[b]}")
    record(7, "u and S(u) closed-form actions", not bad, "; ".join(bad))
    assert not bad


def test_c08_torus_closed_forms(zoo, record):
    pairs = []
    for spec in ("sweedler", "group:C3"):
        Q, M = zoo.double(spec), zoo.schr(spec)
        for q in range(6):
            for side in ("left", "right"):
                pairs.append((f"{spec} q={q} {side}", t2q_closed_form(Q, M, q, side),
                              braided_dim(Q, M, torus_braid(2, q), side)))
    bad = mismatches(pairs)
    record(8, "t_{2,q} closed forms agree with braid words", not bad, "; ".join(bad))
    assert not bad


def _structural(zoo, spec, full):
    A, Q = zoo.algebra(spec), zoo.double(spec)
    Sch, DS = zoo.schr(spec), zoo.dual_schr(spec)
    f = A.field
    bad = []
    triv = canonical_module(A, "trivial")
    if not iso(A.antipode_inverse, Sch, induce_from_module(Q, triv)):
        bad.append("Schr = I_A(k)")
    if not iso(A.antipode_inverse.T, DS, dual_module(coinduced_trivial(Q))):
        bad.append("dualSchr = I^A(k)*")
    if not full:
        return bad
    Phi, Qd = phi_iso(A, Q)
    if not iso(A.antipode, pullback_module(Phi, dual_schrodinger(Qd), Q.H), Sch):
        bad.append("S intertwines the pulled-back dual Schroedinger module")
    for V in (triv, canonical_module(A, "regular")):
        for M in (Sch, DS):
            left = tensor_module(induce_from_module(Q, V), M)
            right = induce_from_module(Q, tensor_module(V, restrict_to_base(Q, M)))
            if not iso(induced_tensor_map(Q, V, M), left, right):
                bad.append(f"Phi for {V.name}, {M.name}")
    for N in (trivial_comodule(A), regular_comodule(A)):
        left = induce_from_comodule(Q, comodule_tensor(N, coaction_of(Q, Sch)))
        if not iso(coinduced_tensor_map(Q, N, Sch), left, tensor_module(induce_from_comodule(Q, N), Sch)):
            bad.append(f"Psi for {N.name}")
    T = induced_tensor_map(Q, triv, Sch) @ np.kron(A.antipode_inverse, linalg.identity(f, A.dim))
    if not iso(T, tensor_module(Sch, Sch), induce_from_module(Q, canonical_module(A, "adjoint"))):
        bad.append("Schr (x) Schr")
    res = find_iso(tensor_module(Sch, DS), canonical_module(Q.H, "regular"))
    if not (res.found and iso(res.iso, tensor_module(Sch, DS), canonical_module(Q.H, "regular"))):
        bad.append(f"Schr (x) dualSchr = D(A): {res.status}")
    return [f"{spec}: {b}" for b in bad]


def test_c09_structural_isomorphisms(zoo, record):
    bad = _structural(zoo, "sweedler", True) + _structural(zoo, "group:C2", True)
    bad += _structural(zoo, "group:S3", False)
    record(9, "structural isomorphisms are invertible intertwiners", not bad, "; ".join(bad))
    assert not bad


def test_c10_axiom_suites(zoo, record):
    bad = []
    for spec in BUILTINS:
        if not validate_hopf(zoo.algebra(spec)).ok:
            bad.append(f"{spec} Hopf axioms")
        if not zoo.double_report(spec).ok:
            bad.append(f"D({spec}) Hopf axioms")
        # YBE and the coproduct axioms for R
        if not validate_qt(zoo.double(spec)).ok:
            bad.append(f"D({spec}) quasitriangular")
        # raises unless u u^-1 = 1 and R21 R = Delta(u^-1)(u x u)
        zoo.double(spec).elements
        Q, M = zoo.double(spec), zoo.schr(spec)
        for w in SUITE:
            for side in ("left", "right"):
                # raises ClosedFormMismatch if the iterated trace disagrees
                braided_dim(Q, M, w, side, check=True)
    record(10, "axioms, R-matrix identities and trace cross-check", not bad, "; ".join(bad))
    assert not bad


def test_c11_duality_and_transpose(zoo, record):
    Q, M = zoo.double("sweedler"), zoo.schr("sweedler")
    rng = random.Random(11)
    bad = []
    Md = dual_module(M)
    for w in SUITE[:5]:
        if braided_dim(Q, Md, w, "right") != braided_dim(Q, M, w, "left", "reversed"):
            bad.append(f"dual module [{w}]")
    for _ in range(4):
        letters = tuple(rng.choice((1, -1)) for _ in range(rng.randint(0, 4)))
        F = braid_operator(Q, M, BraidWord(2, letters)).to_matrix()
        lhs, rhs = transpose_partial_trace_sides(Q, F, M, M.dim, M.dim)
        if not linalg.equal(lhs, rhs):
            bad.append(f"transpose {letters}")
    record(11, "dual module and transpose relations", not bad, "; ".join(bad))
    assert not bad


def test_c12_isomorphism_invariance(zoo, record):
    G, H = make_group("C6"), make_group("C2xC3")
    A, B = zoo.algebra("group:C6"), zoo.algebra("group:C2xC3")
    QA, QB = zoo.double("group:C6"), zoo.double("group:C2xC3")
    F = group_algebra_map(find_group_isomorphism(G, H))
    P = pullback_module(double_of_iso(F, A, B, QA, QB), zoo.schr("group:C2xC3"), QA.H)
    bad = [] if iso(F, zoo.schr("group:C6"), P) else ["f does not intertwine"]
    pairs = []
    for w in SUITE:
        b = parse_braid(w)
        for side in ("left", "right"):
            x = braided_dim(QA, zoo.schr("group:C6"), b, side)
            pairs.append((f"[{w}] {side}", braided_dim(QB, zoo.schr("group:C2xC3"), b, side), x))
            pairs.append((f"[{w}] {side} pullback", braided_dim(QA, P, b, side), x))
    bad += mismatches(pairs)
    record(12, "C6 and C2xC3 have equal braided dims", not bad, "; ".join(bad))
    assert not bad
