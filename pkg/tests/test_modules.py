import numpy as np
import pytest

from hopfbraid import linalg
from hopfbraid.double import phi_iso
from hopfbraid.errors import AlgebraMismatch, DimensionMismatch, NotAlgebraMap
from hopfbraid.hopf import integrals
from hopfbraid.modules import (
    ModuleData,
    canonical_module,
    coaction_of,
    coinduced_trivial,
    comodule_tensor,
    dual_module,
    dual_schrodinger,
    find_iso,
    hom_basis,
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
    validate_module,
    z_action_closed_form,
)
from hopfbraid.zoo import make_group

SPECS = ["group:C2", "group:S3", "dualgroup:S3", "sweedler", "taft:3"]


def iso(T, M, N):
    return is_intertwiner(T, M, N) and is_invertible(T, M.field)


@pytest.mark.parametrize("spec", SPECS)
def test_schrodinger_modules_are_modules(zoo, spec):
    assert validate_module(zoo.schr(spec)).ok
    assert validate_module(zoo.dual_schr(spec)).ok


def test_schrodinger_of_group_algebra_by_hand(zoo):
    # (d_x |><| g) . b = [g b g^-1 == x^-1] g b g^-1
    G = make_group("S3")
    Q, M = zoo.double("group:S3"), zoo.schr("group:S3")
    n = G.order
    for x in range(n):
        for g in range(n):
            for b in range(n):
                conj = G.mul(G.mul(g, b), G.inv(g))
                want = {conj: 1} if conj == G.inv(x) else {}
                assert M.columns[Q.index(x, g)][b] == want


@pytest.mark.parametrize("spec", ["group:S3", "sweedler", "taft:3"])
def test_restriction_is_adjoint(zoo, spec):
    A, Q = zoo.algebra(spec), zoo.double(spec)
    assert restrict_to_base(Q, zoo.schr(spec)).columns == canonical_module(A, "adjoint").columns


def test_module_shape_errors(zoo):
    A = zoo.algebra("group:C2")
    with pytest.raises(DimensionMismatch):
        ModuleData(A, 1, [[{}]])
    with pytest.raises(DimensionMismatch):
        ModuleData.from_matrices(A, [linalg.identity(A.field, 2), linalg.identity(A.field, 3)])


def test_broken_module_is_reported(zoo):
    A = zoo.algebra("group:C2")
    one = linalg.identity(A.field, 1)
    bad = ModuleData.from_matrices(A, [one, 2 * one])
    rep = validate_module(bad)
    assert not rep.ok


@pytest.mark.parametrize("spec", ["group:C2", "sweedler", "group:S3"])
def test_radford_induction(zoo, spec):
    A, Q = zoo.algebra(spec), zoo.double(spec)
    IA = induce_from_module(Q, canonical_module(A, "trivial"))
    assert validate_module(IA).ok
    assert iso(A.antipode_inverse, zoo.schr(spec), IA)
    assert iso(A.antipode_inverse.T, zoo.dual_schr(spec), dual_module(coinduced_trivial(Q)))


@pytest.mark.parametrize("spec", ["group:C2", "sweedler"])
def test_tensor_identities_for_induction(zoo, spec):
    A, Q = zoo.algebra(spec), zoo.double(spec)
    Sch = zoo.schr(spec)
    for V in (canonical_module(A, "trivial"), canonical_module(A, "regular")):
        for M in (Sch, zoo.dual_schr(spec)):
            left = tensor_module(induce_from_module(Q, V), M)
            right = induce_from_module(Q, tensor_module(V, restrict_to_base(Q, M)))
            assert iso(induced_tensor_map(Q, V, M), left, right)
    for N in (trivial_comodule(A), regular_comodule(A)):
        left = induce_from_comodule(Q, comodule_tensor(N, coaction_of(Q, Sch)))
        right = tensor_module(induce_from_comodule(Q, N), Sch)
        assert iso(coinduced_tensor_map(Q, N, Sch), left, right)


@pytest.mark.parametrize("spec", ["group:C2", "sweedler"])
def test_schrodinger_tensor_squares(zoo, spec):
    A, Q = zoo.algebra(spec), zoo.double(spec)
    Sch = zoo.schr(spec)
    T = induced_tensor_map(Q, canonical_module(A, "trivial"), Sch) @ np.kron(
        A.antipode_inverse, linalg.identity(A.field, A.dim)
    )
    assert iso(T, tensor_module(Sch, Sch), induce_from_module(Q, canonical_module(A, "adjoint")))
    res = find_iso(tensor_module(Sch, zoo.dual_schr(spec)), canonical_module(Q.H, "regular"))
    assert res.status == "found"
    assert iso(res.iso, tensor_module(Sch, zoo.dual_schr(spec)), canonical_module(Q.H, "regular"))


@pytest.mark.parametrize("spec", ["group:C2", "sweedler"])
def test_phi_pullback(zoo, spec):
    A, Q = zoo.algebra(spec), zoo.double(spec)
    Phi, Qd = phi_iso(A, Q)
    back = pullback_module(Phi, dual_schrodinger(Qd), Q.H)
    assert iso(A.antipode, back, zoo.schr(spec))


def test_pullback_rejects_non_algebra_map(zoo):
    Q = zoo.double("group:C2")
    F = 2 * linalg.identity(Q.H.field, Q.H.dim)
    with pytest.raises(NotAlgebraMap):
        pullback_module(F, zoo.schr("group:C2"), Q.H)


def test_hom_basis_of_group_schrodinger(zoo):
    # Schr(kC2) splits into two non-isomorphic 1-dim pieces
    S = zoo.schr("group:C2")
    assert len(hom_basis(S, S)) == 2
    for T in hom_basis(S, S):
        assert is_intertwiner(T, S, S)
    triv = canonical_module(zoo.double("group:C2").H, "trivial")
    assert len(hom_basis(triv, S)) == 1


def test_hom_basis_mismatch(zoo):
    with pytest.raises(AlgebraMismatch):
        hom_basis(zoo.schr("group:C2"), zoo.schr("sweedler"))


def sign_module(Q):
    """1-dim module (d_x |><| g) -> [x = e] sign(g) over D(kC2)."""
    f = Q.H.field
    cols = [None] * Q.H.dim
    for x in range(2):
        for g in range(2):
            v = (1 if x == 0 else 0) * (-1 if g == 1 else 1)
            cols[Q.index(x, g)] = [{0: f(v)} if v else {}]
    return ModuleData(Q.H, 1, cols, "sign")


def test_find_iso_statuses(zoo):
    Q = zoo.double("group:C2")
    S = zoo.schr("group:C2")
    assert find_iso(S, canonical_module(Q.H, "regular")).status == "dimension-mismatch"
    sign = sign_module(Q)
    assert validate_module(sign).ok
    assert find_iso(canonical_module(Q.H, "trivial"), sign).status == "hom-trivial"
    res = find_iso(S, S)
    assert res.found and res.hom_dim == 2
    assert iso(res.iso, S, S)


@pytest.mark.parametrize("spec", SPECS)
def test_drinfeld_element_actions(zoo, spec):
    A, Q = zoo.algebra(spec), zoo.double(spec)
    M, el = zoo.schr(spec), Q.elements
    data = integrals(A)
    assert linalg.equal(M.element_matrix(el.u), u_action_closed_form(A, data))
    assert linalg.equal(M.element_matrix(el.Su), su_action_closed_form(A))
    z = M.element_matrix(el.z)
    assert linalg.equal(z, z_action_closed_form(A, data))
    unimodular = all(a == e for a, e in zip(data.alpha, A.counit))
    assert linalg.is_identity(z) == unimodular


def test_group_algebra_u_acts_by_inverse(zoo):
    # kG is involutory and unimodular, so u and z act trivially on Schr
    A = zoo.algebra("group:S3")
    M, el = zoo.schr("group:S3"), zoo.double("group:S3").elements
    assert linalg.is_identity(M.element_matrix(el.u))
    assert linalg.is_identity(M.element_matrix(el.z))
    assert linalg.trace(M.element_matrix(el.u), A.field) == 6
