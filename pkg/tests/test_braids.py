import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import hopfbraid.braids as braids
from hopfbraid import linalg
from hopfbraid.braids import (
    BraidWord,
    MatrixOperator,
    braid_operator,
    braided_dim,
    braiding_map,
    parse_braid,
    partial_trace_step,
    t2q_closed_form,
    torus_braid,
    transpose_partial_trace_sides,
)
from hopfbraid.errors import (
    BadParameter,
    ClosedFormMismatch,
    DimensionMismatch,
    LetterOutOfRange,
    ParseError,
    ResourceLimitExceeded,
    ZeroLetter,
)
from hopfbraid.modules import canonical_module, dual_module, is_intertwiner, tensor_module
from hopfbraid.oracle import fy_fixed_points
from hopfbraid.zoo import make_group


def words(max_strands=3, max_len=6):
    return st.integers(1, max_strands).flatmap(
        lambda n: st.lists(
            st.integers(1, max(n - 1, 1)).flatmap(lambda a: st.sampled_from((a, -a))),
            max_size=max_len if n > 1 else 0,
        ).map(lambda ls: BraidWord(n, tuple(ls)))
    )


# -- words ------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, strands, letters",
    [
        ("1:", 1, ()),
        ("2: 1", 2, (1,)),
        ("3: 1 -2", 3, (1, -2)),
        ("  4 :1,2, -3  ", 4, (1, 2, -3)),
        ("3: +1 2", 3, (1, 2)),
    ],
)
def test_parse_examples(text, strands, letters):
    w = parse_braid(text)
    assert (w.strands, w.letters) == (strands, letters)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", ParseError),
        ("3 1 2", ParseError),
        ("3: 1 x", ParseError),
        ("2: 0", ZeroLetter),
        ("3: 3", LetterOutOfRange),
        ("2: -2", LetterOutOfRange),
        ("0:", ParseError),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_braid(text)


def test_parse_rejects_non_text():
    with pytest.raises(ParseError):
        parse_braid(3)


@given(words(max_strands=6, max_len=10))
def test_word_text_round_trip(w):
    assert parse_braid(str(w)) == w
    assert w.inverse().inverse() == w
    assert w.mirror().mirror() == w


def test_torus_braids():
    assert torus_braid(2, 3) == BraidWord(2, (1, 1, 1))
    assert torus_braid(3, 2) == BraidWord(3, (1, 2, 1, 2))
    assert torus_braid(3, -1) == BraidWord(3, (-2, -1))
    assert torus_braid(2, 0) == BraidWord(2, ())
    with pytest.raises(BadParameter):
        torus_braid(1, 3)


# -- braiding and operators --------------------------------------------------


def test_trivial_module_has_dimension_one(zoo):
    Q = zoo.double("sweedler")
    triv = canonical_module(Q.H, "trivial")
    for w in ("1:", "2: 1", "3: 1 -2 1"):
        for side in ("left", "right"):
            assert braided_dim(Q, triv, w, side) == 1


def test_braiding_is_intertwiner(zoo):
    Q, M = zoo.double("sweedler"), zoo.schr("sweedler")
    MM = tensor_module(M, M)
    for variant in ("standard", "inverse", "reversed"):
        assert is_intertwiner(braiding_map(Q, M, M, variant), MM, MM)
    c = braiding_map(Q, M, M)
    assert linalg.is_identity(c @ braiding_map(Q, M, M, "inverse"))


def test_braiding_on_group_schrodinger_is_swap_twisted_by_conjugation(zoo):
    # c(a (x) b) = b (x) b^-1 a b on Schr(kG), matching the oracle action
    G = make_group("S3")
    Q, M = zoo.double("group:S3"), zoo.schr("group:S3")
    c = braiding_map(Q, M, M)
    n = G.order
    for a in range(n):
        for b in range(n):
            col = c[:, a * n + b]
            image = b * n + G.mul(G.mul(G.inv(b), a), b)
            assert [int(i) for i in col.nonzero()[0]] == [image]
            assert col[image] == 1


@pytest.mark.parametrize("spec", ["sweedler", "group:S3"])
def test_braid_relations(zoo, spec):
    Q, M = zoo.double(spec), zoo.schr(spec)
    a = braid_operator(Q, M, parse_braid("3: 1 2 1")).to_matrix()
    b = braid_operator(Q, M, parse_braid("3: 2 1 2")).to_matrix()
    assert linalg.equal(a, b)
    M3 = tensor_module(tensor_module(M, M), M)
    assert is_intertwiner(a, M3, M3)


def test_far_commutation(zoo):
    Q, M = zoo.double("group:C2"), zoo.schr("group:C2")
    a = braid_operator(Q, M, parse_braid("4: 1 3")).to_matrix()
    b = braid_operator(Q, M, parse_braid("4: 3 1")).to_matrix()
    assert linalg.equal(a, b)


@settings(max_examples=25, deadline=None)
@given(words(max_strands=3, max_len=5))
def test_word_times_inverse_is_identity(zoo, w):
    Q, M = zoo.double("sweedler"), zoo.schr("sweedler")
    full = BraidWord(w.strands, w.letters + w.inverse().letters)
    assert linalg.is_identity(braid_operator(Q, M, full).to_matrix())


# -- traces -------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, side, value",
    [("group:S3", "right", 6), ("group:S3", "left", 6), ("sweedler", "left", 0), ("sweedler", "right", 0)],
)
def test_partial_trace_of_identity(zoo, spec, side, value):
    Q, M = zoo.double(spec), zoo.schr(spec)
    op = braid_operator(Q, M, BraidWord(2))
    step = partial_trace_step(Q, op, side)
    assert step.n == 1
    assert linalg.equal(step.to_matrix(), value * linalg.identity(M.field, M.dim))


@settings(max_examples=20, deadline=None)
@given(words(max_strands=3, max_len=6))
def test_group_traces_match_oracle(zoo, w):
    Q, M = zoo.double("group:C2"), zoo.schr("group:C2")
    want = fy_fixed_points(make_group("C2"), w)
    assert braided_dim(Q, M, w, "left") == want
    assert braided_dim(Q, M, w, "right") == want


def test_closed_form_guard(zoo, monkeypatch):
    Q, M = zoo.double("group:C2"), zoo.schr("group:C2")
    monkeypatch.setattr(braids, "closed_form_trace", lambda *a, **k: Q.field(-1))
    with pytest.raises(ClosedFormMismatch):
        braided_dim(Q, M, "2: 1")
    assert braided_dim(Q, M, "2: 1", check=False) == 2


def test_bad_side(zoo):
    with pytest.raises(BadParameter):
        braided_dim(zoo.double("group:C2"), zoo.schr("group:C2"), "1:", side="up")


def test_resource_guards(zoo):
    Q = zoo.double("group:S3")
    regular = canonical_module(Q.H, "regular")
    with pytest.raises(ResourceLimitExceeded):
        braid_operator(Q, regular, BraidWord(4))
    op = braid_operator(Q, zoo.schr("group:S3"), BraidWord(4, (1, 3)))
    with pytest.raises(ResourceLimitExceeded):
        op.to_matrix()
    # the column stream still works past the dense limit
    assert braided_dim(Q, zoo.schr("group:S3"), op.word, "right") == fy_fixed_points(make_group("S3"), op.word)


def test_matrix_operator_shape(zoo):
    M = zoo.schr("group:C2")
    with pytest.raises(DimensionMismatch):
        MatrixOperator(M, 2, linalg.identity(M.field, 3))
    with pytest.raises(DimensionMismatch):
        MatrixOperator(M, 1, linalg.identity(M.field, 2)).scalar()


@pytest.mark.parametrize("spec", ["sweedler", "group:S3", "dualgroup:S3"])
def test_dual_module_matches_reversed_braiding(zoo, spec):
    Q, M = zoo.double(spec), zoo.schr(spec)
    Md = dual_module(M)
    for w in ("1:", "2: 1", "2: -1", "2: 1 1 1"):
        assert braided_dim(Q, Md, w, "right") == braided_dim(Q, M, w, "left", "reversed")


def test_transpose_relation_for_arbitrary_maps(zoo):
    Q, M = zoo.double("sweedler"), zoo.schr("sweedler")
    f = M.field
    d = M.dim
    rng = random.Random(7)
    for _ in range(3):
        F = linalg.zeros(f, d * d)
        for i in range(d * d):
            for j in range(d * d):
                F[i, j] = f(rng.randint(-3, 3))
        lhs, rhs = transpose_partial_trace_sides(Q, F, M, d, d)
        assert linalg.equal(lhs, rhs)
    with pytest.raises(DimensionMismatch):
        transpose_partial_trace_sides(Q, linalg.zeros(f, 3), M, d, d)


# -- torus closed forms ----------------------------------------------------------


@pytest.mark.parametrize("side", ["left", "right"])
def test_t20_is_square_of_quantum_dimension(zoo, side):
    Q, M = zoo.double("group:S3"), zoo.schr("group:S3")
    assert t2q_closed_form(Q, M, 0, side) == 36
    assert braided_dim(Q, M, torus_braid(2, 0), side) == 36


@pytest.mark.parametrize("spec, q, value", [("group:C3", 2, 9), ("group:S3", 2, 18), ("group:S3", 3, 12)])
def test_t2q_values(zoo, spec, q, value):
    Q, M = zoo.double(spec), zoo.schr(spec)
    for side in ("left", "right"):
        assert t2q_closed_form(Q, M, q, side) == value
        assert braided_dim(Q, M, torus_braid(2, q), side) == value


def test_t2q_rejects_negative_q(zoo):
    with pytest.raises(BadParameter):
        t2q_closed_form(zoo.double("group:C2"), zoo.schr("group:C2"), -1)
