import pytest
from hypothesis import given, strategies as st

from vankampen import complex as cx
from oracles import skeleton_size


def test_closure_triangle():
    K = cx.closure([(0, 1, 2)])
    assert len(K) == 7
    assert K.simplices == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)}
    assert K.dim == 2


def test_closure_empty():
    K = cx.closure([])
    assert len(K) == 0
    assert K.dim == -1


def test_closure_triangle_boundary():
    K = cx.closure([(0, 1), (1, 2), (0, 2)])
    assert len(K) == 6
    assert K.dim == 1


def test_closure_rejects_repeated_vertex():
    with pytest.raises(cx.MalformedSimplexError):
        cx.closure([(0, 0, 1)])


def test_complex_constructor_requires_faces():
    with pytest.raises(ValueError):
        cx.SimplicialComplex([(0, 1)])


def test_skeleton_examples():
    K5 = cx.skeleton(cx.simplex(4), 1)
    assert K5.f_vector() == (5, 10)
    assert len(cx.skeleton(cx.simplex(6), 2)) == 7 + 21 + 35 == 63
    K = cx.simplex(3)
    assert cx.skeleton(K, K.dim) == K
    assert cx.skeleton(K, 10) == K


@pytest.mark.parametrize("n", range(0, 11))
def test_simplex_skeleton_binomial_identity(n):
    for k in range(0, n + 1):
        assert len(cx.simplex_skeleton(n, k)) == skeleton_size(n, k)
        assert cx.simplex_skeleton(n, k) == cx.skeleton(cx.simplex(n), k)


@pytest.mark.parametrize("r,d,N", [(2, 2, 3), (3, 1, 4), (2, 1, 2), (3, 2, 6)])
def test_tverberg_complex(r, d, N):
    K = cx.tverberg_complex(r, d)
    assert K == cx.simplex(N)
    assert K.dim == N


def test_tverberg_tetrahedron_count():
    assert len(cx.tverberg_complex(2, 2)) == 15


@pytest.mark.parametrize("r,d", [(1, 2), (2, 0), (0, 0)])
def test_tverberg_bad_params(r, d):
    with pytest.raises(ValueError):
        cx.tverberg_complex(r, d)


@pytest.mark.parametrize("a,b,edges", [(3, 3, 9), (1, 1, 1), (2, 3, 6)])
def test_complete_bipartite(a, b, edges):
    K = cx.complete_bipartite(a, b)
    assert K.f_vector() == (a + b, edges)


def test_are_disjoint():
    assert cx.are_disjoint((0, 1), (2, 3))
    assert not cx.are_disjoint((0, 1), (1, 2))
    assert not cx.are_disjoint((0,), (0,))


def test_parse_examples():
    assert cx.parse("0 1 2\n") == cx.closure([(0, 1, 2)])
    K = cx.parse("# comment\n0 1\n2 3\n")
    assert K == cx.closure([(0, 1), (2, 3)])
    assert cx.parse(b"2 1 0\n\n") == cx.closure([(0, 1, 2)])


def test_serialize_canonical():
    text = "# messy\n2 1\n1 0\n0 1\n1\n"
    assert cx.serialize(cx.parse(text)) == "0 1\n1 2\n"


@pytest.mark.parametrize("bad,lineno", [("0 1\nx y\n", 2), ("0 0\n", 1), ("# c\n\n3 -1\n", 3)])
def test_parse_errors_carry_line_number(bad, lineno):
    with pytest.raises(cx.ComplexParseError) as exc:
        cx.parse(bad)
    assert exc.value.lineno == lineno


simplices = st.lists(st.sets(st.integers(0, 9), min_size=1, max_size=4).map(lambda s: tuple(sorted(s))),
                     max_size=8)


@given(simplices)
def test_closure_idempotent_and_face_closed(gens):
    K = cx.closure(gens)
    assert cx.closure(K.simplices) == K
    for s in K.simplices:
        for t in cx.faces(s):
            assert t in K
    for v in {v for s in K.simplices for v in s}:
        assert (v,) in K


@given(simplices)
def test_round_trip(gens):
    K = cx.closure(gens)
    text = cx.serialize(K)
    assert cx.parse(text) == K
    assert cx.serialize(cx.parse(text)) == text
