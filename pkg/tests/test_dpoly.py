from hypothesis import given, strategies as st

from ptalgebra.dpoly import DPoly

polys = st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(DPoly)


def test_normalization_drops_trailing_zeros():
    assert DPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert DPoly([0, 0]).coeffs == (0,)
    assert DPoly(3).coeffs == (3,)


def test_d_monomial():
    assert DPoly.d().coeffs == (0, 1)
    assert (DPoly.d() ** 3).coeffs == (0, 0, 0, 1)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + DPoly(0) == a
    assert a * DPoly(1) == a


@given(polys, polys, st.integers(-4, 4))
def test_evaluation_is_ring_homomorphism(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a * b)(x) == a(x) * b(x)
    assert (a - b)(x) == a(x) - b(x)


def test_int_coercion():
    assert DPoly.d() + 1 == DPoly([1, 1])
    assert 2 * DPoly.d() == DPoly([0, 2])
    assert 1 - DPoly.d() == DPoly([1, -1])


def test_rendering():
    assert str(DPoly([-1, 0, 1])) == "d^2-1"
    assert str(DPoly([0, 2])) == "2d"
    assert str(DPoly([3, -1])) == "-d+3"
    assert str(DPoly([0])) == "0"
    assert str(DPoly([1])) == "1"
    assert str(DPoly([0, 1])) == "d"
    assert str(DPoly([0, 0, -2])) == "-2d^2"
