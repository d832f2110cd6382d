import random
from fractions import Fraction

import pytest

from liemoduli.errors import (
    DenominatorVanishes,
    MissingParameter,
    NoValidSample,
    ParametricEntry,
    ParseError,
)
from liemoduli.scalar import (
    Matrix,
    Polynomial,
    Scalar,
    parse_scalar,
    poly_eval,
    rank_exact,
    rank_generic,
    rank_symbolic,
    rref,
)


def S(text, params=None):
    return parse_scalar(text, params=params)


def test_poly_eval_examples():
    assert poly_eval(S("p+q"), {"p": 2, "q": 3}) == 5
    assert poly_eval(S("p^2-q"), {"p": 3, "q": 9}) == 0
    assert poly_eval(S("(p-q)^2") / S("p+q"), {"p": 1, "q": 2}) == Fraction(1, 3)


def test_poly_eval_errors():
    with pytest.raises(MissingParameter):
        poly_eval(S("p+q"), {"p": 2})
    s = S("1") / S("p-q")
    with pytest.raises(DenominatorVanishes):
        poly_eval(s, {"p": 2, "q": 2})


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        Scalar(0.5)
    with pytest.raises(TypeError):
        Polynomial((), {(): 1.0})
    with pytest.raises(TypeError):
        S("p").eval({"p": 0.5})


def _random_scalar(rng, params=("p", "q")):
    num = Polynomial(params, {})
    for _ in range(rng.randint(1, 3)):
        exps = tuple(rng.randint(0, 2) for _ in params)
        num = num + Polynomial(params, {exps: rng.randint(-4, 4)})
    den = Polynomial.const(rng.choice([1, 1, 2, 3]))
    return Scalar(num, den)


def test_ring_axioms_on_random_triples():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a


def test_eval_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(100):
        a, b = _random_scalar(rng), _random_scalar(rng)
        point = {"p": Fraction(rng.randint(-5, 5)), "q": Fraction(rng.randint(-5, 5))}
        assert (a * b).eval(point) == a.eval(point) * b.eval(point)
        assert (a + b).eval(point) == a.eval(point) + b.eval(point)


def test_scalar_normalization():
    s = Scalar(Polynomial(("p",), {(1,): 2}), Polynomial.const(-4))
    # content and sign normalized: 2p/-4 == -p/2
    assert s == Scalar(Polynomial(("p",), {(1,): -1}), Polynomial.const(2))
    assert str(s) == "-p/2"
    # monomial content cancels
    t = S("p^2+p*q") / S("p*q")
    assert t == S("p+q") / S("q")


def test_exact_equality_cross_multiplies():
    a = S("p^2-q^2") / S("p-q")
    b = S("p+q")
    assert a == b


def test_parse_grammar():
    assert S("2p") == S("2*p")
    assert S("p(q+r)") == S("p*q+p*r")
    assert S("-p+3") == S("3-p")
    assert S("p^2q") == S("p*p*q")
    with pytest.raises(ParseError):
        parse_scalar("p+")
    with pytest.raises(ParseError):
        parse_scalar("p$q")
    with pytest.raises(ParseError):
        parse_scalar("x", params=("p", "q"))


def test_serialization_deterministic_grlex():
    s = S("1 + p^2 + q + p*q + p", params=("p", "q"))
    assert str(s) == "p^2+p*q+p+q+1"
    assert parse_scalar(str(s), params=("p", "q")) == s


def M(rows):
    return Matrix([[Scalar(Fraction(x)) if not isinstance(x, Scalar) else x
                    for x in row] for row in rows])


def test_rank_exact_examples():
    assert rank_exact(Matrix.zero(3, 3)) == 0
    assert rank_exact(M([[1, 2], [2, 4]])) == 1
    assert rank_exact(M([[1, 0], [0, 1]])) == 2
    assert rank_exact(Matrix.zero(0, 5)) == 0
    assert rank_exact(Matrix.zero(5, 0)) == 0


def test_rank_exact_rejects_parameters():
    p = S("p")
    with pytest.raises(ParametricEntry):
        rank_exact(Matrix([[p]]))


def _naive_rank(rows, ncols):
    red, pivots = rref(rows, ncols)
    return len(pivots)


def test_rank_exact_matches_naive_row_reduction():
    rng = random.Random(3)
    for _ in range(100):
        r = rng.randint(1, 8)
        c = rng.randint(1, 8)
        rows = [[Fraction(rng.randint(-5, 5), rng.choice([1, 1, 2, 3]))
                 for _ in range(c)] for _ in range(r)]
        mat = Matrix([[Scalar(x) for x in row] for row in rows])
        assert rank_exact(mat) == _naive_rank(rows, c)


def test_rank_generic_examples():
    p, q = S("p"), S("q")
    m = Matrix([[p, q], [q, p]])
    assert rank_generic(m, seed=0) == 2
    m2 = Matrix([[p, p], [p, p]])
    assert rank_generic(m2, seed=0) == 1
    assert rank_generic(Matrix.zero(3, 3), seed=0) == 0
    with pytest.raises(ValueError):
        rank_generic(m, seed=0, trials=1)


def test_rank_generic_determinant_oracle():
    # the determinant p^2 - q^2 is a nonzero polynomial, so generic rank is 2
    p, q = S("p"), S("q")
    m = Matrix([[p, q], [q, p]])
    det = m.entries[0][0] * m.entries[1][1] - m.entries[0][1] * m.entries[1][0]
    assert not det.is_zero
    assert rank_generic(m, seed=5) == 2


def test_rank_generic_no_valid_sample():
    one_over = Scalar(1) / S("p")
    m = Matrix([[one_over]])
    with pytest.raises(NoValidSample):
        rank_generic(m, seed=0, avoid=[S("p-2").num], low=2, high=2, budget=5)


def test_rank_generic_agrees_with_third_point():
    rng = random.Random(17)
    for _ in range(50):
        r = rng.randint(1, 6)
        c = rng.randint(1, 6)
        entries = []
        for _ in range(r):
            row = []
            for _ in range(c):
                num = Polynomial(("p", "q"),
                                 {(rng.randint(0, 1), rng.randint(0, 1)):
                                  rng.randint(-3, 3)})
                row.append(Scalar(num))
            entries.append(row)
        m = Matrix(entries)
        generic = rank_generic(m, seed=rng.randint(0, 10 ** 6))
        point = {"p": rng.randint(2, 10 ** 6), "q": rng.randint(2, 10 ** 6)}
        at_point = rank_exact(m.eval(point))
        assert at_point <= generic
        if at_point == generic:
            assert rank_generic(m, seed=rng.randint(0, 10 ** 6)) == at_point


def test_rank_symbolic_matches_generic():
    p, q = S("p"), S("q")
    m = Matrix([[p, q], [q, p]])
    assert rank_symbolic(m) == 2
    m2 = Matrix([[p, p], [p, p]])
    assert rank_symbolic(m2) == 1
    m3 = Matrix([[p / q, Scalar(1)], [Scalar(1), q / p]])
    assert rank_symbolic(m3) == 1


def test_matrix_inverse_and_det():
    m = M([[1, 2], [3, 4]])
    assert m.det() == Scalar(-2)
    inv = m.inverse()
    assert (m @ inv) == Matrix.identity(2)
    t = S("t")
    g = Matrix([[Scalar(1), Scalar(0)], [Scalar(0), t]])
    ginv = g.inverse()
    assert (g @ ginv) == Matrix.identity(2)
