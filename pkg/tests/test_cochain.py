import itertools
import random

import pytest

from liemoduli.errors import DimensionMismatch, SingularMatrix
from liemoduli.cochain import (
    BasisChange,
    BasisTerm,
    Cochain,
    coboundary,
    jacobi_check,
    nr_bracket,
    transform,
    transform_cochain,
)
from liemoduli.scalar import Matrix, Scalar, parse_scalar


def rand_cochain(n, k, rng, density=0.3):
    terms = {}
    for ins in itertools.combinations(range(1, n + 1), k):
        for out in range(1, n + 1):
            if rng.random() < density:
                terms[BasisTerm(ins, out)] = rng.randint(-3, 3)
    return Cochain(n, k, terms)


def rand_invertible(n, rng):
    while True:
        m = Matrix([[Scalar(rng.randint(-3, 3)) for _ in range(n)]
                    for _ in range(n)])
        if not m.det().is_zero:
            return BasisChange(m)


def test_basis_term_validation():
    with pytest.raises(ValueError):
        Cochain(3, 2, {BasisTerm((2, 1), 3): 1})
    with pytest.raises(ValueError):
        Cochain(3, 2, {BasisTerm((1, 4), 3): 1})
    with pytest.raises(ValueError):
        Cochain(3, 2, {BasisTerm((1, 2), 0): 1})
    with pytest.raises(ValueError):
        Cochain(3, 1, {BasisTerm((1, 2), 3): 1})


def test_heisenberg_self_bracket_vanishes():
    d = Cochain.single(3, (1, 2), 3)
    assert nr_bracket(d, d).is_zero
    assert jacobi_check(d)


def test_bracket_with_identity_reproduces_codifferential():
    rng = random.Random(2)
    for n in (3, 4):
        ident = Cochain(n, 1, {BasisTerm((i,), i): 1 for i in range(1, n + 1)})
        for _ in range(10):
            d = rand_cochain(n, 2, rng)
            assert nr_bracket(d, ident) == d


def test_coboundary_derivation_form():
    # d = psi(2,3->1), phi = e1 |-> e1: D(phi) = -psi(2,3->1)
    d = Cochain.single(3, (2, 3), 1)
    phi = Cochain.single(3, (1,), 1)
    assert coboundary(d, phi) == Cochain.single(3, (2, 3), 1, -1)


def test_coboundary_on_degree_zero_is_bracket_with_center():
    d = Cochain.single(3, (2, 3), 1)
    assert coboundary(d, Cochain.single(3, (), 1)).is_zero
    # non-central vector picks up d(v, .)
    dv = coboundary(d, Cochain.single(3, (), 2))
    assert dv == Cochain.single(3, (3,), 1)


def test_jacobi_failure_reported():
    d = Cochain(3, 2, {BasisTerm((1, 2), 3): 1, BasisTerm((1, 3), 1): 1})
    assert not jacobi_check(d)
    br = nr_bracket(d, d)
    assert BasisTerm((1, 2, 3), 3) in br.terms


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        nr_bracket(Cochain.single(3, (1, 2), 3), Cochain.single(4, (1, 2), 3))


def test_degree_overflow_clips_to_zero_cochain():
    a = Cochain.single(3, (1, 2, 3), 1)
    b = Cochain.single(3, (1, 2), 3)
    br = nr_bracket(a, b)
    assert br.is_zero and br.dim == 3


def test_graded_antisymmetry_200_random_pairs():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 4)
        p = rng.randint(0, n)
        q = rng.randint(0, n)
        a, b = rand_cochain(n, p, rng), rand_cochain(n, q, rng)
        lhs = nr_bracket(a, b)
        rhs = nr_bracket(b, a)
        if ((p - 1) * (q - 1)) % 2 == 0:
            assert lhs == rhs.scale(-1)
        else:
            assert lhs == rhs


def test_graded_jacobi_100_random_triples():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(2, 4)
        degs = [rng.randint(1, 2) for _ in range(3)]
        a, b, c = (rand_cochain(n, k, rng) for k in degs)
        pa, pb = degs[0] - 1, degs[1] - 1
        lhs = nr_bracket(a, nr_bracket(b, c))
        t2 = nr_bracket(b, nr_bracket(a, c))
        rhs = nr_bracket(nr_bracket(a, b), c)
        rhs = rhs + (t2 if (pa * pb) % 2 == 0 else t2.scale(-1))
        assert lhs == rhs


def test_transform_examples():
    d = Cochain.single(3, (1, 2), 3)
    ident = BasisChange(Matrix.identity(3))
    assert transform(d, ident) == d
    c = parse_scalar("c")
    diag = BasisChange(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, c]]))
    assert transform(d, diag) == Cochain.single(3, (1, 2), 3, c)
    swap = BasisChange(Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
    assert transform(d, swap) == Cochain.single(3, (1, 2), 3, -1)


def test_transform_roundtrip_and_jacobi_preservation():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(3, 4)
        d = rand_cochain(n, 2, rng)
        g = rand_invertible(n, rng)
        moved = transform(d, g)
        assert transform(moved, g.inverse()) == d
        assert jacobi_check(d) == jacobi_check(moved)


def test_singular_basis_change_rejected():
    with pytest.raises(SingularMatrix):
        BasisChange(Matrix([[1, 1], [1, 1]]))


def test_naturality_of_coboundary_under_transport():
    rng = random.Random(12)
    for _ in range(20):
        n = rng.randint(3, 4)
        d = rand_cochain(n, 2, rng)
        k = rng.randint(1, 2)
        phi = rand_cochain(n, k, rng)
        g = rand_invertible(n, rng)
        lhs = coboundary(transform(d, g), transform_cochain(phi, g))
        rhs = transform_cochain(coboundary(d, phi), g)
        assert lhs == rhs
