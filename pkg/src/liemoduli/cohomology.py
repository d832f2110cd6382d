"""Betti numbers of the adjoint cochain complex, plus the classical
invariants (center, derived and lower-central series) used to cross-check
them and to separate isomorphism classes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cochain import BasisTerm, Cochain, coboundary, jacobi_check
from .errors import JacobiFails, OutOfRange, ParametricEntry
from .scalar import Matrix, Scalar, rank_exact, rank_generic, rank_symbolic, rref


def cochain_dim(n, k):
    """Dimension of the space of degree-k cochains on an n-dim space."""
    if not 0 <= k <= n:
        raise OutOfRange("degree %d outside 0..%d" % (k, n))
    return n * math.comb(n, k)


def cochain_basis(n, k):
    """Basis terms of degree k, sorted by (inputs, output)."""
    return [BasisTerm(ins, out)
            for ins in itertools.combinations(range(1, n + 1), k)
            for out in range(1, n + 1)]


def coboundary_matrix(d, k):
    """Matrix of D_k : C^k -> C^{k+1} in the sorted basis-term order."""
    n = d.dim
    dom = cochain_basis(n, k)
    cod = cochain_basis(n, k + 1)
    index = {bt: i for i, bt in enumerate(cod)}
    cols = []
    for bt in dom:
        img = coboundary(d, Cochain(n, k, {bt: 1}))
        col = {index[t]: c for t, c in img.terms.items()}
        cols.append(col)
    entries = [[cols[j].get(i, Scalar(0)) for j in range(len(dom))]
               for i in range(len(cod))]
    return Matrix(entries, len(cod), len(dom))


@dataclass
class CohomologyReport:
    dim: int
    betti: tuple
    mode: str
    evidence: dict = field(default_factory=dict)

    def euler_characteristic(self):
        return sum((-1) ** k * h for k, h in enumerate(self.betti))


MODES = ("exact-at-point", "generic-probabilistic", "exact-symbolic")


def betti(d, mode="exact-at-point", seed=0, assign=None, avoid=(), trials=2):
    """Betti vector (h^0,...,h^n) of the adjoint complex of d.

    exact-at-point requires a parameter-free structure (specialize with
    ``assign`` first when the entry is a family).  generic-probabilistic
    computes generic ranks by random evaluation off the ``avoid`` loci;
    exact-symbolic runs fraction-free elimination over the parameters.
    """
    if mode not in MODES:
        raise ValueError("unknown mode %r" % mode)
    n = d.dim
    if assign is not None:
        d = d.at(assign)
    if mode == "exact-at-point" and d.used_params():
        raise ParametricEntry("exact-at-point needs all parameters assigned")
    if not jacobi_check(d):
        raise JacobiFails("structure does not satisfy the Jacobi identity")
    ranks = []
    for k in range(n):
        mat = coboundary_matrix(d, k)
        if mode == "exact-at-point":
            ranks.append(rank_exact(mat))
        elif mode == "exact-symbolic":
            ranks.append(rank_symbolic(mat))
        else:
            ranks.append(rank_generic(mat, seed=seed * 997 + k,
                                      trials=trials, avoid=avoid))
    betti_vec = []
    for k in range(n + 1):
        below = ranks[k - 1] if k > 0 else 0
        here = ranks[k] if k < n else 0
        betti_vec.append(cochain_dim(n, k) - here - below)
    evidence = {"ranks": tuple(ranks)}
    if mode == "generic-probabilistic":
        evidence["seed"] = seed
        evidence["trials"] = trials
    return CohomologyReport(n, tuple(betti_vec), mode, evidence)


def betti_generic_checked(d, avoid=(), seed=0):
    """Generic Betti vector cross-checked on two seeds.

    Disagreement triggers one resample; a second disagreement escalates
    to the exact symbolic rank.
    """
    first = betti(d, "generic-probabilistic", seed=seed, avoid=avoid)
    second = betti(d, "generic-probabilistic", seed=seed + 1, avoid=avoid)
    if first.betti == second.betti:
        return first
    third = betti(d, "generic-probabilistic", seed=seed + 2, avoid=avoid)
    fourth = betti(d, "generic-probabilistic", seed=seed + 3, avoid=avoid)
    if third.betti == fourth.betti:
        return third
    return betti(d, "exact-symbolic")


def center(d):
    """Dimension of {v : d(v, x) = 0 for all x}; equals h^0."""
    if not jacobi_check(d):
        raise JacobiFails("structure does not satisfy the Jacobi identity")
    n = d.dim
    rows = []
    for j in range(1, n + 1):
        for out in range(1, n + 1):
            row = []
            for i in range(1, n + 1):
                val = d.value_on((i, j)).get(out, Scalar(0))
                row.append(val)
            rows.append(row)
    return n - rank_exact(Matrix(rows, n * n, n)) if not d.used_params() \
        else n - rank_symbolic(Matrix(rows, n * n, n))


@dataclass
class InvariantVector:
    center_dim: int
    derived_series_dims: tuple
    lower_central_dims: tuple
    is_solvable: bool
    is_nilpotent: bool
    betti: tuple

    def matches(self, other):
        return (self.center_dim == other.center_dim
                and self.derived_series_dims == other.derived_series_dims
                and self.lower_central_dims == other.lower_central_dims
                and self.is_solvable == other.is_solvable
                and self.is_nilpotent == other.is_nilpotent
                and self.betti == other.betti)


def _bracket_vectors(d, a, b):
    """d(a, b) for coordinate vectors a, b over Fractions."""
    n = d.dim
    out = [Fraction(0)] * n
    for bt, c in d.terms.items():
        i, j = bt.inputs
        coef = c.as_fraction()
        w = a[i - 1] * b[j - 1] - a[j - 1] * b[i - 1]
        if w:
            out[bt.output - 1] += coef * w
    return out


def _span_of_brackets(d, left, right):
    n = d.dim
    prods = []
    for a in left:
        for b in right:
            v = _bracket_vectors(d, a, b)
            if any(v):
                prods.append(v)
    red, _ = rref(prods, n)
    return red


def series_invariants(d, include_betti=True):
    """Derived/lower-central series dimensions and the derived flags.

    Needs a parameter-free structure; specialize families first.
    """
    if d.used_params():
        raise ParametricEntry("series invariants need a parameter-free structure")
    if not jacobi_check(d):
        raise JacobiFails("structure does not satisfy the Jacobi identity")
    n = d.dim
    full = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    derived = [n]
    cur = full
    for _ in range(n + 1):
        nxt = _span_of_brackets(d, cur, cur)
        if len(nxt) == derived[-1]:
            break
        derived.append(len(nxt))
        cur = nxt
        if not nxt:
            break

    lower = [n]
    cur = full
    for _ in range(n + 1):
        nxt = _span_of_brackets(d, full, cur)
        if len(nxt) == lower[-1]:
            break
        lower.append(len(nxt))
        cur = nxt
        if not nxt:
            break

    is_solvable = derived[-1] == 0
    is_nilpotent = lower[-1] == 0
    bv = betti(d).betti if include_betti else ()
    return InvariantVector(center(d), tuple(derived), tuple(lower),
                           is_solvable, is_nilpotent, bv)
