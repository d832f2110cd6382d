"""Alternating multilinear cochains on a based space, the graded bracket
on them, coboundaries and basis-change transport.

A degree-k cochain is a map from the k-th exterior power of V to V,
stored sparsely on increasing basis tuples.  A codifferential is a
degree-2 cochain; it encodes a Lie bracket exactly when its self-bracket
vanishes.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .errors import DimensionMismatch
from .scalar import ONE, ZERO, Scalar


class BasisTerm(NamedTuple):
    """One structure constant slot: e_{i1} ^ ... ^ e_{ik} -> e_out."""

    inputs: tuple
    output: int

    def validate(self, dim):
        ins = self.inputs
        if any(ins[i] >= ins[i + 1] for i in range(len(ins) - 1)):
            raise ValueError("inputs must be strictly increasing: %r" % (ins,))
        if ins and (ins[0] < 1 or ins[-1] > dim):
            raise ValueError("input index out of range 1..%d: %r" % (dim, ins))
        if not 1 <= self.output <= dim:
            raise ValueError("output index out of range 1..%d: %d" % (dim, self.output))


def _sort_sign(indices):
    """Sign of sorting the tuple; (0, None) when an index repeats."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i - 1] == idx[i]:
            return 0, None
    return sign, tuple(idx)


def _coef(value):
    return value if isinstance(value, Scalar) else Scalar(value)


class Cochain:
    """Sparse element of Hom(Lambda^k V, V) with Scalar coefficients."""

    __slots__ = ("dim", "degree", "terms", "_by_inputs")

    def __init__(self, dim, degree, terms=None):
        if not 0 <= degree <= dim:
            raise ValueError("degree %d outside 0..%d" % (degree, dim))
        tidy = {}
        if terms:
            for key, coef in terms.items():
                if not isinstance(key, BasisTerm):
                    key = BasisTerm(tuple(key[0]), key[1])
                key.validate(dim)
                if len(key.inputs) != degree:
                    raise ValueError("term %r does not have degree %d" % (key, degree))
                coef = _coef(coef)
                if not coef.is_zero:
                    tidy[key] = coef
        self.dim = dim
        self.degree = degree
        self.terms = tidy
        self._by_inputs = None

    @classmethod
    def zero(cls, dim, degree):
        return cls(dim, degree, {})

    @classmethod
    def single(cls, dim, inputs, output, coef=1):
        return cls(dim, len(inputs), {BasisTerm(tuple(inputs), output): coef})

    @property
    def is_zero(self):
        return not self.terms

    def _input_map(self):
        if self._by_inputs is None:
            by = {}
            for bt, c in self.terms.items():
                by.setdefault(bt.inputs, {})[bt.output] = c
            self._by_inputs = by
        return self._by_inputs

    def value_on(self, indices):
        """Value on basis vectors e_{i1},...,e_{ik} as {output: Scalar}.

        Indices may arrive unsorted or with repeats; the alternating
        extension handles both.
        """
        sign, key = _sort_sign(tuple(indices))
        if sign == 0:
            return {}
        vals = self._input_map().get(key)
        if not vals:
            return {}
        if sign == 1:
            return dict(vals)
        return {out: -c for out, c in vals.items()}

    def _check_same_space(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch("ambient dimensions %d vs %d"
                                    % (self.dim, other.dim))

    def __add__(self, other):
        self._check_same_space(other)
        if self.degree != other.degree:
            raise DimensionMismatch("degrees %d vs %d" % (self.degree, other.degree))
        terms = dict(self.terms)
        for bt, c in other.terms.items():
            acc = terms.get(bt)
            terms[bt] = c if acc is None else acc + c
        return Cochain(self.dim, self.degree, terms)

    def __neg__(self):
        return Cochain(self.dim, self.degree,
                       {bt: -c for bt, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = _coef(factor)
        return Cochain(self.dim, self.degree,
                       {bt: c * factor for bt, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if (self.dim, self.degree) != (other.dim, other.degree):
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[bt] == other.terms[bt] for bt in self.terms)

    __hash__ = None

    def map_coefficients(self, fn):
        return Cochain(self.dim, self.degree,
                       {bt: fn(c) for bt, c in self.terms.items()})

    def at(self, assign):
        """Specialize every coefficient at a parameter assignment."""
        return self.map_coefficients(lambda c: Scalar(c.eval(assign)))

    def used_params(self):
        seen = []
        for c in self.terms.values():
            for p in c.used_params():
                if p not in seen:
                    seen.append(p)
        return tuple(seen)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].inputs, kv[0].output))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for bt, c in self.sorted_terms():
            slot = "psi(%s->%d)" % (",".join(map(str, bt.inputs)), bt.output)
            parts.append("%s*%s" % (c, slot) if not c.is_one else slot)
        return " + ".join(parts)

    def __repr__(self):
        return "Cochain(dim=%d, deg=%d, %s)" % (self.dim, self.degree, self)


# a codifferential is just a degree-2 cochain in a distinguished role
Codifferential = Cochain


def codifferential(dim, terms):
    return Cochain(dim, 2, terms)


def _insertion(phi, psi):
    """The shuffle insertion phi o- psi summed over (q, p-1)-shuffles."""
    p, q = phi.degree, psi.degree
    n = phi.dim
    deg = p + q - 1
    if p == 0 or deg < 0:
        return Cochain.zero(n, max(deg, 0))
    if deg > n:
        return Cochain.zero(n, n)
    acc = {}
    positions = list(itertools.combinations(range(deg), q))
    for combo in itertools.combinations(range(1, n + 1), deg):
        for pos in positions:
            sign = -1 if sum(pos[i] - i for i in range(q)) % 2 else 1
            pos_set = set(pos)
            sub = tuple(combo[i] for i in pos)
            rest = tuple(combo[i] for i in range(deg) if i not in pos_set)
            inner = psi.value_on(sub)
            if not inner:
                continue
            for mid, c1 in inner.items():
                outer = phi.value_on((mid,) + rest)
                for out, c2 in outer.items():
                    bt = BasisTerm(combo, out)
                    prod = c1 * c2
                    if sign < 0:
                        prod = -prod
                    cur = acc.get(bt)
                    acc[bt] = prod if cur is None else cur + prod
    return Cochain(n, deg, acc)


def nr_bracket(phi, psi):
    """Graded bracket [phi, psi] of cochains of degrees p and q.

    [phi, psi] = phi o- psi - (-1)^((p-1)(q-1)) psi o- phi, where o- is
    the alternating insertion of one cochain into the other.  Under this
    convention [d, d] = 0 is exactly the Jacobi identity, and [d, -]
    restricted to degree 1 is the derivation condition.
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch("ambient dimensions %d vs %d" % (phi.dim, psi.dim))
    left = _insertion(phi, psi)
    right = _insertion(psi, phi)
    if ((phi.degree - 1) * (psi.degree - 1)) % 2:
        return left + right
    return left - right


def coboundary(d, phi):
    """D(phi) = [d, phi]; on degree 1 this is the derivation defect."""
    return nr_bracket(d, phi)


def jacobi_check(d):
    """True iff [d, d] vanishes identically (in all parameters)."""
    return nr_bracket(d, d).is_zero


class BasisChange:
    """Invertible change of basis, entries in the scalar fraction field."""

    __slots__ = ("dim", "matrix", "_inv")

    def __init__(self, matrix):
        from .errors import SingularMatrix
        if matrix.rows != matrix.cols:
            raise ValueError("basis change must be square")
        if matrix.det().is_zero:
            raise SingularMatrix("basis change has zero determinant")
        self.dim = matrix.rows
        self.matrix = matrix
        self._inv = None

    @classmethod
    def from_rows(cls, rows):
        from .scalar import Matrix
        return cls(Matrix(rows))

    def inverse_matrix(self):
        if self._inv is None:
            self._inv = self.matrix.inverse()
        return self._inv

    def inverse(self):
        return BasisChange(self.inverse_matrix())


def _minor_det(mat, row_idx, col_idx):
    """Determinant of the submatrix with given 0-based rows and columns."""
    k = len(row_idx)
    if k == 0:
        return ONE
    if k == 1:
        return mat.entries[row_idx[0]][col_idx[0]]
    acc = ZERO
    for pos, r in enumerate(row_idx):
        e = mat.entries[r][col_idx[0]]
        if e.is_zero:
            continue
        sub = _minor_det(mat, row_idx[:pos] + row_idx[pos + 1:], col_idx[1:])
        term = e * sub
        acc = acc + term if pos % 2 == 0 else acc - term
    return acc


def transform_cochain(phi, change):
    """Push a degree-k cochain through a basis change G.

    phi'(x_1,...,x_k) = G phi(G^{-1} x_1, ..., G^{-1} x_k).
    """
    n = phi.dim
    if change.dim != n:
        raise DimensionMismatch("basis change dim %d vs cochain dim %d"
                                % (change.dim, n))
    inv = change.inverse_matrix()
    g = change.matrix
    k = phi.degree
    acc = {}
    targets = list(itertools.combinations(range(1, n + 1), k))
    for bt, coef in phi.terms.items():
        rows = tuple(i - 1 for i in bt.inputs)
        out_col = bt.output - 1
        for combo in targets:
            cols = tuple(j - 1 for j in combo)
            minor = _minor_det(inv, rows, cols)
            if minor.is_zero:
                continue
            base = coef * minor
            for u in range(n):
                ge = g.entries[u][out_col]
                if ge.is_zero:
                    continue
                key = BasisTerm(combo, u + 1)
                add = base * ge
                cur = acc.get(key)
                acc[key] = add if cur is None else cur + add
    return Cochain(n, k, acc)


def transform(d, change):
    """Push-forward structure of a codifferential along a basis change."""
    return transform_cochain(d, change)
