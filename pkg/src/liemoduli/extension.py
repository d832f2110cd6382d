"""Extensions d = delta + mu + lambda + psi: the three structure
conditions, assembly, the matrix-to-algebra construction for extensions
of a line by a trivial algebra, and the rational symmetry maps of the
two quasi-projective families together with their group relations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochain import BasisTerm, Cochain, jacobi_check, nr_bracket
from .errors import ConditionFailed, RangeViolation, UndefinedAtPoint
from .scalar import Matrix, Scalar, parse_scalar


def _classify_term(bt, m_dim):
    ins_m = sum(1 for i in bt.inputs if i <= m_dim)
    out_m = bt.output <= m_dim
    if ins_m == 2:
        return "mu" if out_m else None
    if ins_m == 1:
        return "lambda" if out_m else None
    return ("psi" if out_m else "delta")


@dataclass
class ExtensionData:
    """Structure data of an extension with ideal M = e_1..e_m.

    mu lives on M, delta on the quotient slots, lambda mixes one input
    from each side with output in M, psi takes two quotient inputs into M.
    """

    m_dim: int
    w_dim: int
    mu: Cochain
    delta: Cochain
    lam: Cochain
    psi: Cochain

    def __post_init__(self):
        n = self.m_dim + self.w_dim
        for role, part in (("mu", self.mu), ("delta", self.delta),
                           ("lambda", self.lam), ("psi", self.psi)):
            if part.dim != n or part.degree != 2:
                raise RangeViolation("%s must be a degree-2 cochain on dim %d"
                                     % (role, n))
            for bt in part.terms:
                if _classify_term(bt, self.m_dim) != role:
                    raise RangeViolation("term %r breaks the %s index ranges"
                                         % (bt, role))

    @classmethod
    def from_codifferential(cls, d, m_dim):
        """Split a codifferential by index ranges; raises when a term fits
        no extension role."""
        n = d.dim
        parts = {"mu": {}, "delta": {}, "lambda": {}, "psi": {}}
        for bt, c in d.terms.items():
            role = _classify_term(bt, m_dim)
            if role is None:
                raise RangeViolation("term %r has no extension role for m=%d"
                                     % (bt, m_dim))
            parts[role][bt] = c
        return cls(m_dim, n - m_dim,
                   Cochain(n, 2, parts["mu"]), Cochain(n, 2, parts["delta"]),
                   Cochain(n, 2, parts["lambda"]), Cochain(n, 2, parts["psi"]))

    def assembled_terms(self):
        total = self.mu + self.delta + self.lam + self.psi
        return total


def check_compatibility(mu, lam):
    """[mu, lambda] = 0: the quotient acts by derivations of mu."""
    return nr_bracket(mu, lam).is_zero


def check_mc(delta, lam, mu, psi):
    """(1/2)[delta+lambda, delta+lambda] + [mu, psi] = 0."""
    dl = delta + lam
    half = Scalar(Fraction(1, 2))
    total = nr_bracket(dl, dl).scale(half) + nr_bracket(mu, psi)
    return total.is_zero


def check_cocycle(delta, lam, psi):
    """[delta+lambda, psi] = 0."""
    return nr_bracket(delta + lam, psi).is_zero


def assemble_extension(data):
    """Sum the four parts after checking the three conditions.

    The result satisfies the Jacobi identity exactly when all three
    checks pass; the equivalence is test-enforced in both directions.
    """
    failed = []
    if not check_compatibility(data.mu, data.lam):
        failed.append("compatibility")
    if not check_mc(data.delta, data.lam, data.mu, data.psi):
        failed.append("maurer-cartan")
    if not check_cocycle(data.delta, data.lam, data.psi):
        failed.append("cocycle")
    if failed:
        raise ConditionFailed(failed)
    d = data.assembled_terms()
    if not jacobi_check(d):
        raise ConditionFailed(["jacobi"])
    return d


def algebra_from_matrix(A):
    """Extension of a line by the trivial algebra with module matrix A.

    d = sum_ij a^i_j psi(j, n+1 -> i) on dimension n+1; any matrix yields
    a Lie algebra.
    """
    n = A.rows
    if A.cols != n:
        raise ValueError("module matrix must be square")
    terms = {}
    for i in range(n):
        for j in range(n):
            c = A.entries[i][j]
            if not c.is_zero:
                terms[BasisTerm((j + 1, n + 1), i + 1)] = c
    return Cochain(n + 1, 2, terms)


def module_matrix(adef, assign=None):
    """The stored module matrix of a trivial-by-trivial catalog entry."""
    if adef.module_matrix is None:
        raise ValueError("entry %s has no module matrix" % adef.id)
    rows = [[parse_scalar(e, params=adef.params or None) for e in row]
            for row in adef.module_matrix]
    mat = Matrix(rows)
    return mat.eval(assign) if assign else mat


# shape matrices of the constrained module structures, used to exercise
# the compatibility check on whole symbolic families


def lambda_shape_heisenberg4():
    """mu = psi(3,4->2) on dim 5 and the compatible 8-parameter lambda."""
    mu = Cochain(5, 2, {BasisTerm((3, 4), 2): 1})
    params = ("p", "q", "r", "a13", "a14", "a21", "a34", "a43")
    shape = {(1, 1): "p", (1, 3): "a13", (1, 4): "a14",
             (2, 1): "a21", (2, 2): "q+r",
             (3, 3): "q", (3, 4): "a34",
             (4, 3): "a43", (4, 4): "r"}
    terms = {BasisTerm((j, 5), i): parse_scalar(expr, params=params)
             for (i, j), expr in shape.items()}
    return mu, Cochain(5, 2, terms)


def lambda_shape_filiform4():
    """mu = psi(2,3->1)+psi(3,4->2) on dim 5 and its 4-parameter lambda."""
    mu = Cochain(5, 2, {BasisTerm((2, 3), 1): 1, BasisTerm((3, 4), 2): 1})
    params = ("a33", "a44", "a14", "a43")
    shape = {(1, 1): "2a33+a44", (1, 4): "a14",
             (2, 2): "a33+a44", (3, 3): "a33",
             (4, 3): "a43", (4, 4): "a44"}
    terms = {BasisTerm((j, 5), i): parse_scalar(expr, params=params)
             for (i, j), expr in shape.items()}
    return mu, Cochain(5, 2, terms)


def lambda_shape_heisenberg3():
    """mu = psi(2,3->1) on dim 5 (3-dim ideal) with shaped A and B."""
    mu = Cochain(5, 2, {BasisTerm((2, 3), 1): 1})
    params = ("a22", "a23", "a32", "a33", "b22", "b23", "b32", "b33")
    shape_a = {(1, 1): "a22+a33", (2, 2): "a22", (2, 3): "a23",
               (3, 2): "a32", (3, 3): "a33"}
    shape_b = {(1, 1): "b22+b33", (2, 2): "b22", (2, 3): "b23",
               (3, 2): "b32", (3, 3): "b33"}
    terms = {}
    for (i, j), expr in shape_a.items():
        terms[BasisTerm((j, 4), i)] = parse_scalar(expr, params=params)
    for (i, j), expr in shape_b.items():
        terms[BasisTerm((j, 5), i)] = parse_scalar(expr, params=params)
    return mu, Cochain(5, 2, terms)


# ---------------------------------------------------------------------------
# family symmetry maps (exact rational formulas on projective tuples)


def _frac_point(point):
    out = []
    for x in point:
        if isinstance(x, float):
            raise TypeError("projective coordinates must be exact rationals")
        out.append(Fraction(x))
    return tuple(out)


def projective_equal(u, v):
    """Projective equality via vanishing of all 2x2 minors."""
    u = _frac_point(u)
    v = _frac_point(v)
    if len(u) != len(v):
        return False
    if not any(u) or not any(v):
        return False
    n = len(u)
    return all(u[i] * v[j] - u[j] * v[i] == 0
               for i in range(n) for j in range(i + 1, n))


def _d5_sigma(p, q, r):
    for name, value in (("r-q", r - q), ("r-p", r - p)):
        if value == 0:
            raise UndefinedAtPoint(name)
    return (r * (p - q) ** 2 / ((r - q) * (r - p)),
            p * (p - q) / (r - p),
            p * (r - q) / (r - p))


def _d5_tau(p, q, r):
    for name, value in (("r", r), ("p-q", p - q), ("r*p-q^2", r * p - q * q)):
        if value == 0:
            raise UndefinedAtPoint(name)
    den = r * p - q * q
    return (q * q * (p - q) / den,
            -(q ** 3) * (r - q) / (r * den),
            p * (r - q) ** 2 * q * q / (r * (p - q) * den))


def _d6_sigma(p, q):
    return (p - q, p)

def _d6_tau(p, q):
    return (p, p - q)


_MAPS = {
    ("d5", "sigma"): (3, _d5_sigma),
    ("d5", "tau"): (3, _d5_tau),
    ("d6", "sigma"): (2, _d6_sigma),
    ("d6", "tau"): (2, _d6_tau),
}


def symmetry_map(family, which, point):
    """Apply a family symmetry generator to a projective point.

    ``family`` is "d5" or "d6" (their dimension-5 incarnations), ``which``
    is "sigma" or "tau".  Exact rational arithmetic; raises
    UndefinedAtPoint naming the vanishing denominator.
    """
    fam = family.split(".")[-1]
    key = (fam, which)
    if key not in _MAPS:
        raise ValueError("no symmetry map %r for family %r" % (which, family))
    arity, fn = _MAPS[key]
    pt = _frac_point(point)
    if len(pt) != arity:
        raise ValueError("family %s needs %d coordinates" % (fam, arity))
    if not any(pt):
        raise ValueError("the zero tuple is not a projective point")
    image = fn(*pt)
    return tuple(Fraction(x) for x in image)
