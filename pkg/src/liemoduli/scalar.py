"""Exact scalar arithmetic and exact linear algebra.

Everything is built from Python ints and Fractions: sparse multivariate
polynomials with integer coefficients, fractions of such polynomials
(Scalar), and matrices over them.  There is deliberately no floating
point anywhere in this module or its clients.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import (
    DenominatorVanishes,
    MissingParameter,
    NoValidSample,
    ParametricEntry,
    ParseError,
)


def _grlex_key(item):
    exps = item[0]
    return (sum(exps), exps)


class Polynomial:
    """Sparse multivariate polynomial with integer coefficients.

    ``terms`` maps an exponent tuple (one entry per declared parameter)
    to a nonzero integer coefficient.  Term order for display and
    leading-term queries is graded lexicographic in declared parameter
    order.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params=(), terms=None):
        params = tuple(params)
        tidy = {}
        if terms:
            for exps, coef in terms.items():
                if isinstance(coef, bool) or not isinstance(coef, int):
                    raise TypeError("integer coefficients only, got %r" % (coef,))
                exps = tuple(exps)
                if len(exps) != len(params):
                    raise ValueError("exponent vector length %d != %d params"
                                     % (len(exps), len(params)))
                if coef:
                    tidy[exps] = tidy.get(exps, 0) + coef
                    if not tidy[exps]:
                        del tidy[exps]
        self.params = params
        self.terms = tidy

    @classmethod
    def const(cls, c):
        return cls((), {(): c} if c else {})

    @classmethod
    def variable(cls, name, params=None):
        params = (name,) if params is None else tuple(params)
        exps = tuple(1 if p == name else 0 for p in params)
        if name not in params:
            raise ValueError("variable %r not among params %r" % (name, params))
        return cls(params, {exps: 1})

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return self.terms == {(0,) * len(self.params): 1} if self.terms else False

    def used_params(self):
        used = [False] * len(self.params)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(p for p, u in zip(self.params, used) if u)

    def embed(self, params):
        """Re-express over a superset (or reordering) of the used parameters."""
        params = tuple(params)
        if params == self.params:
            return self
        pos = []
        for p in self.params:
            if p in params:
                pos.append(params.index(p))
            else:
                pos.append(None)
        terms = {}
        for exps, c in self.terms.items():
            vec = [0] * len(params)
            for i, e in enumerate(exps):
                if e:
                    if pos[i] is None:
                        raise ValueError("parameter %r not in target %r"
                                         % (self.params[i], params))
                    vec[pos[i]] = e
            key = tuple(vec)
            terms[key] = terms.get(key, 0) + c
        return Polynomial(params, terms)

    def _aligned(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return None, None
        if self.params == other.params:
            return self, other
        merged = list(self.params)
        for p in other.params:
            if p not in merged:
                merged.append(p)
        merged = tuple(merged)
        return self.embed(merged), other.embed(merged)

    def __add__(self, other):
        a, b = self._aligned(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return Polynomial(a.params, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._aligned(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._aligned(other)
        if a is None:
            return NotImplemented
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return Polynomial(a.params, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative ints")
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    __hash__ = None

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self):
        """(exponent tuple, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=lambda e: (sum(e), e))
        return exps, self.terms[exps]

    def content(self):
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def map_coefficients(self, fn):
        return Polynomial(self.params, {e: fn(c) for e, c in self.terms.items()})

    def eval(self, assign):
        """Exact value at a parameter assignment (rationals); strict coverage."""
        vals = []
        for p in self.params:
            if p not in assign:
                raise MissingParameter("no value for parameter %r" % p)
            v = assign[p]
            if isinstance(v, float):
                raise TypeError("no floats: assign %r exactly" % v)
            vals.append(Fraction(v))
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def exact_div(self, other):
        """Quotient self/other when the division is exact; raises otherwise."""
        if isinstance(other, int) and not isinstance(other, bool):
            other = Polynomial.const(other)
        a, b = self._aligned(other)
        if b.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quot = {}
        rem = dict(a.terms)
        be, bc = b.leading()
        while rem:
            re = max(rem, key=lambda e: (sum(e), e))
            rc = rem[re]
            qe = tuple(x - y for x, y in zip(re, be))
            if any(x < 0 for x in qe) or rc % bc:
                raise ValueError("inexact polynomial division")
            qc = rc // bc
            quot[qe] = quot.get(qe, 0) + qc
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(qe, e2))
                rem[key] = rem.get(key, 0) - qc * c2
                if not rem[key]:
                    del rem[key]
        return Polynomial(a.params, quot)

    def _term_str(self, exps, coef, lead=False):
        factors = []
        for p, e in zip(self.params, exps):
            if e == 1:
                factors.append(p)
            elif e > 1:
                factors.append("%s^%d" % (p, e))
        if not factors:
            body = str(abs(coef))
        else:
            body = "*".join(factors)
            if abs(coef) != 1:
                body = "%d*%s" % (abs(coef), body)
        sign = "-" if coef < 0 else ("" if lead else "+")
        return sign, body

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=_grlex_key, reverse=True)
        parts = []
        for i, (exps, coef) in enumerate(items):
            sign, body = self._term_str(exps, coef, lead=(i == 0))
            if i == 0:
                parts.append(sign + body)
            else:
                parts.append((sign or "+") + body)
        return "".join(parts)

    def __repr__(self):
        return "Polynomial(%s)" % self


def _promote_poly(value):
    if isinstance(value, Polynomial):
        return value, Polynomial.const(1)
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Polynomial.const(value), Polynomial.const(1)
    if isinstance(value, Fraction):
        return Polynomial.const(value.numerator), Polynomial.const(value.denominator)
    if isinstance(value, float):
        raise TypeError("no floats allowed; use Fraction or int")
    return None, None


class Scalar:
    """Fraction of integer-coefficient polynomials, kept in reduced form.

    Reduction divides out the integer content and any common monomial
    factor and normalizes the sign so the denominator's graded-lex
    leading coefficient is positive.  Equality is exact cross
    multiplication, so the lack of a full polynomial gcd never affects
    correctness, only the size of intermediate representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, Scalar):
            if den is not None:
                raise ValueError("cannot give a denominator with a Scalar")
            self.num, self.den = num.num, num.den
            return
        n, d = _promote_poly(num)
        if n is None:
            raise TypeError("cannot build a Scalar from %r" % (num,))
        if den is not None:
            dn, dd = _promote_poly(den)
            if dn is None:
                raise TypeError("cannot use %r as a denominator" % (den,))
            n, d = n * dd, d * dn
        if d.is_zero:
            raise ZeroDivisionError("scalar with zero denominator")
        self.num, self.den = _reduce(n, d)

    @classmethod
    def from_pair(cls, num, den):
        s = cls.__new__(cls)
        if den.is_zero:
            raise ZeroDivisionError("scalar with zero denominator")
        s.num, s.den = _reduce(num, den)
        return s

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num == self.den

    def used_params(self):
        seen = []
        for p in self.num.used_params() + self.den.used_params():
            if p not in seen:
                seen.append(p)
        return tuple(seen)

    @property
    def has_params(self):
        return bool(self.used_params())

    def as_fraction(self):
        if self.has_params:
            raise ParametricEntry("scalar still depends on %r" % (self.used_params(),))
        n = self.num.terms.get((0,) * len(self.num.params), 0)
        d = self.den.terms.get((0,) * len(self.den.params), 0)
        return Fraction(n, d)

    def eval(self, assign):
        dv = self.den.eval(assign)
        if dv == 0:
            raise DenominatorVanishes("denominator %s vanishes" % self.den)
        return self.num.eval(assign) / dv

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        n, d = _promote_poly(other)
        if n is None:
            return None
        return Scalar.from_pair(n, d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar.from_pair(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar.from_pair(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar.from_pair(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar.from_pair(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("scalar powers must be ints")
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("zero to a negative power")
            return Scalar.from_pair(self.den, self.num) ** (-n)
        return Scalar.from_pair(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero

    __hash__ = None

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = "(%s)" % num
        den = str(self.den)
        if len(self.den.terms) > 1 or self.den.total_degree() > 0:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def __repr__(self):
        return "Scalar(%s)" % self


def _reduce(num, den):
    num, den = num._aligned(den)
    if num.is_zero:
        return Polynomial.const(0), Polynomial.const(1)
    # common monomial factor
    mins = [None, None]
    for k, poly in enumerate((num, den)):
        m = None
        for exps in poly.terms:
            m = exps if m is None else tuple(min(a, b) for a, b in zip(m, exps))
        mins[k] = m
    shift = tuple(min(a, b) for a, b in zip(mins[0], mins[1]))
    if any(shift):
        num = Polynomial(num.params,
                         {tuple(e - s for e, s in zip(exps, shift)): c
                          for exps, c in num.terms.items()})
        den = Polynomial(den.params,
                         {tuple(e - s for e, s in zip(exps, shift)): c
                          for exps, c in den.terms.items()})
    # integer content
    g = math.gcd(num.content(), den.content())
    if g > 1:
        num = num.map_coefficients(lambda c: c // g)
        den = den.map_coefficients(lambda c: c // g)
    if num == den:
        num = den = Polynomial.const(1)
    # sign: graded-lex leading coefficient of den positive
    if den.leading()[1] < 0:
        num, den = -num, -den
    # drop parameters that no longer occur
    used = []
    for p in num.used_params() + den.used_params():
        if p not in used:
            used.append(p)
    if tuple(used) != num.params:
        keep = tuple(p for p in num.params if p in used)
        num = num.embed(keep)
        den = den.embed(keep)
    return num, den


ZERO = Scalar(0)
ONE = Scalar(1)


# ---------------------------------------------------------------------------
# expression grammar
#
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor ('*'? factor)*
#   factor := atom ('^' INT)*
#   atom   := INT | PARAM | '(' expr ')'


def _tokenize(text, line=None):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), col))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], col))
            i = j
        elif ch in "+-*^()":
            tokens.append((ch, ch, col))
            i += 1
        else:
            raise ParseError("unexpected character %r" % ch, line=line, col=col)
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _ExprParser:
    def __init__(self, tokens, params, line):
        self.tokens = tokens
        self.pos = 0
        self.params = params
        self.line = line

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %s, found %r" % (kind, tok[1]),
                             line=self.line, col=tok[2])
        self.pos += 1
        return tok

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind in ("int", "name", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            value = value ** tok[1]
        return value

    def atom(self):
        kind, val, col = self.peek()
        if kind == "int":
            self.take()
            return Polynomial.const(val)
        if kind == "name":
            self.take()
            if self.params is not None and val not in self.params:
                raise ParseError("unknown parameter %r" % val,
                                 line=self.line, col=col)
            if self.params is not None:
                return Polynomial.variable(val, self.params)
            return Polynomial.variable(val)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ParseError("expected a value, found %r" % (val,),
                         line=self.line, col=col)


def parse_scalar(text, params=None, line=None):
    """Parse the polynomial expression grammar into a Scalar.

    ``params``, when given, both restricts the allowed names and fixes
    the declared parameter order of the result.
    """
    tokens = _tokenize(text, line=line)
    parser = _ExprParser(tokens, tuple(params) if params is not None else None, line)
    poly = parser.expr()
    end = parser.peek()
    if end[0] != "end":
        raise ParseError("trailing input %r" % (end[1],), line=line, col=end[2])
    if params is not None:
        poly = poly.embed(tuple(params)) if poly.params != tuple(params) else poly
    return Scalar(poly)


def poly_eval(s, assign):
    """Exact rational value of a Scalar at a parameter assignment."""
    if not isinstance(s, Scalar):
        s = Scalar(s)
    return s.eval(assign)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Dense matrix of Scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        grid = [[e if isinstance(e, Scalar) else Scalar(e) for e in row]
                for row in entries]
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError("entry grid does not match %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = grid

    @classmethod
    def zero(cls, rows, cols):
        return cls([[ZERO] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(self.entries[i][j] == other.entries[i][j]
                   for i in range(self.rows) for j in range(self.cols))

    __hash__ = None

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out, self.rows, other.cols)

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def is_parameter_free(self):
        return all(not e.has_params for row in self.entries for e in row)

    def eval(self, assign):
        return Matrix([[Scalar(e.eval(assign)) for e in row] for row in self.entries],
                      self.rows, self.cols)

    def used_params(self):
        seen = []
        for row in self.entries:
            for e in row:
                for p in e.used_params():
                    if p not in seen:
                        seen.append(p)
        return tuple(seen)

    def det(self):
        """Determinant by fraction-free elimination over the scalar field."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [row[:] for row in self.entries]
        sign = 1
        det = ONE
        for c in range(n):
            piv = None
            for r in range(c, n):
                if not m[r][c].is_zero:
                    piv = r
                    break
            if piv is None:
                return ZERO
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                sign = -sign
            pv = m[c][c]
            det = det * pv
            for r in range(c + 1, n):
                f = m[r][c] / pv
                if f.is_zero:
                    continue
                for j in range(c + 1, n):
                    m[r][j] = m[r][j] - f * m[c][j]
        return det if sign > 0 else -det

    def inverse(self):
        from .errors import SingularMatrix
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        m = [row[:] + [ONE if i == j else ZERO for j in range(n)]
             for i, row in enumerate(self.entries)]
        for c in range(n):
            piv = None
            for r in range(c, n):
                if not m[r][c].is_zero:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrix("matrix is singular")
            m[c], m[piv] = m[piv], m[c]
            pv = m[c][c]
            m[c] = [e / pv for e in m[c]]
            for r in range(n):
                if r == c or m[r][c].is_zero:
                    continue
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return Matrix([row[n:] for row in m], n, n)

    def __str__(self):
        return "\n".join("  ".join(str(e) for e in row) for row in self.entries)

    def __repr__(self):
        return "Matrix(%dx%d)" % (self.rows, self.cols)


def _bareiss_rank(rows, ncols):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pv * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_exact(M):
    """Exact rank of a parameter-free matrix (Bareiss over the integers)."""
    if M.rows == 0 or M.cols == 0:
        return 0
    int_rows = []
    for row in M.entries:
        fracs = []
        for e in row:
            if e.has_params:
                raise ParametricEntry("rank_exact requires parameter-free entries")
            fracs.append(e.as_fraction())
        scale = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        int_rows.append([int(f * scale) for f in fracs])
    return _bareiss_rank(int_rows, M.cols)


def rank_generic(M, seed=0, trials=2, avoid=(), low=2, high=10 ** 6, budget=200):
    """Generic rank of a matrix over the parameter fraction field.

    Takes the maximum exact rank over ``trials`` random integer
    evaluations, rejecting points where any avoid polynomial or any
    entry denominator vanishes.  Failure probability per trial follows
    the Schwartz-Zippel bound total-degree/(high-low+1).
    """
    if trials < 2:
        raise ValueError("rank_generic needs at least 2 trials")
    if M.rows == 0 or M.cols == 0:
        return 0
    params = set(M.used_params())
    for poly in avoid:
        params.update(poly.used_params())
    params = sorted(params)
    if not params:
        return rank_exact(M)
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        assign = None
        for _ in range(budget):
            cand = {p: rng.randint(low, high) for p in params}
            if any(poly.eval(cand) == 0 for poly in avoid):
                continue
            if any(e.den.eval(cand) == 0 for row in M.entries for e in row):
                continue
            assign = cand
            break
        if assign is None:
            raise NoValidSample("no evaluation point off the excluded loci")
        best = max(best, rank_exact(M.eval(assign)))
    return best


def rank_symbolic(M):
    """Exact rank over the fraction field by polynomial Bareiss elimination.

    Escalation path only: intermediate polynomials can grow large.
    Pivot is the first nonzero entry in column order.
    """
    if M.rows == 0 or M.cols == 0:
        return 0
    rows = []
    for row in M.entries:
        dens = Polynomial.const(1)
        for e in row:
            if not e.den.is_one:
                dens = dens * e.den
        if dens.is_one:
            rows.append([e.num for e in row])
        else:
            rows.append([(e.num * dens.exact_div(e.den)) if not e.den.is_one
                         else e.num * dens for e in row])
    ncols = M.cols
    rank = 0
    prev = Polynomial.const(1)
    for c in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if not rows[r][c].is_zero:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        pv = pr[c]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pv * row[j] - f * pr[j]).exact_div(prev)
            row[c] = Polynomial.const(0)
        prev = pv
        rank += 1
        if rank == len(rows):
            break
    return rank


# ---------------------------------------------------------------------------
# row reduction over plain Fractions (prebasis construction, spans, kernels)


def rref(rows, ncols):
    """Reduced row echelon form; returns (reduced nonzero rows, pivot cols)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivots.append(c)
        rank += 1
    return m[:rank], pivots


def kernel_basis(rows, ncols):
    """Basis of the right kernel of the matrix given as Fraction rows."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][free]
        basis.append(vec)
    return basis


def solve_columns(rows, ncols, target):
    """One solution x of A x = target with free variables set to zero.

    ``rows`` are the rows of A; returns None when inconsistent.
    """
    aug = [list(map(Fraction, r)) + [Fraction(t)] for r, t in zip(rows, target)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def span_rank(vectors, ncols):
    red, _ = rref(vectors, ncols)
    return len(red)
