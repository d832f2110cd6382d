"""Independent brute-force adjoint CE cohomology oracle (classical formula),
used to cross-check the NR-bracket-based engine before freezing catalog data."""

import itertools
from fractions import Fraction

from liemoduli.cochain import BasisTerm, Cochain
from liemoduli.cohomology import cochain_basis
from liemoduli.scalar import rref


def brackets_from(d):
    n = d.dim
    table = {}
    for bt, c in d.terms.items():
        i, j = bt.inputs
        table.setdefault((i, j), {})[bt.output] = c.as_fraction()
    def br(x, y):  # basis indices, returns dict out->Fraction
        if x == y:
            return {}
        sgn = 1
        if x > y:
            x, y, sgn = y, x, -1
        vals = table.get((x, y), {})
        return {o: sgn * v for o, v in vals.items()}
    return br


def ce_differential_rank(d, k):
    """Rank of the classical CE differential C^k -> C^{k+1} (adjoint)."""
    n = d.dim
    br = brackets_from(d)
    dom = cochain_basis(n, k)
    cod = cochain_basis(n, k + 1)
    cod_index = {bt: i for i, bt in enumerate(cod)}

    def phi_eval(term, args):
        # term: BasisTerm of degree k; args: tuple of indices (may repeat)
        idx = list(args)
        sgn = 1
        for a in range(1, len(idx)):
            b = a
            while b > 0 and idx[b-1] > idx[b]:
                idx[b-1], idx[b] = idx[b], idx[b-1]
                sgn = -sgn
                b -= 1
        for a in range(1, len(idx)):
            if idx[a-1] == idx[a]:
                return {}
        if tuple(idx) != term.inputs:
            return {}
        return {term.output: Fraction(sgn)}

    cols = []
    for term in dom:
        col = [Fraction(0)] * len(cod)
        for args in itertools.combinations(range(1, n + 1), k + 1):
            acc = {}
            # sum_i (-1)^i [x_i, phi(...x_i omitted...)]
            for i in range(k + 1):
                rest = args[:i] + args[i+1:]
                inner = phi_eval(term, rest)
                for mid, c in inner.items():
                    for out, bc in br(args[i], mid).items():
                        acc[out] = acc.get(out, Fraction(0)) + (-1) ** i * c * bc
            # sum_{i<j} (-1)^{i+j} phi([x_i,x_j], ...rest...)
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    rest = tuple(a for t, a in enumerate(args) if t != i and t != j)
                    for mid, bc in br(args[i], args[j]).items():
                        inner = phi_eval(term, (mid,) + rest)
                        for out, c in inner.items():
                            acc[out] = acc.get(out, Fraction(0)) + (-1) ** (i + j) * bc * c
            for out, v in acc.items():
                if v:
                    col[cod_index[BasisTerm(args, out)]] += v
        cols.append(col)
    rows = [[cols[j][i] for j in range(len(dom))] for i in range(len(cod))]
    red, piv = rref(rows, len(dom))
    return len(piv)


def ce_betti(d):
    import math
    n = d.dim
    ranks = [ce_differential_rank(d, k) for k in range(n)]
    out = []
    for k in range(n + 1):
        below = ranks[k-1] if k > 0 else 0
        here = ranks[k] if k < n else 0
        out.append(n * math.comb(n, k) - here - below)
    return tuple(out)


if __name__ == "__main__":
    from liemoduli.scalar import parse_scalar
    from liemoduli.cohomology import betti

    def C(dim, spec):
        terms = {}
        for i, j, out, coef in spec:
            terms[BasisTerm((i, j), out)] = parse_scalar(str(coef))
        return Cochain(dim, 2, terms)

    cases = {
        "3.d2(1:1)": C(3, [(1,3,1,1),(2,3,1,1),(2,3,2,1)]),
        "3.d2(0:0)": C(3, [(2,3,1,1)]),
        "3.d1": C(3, [(1,2,3,1),(1,3,2,1),(2,3,1,1)]),
        "3.d2(5:3)": C(3, [(1,3,1,5),(2,3,1,1),(2,3,2,3)]),
        "4.d6(0:0)": C(4, [(3,4,2,1)]),
        "4.d5(2:3:5)": C(4, [(1,4,1,2),(2,4,1,1),(2,4,2,3),(3,4,2,1),(3,4,3,5)]),
    }
    for name, d in cases.items():
        print(name, "oracle:", ce_betti(d), " engine:", betti(d).betti)
