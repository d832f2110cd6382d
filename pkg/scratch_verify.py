endash = None
import random
from fractions import Fraction

from liemoduli.cochain import BasisTerm, Cochain, jacobi_check, nr_bracket
from liemoduli.cohomology import betti, center, series_invariants
from liemoduli.scalar import parse_scalar


def C(dim, spec, params=()):
    """spec: list of (i, j, out, coef-expr)"""
    terms = {}
    for i, j, out, coef in spec:
        c = parse_scalar(str(coef), params=params) if params else parse_scalar(str(coef))
        key = BasisTerm((i, j), out)
        assert key not in terms
        terms[key] = c
    return Cochain(dim, 2, terms)


def check(name, d, expected=None, at=None, avoid_exprs=(), params=()):
    if at is not None:
        dd = d.at(at)
    else:
        dd = d
    jac = jacobi_check(dd)
    if not jac:
        print(f"{name}: JACOBI FAILS")
        return
    if dd.used_params():
        print(f"{name}: symbolic jacobi ok")
        return
    b = betti(dd).betti
    c0 = center(dd)
    tag = "match" if expected is None or tuple(expected) == b else f"MISMATCH expected {expected}"
    euler = sum((-1) ** k * h for k, h in enumerate(b))
    print(f"{name}: betti={b} center={c0} euler={euler} {tag}")


print("=== dim 3 ===")
d1 = C(3, [(1,2,3,1),(1,3,2,1),(2,3,1,1)])
check("3.d1", d1, (0,0,0,0))
d2 = C(3, [(1,3,1,"p"),(2,3,1,"1"),(2,3,2,"q")], params=("p","q"))
check("3.d2 sym", d2)
check("3.d2(5:3)", d2, (0,1,1,0), at={"p":5,"q":3})
check("3.d2(1:1)", d2, (0,1,2,1), at={"p":1,"q":1})
check("3.d2(1:0)", d2, (1,2,1,0), at={"p":1,"q":0})
check("3.d2(0:0)", d2, (1,4,5,2), at={"p":0,"q":0})
d3 = C(3, [(1,3,1,1),(2,3,2,1)])
check("3.d3", d3, (0,3,3,0))

print("=== dim 4 ===")
check("4.d1", C(4, [(2,3,4,1),(2,4,3,1),(3,4,2,1)]), (1,1,0,1,1))
check("4.d2", C(4, [(1,3,1,1),(2,4,2,1)]), (0,0,0,0,0))
d43 = C(4, [(2,3,1,"1"),(1,4,1,"p+q"),(2,4,2,"p"),(3,4,2,"1"),(3,4,3,"q")], params=("p","q"))
check("4.d3 sym", d43)
check("4.d3(5:3)", d43, (0,1,1,0,0), at={"p":5,"q":3})
check("4.d3(1:0)", d43, (0,1,2,1,0), at={"p":1,"q":0})
check("4.d3(1:-1)", d43, (1,2,2,2,1), at={"p":1,"q":-1})
check("4.d3(0:0)", d43, (1,4,6,5,2), at={"p":0,"q":0})
check("4.d4", C(4, [(2,3,1,1),(1,4,1,2),(2,4,2,1),(3,4,3,1)]), (0,3,3,0,0))
d45 = C(4, [(1,4,1,"p"),(2,4,1,"1"),(2,4,2,"q"),(3,4,2,"1"),(3,4,3,"r")], params=("p","q","r"))
check("4.d5 sym", d45)
check("4.d5(2:3:11)", d45, (0,2,2,0,0), at={"p":2,"q":3,"r":11})
check("4.d5(2:3:-5)", d45, (0,2,2,1,1), at={"p":2,"q":3,"r":-5})
check("4.d5(2:3:5)", d45, (0,2,3,1,0), at={"p":2,"q":3,"r":5})
check("4.d5(2:3:0)", d45, (1,3,3,1,0), at={"p":2,"q":3,"r":0})
check("4.d5(1:-1:0)", d45, (1,3,5,5,2), at={"p":1,"q":-1,"r":0})
check("4.d5(0:0:0)", d45, (1,4,6,5,2), at={"p":0,"q":0,"r":0})
d46 = C(4, [(1,4,1,"p"),(2,4,2,"p"),(3,4,2,"1"),(3,4,3,"q")], params=("p","q"))
check("4.d6 sym", d46)
check("4.d6(2:7)", d46, (0,4,4,0,0), at={"p":2,"q":7})
check("4.d6(1:-2)", d46, (0,4,4,1,1), at={"p":1,"q":-2})
check("4.d6(1:2)", d46, (0,4,5,1,0), at={"p":1,"q":2})
check("4.d6(0:1)", d46, (2,6,6,2,0), at={"p":0,"q":1})
check("4.d6(1:0)", d46, (1,5,7,3,0), at={"p":1,"q":0})
check("4.d6(0:0)", d46, (2,8,13,10,3), at={"p":0,"q":0})
check("4.d7", C(4, [(1,4,1,1),(2,4,2,1),(3,4,3,1)]), (0,8,8,0,0))

print("=== dim 5 singletons / variants ===")
d51 = C(5, [(3,4,4,2),(3,5,5,-2),(4,5,3,1),(1,2,1,1)])
check("5.d1", d51, (0,0,0,0,0,0))
iv = series_invariants(d51)
print("  d1 solvable:", iv.is_solvable)

# d2 variants
va = C(5, [(3,4,4,2),(3,5,5,-2),(4,5,3,1),(1,2,1,1),(1,3,1,-1),(2,3,2,1),(2,4,1,1),(1,5,2,1)])
print("5.d2 table-literal jacobi:", jacobi_check(va))
vb = C(5, [(3,4,4,2),(3,5,3,-2),(4,5,3,1),(1,3,1,-1),(2,3,2,1),(2,4,1,1),(1,5,2,1)])
print("5.d2 prose-literal jacobi:", jacobi_check(vb))
vc = C(5, [(3,4,4,2),(3,5,5,-2),(4,5,3,1),(1,3,1,-1),(2,3,2,1),(2,4,1,1),(1,5,2,1)])
print("5.d2 prose-e5fix jacobi:", jacobi_check(vc))
if jacobi_check(vc):
    check("5.d2 (prose-e5fix)", vc, (0,1,0,0,1,0))
    print("  d2 solvable:", series_invariants(vc).is_solvable)

d53 = C(5, [(3,4,4,2),(3,5,5,-2),(4,5,3,1)])
check("5.d3", d53, (2,4,2,2,4,2))
print("  d3 solvable:", series_invariants(d53).is_solvable)
# d3 prose-literal reading "2psi(34->4) - 2psi(35->5)psi(34->5)" is not even a term list;
# try alternative with psi34->5: jacobi?
d53alt = C(5, [(3,4,4,2),(3,5,5,-2),(3,4,5,1)])
print("5.d3 alt (psi34->5) jacobi:", jacobi_check(d53alt), " solvable:", series_invariants(d53alt).is_solvable if jacobi_check(d53alt) else "-")

check("5.d4", C(5, [(2,3,1,1),(1,4,1,1),(2,4,2,1),(1,5,1,1),(3,5,3,1)]), (0,0,0,0,0,0))
