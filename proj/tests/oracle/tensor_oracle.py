#!/usr/bin/env python3
"""Brute-force oracle for the non-abelian tensor square of small Leibniz algebras.

Independent of the C++ implementation: structure constants are plain nested
lists of Fractions, every relation is instantiated densely on basis tuples and
the rank is taken with sympy's exact Matrix.rank().  Writes one golden JSON
file per fixture.
"""
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy

FIXTURES = {
    "A1": (1, {}),
    "L2": (2, {(1, 1): {0: 1}}),
    "R2": (2, {(0, 1): {0: 1}, (1, 0): {0: -1}}),
}


def bracket_table(dim, entries):
    sc = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), coeffs in entries.items():
        for k, v in coeffs.items():
            sc[i][j][k] = Fraction(v)
    return sc


def tensor_square(dim, sc, lie_collapse=False):
    n = dim
    amb = 2 * n * n

    def ot(i, j):  # e_i (x) e_j
        return i * n + j

    def oa(i, j):  # e_i (*) e_j
        return n * n + i * n + j

    def br(i, j):
        return sc[i][j]

    def sym(kind, u, v):
        """Bilinear symbol of two coordinate vectors."""
        out = [Fraction(0)] * amb
        for a in range(n):
            if u[a] == 0:
                continue
            for b in range(n):
                if v[b] == 0:
                    continue
                idx = ot(a, b) if kind == "ot" else oa(a, b)
                out[idx] += u[a] * v[b]
        return out

    def e(i):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        return v

    def add(*terms):
        out = [Fraction(0)] * amb
        for c, vec in terms:
            for k in range(amb):
                out[k] += c * vec[k]
        return out

    rels = []
    for a, b, c in itertools.product(range(n), repeat=3):
        ea, eb, ec = e(a), e(b), e(c)
        # RTLeib3, adjoint actions
        rels.append(add((1, sym("ot", ea, br(b, c))), (-1, sym("ot", br(a, b), ec)), (1, sym("ot", br(a, c), eb))))
        rels.append(add((1, sym("oa", ea, br(b, c))), (-1, sym("oa", br(a, b), ec)), (1, sym("oa", br(a, c), eb))))
        rels.append(add((1, sym("ot", br(a, b), ec)), (-1, sym("oa", br(a, c), eb)), (1, sym("ot", ea, br(c, b)))))
        rels.append(add((1, sym("oa", br(a, b), ec)), (-1, sym("ot", br(a, c), eb)), (1, sym("oa", ea, br(c, b)))))
        # RTLeib4
        rels.append(add((1, sym("ot", ea, br(b, c))), (1, sym("ot", ea, br(c, b)))))
        rels.append(add((1, sym("oa", ea, br(b, c))), (1, sym("oa", ea, br(c, b)))))
    for a, b, c, d in itertools.product(range(n), repeat=4):
        # RTLeib5: the two outer expressions of each line agree
        rels.append(add((1, sym("ot", br(a, b), br(c, d))), (-1, sym("oa", br(a, b), br(c, d)))))
    if lie_collapse:
        for a, b in itertools.product(range(n), repeat=2):
            rels.append(add((1, sym("oa", e(a), e(b))), (1, sym("ot", e(b), e(a)))))
    rank = sympy.Matrix(rels).rank() if rels else 0
    return amb, rank


def lie_tensor_square(dim, sc):
    """Classical non-abelian tensor square of a Lie algebra (adjoint actions).

    Generators x(x)y, relations
      [x,x'](x)y = x(x)[x',y] - x'(x)[x,y]
      x(x)[y,y'] = [y',x](x)y - [y,x](x)y'
    """
    n = dim
    amb = n * n

    def br(i, j):
        return sc[i][j]

    def sym(u, v):
        out = [Fraction(0)] * amb
        for a in range(n):
            for b in range(n):
                out[a * n + b] += u[a] * v[b]
        return out

    def e(i):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        return v

    def neg(v):
        return [-x for x in v]

    rels = []
    for a, b, c in itertools.product(range(n), repeat=3):
        lhs = sym(br(a, b), e(c))
        r1 = sym(e(a), br(b, c))
        r2 = sym(e(b), br(a, c))
        rels.append([lhs[k] - r1[k] + r2[k] for k in range(amb)])
        lhs = sym(e(a), br(b, c))
        r1 = sym(br(c, a), e(b))
        r2 = sym(br(b, a), e(c))
        rels.append([lhs[k] - r1[k] + r2[k] for k in range(amb)])
    rank = sympy.Matrix(rels).rank() if rels else 0
    return amb, rank


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (dim, entries) in FIXTURES.items():
        sc = bracket_table(dim, entries)
        amb, rank = tensor_square(dim, sc)
        doc = {
            "algebra": name,
            "ambient_dim": amb,
            "relation_rank": rank,
            "quotient_dim": amb - rank,
        }
        if name == "R2":
            amb_l, rank_l = tensor_square(dim, sc, lie_collapse=True)
            lamb, lrank = lie_tensor_square(dim, sc)
            doc["lie_collapse_quotient_dim"] = amb_l - rank_l
            doc["classical_lie_tensor_square_dim"] = lamb - lrank
        (out / f"tensor-{name}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(json.dumps(doc, sort_keys=True))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "golden")
