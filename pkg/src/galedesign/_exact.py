"""Exact rational linear algebra used by the certificate paths.

Matrices come in as anything indexable by ``[i][j]`` (numpy object or int
arrays, nested lists) with int / Fraction entries.  Heavy lifting is done by
sympy's ``DomainMatrix`` over QQ; results are handed back as Python ints and
:class:`fractions.Fraction`.
"""
from fractions import Fraction
from math import gcd

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    num = getattr(x, "numerator", None)
    if num is not None and not isinstance(x, float):
        return Fraction(int(num), int(x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def _qq(x):
    f = to_fraction(x)
    return QQ(f.numerator, f.denominator)


def _dm(rows, ncols=None):
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix([[_qq(x) for x in r] for r in rows], (len(rows), ncols), QQ)


def _from_qq(e):
    return Fraction(int(e.numerator), int(e.denominator))


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    return _dm(rows, ncols).rank()


def nullspace(rows, ncols):
    """Integer basis of the right null space of an exact matrix."""
    rows = list(rows)
    if not rows:
        return [primitive([int(i == j) for i in range(ncols)]) for j in range(ncols)]
    ns = _dm(rows, ncols).nullspace()
    out = []
    for r in ns.to_list():
        out.append(primitive([_from_qq(e) for e in r]))
    return out


def solve_square(rows, rhs):
    """Solve ``A x = b`` exactly for a square invertible ``A``."""
    n = len(rows)
    A = _dm(rows, n)
    b = DomainMatrix([[_qq(x)] for x in rhs], (n, 1), QQ)
    x = A.lu_solve(b)
    return [_from_qq(r[0]) for r in x.to_list()]


def inverse(rows):
    n = len(rows)
    inv = _dm(rows, n).inv()
    return [[_from_qq(e) for e in r] for r in inv.to_list()]


def primitive(vec):
    """Positive rescaling of a rational vector to coprime integers."""
    fr = [to_fraction(x) for x in vec]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def gram_schmidt(rows):
    """Orthogonalise integer rows over QQ, returning primitive integer rows."""
    done = []
    norms = []
    for r in rows:
        v = [Fraction(int(x)) for x in r]
        for u, nu in zip(done, norms):
            c = Fraction(dot(v, u), nu)
            if c:
                v = [a - c * b for a, b in zip(v, u)]
        p = primitive(v)
        if not any(p):
            raise ValueError("rows are linearly dependent")
        done.append(p)
        norms.append(dot(p, p))
    return done


def exact_array(rows):
    """Integer rows as an int64 array when safe, else an object array."""
    rows = [list(map(int, r)) for r in rows]
    bound = max((abs(x) for r in rows for x in r), default=0)
    if bound < 2**40:
        return np.array(rows, dtype=np.int64).reshape(len(rows), -1 if rows else 0)
    return np.array(rows, dtype=object)


def is_exact(a):
    a = np.asarray(a)
    if a.dtype.kind in "iub":
        return True
    if a.dtype == object:
        return all(not isinstance(x, float) for x in a.flat)
    return False


def as_int_rows(a):
    a = np.asarray(a)
    return [[int(x) if not isinstance(x, Fraction) else x for x in row] for row in a]
