"""Independent oracle for frozen star-product test values.

Moyal: direct exponential-series evaluation with sympy derivatives.
Gutt: brute-force symmetrization over all word permutations with naive
adjacent-swap normal ordering in the enveloping algebra, then inverse
symmetrization by degree descent.  Nothing here shares code with the C++
implementation.
"""
import itertools
from fractions import Fraction
from math import factorial
import sympy as sp

h = sp.Symbol('h')


def moyal(f, g, xs, alpha, N):
    total = 0
    n = len(xs)
    for k in range(N):
        acc = 0
        for idx in itertools.product(range(n), repeat=2 * k):
            ii, jj = idx[:k], idx[k:]
            c = 1
            for a, b in zip(ii, jj):
                c *= alpha[a][b]
            if c == 0:
                continue
            df = f
            for a in ii:
                df = sp.diff(df, xs[a])
            dg = g
            for b in jj:
                dg = sp.diff(dg, xs[b])
            acc += c * df * dg
        total += (h / 2) ** k / factorial(k) * acc
    return sp.expand(total)


# su(2): [X_i, X_j] = h c_ij^k X_k with {x1,x2}=x3 cyclic
C = {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}
def cij(i, j):
    if (i, j) in C:
        return C[(i, j)]
    if (j, i) in C:
        return {k: -v for k, v in C[(j, i)].items()}
    return {}


def normal_order(word):
    """word -> dict[(sorted tuple, hpow)] = coeff via naive adjacent swaps."""
    out = {}
    stack = [(tuple(word), 0, Fraction(1))]
    while stack:
        w, hp, c = stack.pop()
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                a, b = w[p], w[p + 1]
                stack.append((w[:p] + (b, a) + w[p + 2:], hp, c))
                for k, v in cij(a, b).items():
                    stack.append((w[:p] + (k,) + w[p + 2:], hp + 1, c * v))
                break
        else:
            out[(w, hp)] = out.get((w, hp), 0) + c
    return {k: v for k, v in out.items() if v != 0}


def sym(mono):
    m = len(mono)
    out = {}
    perms = list(itertools.permutations(mono))
    for p in perms:
        for k, v in normal_order(p).items():
            out[k] = out.get(k, 0) + v / len(perms)
    return out


def desym(elem, xs):
    res = 0
    elem = dict(elem)
    while elem:
        (w, hp) = max(elem, key=lambda k: len(k[0]))
        c = elem[(w, hp)]
        mon = 1
        for i in w:
            mon *= xs[i]
        res += sp.Rational(c.numerator, c.denominator) * h ** hp * mon
        for k, v in sym(w).items():
            kk = (k[0], k[1] + hp)
            elem[kk] = elem.get(kk, 0) - c * v
            if elem[kk] == 0:
                del elem[kk]
    return sp.expand(res)


def gutt(mono_f, mono_g, xs):
    prod = {}
    for (w1, h1), c1 in sym(mono_f).items():
        for (w2, h2), c2 in sym(mono_g).items():
            for (w, hp), c in normal_order(w1 + w2).items():
                key = (w, hp + h1 + h2)
                prod[key] = prod.get(key, 0) + c * c1 * c2
    return desym({k: v for k, v in prod.items() if v != 0}, xs)


if __name__ == '__main__':
    x, y = sp.symbols('x y')
    A = [[0, 1], [-1, 0]]
    print('moyal x*y', moyal(x, y, [x, y], A, 2))
    print('moyal y*x', moyal(y, x, [x, y], A, 2))
    print('moyal x^2*y^2 N=3', moyal(x**2, y**2, [x, y], A, 3))
    print('moyal y*x*x', sp.expand(moyal(moyal(y, x, [x, y], A, 4), x, [x, y], A, 4)))
    x1, x2, x3 = xs = sp.symbols('x1 x2 x3')
    print('gutt x1*x2', gutt((0,), (1,), xs))
    print('gutt x2*x1', gutt((1,), (0,), xs))
    print('gutt x1x2 * x3', gutt((0, 1), (2,), xs))
    print('gutt x1^2 * x2', gutt((0, 0), (1,), xs))
    print('gutt x1x2 * x1x3', gutt((0, 1), (0, 2), xs))
    print('gutt x2 * x1^2', gutt((1,), (0, 0), xs))
