"""Deterministic generators of valid random structures for the tests.

hypothesis drives the plain linear-algebra properties; the algebraic
structures need constructive sampling (a random tensor is essentially never
a valid bracket), so these helpers build them from families known to close:
abelian algebras with arbitrary twists, two-step nilpotent brackets with
diagonal twists, and the built-in simple example.
"""

from __future__ import annotations

import random
from fractions import Fraction

from homlie2.cohomology import (Representation, adjoint_representation,
                                hom_cochain_basis, trivial_representation,
                                zero_cochain)
from homlie2.constructions import sl2_example
from homlie2.exactlin import Matrix
from homlie2.homlie import HomLieAlgebra, abelian_algebra


def rnd_frac(rng: random.Random, lo=-3, hi=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2)))


def random_invertible(rng: random.Random, n: int) -> Matrix:
    """Product of integer shear matrices: determinant 1, exactly invertible."""
    m = Matrix.identity(n)
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        shear = [[Fraction(1 if a == b else 0) for b in range(n)] for a in range(n)]
        shear[i][j] = Fraction(c)
        m = m * Matrix(n, n, shear)
    return m


def random_involution(rng: random.Random, n: int) -> Matrix:
    from homlie2.exactlin import inverse
    s = random_invertible(rng, n)
    d = Matrix.diagonal([rng.choice((1, -1)) for _ in range(n)])
    return s * d * inverse(s)


def heisenberg(a=1, b=1) -> HomLieAlgebra:
    """[e0,e1] = e2 with the diagonal twist diag(a, b, ab)."""
    br = [[[0, 0, 0] for _ in range(3)] for _ in range(3)]
    br[0][1] = [0, 0, 1]
    br[1][0] = [0, 0, -1]
    return HomLieAlgebra(3, br, Matrix.diagonal([a, b, a * b]))


def nilpotent4(a=1, b=1) -> HomLieAlgebra:
    """[e0,e1] = e2 on dim 4 with twist diag(a, b, ab, 1)."""
    br = [[[0, 0, 0, 0] for _ in range(4)] for _ in range(4)]
    br[0][1] = [0, 0, 1, 0]
    br[1][0] = [0, 0, -1, 0]
    return HomLieAlgebra(4, br, Matrix.diagonal([a, b, a * b, 1]))


def random_algebra(rng: random.Random, max_dim=4) -> HomLieAlgebra:
    kind = rng.randrange(4)
    if kind == 0:
        n = rng.randint(1, max_dim)
        return abelian_algebra(n, random_involution(rng, n))
    if kind == 1:
        n = rng.randint(1, max_dim)
        phi = Matrix(n, n, [[rnd_frac(rng, -2, 2) for _ in range(n)] for _ in range(n)])
        return abelian_algebra(n, phi)
    if kind == 2:
        return heisenberg(rng.choice((1, -1, 2)), rng.choice((1, -1)))
    if max_dim >= 4 and rng.random() < 0.5:
        return nilpotent4(rng.choice((1, -1)), rng.choice((1, -1)))
    return sl2_example()


def random_representation(rng: random.Random, g: HomLieAlgebra) -> Representation:
    kind = rng.randrange(3)
    if kind == 0:
        return trivial_representation(g)
    if kind == 1:
        return adjoint_representation(g)
    # zero action with an arbitrary module twist satisfies both conditions
    m = rng.randint(1, 3)
    a = Matrix(m, m, [[rnd_frac(rng, -2, 2) for _ in range(m)] for _ in range(m)])
    return Representation(g, m, a, tuple(Matrix.zeros(m, m) for _ in range(g.dim)))


def random_hom_cochain(rng: random.Random, rep: Representation, k: int):
    basis = hom_cochain_basis(rep, k)
    if not basis:
        return zero_cochain(k, rep.algebra.dim, rep.module_dim)
    out = zero_cochain(k, rep.algebra.dim, rep.module_dim)
    for b in basis:
        out = out + b.scale(rnd_frac(rng))
    return out
