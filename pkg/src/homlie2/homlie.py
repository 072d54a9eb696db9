"""Hom-Lie algebras over exact rationals.

A hom-Lie algebra is a vector space with a skew bracket [.,.] and an algebra
endomorphism phi satisfying the phi-twisted Jacobi identity

    [phi(u),[v,w]] + [phi(v),[w,u]] + [phi(w),[u,v]] = 0.

Structures are stored by structure constants: bracket[i][j] is the coordinate
vector of [e_i, e_j].  Nothing is assumed about the tensors at construction
time beyond shape; `check_hom_lie` verifies the axioms and reports witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, PreconditionError
from .exactlin import (F0, Matrix, Vec, is_zero_vec, rat, vadd, vec, zero_vec)
from .reports import CheckReport, LawChecker

Tensor2 = tuple  # Tensor2[i][j] -> Vec


def as_tensor2(data, n0: int, n1: int, out_dim: int, field: str) -> Tensor2:
    """Coerce nested data to a (n0 x n1 -> out_dim) structure-constant tensor."""
    try:
        t = tuple(tuple(vec(data[i][j]) for j in range(n1)) for i in range(n0))
    except (IndexError, TypeError) as exc:
        raise InputError(f"{field}: expected a {n0}x{n1} tensor of {out_dim}-vectors ({exc})")
    for i in range(n0):
        for j in range(n1):
            if len(t[i][j]) != out_dim:
                raise InputError(f"{field}[{i}][{j}] has length {len(t[i][j])}, expected {out_dim}")
    return t


def bilinear_eval(tensor: Tensor2, x: Vec, y: Vec, out_dim: int) -> Vec:
    """Evaluate a structure-constant tensor at coordinate vectors (zero-skipping)."""
    out = [F0] * out_dim
    for i, a in enumerate(x):
        if a == 0:
            continue
        row = tensor[i]
        for j, b in enumerate(y):
            if b == 0:
                continue
            c = a * b
            entry = row[j]
            for k, e in enumerate(entry):
                if e != 0:
                    out[k] += c * e
    return tuple(out)


@dataclass(frozen=True)
class HomLieAlgebra:
    """dim, structure constants bracket[i][j] = [e_i,e_j], and the twist phi."""

    dim: int
    bracket: Tensor2
    phi: Matrix

    def __post_init__(self):
        n = self.dim
        object.__setattr__(self, "bracket", as_tensor2(self.bracket, n, n, n, "bracket"))
        if self.phi.shape() != (n, n):
            raise InputError(f"phi must be {n}x{n}, got {self.phi.shape()}")

    def basis(self, i: int) -> Vec:
        return tuple(F0 if j != i else rat(1) for j in range(self.dim))

    def bracket_vec(self, x: Vec, y: Vec) -> Vec:
        return bilinear_eval(self.bracket, x, y, self.dim)

    def phi_vec(self, x: Vec) -> Vec:
        return self.phi.apply(x)

    def ad(self, x: Vec) -> Matrix:
        """Matrix of y -> [x, y] in the algebra's own bracket."""
        cols = [self.bracket_vec(x, self.basis(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, rows=self.dim)

    def is_involutive(self) -> bool:
        return (self.phi * self.phi).is_identity()

    def is_regular(self) -> bool:
        from .exactlin import rank
        return rank(self.phi) == self.dim

    def is_abelian(self) -> bool:
        return all(is_zero_vec(self.bracket[i][j])
                   for i in range(self.dim) for j in range(self.dim))


def abelian_algebra(dim: int, phi: Matrix | None = None) -> HomLieAlgebra:
    zero = tuple(tuple(zero_vec(dim) for _ in range(dim)) for _ in range(dim))
    return HomLieAlgebra(dim, zero, phi if phi is not None else Matrix.identity(dim))


def check_hom_lie(g: HomLieAlgebra) -> CheckReport:
    """Verify skewness, phi multiplicativity, and the twisted Jacobi identity.

    One item per axiom; a failing item carries the first offending basis
    pair/triple in lexicographic order.
    """
    n = g.dim
    chk = LawChecker("hom_lie")
    chk.scan("skew", (((i, j), g.bracket[i][j] == tuple(-x for x in g.bracket[j][i]))
                      for i in range(n) for j in range(n)))
    phi_cols = [g.phi.column(j) for j in range(n)]
    chk.scan("phi-morphism",
             (((i, j), g.phi_vec(g.bracket[i][j]) == g.bracket_vec(phi_cols[i], phi_cols[j]))
              for i in range(n) for j in range(n)))

    def jacobi(i, j, k):
        total = zero_vec(n)
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            term = g.bracket_vec(phi_cols[a], g.bracket[b][c])
            total = vadd(total, term)
        return is_zero_vec(total)

    chk.scan("hom-jacobi", (((i, j, k), jacobi(i, j, k))
                            for i in range(n) for j in range(n) for k in range(n)))
    return chk.report()


def hom_lie_algebra(dim: int, bracket, phi: Matrix) -> HomLieAlgebra:
    """Shape-check, axiom-check, and return the algebra (raises CheckFailure on axioms)."""
    g = HomLieAlgebra(dim, bracket, phi)
    check_hom_lie(g).require("hom_lie_algebra")
    return g


@dataclass(frozen=True)
class HomLieMorphism:
    """Linear map f with f[u,v] = [f u, f v] and f∘phi_src = phi_tgt∘f."""

    source: HomLieAlgebra
    target: HomLieAlgebra
    f: Matrix

    def __post_init__(self):
        if self.f.shape() != (self.target.dim, self.source.dim):
            raise InputError(
                f"morphism matrix must be {self.target.dim}x{self.source.dim}, got {self.f.shape()}")


def check_hom_lie_morphism(m: HomLieMorphism) -> CheckReport:
    src, tgt, f = m.source, m.target, m.f
    n = src.dim
    chk = LawChecker("hom_lie_morphism")
    f_cols = [f.column(j) for j in range(n)]
    chk.scan("bracket-preserved",
             (((i, j), f.apply(src.bracket[i][j]) == tgt.bracket_vec(f_cols[i], f_cols[j]))
              for i in range(n) for j in range(n)))
    chk.add_matrix_eq("twist-intertwined", f * src.phi, tgt.phi * f)
    return chk.report()


def compose_morphisms(first: HomLieMorphism, second: HomLieMorphism) -> HomLieMorphism:
    if first.target is not second.source and first.target != second.source:
        raise InputError("morphism endpoints do not match")
    return HomLieMorphism(first.source, second.target, second.f * first.f)


def killing_form(g: HomLieAlgebra) -> Matrix:
    """B(x,y) = tr(ad_x ∘ ad_y), the adjoint taken in g's own bracket."""
    ads = [g.ad(g.basis(i)) for i in range(g.dim)]
    data = [[(ads[i] * ads[j]).trace() for j in range(g.dim)] for i in range(g.dim)]
    return Matrix(g.dim, g.dim, data)


def twisted_algebra(g: HomLieAlgebra) -> HomLieAlgebra:
    """The ordinary Lie algebra with bracket phi([x,y]) carried by an involutive g.

    The result has identity twist, and its ordinary Jacobi identity is
    re-verified on construction.
    """
    if not g.is_involutive():
        raise PreconditionError("twisted_algebra requires an involutive twist (phi^2 = Id)")
    new_bracket = tuple(tuple(g.phi_vec(g.bracket[i][j]) for j in range(g.dim))
                        for i in range(g.dim))
    out = HomLieAlgebra(g.dim, new_bracket, Matrix.identity(g.dim))
    check_hom_lie(out).require("twisted_algebra output")
    return out
