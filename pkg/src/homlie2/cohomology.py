"""Representations of hom-Lie algebras and their cochain cohomology.

A representation is a family rho(e_i) of module endomorphisms together with
a module twist A satisfying

    (i)  rho(phi(u)) ∘ A = A ∘ rho(u)
    (ii) rho([u,v]) ∘ A  = rho(phi(u)) ∘ rho(v) − rho(phi(v)) ∘ rho(u).

A k-hom-cochain is a skew k-linear map f into the module intertwining the
twists, A∘f = f∘phi^(⊗k).  The coboundary of a k-hom-cochain (k >= 1) is

    (df)(u_1..u_{k+1}) = Σ_i (−1)^{i+1} rho(phi^{k−1}(u_i)) f(..û_i..)
                       + Σ_{i<j} (−1)^{i+j} f([u_i,u_j], phi(u_1)..û_i..û_j..phi(u_{k+1})),

with d∘d = 0 on hom-cochains.  Degree 0 is a convention of this artifact,
not part of the twisted formula above (whose spectator power phi^{k−1} is
undefined at k = 0 for singular phi): C^0 is the A-fixed subspace and the
degree-0 differential (dv)(u) = rho(u)v enters only through B^1 and the
k = 1 exactness test.  Items touching it say so in their notes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, PreconditionError
from .exactlin import (F0, Matrix, Vec, det_of, is_zero_vec, rank,
                       rank_and_kernel, solve_linear, vadd, vscale, zero_vec)
from .homlie import HomLieAlgebra
from .reports import CheckReport, LawChecker


@dataclass(frozen=True)
class Representation:
    """Action rho of `algebra` on a module of dimension module_dim, twisted by A."""

    algebra: HomLieAlgebra
    module_dim: int
    A: Matrix
    rho: tuple[Matrix, ...]

    def __post_init__(self):
        m, n = self.module_dim, self.algebra.dim
        object.__setattr__(self, "rho", tuple(self.rho))
        if self.A.shape() != (m, m):
            raise InputError(f"module twist must be {m}x{m}, got {self.A.shape()}")
        if len(self.rho) != n:
            raise InputError(f"need one action matrix per basis element ({n}), got {len(self.rho)}")
        for i, r in enumerate(self.rho):
            if r.shape() != (m, m):
                raise InputError(f"rho[{i}] must be {m}x{m}, got {r.shape()}")

    def rho_at(self, x: Vec) -> Matrix:
        """rho evaluated at a coordinate vector."""
        out = Matrix.zeros(self.module_dim, self.module_dim)
        for i, c in enumerate(x):
            if c != 0:
                out = out + self.rho[i].scale(c)
        return out


def check_representation(r: Representation) -> CheckReport:
    g, A = r.algebra, r.A
    n = g.dim
    phi_cols = [g.phi.column(j) for j in range(n)]
    chk = LawChecker("representation")
    chk.scan("twist-compatibility",
             (((i,), r.rho_at(phi_cols[i]) * A == A * r.rho[i]) for i in range(n)))
    chk.scan("bracket-action",
             (((i, j),
               r.rho_at(g.bracket[i][j]) * A ==
               r.rho_at(phi_cols[i]) * r.rho[j] - r.rho_at(phi_cols[j]) * r.rho[i])
              for i in range(n) for j in range(n)))
    return chk.report()


def trivial_representation(g: HomLieAlgebra) -> Representation:
    """One-dimensional module, identity twist, zero action."""
    return Representation(g, 1, Matrix.identity(1), tuple(Matrix.zeros(1, 1) for _ in range(g.dim)))


def adjoint_representation(g: HomLieAlgebra) -> Representation:
    """rho(x) = ad_x on g itself, twisted by phi."""
    return Representation(g, g.dim, g.phi, tuple(g.ad(g.basis(i)) for i in range(g.dim)))


def dual_representation(r: Representation) -> Representation | None:
    """The contragredient action rho*(x) = −rho(x)^T with twist A^T, when it exists.

    First gate: A∘rho([x,y]) = rho(x)∘rho(phi y) − rho(y)∘rho(phi x) on all
    basis pairs.  The candidate is returned only if it passes the full
    representation check (for involutive phi the first gate suffices).
    """
    g, A = r.algebra, r.A
    phi_cols = [g.phi.column(j) for j in range(g.dim)]
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = A * r.rho_at(g.bracket[i][j])
            rhs = r.rho[i] * r.rho_at(phi_cols[j]) - r.rho[j] * r.rho_at(phi_cols[i])
            if lhs != rhs:
                return None
    candidate = Representation(g, r.module_dim, A.transpose(),
                               tuple(-(m.transpose()) for m in r.rho))
    if not check_representation(candidate).ok:
        return None
    return candidate


# --------------------------------------------------------------------------
# Cochains
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Cochain:
    """Skew k-linear map g^k -> module, stored on increasing basis tuples.

    comps[r] is the module value on the r-th k-combination of basis indices
    in lexicographic order; other index tuples follow by skewness.
    """

    degree: int
    alg_dim: int
    module_dim: int
    comps: tuple[Vec, ...]

    def __post_init__(self):
        expected = _n_tuples(self.alg_dim, self.degree)
        object.__setattr__(self, "comps", tuple(tuple(x for x in c) for c in self.comps))
        if len(self.comps) != expected:
            raise InputError(f"cochain needs {expected} components, got {len(self.comps)}")
        for c in self.comps:
            if len(c) != self.module_dim:
                raise InputError("cochain component has wrong module dimension")

    def tuples(self):
        return combinations(range(self.alg_dim), self.degree)

    def component(self, t) -> Vec:
        return self.comps[_tuple_rank(self.alg_dim, self.degree, t)]

    def evaluate(self, vectors: list[Vec]) -> Vec:
        """Multilinear-skew evaluation at arbitrary coordinate vectors."""
        if len(vectors) != self.degree:
            raise InputError(f"expected {self.degree} arguments")
        if self.degree == 0:
            return self.comps[0]
        out = [F0] * self.module_dim
        for s, comp in zip(self.tuples(), self.comps):
            if is_zero_vec(comp):
                continue
            d = det_of([tuple(v[l] for l in s) for v in vectors])
            if d != 0:
                for a, e in enumerate(comp):
                    if e != 0:
                        out[a] += d * e
        return tuple(out)

    def coords(self) -> Vec:
        return tuple(x for c in self.comps for x in c)

    def is_zero(self) -> bool:
        return all(is_zero_vec(c) for c in self.comps)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.degree, self.alg_dim, self.module_dim,
                       tuple(vadd(a, b) for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.degree, self.alg_dim, self.module_dim,
                       tuple(tuple(x - y for x, y in zip(a, b))
                             for a, b in zip(self.comps, other.comps)))

    def scale(self, c) -> "Cochain":
        return Cochain(self.degree, self.alg_dim, self.module_dim,
                       tuple(vscale(c, comp) for comp in self.comps))

    def _compatible(self, other: "Cochain"):
        if (self.degree, self.alg_dim, self.module_dim) != \
                (other.degree, other.alg_dim, other.module_dim):
            raise InputError("cochain shape mismatch")


def _n_tuples(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0 if k != 0 else 1
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _tuple_rank(n: int, k: int, t) -> int:
    t = tuple(t)
    if len(t) != k or any(t[i] >= t[i + 1] for i in range(k - 1)):
        raise InputError(f"not an increasing {k}-tuple: {t}")
    rank_ = 0
    prev = -1
    for pos, value in enumerate(t):
        for skipped in range(prev + 1, value):
            rank_ += _n_tuples(n - skipped - 1, k - pos - 1)
        prev = value
    return rank_


def zero_cochain(degree: int, alg_dim: int, module_dim: int) -> Cochain:
    return Cochain(degree, alg_dim, module_dim,
                   tuple(zero_vec(module_dim) for _ in range(_n_tuples(alg_dim, degree))))


def cochain_from_coords(degree: int, alg_dim: int, module_dim: int, flat: Vec) -> Cochain:
    count = _n_tuples(alg_dim, degree)
    if len(flat) != count * module_dim:
        raise InputError("coordinate vector has wrong length for this cochain shape")
    comps = tuple(tuple(flat[r * module_dim + a] for a in range(module_dim)) for r in range(count))
    return Cochain(degree, alg_dim, module_dim, comps)


def cochain_from_function(degree: int, alg_dim: int, module_dim: int, fn) -> Cochain:
    """Build from a callable on increasing index tuples."""
    return Cochain(degree, alg_dim, module_dim,
                   tuple(tuple(fn(t)) for t in combinations(range(alg_dim), degree)))


def is_hom_cochain(f: Cochain, r: Representation) -> bool:
    """A∘f = f∘phi^(⊗k) on every increasing basis tuple."""
    if f.alg_dim != r.algebra.dim or f.module_dim != r.module_dim:
        raise InputError("cochain does not match the representation's shapes")
    phi = r.algebra.phi
    for t in f.tuples():
        lhs = r.A.apply(f.component(t))
        rhs = f.evaluate([phi.column(i) for i in t])
        if lhs != rhs:
            return False
    return True


# --------------------------------------------------------------------------
# Coboundary operator
# --------------------------------------------------------------------------

def coboundary(f: Cochain, r: Representation) -> Cochain:
    """The twisted coboundary of a k-hom-cochain, k >= 1.

    The action argument in the single-omission sum carries phi^{k−1}; in the
    bracket sum the spectators carry one phi and the bracket slot none.
    """
    if f.degree < 1:
        raise InputError("coboundary is defined for degree >= 1 "
                         "(degree 0 follows the A-fixed convention, see cohomology_dims)")
    if not is_hom_cochain(f, r):
        raise PreconditionError("coboundary requires a hom-cochain (A∘f = f∘phi^⊗k)")
    g = r.algebra
    n, m, k = g.dim, r.module_dim, f.degree
    phi_cols = [g.phi.column(j) for j in range(n)]
    phi_pow = g.phi.power(k - 1)
    rho_tw = [r.rho_at(phi_pow.column(i)) for i in range(n)]

    comps = []
    for t in combinations(range(n), k + 1):
        total = [F0] * m
        for pos in range(k + 1):
            rest = t[:pos] + t[pos + 1:]
            val = f.component(rest)
            if not is_zero_vec(val):
                term = rho_tw[t[pos]].apply(val)
                if pos % 2 == 0:
                    total = [x + y for x, y in zip(total, term)]
                else:
                    total = [x - y for x, y in zip(total, term)]
        for p in range(k + 1):
            for q in range(p + 1, k + 1):
                br = g.bracket[t[p]][t[q]]
                if is_zero_vec(br):
                    continue
                args = [br] + [phi_cols[t[s]] for s in range(k + 1) if s != p and s != q]
                term = f.evaluate(args)
                if (p + q) % 2 == 0:
                    total = [x + y for x, y in zip(total, term)]
                else:
                    total = [x - y for x, y in zip(total, term)]
        comps.append(tuple(total))
    return Cochain(k + 1, n, m, tuple(comps))


def degree0_coboundary(v: Vec, r: Representation) -> Cochain:
    """(dv)(u) = rho(u)v for an A-fixed module vector v (artifact convention)."""
    if len(v) != r.module_dim:
        raise InputError("module vector has wrong length")
    if r.A.apply(v) != tuple(v):
        raise PreconditionError("degree-0 coboundary requires an A-fixed vector")
    return Cochain(1, r.algebra.dim, r.module_dim,
                   tuple(r.rho[i].apply(v) for i in range(r.algebra.dim)))


# --------------------------------------------------------------------------
# Cohomology spaces
# --------------------------------------------------------------------------

def fixed_module_vectors(r: Representation) -> list[Vec]:
    """Basis of C^0 = {v : Av = v}."""
    _, ker = rank_and_kernel(r.A - Matrix.identity(r.module_dim))
    return ker


def hom_cochain_basis(r: Representation, k: int) -> list[Cochain]:
    """Basis of C^k_{phi,A}: kernel of the linear system A∘f − f∘phi^⊗k = 0
    inside the space of skew k-tensors."""
    if k < 1:
        raise InputError("hom_cochain_basis is for degree >= 1; use fixed_module_vectors for C^0")
    g, m = r.algebra, r.module_dim
    n = g.dim
    tuples = list(combinations(range(n), k))
    dim_space = len(tuples) * m
    if dim_space == 0:
        return []
    phi = g.phi
    rows = []
    for ti, t in enumerate(tuples):
        # dets[si] = coefficient of f(e_s) in f(phi e_{t_1}, .., phi e_{t_k})
        dets = [det_of([tuple(phi.column(i)[l] for l in s) for i in t]) for s in tuples]
        for a in range(m):
            row = [F0] * dim_space
            for b in range(m):
                if r.A[a, b] != 0:
                    row[ti * m + b] += r.A[a, b]
            for si, dcoef in enumerate(dets):
                if dcoef != 0:
                    row[si * m + a] -= dcoef
            rows.append(row)
    _, kernel = rank_and_kernel(Matrix(len(rows), dim_space, rows))
    return [cochain_from_coords(k, n, m, kv) for kv in kernel]


def _image_coords(r: Representation, k: int) -> list[Vec]:
    """Coordinates (in the full skew k-space) of d applied to a basis of degree k−1."""
    if k == 1:
        return [degree0_coboundary(v, r).coords() for v in fixed_module_vectors(r)]
    return [coboundary(b, r).coords() for b in hom_cochain_basis(r, k - 1)]


def cohomology_dims(r: Representation, k: int) -> tuple[int, int, int, int]:
    """(dim C^k_{phi,A}, dim Z^k, dim B^k, dim H^k), all exact.

    k = 0 returns the invariants-subspace convention: C^0 = A-fixed vectors,
    Z^0 = those also killed by every rho(u), B^0 = 0.
    """
    if k < 0:
        raise InputError("negative degree")
    if k == 0:
        fixed = fixed_module_vectors(r)
        if not fixed:
            return (0, 0, 0, 0)
        fixed_mat = Matrix.from_columns(fixed)
        stacked_rows = [row for rho_i in r.rho for row in (rho_i * fixed_mat).data]
        if stacked_rows:
            z = len(fixed) - rank(Matrix(len(stacked_rows), len(fixed), stacked_rows))
        else:
            z = len(fixed)
        return (len(fixed), z, 0, z)

    cbasis = hom_cochain_basis(r, k)
    dim_c = len(cbasis)
    if dim_c == 0:
        return (0, 0, 0, 0)
    d_cols = [coboundary(b, r).coords() for b in cbasis]
    if len(d_cols[0]) == 0:
        dim_z = dim_c
    else:
        dim_z = dim_c - rank(Matrix.from_columns(d_cols))
    img = _image_coords(r, k)
    dim_b = rank(Matrix.from_columns(img)) if img and len(img[0]) else 0
    # B^k ⊆ Z^k: d of every generator of B must vanish (automatic for k >= 2).
    n, m = r.algebra.dim, r.module_dim
    for col in img:
        c = cochain_from_coords(k, n, m, col)
        if not coboundary(c, r).is_zero():
            raise PreconditionError(
                "B^1 is not contained in Z^1 for this representation under the "
                "degree-0 convention; see the package docs")
    return (dim_c, dim_z, dim_b, dim_z - dim_b)


def class_is_trivial(f: Cochain, r: Representation) -> bool:
    """True iff the closed hom-cochain f is a coboundary (decided by exact solving)."""
    if not is_hom_cochain(f, r):
        raise PreconditionError("class_is_trivial requires a hom-cochain")
    if f.degree < 1:
        raise InputError("class_is_trivial is for degree >= 1")
    if not coboundary(f, r).is_zero():
        raise PreconditionError("class_is_trivial requires a closed cochain (df = 0)")
    if f.is_zero():
        return True
    img = _image_coords(r, f.degree)
    img = [c for c in img if not is_zero_vec(c)]
    if not img:
        return False
    return solve_linear(Matrix.from_columns(img), f.coords()) is not None


# --------------------------------------------------------------------------
# Inclusion of twisted cohomology into the ordinary cohomology of g_phi
# --------------------------------------------------------------------------

def _restricted_kernel_basis(cbasis: list[Cochain], r: Representation) -> list[Cochain]:
    """Basis of {c in span(cbasis) : dc = 0}."""
    if not cbasis:
        return []
    d_cols = [coboundary(b, r).coords() for b in cbasis]
    if not d_cols[0]:
        return list(cbasis)
    _, ker = rank_and_kernel(Matrix.from_columns(d_cols))
    out = []
    for combo in ker:
        acc = zero_cochain(cbasis[0].degree, cbasis[0].alg_dim, cbasis[0].module_dim)
        for coef, b in zip(combo, cbasis):
            if coef != 0:
                acc = acc + b.scale(coef)
        out.append(acc)
    return out


def _span_intersection(us: list[Vec], ws: list[Vec]) -> list[Vec]:
    """Basis vectors of span(us) ∩ span(ws)."""
    if not us or not ws:
        return []
    cols = [list(u) for u in us] + [[-x for x in w] for w in ws]
    mat = Matrix.from_columns([tuple(c) for c in cols])
    _, ker = rank_and_kernel(mat)
    vectors = []
    for z in ker:
        v = zero_vec(len(us[0]))
        for coef, u in zip(z[:len(us)], us):
            if coef != 0:
                v = vadd(v, vscale(coef, u))
        if not is_zero_vec(v):
            vectors.append(v)
    # prune to an independent set
    out: list[Vec] = []
    for v in vectors:
        if not out or solve_linear(Matrix.from_columns(out), v) is None:
            out.append(v)
    return out


def cohomology_inclusion_check(g: HomLieAlgebra, k: int) -> CheckReport:
    """Verify that H^k of g (trivial coefficients) embeds in H^k of the Lie
    algebra g_phi: closed stays closed, exact stays exact, and nothing new
    becomes exact (injectivity), all by exact linear algebra.
    """
    from .homlie import twisted_algebra
    if not g.is_involutive():
        raise PreconditionError("cohomology_inclusion_check requires an involutive twist")
    if k < 1:
        raise InputError("inclusion check is for degree >= 1")
    r_hom = trivial_representation(g)
    g_tw = twisted_algebra(g)
    r_ord = trivial_representation(g_tw)

    z_hom = _restricted_kernel_basis(hom_cochain_basis(r_hom, k), r_hom)
    b_hom_coords = [c for c in _image_coords(r_hom, k) if not is_zero_vec(c)]
    b_ord_coords = [c for c in _image_coords(r_ord, k) if not is_zero_vec(c)]

    chk = LawChecker("cohomology_inclusion")
    chk.scan("closed-in-twisted",
             (((idx,), coboundary(f, r_ord).is_zero()) for idx, f in enumerate(z_hom)),
             note=f"{len(z_hom)} generator(s) of Z^{k}")

    def exact_ord(coords_vec):
        n, m = g.dim, 1
        f = cochain_from_coords(k, n, m, coords_vec)
        if not coboundary(f, r_ord).is_zero():
            return False
        if not b_ord_coords:
            return f.is_zero()
        return solve_linear(Matrix.from_columns(b_ord_coords), f.coords()) is not None

    chk.scan("exact-in-twisted",
             (((idx,), exact_ord(c)) for idx, c in enumerate(b_hom_coords)),
             note=f"{len(b_hom_coords)} generator(s) of B^{k}")

    inter = _span_intersection([f.coords() for f in z_hom], b_ord_coords)

    def in_b_hom(v):
        if not b_hom_coords:
            return is_zero_vec(v)
        return solve_linear(Matrix.from_columns(b_hom_coords), v) is not None

    chk.scan("injective", (((idx,), in_b_hom(v)) for idx, v in enumerate(inter)),
             note=f"intersection dim {len(inter)}")
    return chk.report()
