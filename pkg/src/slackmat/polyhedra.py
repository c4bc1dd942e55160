"""Cones, polytopes, and exact double-description conversion.

Conventions:
  * cone H-form rows are normals b meaning b.x >= 0; linear equations are
    encoded as opposite inequality pairs (b and -b),
  * polytope H-form rows are pairs (beta, a) meaning a.x <= beta,
  * V-forms list generators / points; cone V-forms may carry a separate
    lineality basis.

The double-description run inserts inequalities in input order, keeping a
basis of the current lineality space alongside the extreme rays of the
pointed quotient; ray adjacency is decided by an exact rank test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .matrix import (
    Matrix,
    Vec,
    dot,
    is_zero_vec,
    rank,
    rref,
    solve_linear,
    unit,
    vec,
    vscale,
    vsub,
)
from . import lp
from .lp import Constraint, con


class EmptyPolyhedronError(ValueError):
    """Raised when an H-form system has no point at all."""


@dataclass(frozen=True)
class ConeRep:
    """A polyhedral cone, as generators ("V") or inequality normals ("H")."""

    form: str
    ambient_dim: int
    vectors: tuple[Vec, ...]
    lineality: tuple[Vec, ...] = ()

    def __post_init__(self):
        if self.form not in ("V", "H"):
            raise ValueError("form must be 'V' or 'H'")
        object.__setattr__(self, "vectors", tuple(vec(v) for v in self.vectors))
        object.__setattr__(self, "lineality", tuple(vec(v) for v in self.lineality))
        for v in self.vectors + self.lineality:
            if len(v) != self.ambient_dim:
                raise ValueError("vector length != ambient dimension")
        if self.form == "H" and self.lineality:
            raise ValueError("lineality basis only makes sense for V-form")


@dataclass(frozen=True)
class PolytopeRep:
    """A polytope, as points ("V") or inequalities a.x <= beta ("H").

    H-form rows are (beta, a) pairs stored as vectors of length n+1.
    """

    form: str
    ambient_dim: int
    vectors: tuple[Vec, ...]

    def __post_init__(self):
        if self.form not in ("V", "H"):
            raise ValueError("form must be 'V' or 'H'")
        object.__setattr__(self, "vectors", tuple(vec(v) for v in self.vectors))
        want = self.ambient_dim + (1 if self.form == "H" else 0)
        for v in self.vectors:
            if len(v) != want:
                raise ValueError("vector length != expected %d" % want)

    def points(self) -> tuple[Vec, ...]:
        if self.form != "V":
            raise ValueError("not a V-form polytope")
        return self.vectors

    def inequalities(self) -> list[tuple[Fraction, Vec]]:
        if self.form != "H":
            raise ValueError("not an H-form polytope")
        return [(row[0], row[1:]) for row in self.vectors]


def canonical_ray(v: Sequence[Fraction]) -> Vec:
    """Scale a nonzero vector positively so its 1-norm is one.

    Two vectors are positive multiples of each other iff their canonical
    forms coincide; this is the comparison form used throughout recognition.
    """
    v = vec(v)
    s = sum(abs(x) for x in v)
    if s == 0:
        raise ValueError("cannot canonicalize the zero vector")
    return tuple(x / s for x in v)


def _lineality_rref_basis(vectors: Sequence[Vec], n: int) -> tuple[Vec, ...]:
    r, _, rk = rref(Matrix(vectors, cols=n))
    return tuple(r.data[i] for i in range(rk))


def _project_off(v: Vec, basis: Sequence[Vec]) -> Vec:
    """Orthogonal projection of v onto the complement of span(basis)."""
    if not basis:
        return v
    g = Matrix([[dot(a, b) for b in basis] for a in basis], cols=len(basis))
    rhs = [dot(a, v) for a in basis]
    coeff = solve_linear(g, rhs)
    out = v
    for c, b in zip(coeff, basis):
        out = vsub(out, vscale(c, b))
    return out


def dd_h_to_v(h: ConeRep) -> ConeRep:
    """Minimal V-representation of an H-form cone via double description.

    Output rays are canonical, live in the orthogonal complement of the
    lineality space, and are sorted; the lineality basis is in RREF.
    """
    if h.form != "H":
        raise ValueError("expected H-form cone")
    n = h.ambient_dim
    lin: list[Vec] = [unit(n, i) for i in range(n)]
    rays: list[Vec] = []
    inserted: list[Vec] = []
    for b in h.vectors:
        vals = [dot(b, w) for w in lin]
        if any(x != 0 for x in vals):
            i0 = next(i for i, x in enumerate(vals) if x != 0)
            v0 = vscale(Fraction(1) / vals[i0], lin[i0])  # b.v0 == 1
            lin = [
                vsub(w, vscale(dot(b, w), v0))
                for i, w in enumerate(lin)
                if i != i0
            ]
            rays = [vsub(r, vscale(dot(b, r), v0)) for r in rays]
            rays = [canonical_ray(r) for r in rays if not is_zero_vec(r)]
            rays.append(canonical_ray(v0))
        else:
            pos = [r for r in rays if dot(b, r) > 0]
            neg = [r for r in rays if dot(b, r) < 0]
            zero = [r for r in rays if dot(b, r) == 0]
            if neg:
                target = n - len(lin) - 2
                new_rays = pos + zero
                for rm in neg:
                    for rp in pos:
                        tight = [
                            a for a in inserted
                            if dot(a, rm) == 0 and dot(a, rp) == 0
                        ]
                        if rank(Matrix(tight, cols=n)) == target:
                            comb = vsub(
                                vscale(dot(b, rp), rm), vscale(dot(b, rm), rp)
                            )
                            new_rays.append(canonical_ray(comb))
                rays = new_rays
        inserted.append(b)
    lin_basis = _lineality_rref_basis(lin, n) if lin else ()
    out = []
    for r in rays:
        pr = _project_off(r, lin_basis)
        if not is_zero_vec(pr):
            out.append(canonical_ray(pr))
    out = sorted(set(out))
    return ConeRep("V", n, tuple(out), lin_basis)


def dd_v_to_h(v: ConeRep) -> ConeRep:
    """Minimal H-representation: facet normals plus opposite pairs spanning
    the orthogonal complement of the cone's linear span."""
    if v.form != "V":
        raise ValueError("expected V-form cone")
    n = v.ambient_dim
    dual_rows = list(v.vectors)
    for l in v.lineality:
        dual_rows.append(l)
        dual_rows.append(vscale(Fraction(-1), l))
    dual = dd_h_to_v(ConeRep("H", n, tuple(dual_rows)))
    normals = list(dual.vectors)
    for l in dual.lineality:
        normals.append(l)
        normals.append(vscale(Fraction(-1), l))
    return ConeRep("H", n, tuple(normals))


def minimal_vrep(v: ConeRep) -> ConeRep:
    """Canonical minimal V-form: extreme rays of the pointed quotient plus a
    lineality basis; duplicates, zero vectors and redundant generators go."""
    if v.form != "V":
        raise ValueError("expected V-form cone")
    return dd_h_to_v(dd_v_to_h(v))


def lineality_and_pointedness(c: ConeRep) -> tuple[int, bool]:
    if c.form == "H":
        d = c.ambient_dim - rank(Matrix(c.vectors, cols=c.ambient_dim))
    else:
        d = len(minimal_vrep(c).lineality)
    return d, d == 0


def homogenize(p: PolytopeRep) -> ConeRep:
    """Cone over {1} x P; V points become (1, v), H rows (beta, a) become
    normals (beta, -a) under the b.x >= 0 convention."""
    n = p.ambient_dim
    if p.form == "V":
        gens = tuple((Fraction(1),) + pt for pt in p.vectors)
        return ConeRep("V", n + 1, gens)
    normals = tuple(
        (beta,) + vscale(Fraction(-1), a) for beta, a in p.inequalities()
    )
    return ConeRep("H", n + 1, normals)


def slack_of_cone(a: Matrix, b: Matrix) -> Matrix:
    """S = A B for a (V, H) representation pair; every entry must be >= 0."""
    s = a * b
    if not s.is_nonnegative():
        raise ValueError("not a representation pair: negative slack entry")
    return s


def slack_of_polytope(v: PolytopeRep, h: PolytopeRep) -> Matrix:
    """S_ij = beta_j - a_j . v_i; a negative entry means v is not inside h."""
    if v.form != "V" or h.form != "H":
        raise ValueError("need a V-form polytope and an H-form polytope")
    if v.ambient_dim != h.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    ineqs = h.inequalities()
    rows = []
    for pt in v.points():
        rows.append([beta - dot(a, pt) for beta, a in ineqs])
    s = Matrix(rows, cols=len(ineqs))
    if not s.is_nonnegative():
        raise ValueError("points are not contained in the H-polytope")
    return s


def _h_polytope_constraints(h: PolytopeRep) -> list[Constraint]:
    return [con(a, lp.LE, beta) for beta, a in h.inequalities()]


def _implicit_equalities(constraints: list[Constraint], n: int) -> list[Vec]:
    """Normals of the inequalities that are tight on the whole feasible set."""
    feas = lp.lp_solve([0] * n, constraints, sense="min")
    if feas.status == lp.INFEASIBLE:
        raise EmptyPolyhedronError("empty")
    normals = []
    for ci in constraints:
        # Maximize the slack of row i; cap it at 1 to keep the LP bounded.
        sign = Fraction(-1) if ci.rel == lp.LE else Fraction(1)
        slack_obj = vscale(sign, ci.coeffs)
        shift = -sign * ci.rhs
        capped = constraints + [con(slack_obj, lp.LE, 1 - shift)]
        out = lp.lp_solve(slack_obj, capped, sense="max")
        # The cap can cut away the whole feasible set when the slack is
        # bounded below by more than one; such a row is certainly not tight.
        if out.status == lp.OPTIMAL and out.value + shift == 0:
            normals.append(ci.coeffs)
    return normals


def dimension(rep: ConeRep | PolytopeRep) -> int:
    """Linear (cone) or affine (polytope) dimension of the represented set."""
    n = rep.ambient_dim
    if isinstance(rep, ConeRep):
        if rep.form == "V":
            m = Matrix(rep.vectors + rep.lineality, cols=n)
            return rank(m)
        constraints = [con(b, lp.GE, 0) for b in rep.vectors]
        normals = _implicit_equalities(constraints, n)
        return n - rank(Matrix(normals, cols=n))
    if rep.form == "V":
        pts = rep.points()
        if not pts:
            raise ValueError("empty V-polytope")
        diffs = [vsub(p, pts[0]) for p in pts[1:]]
        return rank(Matrix(diffs, cols=n))
    constraints = _h_polytope_constraints(rep)
    normals = _implicit_equalities(constraints, n)
    return n - rank(Matrix(normals, cols=n))


def contains_origin_interior(p: PolytopeRep) -> bool:
    """Exact test for 0 being in the (full-dimensional) interior of a
    V-polytope: full affine rank plus a strictly positive convex combination
    of the vertices hitting the origin."""
    if p.form != "V":
        raise ValueError("expected V-form polytope")
    n = p.ambient_dim
    pts = p.points()
    if dimension(p) != n:
        return False
    k = len(pts)
    # Variables: lambda_1..k and t; maximize t subject to lambda_i >= t.
    constraints: list[Constraint] = []
    for j in range(n):
        constraints.append(con([pt[j] for pt in pts] + [0], lp.EQ, 0))
    constraints.append(con([1] * k + [0], lp.EQ, 1))
    for i in range(k):
        constraints.append(con(unit(k + 1, i), lp.GE, 0))
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[i] = Fraction(1)
        coeffs[k] = Fraction(-1)
        constraints.append(con(coeffs, lp.GE, 0))
    out = lp.lp_solve(unit(k + 1, k), constraints, sense="max")
    return out.status == lp.OPTIMAL and out.value > 0


def facet_inequalities(p: PolytopeRep) -> PolytopeRep:
    """Minimal H-form of a V-polytope, computed through the homogenization
    cone.  Facet rows come back as (beta, a) with a.x <= beta; implicit
    equalities appear as opposite pairs."""
    cone_h = dd_v_to_h(homogenize(p))
    rows = []
    for b in cone_h.vectors:
        beta, tail = b[0], b[1:]
        rows.append((beta,) + vscale(Fraction(-1), tail))
    return PolytopeRep("H", p.ambient_dim, tuple(rows))


def vertices_of_h_polytope(h: PolytopeRep) -> list[Vec]:
    """Vertices of a bounded H-polytope; raises if a recession ray exists."""
    cone_v = dd_h_to_v(homogenize(h))
    if cone_v.lineality:
        raise ValueError("H-polyhedron is not pointed")
    verts = []
    for r in cone_v.vectors:
        if r[0] == 0:
            raise ValueError("H-polyhedron is unbounded")
        verts.append(vscale(Fraction(1) / r[0], r[1:]))
    return verts


def polar(p: PolytopeRep) -> PolytopeRep:
    """Polar dual of a V-polytope with 0 strictly interior: the facet
    normals scaled so each inequality reads a.x <= 1 become the points."""
    if p.form != "V":
        raise ValueError("expected V-form polytope")
    if not contains_origin_interior(p):
        raise ValueError("0 is not interior to the polytope")
    verts = []
    for beta, a in facet_inequalities(p).inequalities():
        # 0 interior makes every facet offset positive.
        assert beta > 0
        verts.append(vscale(Fraction(1) / beta, a))
    return PolytopeRep("V", p.ambient_dim, tuple(sorted(set(verts))))
