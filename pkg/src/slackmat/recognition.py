"""Recognition of slack matrices of cones and polytopes, with certificates.

The core decision is the column cone generating condition (CCGC): the cone
spanned by the columns of a nonnegative matrix equals the nonnegative part
of its column span.  A matrix is a slack matrix of a polyhedral cone exactly
when this holds, and of a polytope when additionally its rank is at least
two and the all-ones vector lies in its column span.

Every verdict ships a certificate: an exact rank factorization on yes, a
point-and-separator witness (or a span/rank witness for the polytope-only
preconditions) on no.  Certificates are re-checkable by plain arithmetic,
independent of the decision path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .matrix import (
    Matrix,
    Vec,
    dot,
    inverse,
    is_zero_vec,
    left_kernel_basis,
    ones,
    rank,
    rank_factorization,
    right_kernel_basis,
    solve_linear,
    unit,
    vec,
    vscale,
    vsub,
)
from . import lp
from .lp import con
from .polyhedra import (
    ConeRep,
    PolytopeRep,
    canonical_ray,
    dd_h_to_v,
    dd_v_to_h,
    slack_of_polytope,
)

KIND_CONE = "cone"
KIND_POLYTOPE = "polytope"

UNMATCHED_RAY = "unmatched_ray"
ONES_NOT_IN_SPAN = "ones_not_in_span"
RANK_TOO_SMALL = "rank_too_small"


@dataclass(frozen=True)
class YesCertificate:
    """Exact realization: a . b reproduces the matrix entrywise."""

    a: Matrix
    b: Matrix
    mu: Optional[Vec] = None
    polytope: Optional[tuple[PolytopeRep, PolytopeRep]] = None


@dataclass(frozen=True)
class NoCertificate:
    """Witness refuting the slack-matrix claim.

    reason UNMATCHED_RAY: `witness` lies in the relevant span intersected
    with the nonnegative orthant while `separator` is nonnegative on every
    generator of the claimed cone and negative on the witness.  The
    convention says whether rows or columns generate the claimed cone.

    reason ONES_NOT_IN_SPAN: `witness` annihilates the matrix from the left
    but not the all-ones vector, so no polytope realization exists.

    reason RANK_TOO_SMALL: rank below two never comes from a polytope.
    """

    reason: str
    convention: str = "column"
    witness: Optional[Vec] = None
    separator: Optional[Vec] = None


@dataclass(frozen=True)
class RecognitionResult:
    verdict: bool
    kind: str
    certificate: YesCertificate | NoCertificate


def _require_nonnegative(m: Matrix) -> None:
    if not m.is_nonnegative():
        raise ValueError("matrix has a negative entry")


def _nonneg_span_cone(m: Matrix) -> ConeRep:
    """H-form of  colspan(M) intersected with the nonnegative orthant."""
    p = m.rows
    normals: list[Vec] = []
    for z in left_kernel_basis(m):
        normals.append(z)
        normals.append(vscale(Fraction(-1), z))
    normals.extend(unit(p, i) for i in range(p))
    return ConeRep("H", p, tuple(normals))


def _separator_against_columns(m: Matrix, witness: Vec) -> Vec:
    """First facet normal of cone(columns) that is negative on the witness."""
    gens = tuple(c for c in m.columns() if not is_zero_vec(c))
    h = dd_v_to_h(ConeRep("V", m.rows, gens))
    for normal in h.vectors:
        if dot(normal, witness) < 0:
            return normal
    raise AssertionError("witness is inside the column cone")


def ccgc_check(m: Matrix) -> RecognitionResult:
    """Decide the column cone generating condition with a certificate.

    Follows the five-step extreme-ray matching scheme: build the cone
    colspan(M) in the orthant from the left kernel, enumerate its extreme
    rays, and require every ray to be a positive multiple of a column.
    """
    _require_nonnegative(m)
    k = dd_h_to_v(_nonneg_span_cone(m))
    columns = {
        canonical_ray(c) for c in m.columns() if not is_zero_vec(c)
    }
    for ray in k.vectors:
        if ray not in columns:
            cert = NoCertificate(
                UNMATCHED_RAY,
                convention="column",
                witness=ray,
                separator=_separator_against_columns(m, ray),
            )
            return RecognitionResult(False, KIND_CONE, cert)
    a, b = rank_factorization(m)
    return RecognitionResult(True, KIND_CONE, YesCertificate(a=a, b=b))


def _transpose_certificate(cert: YesCertificate | NoCertificate):
    if isinstance(cert, YesCertificate):
        return YesCertificate(a=cert.b.transpose(), b=cert.a.transpose())
    conv = "row" if cert.convention == "column" else "column"
    return NoCertificate(cert.reason, conv, cert.witness, cert.separator)


def rcgc_check(m: Matrix) -> RecognitionResult:
    """Row cone generating condition; equivalent to the CCGC on the
    transpose, with the certificate restated in the row convention."""
    res = ccgc_check(m.transpose())
    return RecognitionResult(res.verdict, KIND_CONE,
                             _transpose_certificate(res.certificate))


def is_cone_slack(m: Matrix) -> RecognitionResult:
    """Is m a slack matrix of some polyhedral cone?"""
    return ccgc_check(m)


def is_polytope_slack(m: Matrix) -> RecognitionResult:
    """Is m a slack matrix of some polytope?

    Requires rank at least two, the all-ones vector in the column span, and
    the CCGC; the yes-certificate carries a realized polytope.
    """
    _require_nonnegative(m)
    if rank(m) < 2:
        cert = NoCertificate(RANK_TOO_SMALL)
        return RecognitionResult(False, KIND_POLYTOPE, cert)
    mu = solve_linear(m, ones(m.rows))
    if mu is None:
        z = next(
            z for z in left_kernel_basis(m) if dot(z, ones(m.rows)) != 0
        )
        cert = NoCertificate(ONES_NOT_IN_SPAN, witness=z)
        return RecognitionResult(False, KIND_POLYTOPE, cert)
    base = ccgc_check(m)
    if not base.verdict:
        return RecognitionResult(False, KIND_POLYTOPE, base.certificate)
    v, h, a2, b2 = _reconstruct_with_factors(m, rank_factorization(m), mu)
    cert = YesCertificate(a=a2, b=b2, mu=mu, polytope=(v, h))
    return RecognitionResult(True, KIND_POLYTOPE, cert)


def verify_no_certificate(m: Matrix, cert: NoCertificate) -> bool:
    """Re-check a rejection certificate by pure arithmetic.

    Independent of the recognition path: only kernels, signs and dot
    products.  Invalid or ill-shaped certificates return False.
    """
    try:
        if cert.reason == RANK_TOO_SMALL:
            return rank(m) < 2
        if cert.reason == ONES_NOT_IN_SPAN:
            z = vec(cert.witness)
            if len(z) != m.rows:
                return False
            return is_zero_vec(m.vecmat(z)) and dot(z, ones(m.rows)) != 0
        if cert.reason != UNMATCHED_RAY:
            return False
        mm = m.transpose() if cert.convention == "row" else m
        x = vec(cert.witness)
        h = vec(cert.separator)
        if len(x) != mm.rows or len(h) != mm.rows:
            return False
        if is_zero_vec(x) or any(xi < 0 for xi in x):
            return False
        if any(dot(z, x) != 0 for z in left_kernel_basis(mm)):
            return False
        if any(dot(h, c) < 0 for c in mm.columns()):
            return False
        return dot(h, x) < 0
    except (ValueError, TypeError):
        return False


def reconstruct_cone(m: Matrix) -> tuple[ConeRep, ConeRep]:
    """Realizing cone of a cone slack matrix: a rank factorization m = a b
    gives generators (rows of a) and inequality normals (columns of b)."""
    res = is_cone_slack(m)
    if not res.verdict:
        raise ValueError("not a slack matrix of a cone")
    a, b = res.certificate.a, res.certificate.b
    k = a.cols
    v = ConeRep("V", k, tuple(a.data))
    h = ConeRep("H", k, tuple(b.col(j) for j in range(b.cols)))
    return v, h


def _reconstruct_with_factors(m, factors, mu):
    a, b = factors
    k = a.cols
    c = b.matvec(mu)  # the unique c with a c = all-ones
    i0 = next(i for i, x in enumerate(c) if x != 0)
    cols = [c] + [unit(k, j) for j in range(k) if j != i0]
    u = Matrix.from_cols(cols, rows=k)
    a2 = a * u
    b2 = inverse(u) * b
    assert all(a2[i, 0] == 1 for i in range(a2.rows))
    pts = tuple(row[1:] for row in a2.data)
    hrows = tuple(
        (b2[0, j],) + tuple(-b2[i, j] for i in range(1, k))
        for j in range(b2.cols)
    )
    v = PolytopeRep("V", k - 1, pts)
    h = PolytopeRep("H", k - 1, hrows)
    if slack_of_polytope(v, h) != m:
        raise AssertionError("reconstruction failed to reproduce the matrix")
    return v, h, a2, b2


def reconstruct_polytope(
    m: Matrix,
    factors: Optional[tuple[Matrix, Matrix]] = None,
) -> tuple[PolytopeRep, PolytopeRep]:
    """Realizing polytope of a polytope slack matrix.

    Change basis in a rank factorization m = a b so the first factor gains an
    all-ones first column: with mu solving m mu = 1 and c = b mu, the basis
    matrix has first column c, completed by standard basis vectors away from
    the first nonzero coordinate of c.  An explicit factorization may be
    supplied; the default is the deterministic pivot-column one.
    """
    res = is_polytope_slack(m)
    if not res.verdict:
        raise ValueError("not a slack matrix of a polytope")
    if factors is None:
        return res.certificate.polytope
    a, b = factors
    if a * b != m or a.cols != rank(m):
        raise ValueError("supplied factors are not a rank factorization")
    v, h, _, _ = _reconstruct_with_factors(m, (a, b), res.certificate.mu)
    return v, h


def cone_check_via_polytope(m: Matrix) -> bool:
    """Independent route to the cone-slack verdict through the polytope
    test: strip zero rows, rescale rows to unit sums, and recognize the
    result as a polytope slack matrix (ranks below two are always cone
    slack matrices)."""
    _require_nonnegative(m)
    rows = [r for r in m.data if not is_zero_vec(r)]
    m0 = Matrix(rows, cols=m.cols)
    if rank(m0) <= 1:
        return True
    scaled = Matrix(
        [vscale(Fraction(1) / sum(r, Fraction(0)), r) for r in rows],
        cols=m.cols,
    )
    return is_polytope_slack(scaled).verdict


def affine_criterion_check(m: Matrix) -> bool:
    """Geometric polytope criterion: conv(rows) equals the intersection of
    the affine hull of the rows with the nonnegative orthant.

    Decided by enumerating the vertices and recession rays of that
    intersection through the homogenization cone; independent of
    is_polytope_slack and used as its cross-check oracle.
    """
    _require_nonnegative(m)
    if rank(m) < 2:
        raise ValueError("criterion needs rank at least two")
    q = m.cols
    r0 = m.row(0)
    diffs = Matrix([vsub(r, r0) for r in m.data[1:]], cols=q)
    normals: list[Vec] = []
    for z in right_kernel_basis(diffs):
        eq = (-dot(z, r0),) + z
        normals.append(vec(eq))
        normals.append(vscale(Fraction(-1), eq))
    normals.append(unit(q + 1, 0))  # homogenizing coordinate
    normals.extend(unit(q + 1, j + 1) for j in range(q))
    k = dd_h_to_v(ConeRep("H", q + 1, tuple(normals)))
    row_set = set(m.data)
    for ray in k.vectors:
        if ray[0] == 0:
            return False  # unbounded: a recession direction survives
        vertex = vscale(Fraction(1) / ray[0], ray[1:])
        if vertex not in row_set:
            return False
    return True


def polar_realization(m: Matrix) -> tuple[PolytopeRep, Fraction]:
    """Polytope P with 0 interior realizing a positive multiple of m, whose
    polar realizes the transpose.

    Requires both m and its transpose to be polytope slack matrices.  Scales
    m so the all-ones vector is a convex combination of the rows, subtracts
    the all-ones matrix and rank-factorizes the difference.
    """
    if not is_polytope_slack(m).verdict:
        raise ValueError("matrix is not a polytope slack matrix")
    if not is_polytope_slack(m.transpose()).verdict:
        raise ValueError("transpose is not a polytope slack matrix")
    p, q = m.rows, m.cols
    constraints = [
        con(m.col(j), lp.EQ, 1) for j in range(q)
    ] + [con(unit(p, i), lp.GE, 0) for i in range(p)]
    out = lp.lp_solve([0] * p, constraints, sense="min")
    assert out.status == lp.OPTIMAL
    y = out.point
    alpha = sum(y, Fraction(0))
    scaled = Matrix([[alpha * x for x in row] for row in m.data], cols=q)
    diff = Matrix([[x - 1 for x in row] for row in scaled.data], cols=q)
    a, b = rank_factorization(diff)
    d = a.cols
    v = PolytopeRep("V", d, tuple(a.data))
    h = PolytopeRep(
        "H", d, tuple((Fraction(1),) + vscale(Fraction(-1), b.col(j))
                      for j in range(q)),
    )
    if slack_of_polytope(v, h) != scaled:
        raise AssertionError("polar realization failed to reproduce the matrix")
    # The polar pair: vertices are the facet normals of P, facets come from
    # the vertices of P; its slack matrix is the transpose of the scaled one.
    pv = PolytopeRep("V", d, tuple(vscale(Fraction(-1), b.col(j))
                                   for j in range(q)))
    ph = PolytopeRep("H", d, tuple((Fraction(1),) + row for row in a.data))
    if slack_of_polytope(pv, ph) != scaled.transpose():
        raise AssertionError("polar slack mismatch")
    return v, alpha
