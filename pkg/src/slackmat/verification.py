"""Polyhedral verification: does a V-polytope equal an H-polyhedron that
contains it?  Decided through slack-matrix recognition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .matrix import Matrix, rank
from .polyhedra import PolytopeRep, dimension, slack_of_polytope
from .recognition import NoCertificate, is_polytope_slack

EQUAL = "equal"
NOT_POINTED = "not_pointed"
DIM_MISMATCH = "dim_mismatch"
SLACK_REJECT = "slack_reject"


@dataclass(frozen=True)
class VerificationResult:
    equal: bool
    reason: str
    witness: Optional[NoCertificate] = None
    dims: Optional[tuple[int, int]] = None


def containment_check(q: PolytopeRep, p: PolytopeRep) -> bool:
    """Every point of the V-polytope satisfies every inequality of the
    H-polyhedron."""
    if q.ambient_dim != p.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    try:
        slack_of_polytope(q, p)
    except ValueError:
        return False
    return True


def verify_polytope_equality(q: PolytopeRep, p: PolytopeRep) -> VerificationResult:
    """Decide P = Q for a V-polytope Q contained in an H-polyhedron P.

    Stages: P must be pointed (trivial right kernel of the inequality
    normals), dimensions must agree, and the matrix of slacks of Q's points
    in P's inequalities must be a polytope slack matrix.  A failure at any
    stage proves P != Q.
    """
    if q.form != "V" or p.form != "H":
        raise ValueError("need a V-polytope and an H-polyhedron")
    m = slack_of_polytope(q, p)  # raises when Q is not inside P
    n = p.ambient_dim
    w = Matrix([a for _, a in p.inequalities()], cols=n)
    if rank(w) < n:
        return VerificationResult(False, NOT_POINTED)
    dim_q = dimension(q)
    dim_p = dimension(p)
    if dim_q != dim_p:
        return VerificationResult(False, DIM_MISMATCH, dims=(dim_q, dim_p))
    res = is_polytope_slack(m)
    if not res.verdict:
        return VerificationResult(False, SLACK_REJECT, witness=res.certificate)
    return VerificationResult(True, EQUAL)
