"""Deciding which Salem numbers arise from torus automorphisms.

The pipeline: a certified Salem polynomial S of degree 2, 4 or 6 is padded
with cyclotomic complements C to candidate sextics Q = S*C, the square-value
obstruction prunes Q, exact inversion of the exterior square recovers the
possible degree-1 characteristic polynomials P, and the root structure of
each P decides whether a complex-structure pairing exists.  Every surviving
(Q, C, P, pairing-class) quartet is an explicit torus witness.

Case tags follow the Salem degree: 6 and 4 directly, while degree 2 splits
on whether q = lambda + 1/lambda has q + 2 or q - 2 a perfect square (an
infinite family of witnesses) or neither (finitely many).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .errors import NotRealizableError, NotSalemInputError, WrongDegreeError
from .poly import (
    ONE,
    ZERO,
    IntPoly,
    _signed_divisors,
    cyclotomic,
    is_irreducible,
    is_squarefree,
    squarefree_part,
)
from .salem import NotSalem, SalemCertificate, is_salem, isolate_all_roots
from .wedge import invert_wedge, square_values

CASE_DEG6 = "Case1_deg6"
CASE_DEG4 = "Case2_deg4"
CASE_3A = "Case3a_deg2"
CASE_3B = "Case3b_deg2"

SHORT_CASE = {CASE_DEG6: "1", CASE_DEG4: "2", CASE_3A: "3a", CASE_3B: "3b"}


@dataclass(frozen=True)
class Finite:
    """Realized by finitely many quartets; count is the number found."""

    count: int


@dataclass(frozen=True)
class InfiniteFamily:
    """Realized by an infinite family; r is the integer with q -sign- 2 = r^2."""

    r: int
    sign: str


@dataclass(frozen=True)
class PairingClass:
    """One complex-structure choice on a witness, up to overall conjugation.

    kind "conjugate": indices pick (g1, g2) among the isolated roots of the
    squarefree part of P, one per conjugate pair.  kind "real": P = G^2 for
    a real hyperbolic quadratic, realized by gl2z_model(*gl_params).
    """

    kind: str
    indices: Optional[tuple] = None
    gl_params: Optional[tuple] = None


@dataclass(frozen=True)
class Witness:
    q_poly: IntPoly
    c_poly: IntPoly
    p_poly: IntPoly
    classes: tuple


@dataclass(frozen=True)
class CandidateSet:
    s_poly: IntPoly
    complements: tuple
    admissible_q: tuple
    quartets: tuple = ()


@dataclass(frozen=True)
class ClassificationReport:
    """Everything decidable about one Salem number's torus realizations.

    picard_ranks maps projectivity type to the forced rank (or the string
    "unconstrained").  finiteness is None until realizability has run;
    witnesses empty means log(lambda) is not an automorphism entropy.
    """

    salem: SalemCertificate
    case_tag: str
    q_value: Optional[int] = None
    square_witness: Optional[tuple] = None
    projective_types: tuple = ()
    picard_ranks: tuple = ()
    finiteness: object = None
    witnesses: tuple = ()


def _coerce_cert(s) -> SalemCertificate:
    if isinstance(s, SalemCertificate):
        cert = s
    elif isinstance(s, NotSalem):
        raise NotSalemInputError(f"not a Salem polynomial: {s.reason} ({s.detail})")
    elif isinstance(s, IntPoly):
        res = is_salem(s)
        if not res:
            raise NotSalemInputError(f"not a Salem polynomial: {res.reason} ({res.detail})")
        cert = res
    else:
        raise NotSalemInputError(f"expected IntPoly or SalemCertificate, got {type(s).__name__}")
    if cert.degree not in (2, 4, 6):
        raise WrongDegreeError(f"torus spectra need degree 2, 4 or 6, got {cert.degree}")
    return cert


def _compose_shifted_square(p: IntPoly, shift: int) -> IntPoly:
    """p(x^2 + shift), exactly."""
    inner = IntPoly((shift, 0, 1))
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * inner + IntPoly((c,))
    return acc

def _square_test(cert: SalemCertificate) -> Optional[tuple]:
    """(r, sign) with q +/- 2 = r^2 for the trace of lambda, if any.

    Runs uniformly through the trace polynomial: an integer root r of
    T(x^2 -/+ 2) says lambda + 1/lambda = r^2 -/+ 2.  For certified input any
    such root lands on the trace of lambda itself, and for degrees 4 and 6
    the transform stays irreducible of degree >= 2, so the test only ever
    fires in degree 2.
    """
    for shift, sign in ((-2, "+"), (2, "-")):
        u = _compose_shifted_square(cert.trace_poly, shift)
        c0 = u.constant
        assert c0 != 0
        roots = [r for r in _signed_divisors(c0) if r > 0 and u(r) == 0]
        if roots:
            return (min(roots), sign)
    return None


def case_of(s) -> ClassificationReport:
    """Partial report: case tag, projectivity types and forced ranks.

    No witness search; finiteness stays None until realizable() runs.
    """
    cert = _coerce_cert(s)
    d = cert.degree
    if d == 6:
        return ClassificationReport(
            salem=cert,
            case_tag=CASE_DEG6,
            projective_types=("non_projective",),
            picard_ranks=(("non_projective", 0),),
        )
    if d == 4:
        return ClassificationReport(
            salem=cert,
            case_tag=CASE_DEG4,
            projective_types=("non_projective", "projective"),
            picard_ranks=(("non_projective", 2), ("projective", 4)),
        )
    q = -cert.poly.coeffs[1]
    sq = _square_test(cert)
    if sq is not None:
        return ClassificationReport(
            salem=cert,
            case_tag=CASE_3A,
            q_value=q,
            square_witness=sq,
            projective_types=("projective",),
            picard_ranks=(("projective", "unconstrained"),),
        )
    return ClassificationReport(
        salem=cert,
        case_tag=CASE_3B,
        q_value=q,
        projective_types=("projective",),
        picard_ranks=(("projective", 4),),
    )


def _complement_pool(degree: int) -> tuple:
    if degree == 6:
        return (ONE,)
    quads = tuple(IntPoly((1, a, 1)) for a in range(-2, 3))
    if degree == 4:
        return quads
    split = tuple(quads[i] * quads[j] for i in range(5) for j in range(i, 5))
    irred = tuple(cyclotomic(n) for n in (5, 8, 10, 12))
    return split + irred


def enumerate_complements(s) -> CandidateSet:
    """All cyclotomic complements of the right degree, then the square filter.

    Complement roots must satisfy x^2 + bx + 1 with b in [-2, 2]; degree 2
    needs two such quadratics (split options plus the four irreducible
    quartics whose roots pair up that way).  A candidate Q = S*C survives
    only if -Q(1) and Q(-1) are perfect squares.
    """
    cert = _coerce_cert(s)
    comps = _complement_pool(cert.degree)
    admissible = tuple(q for q in (cert.poly * c for c in comps) if square_values(q))
    return CandidateSet(cert.poly, comps, admissible)


def pairing_classes(p: IntPoly) -> tuple:
    """Complex-structure choices on the companion torus of P, up to conjugation.

    Squarefree P with no real roots: two classes, (upper, upper) and
    (upper, lower) across the two conjugate pairs.  P = G^2 with G real
    hyperbolic: the single diagonal class through gl2z_model.  Anything
    else admits no pairing.
    """
    if is_squarefree(p):
        boxes = isolate_all_roots(p)
        if any(b.is_real for b in boxes):
            return ()
        uppers = [i for i, b in enumerate(boxes) if b.im.lo > 0]
        i1, i2 = uppers
        return (
            PairingClass("conjugate", indices=(i1, i2)),
            PairingClass("conjugate", indices=(i1, boxes[i2].conjugate_index)),
        )
    g = squarefree_part(p)
    if g.degree == 2 and g * g == p:
        c0, c1, _ = g.coeffs
        if (c0 == 1 and abs(c1) > 2) or (c0 == -1 and c1 != 0):
            return (PairingClass("real", gl_params=(-c1, c0)),)
    return ()


def realizable(s) -> ClassificationReport:
    """Full witness search: which (Q, C, P, pairing) quartets exist.

    An empty witness list means log(lambda) is not the entropy of any torus
    automorphism.  Witnesses are sorted by (Q, P) coefficients, so the
    report does not depend on enumeration order.
    """
    report = case_of(s)
    cert = report.salem
    cand = enumerate_complements(cert)
    witnesses = []
    quartets = []
    for q_poly in cand.admissible_q:
        c_poly, rem = divmod(q_poly, cert.poly)
        assert rem.is_zero
        inv = invert_wedge(q_poly)
        for p_poly in inv.verified:
            classes = pairing_classes(p_poly)
            if not classes:
                continue
            if report.case_tag == CASE_3B:
                _check_split_complement(c_poly, p_poly)
            witnesses.append(Witness(q_poly, c_poly, p_poly, classes))
    witnesses.sort(key=lambda w: (w.q_poly.coeffs, w.p_poly.coeffs))
    for w in witnesses:
        quartets.extend((w.q_poly, w.p_poly, cl) for cl in w.classes)
    verdict = None
    if witnesses:
        if report.square_witness is not None:
            verdict = InfiniteFamily(*report.square_witness)
        else:
            verdict = Finite(len(quartets))
    return replace(report, witnesses=tuple(witnesses), finiteness=verdict)


def _check_split_complement(c_poly: IntPoly, p_poly: IntPoly):
    # with both square tests failing, the complement must split into two
    # distinct quadratics t^2 + jt + 1 and P must be irreducible
    pairs = [
        (j, k)
        for j in range(-2, 3)
        for k in range(j, 3)
        if IntPoly((1, j, 1)) * IntPoly((1, k, 1)) == c_poly
    ]
    assert pairs and pairs[0][0] != pairs[0][1], f"complement {c_poly} does not split distinctly"
    assert is_irreducible(p_poly), f"witness {p_poly} unexpectedly factors"


def finiteness(s):
    """Finite(count) or InfiniteFamily(r, sign); raises if nothing realizes S."""
    report = realizable(s)
    if not report.witnesses:
        raise NotRealizableError(f"{report.salem.poly} is not realized by any torus automorphism")
    return report.finiteness
