"""Explicit torus automorphism models.

A model is a 4x4 integer matrix (the action on degree-1 integer cohomology)
together with a choice of eigenvalue pairing (g1, g2) that fixes the complex
structure.  The degree-2 action is the exterior square; its non-cyclotomic
part is the Salem factor, the product g1*g2 is the lone (2,0) eigenvalue, and
projectivity is exactly "that product is a root of unity".

Constructors cover companion matrices of quartics, 2x2 matrices over an
imaginary quadratic order Z[sqrt(-D)] lifted to the integer lattice of
E x E, real hyperbolic pairs acting diagonally, and the dyadic CM family.
All certification is exact; boxes are refined until every discrete decision
is unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import (
    BadParametersError,
    NotApplicableError,
    NotHyperbolicError,
    NotMonicError,
    NotUnitError,
    RealRootsError,
    WrongDegreeError,
    ZeroEntropyError,
)
from .intervals import Box, Interval, log_interval, sqrt_lb, sqrt_ub
from .poly import ONE, IntPoly, split_cyclotomic, squarefree_part
from .salem import RootBox, is_salem, isolate_all_roots, lambda_interval, refine_root_box
from .wedge import exterior_square


# ----------------------------------------------------------------------
# small exact matrix helpers (4x4 is the only size that matters here)


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _mat_add(a, b):
    n = len(a)
    return tuple(tuple(a[i][j] + b[i][j] for j in range(n)) for i in range(n))


def _mat_scale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def _trace(a):
    return sum(a[i][i] for i in range(len(a)))


def _charpoly(m) -> IntPoly:
    """Characteristic polynomial of an integer matrix, exactly.

    Faddeev-LeVerrier over the integers; every internal division is checked.
    """
    n = len(m)
    work = _identity(n)
    cs = []
    for k in range(1, n + 1):
        am = _mat_mul(m, work)
        ck, rem = divmod(-_trace(am), k)
        assert rem == 0
        cs.append(ck)
        work = _mat_add(am, _mat_scale(_identity(n), ck))
    return IntPoly(tuple(reversed([1] + cs)))


# ----------------------------------------------------------------------
# arithmetic in Z[sqrt(-D)], elements as (a, b) integer pairs


def _qo_mul(x, y, d):
    return (x[0] * y[0] - x[1] * y[1] * d, x[0] * y[1] + x[1] * y[0])


def _qo_sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _qo_norm(x, d):
    return x[0] * x[0] + x[1] * x[1] * d


@dataclass(frozen=True)
class QuadOrderMatrix:
    """2x2 matrix over Z[sqrt(-d_param)]; entries are (a, b) pairs a + b*sqrt(-D)."""

    d_param: int
    entries: tuple

    def __post_init__(self):
        if self.d_param < 1:
            raise BadParametersError(f"order parameter must be positive, got {self.d_param}")
        e = tuple(tuple((int(v[0]), int(v[1])) for v in row) for row in self.entries)
        if len(e) != 2 or any(len(row) != 2 for row in e):
            raise BadParametersError("entries must form a 2x2 matrix")
        object.__setattr__(self, "entries", e)

    def trace(self):
        e = self.entries
        return (e[0][0][0] + e[1][1][0], e[0][0][1] + e[1][1][1])

    def det(self):
        e = self.entries
        return _qo_sub(
            _qo_mul(e[0][0], e[1][1], self.d_param),
            _qo_mul(e[0][1], e[1][0], self.d_param),
        )

    def lift(self):
        """4x4 integer matrix on the basis {1, sqrt(-D)} of each factor."""
        d = self.d_param
        rows = []
        for bi in range(2):
            for r in range(2):
                row = []
                for bj in range(2):
                    a, b = self.entries[bi][bj]
                    blk = ((a, -b * d), (b, a))
                    row.extend(blk[r])
                rows.append(tuple(row))
        return tuple(rows)


def a_form_matrix(d_param: int, b1: int, b2: int) -> QuadOrderMatrix:
    """The one-step automorphism shape [[0, -1], [1, b1 + b2*sqrt(-D)]]."""
    return QuadOrderMatrix(d_param, (((0, 0), (-1, 0)), ((1, 0), (int(b1), int(b2)))))


def _a_form_params(qm: QuadOrderMatrix):
    e = qm.entries
    if e[0][0] == (0, 0) and e[0][1] == (-1, 0) and e[1][0] == (1, 0):
        return e[1][1]
    return None


def _norm_charpoly(qm: QuadOrderMatrix) -> IntPoly:
    # (t^2 - tau t + delta)(t^2 - conj(tau) t + conj(delta)) expanded over Z
    ta, tb = qm.trace()
    da, db = qm.det()
    d = qm.d_param
    return IntPoly(
        (
            da * da + db * db * d,
            -2 * (ta * da + tb * db * d),
            ta * ta + tb * tb * d + 2 * da,
            -2 * ta,
            1,
        )
    )


# ----------------------------------------------------------------------
# the model record


@dataclass(frozen=True)
class ModelOrigin:
    """Constructor provenance; quad is set when the model came from E x E."""

    family: str
    params: tuple = ()
    quad: Optional[QuadOrderMatrix] = None


@dataclass(frozen=True)
class TorusModel:
    """Immutable torus automorphism model.

    matrix acts on the rank-4 lattice; h1_charpoly is its characteristic
    polynomial and h2_charpoly the exterior square.  root_boxes isolate the
    roots of root_poly (the squarefree part of h1_charpoly) and pairing picks
    the two eigenvalue indices (g1, g2) carrying the complex structure.
    """

    matrix: tuple
    h1_charpoly: IntPoly
    h2_charpoly: IntPoly
    root_poly: IntPoly
    root_boxes: tuple
    pairing: tuple
    reoriented: bool = False
    origin: Optional[ModelOrigin] = None

    @property
    def gamma1(self) -> RootBox:
        return self.root_boxes[self.pairing[0]]

    @property
    def gamma2(self) -> RootBox:
        return self.root_boxes[self.pairing[1]]

    @property
    def h20_product(self) -> Box:
        """Certified box for g1*g2, the eigenvalue on (2,0)-forms."""
        return self.gamma1.box * self.gamma2.box

    def salem_factor(self) -> IntPoly:
        """Non-cyclotomic part of h2_charpoly; the constant 1 at entropy zero."""
        return split_cyclotomic(self.h2_charpoly)[1]

    def cyclotomic_cofactor(self) -> IntPoly:
        return self.h2_charpoly // self.salem_factor()

    def refined(self, width: Fraction) -> "TorusModel":
        """New model with every root box shrunk below the given width."""
        boxes = _refine_boxes(self.root_poly, self.root_boxes, Fraction(width))
        return replace(self, root_boxes=boxes)


def _refine_boxes(root_poly, boxes, width):
    out = list(boxes)
    for i, b in enumerate(boxes):
        if b.is_real or b.im.lo > 0:
            out[i] = refine_root_box(root_poly, b, width)
    for i, b in enumerate(boxes):
        if not (b.is_real or b.im.lo > 0):
            up = out[b.conjugate_index]
            out[i] = RootBox(up.re, -up.im, b.conjugate_index)
    return tuple(out)


def _make_model(matrix, pairing, origin, reoriented=False):
    h1 = _charpoly(matrix)
    h2 = exterior_square(h1)
    root_poly = squarefree_part(h1)
    boxes = isolate_all_roots(root_poly)
    if pairing is not None:
        i, j = pairing
        if not (0 <= i < len(boxes) and 0 <= j < len(boxes)):
            raise BadParametersError(f"pairing {pairing} out of range for {len(boxes)} roots")
    return TorusModel(matrix, h1, h2, root_poly, boxes, pairing, reoriented, origin)


# ----------------------------------------------------------------------
# constructors


def from_quartic(p: IntPoly, pairing_choice=None) -> TorusModel:
    """Companion-matrix model of a monic quartic with constant term 1.

    The quartic must have no real roots, so its roots split into conjugate
    pairs; pairing_choice indexes the isolated roots of the squarefree part
    and must take one root from each pair.  Defaults to both upper-half
    representatives.
    """
    if not p.is_monic:
        raise NotMonicError("from_quartic needs a monic polynomial")
    if p.degree != 4:
        raise WrongDegreeError(f"expected degree 4, got {p.degree}")
    if p.constant != 1:
        raise NotUnitError(f"constant term must be 1, got {p.constant}")
    c0, c1, c2, c3, _ = p.coeffs
    matrix = (
        (0, 0, 0, -c0),
        (1, 0, 0, -c1),
        (0, 1, 0, -c2),
        (0, 0, 1, -c3),
    )
    sf = squarefree_part(p)
    boxes = isolate_all_roots(sf)
    if any(b.is_real for b in boxes):
        reals = [b for b in boxes if b.is_real]
        raise RealRootsError(
            f"{p} has {len(reals)} real roots; this pairing needs none (real spectra pair through gl2z_model)"
        )
    if sf == p:
        uppers = [i for i, b in enumerate(boxes) if b.im.lo > 0]
        if pairing_choice is None:
            pairing_choice = (uppers[0], uppers[1])
        i, j = pairing_choice
        if not (0 <= i < len(boxes) and 0 <= j < len(boxes)):
            raise BadParametersError(f"pairing {pairing_choice} out of range")
        if j == i or j == boxes[i].conjugate_index:
            raise BadParametersError("pairing must take one root from each conjugate pair")
    else:
        # p is the square of a non-real quadratic; both eigenvalue slots
        # range over the same pair
        assert sf.degree == 2 and sf * sf == p
        if pairing_choice is None:
            pairing_choice = (0, 1)
        i, j = pairing_choice
        if not (0 <= i < len(boxes) and 0 <= j < len(boxes)):
            raise BadParametersError(f"pairing {pairing_choice} out of range")
    model = _make_model(matrix, (i, j), ModelOrigin("quartic", (p, (i, j))))
    assert model.h1_charpoly == p
    return model


def quad_order_model(qm: QuadOrderMatrix) -> TorusModel:
    """Lift a unit-determinant matrix over Z[sqrt(-D)] to a 4x4 lattice model.

    The pairing is chosen so that (g1, g2) are the eigenvalues of the 2x2
    complex matrix itself, located by exact interval matching of their sum
    and product against trace and determinant.
    """
    det = qm.det()
    n = _qo_norm(det, qm.d_param)
    if n != 1:
        raise NotUnitError(f"determinant {det} has norm {n}, not a unit")
    matrix = qm.lift()
    model = _make_model(matrix, None, ModelOrigin("quad_order", (), quad=qm))
    assert model.h1_charpoly == _norm_charpoly(qm)
    tau = qm.trace()
    if tau[1] == 0 and det[1] == 0:
        # the complex matrix has a rational characteristic polynomial; its
        # eigenvalues are the (up to) two roots of the squarefree part
        k = len(model.root_boxes)
        pairing = (0, min(1, k - 1))
    else:
        pairing = _match_pairing(model, tau, det, qm.d_param)
    return replace(model, pairing=pairing)


def _match_pairing(model, tau, delta, d):
    """Indices (i <= j) with root_i + root_j = tau and root_i * root_j = delta."""
    allow_equal = model.root_poly != model.h1_charpoly
    boxes = list(model.root_boxes)
    k = len(boxes)
    cands = [(i, j) for i in range(k) for j in range(i, k) if i != j or allow_equal]
    width = Fraction(1, 1 << 24)
    bits = 48
    for _ in range(64):
        sd = Interval(sqrt_lb(Fraction(d), bits), sqrt_ub(Fraction(d), bits))
        tau_box = Box(Interval.point(tau[0]), tau[1] * sd)
        delta_box = Box(Interval.point(delta[0]), delta[1] * sd)
        keep = []
        for i, j in cands:
            ssum = Box(boxes[i].re + boxes[j].re, boxes[i].im + boxes[j].im)
            prod = boxes[i].box * boxes[j].box
            if ssum.intersects(tau_box) and prod.intersects(delta_box):
                keep.append((i, j))
        assert keep, "eigenvalue pairing lost during refinement"
        if len(keep) == 1:
            return keep[0]
        cands = keep
        width /= 1 << 8
        bits += 32
        refined = _refine_boxes(model.root_poly, tuple(boxes), width)
        boxes = list(refined)
    raise RuntimeError("eigenvalue pairing did not separate")


def gl2z_model(r: int, det: int) -> TorusModel:
    """Two copies of the companion of t^2 - r t + det acting diagonally.

    Needs real eigenvalues off the unit circle: |r| > 2 when det = +1,
    r != 0 when det = -1.  The pairing is the real selection (both
    eigenvalues of the 2x2 block).
    """
    if det not in (1, -1):
        raise BadParametersError(f"det must be +1 or -1, got {det}")
    hyperbolic = (det == 1 and abs(r) > 2) or (det == -1 and r != 0)
    if not hyperbolic:
        raise NotHyperbolicError(f"t^2 - {r}t + {det} has no real root off the unit circle")
    matrix = (
        (0, -det, 0, 0),
        (1, r, 0, 0),
        (0, 0, 0, -det),
        (0, 0, 1, r),
    )
    model = _make_model(matrix, (0, 1), ModelOrigin("gl2z", (r, det)))
    assert model.root_poly == IntPoly((det, -r, 1))
    return model


def dyadic_cm_family(n: int, k: int) -> TorusModel:
    """E x E model for E with endomorphism sqrt(-4**k), one per 0 <= k <= n.

    The Salem factor of the degree-2 action is
    t^4 - (1+4^n) t^3 - 2^(2n+1) t^2 - (1+4^n) t + 1, the same for every k.
    """
    if n < 1 or k < 0 or k > n:
        raise BadParametersError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    qm = a_form_matrix(4**k, 1, 2 ** (n - k))
    model = quad_order_model(qm)
    return replace(model, origin=ModelOrigin("dyadic_cm", (n, k), quad=qm))


# ----------------------------------------------------------------------
# operations on models


def _salem_rest(model: TorusModel) -> IntPoly:
    rest = model.salem_factor()
    if rest == ONE:
        raise ZeroEntropyError("all eigenvalues lie on the unit circle")
    return rest


def reorient(model: TorusModel) -> TorusModel:
    """Replace the pairing (g1, g2) by (g1, conjugate of g2).

    Entropy is unchanged.  A real g2 is fixed by conjugation, so the pairing
    stays put and only the orientation flag flips.
    """
    _salem_rest(model)
    i, j = model.pairing
    jj = model.root_boxes[j].conjugate_index
    if jj is None:
        jj = j
    return replace(model, pairing=(i, jj), reoriented=not model.reoriented)


def _locate_product(model: TorusModel, polys) -> int:
    """Index of the squarefree polynomial whose root g1*g2 is.

    The product is an exact root of exactly one entry; boxes are refined
    until a single candidate root box remains.
    """
    box_sets = [list(isolate_all_roots(f)) for f in polys]
    g1, g2 = model.gamma1, model.gamma2
    width = Fraction(1, 1 << 24)
    for _ in range(64):
        prod = g1.box * g2.box
        hits = [
            (pi, bi)
            for pi, bset in enumerate(box_sets)
            for bi, b in enumerate(bset)
            if prod.intersects(b.box)
        ]
        assert hits, "product box lost every root"
        if len(hits) == 1:
            return hits[0][0]
        width /= 1 << 8
        g1 = refine_root_box(model.root_poly, g1, width)
        g2 = refine_root_box(model.root_poly, g2, width)
        box_sets = [
            [refine_root_box(f, b, width) for b in bset] for f, bset in zip(polys, box_sets)
        ]
    raise RuntimeError("projectivity decision did not separate")


def is_projective(model: TorusModel) -> bool:
    """True iff g1*g2 is a root of unity (a root of the cyclotomic cofactor).

    Decided by certified box membership against the isolated roots of the
    exact factors, never by floating-point tolerance.
    """
    rest = _salem_rest(model)
    cof = model.h2_charpoly // rest
    if cof == ONE:
        # no cyclotomic factor at all; the product must be a Salem conjugate
        _locate_product(model, (rest,))
        return False
    which = _locate_product(model, (rest, squarefree_part(cof)))
    return which == 1


def _bits_for(eps: Fraction) -> int:
    return (eps.denominator // eps.numerator).bit_length() + 1


def entropy(model: TorusModel, eps=Fraction(1, 10**9)) -> Interval:
    """Certified interval of width <= eps around log(max |eigenvalue|^2).

    Exactly [0, 0] when the spectrum lies on the unit circle.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise BadParametersError("eps must be positive")
    rest = model.salem_factor()
    if rest == ONE:
        return Interval.point(0)
    cert = is_salem(rest)
    assert cert, f"non-cyclotomic part {rest} failed certification"
    bits = max(48, _bits_for(eps) + 8)
    while True:
        lam = lambda_interval(rest, bits)
        out = log_interval(lam, bits=bits + 16)
        if out.width <= eps:
            return out
        bits *= 2


class _UnconstrainedRank:
    """Sentinel for Picard ranks the classification does not force."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unconstrained"


UNCONSTRAINED = _UnconstrainedRank()


def _is_square(v: int) -> bool:
    return v >= 0 and isqrt(v) ** 2 == v


def picard_rank(model: TorusModel):
    """Rank forced by (Salem degree, projectivity): 0, 2, 4, or UNCONSTRAINED."""
    rest = _salem_rest(model)
    d = rest.degree
    if d == 6:
        return 0
    if d == 4:
        return 4 if is_projective(model) else 2
    assert d == 2
    q = -rest.coeffs[1]
    if _is_square(q + 2) or _is_square(q - 2):
        return UNCONSTRAINED
    return 4


def verify_jd(model: TorusModel, d_value: int) -> bool:
    """Does an integer lattice map square to -D and commute with the model?

    Only defined for models with E x E provenance; the candidate is pinned
    down on the order basis, where multiplication by sqrt(-D0) is the only
    lattice map with the right complexified action up to rational scale.  On
    the original orientation the map complexifies to (sqrt(D)i, sqrt(D)i);
    after reorientation the same integer matrix acts as (sqrt(D)i, -sqrt(D)i).
    """
    if model.origin is None or model.origin.quad is None:
        raise NotApplicableError("model has no quadratic-order provenance")
    if d_value < 1:
        raise BadParametersError(f"D must be a positive integer, got {d_value}")
    d0 = model.origin.quad.d_param
    prod = d_value * d0
    s = isqrt(prod)
    if s * s != prod or s % d0:
        return False
    c = s // d0
    j0 = (
        (0, -d0, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 0, -d0),
        (0, 0, 1, 0),
    )
    j = _mat_scale(j0, c)
    if _mat_mul(j, j) != _mat_scale(_identity(4), -d_value):
        return False
    return _mat_mul(j, model.matrix) == _mat_mul(model.matrix, j)


@dataclass(frozen=True)
class NotForced:
    """The degree-(1,1) characteristic polynomial is not pinned down."""

    reason: str

    def __bool__(self):
        return False


def _quadratic_split(c: IntPoly):
    for j in range(-2, 3):
        for k in range(j, 3):
            if IntPoly((1, j, 1)) * IntPoly((1, k, 1)) == c:
                return (j, k)
    return None


def ns_charpoly(model: TorusModel):
    """Characteristic polynomial of the action on divisor classes, when forced.

    For one-step E x E models the closed quartic formula applies (and is
    cross-checked against the exterior square); for degree-2 Salem models
    that are projective with both square tests failing, the split
    S * (t^2 + k t + 1) applies with k from the factor away from g1*g2.
    Everything else is NotForced.
    """
    rest = _salem_rest(model)
    if model.origin is not None and model.origin.quad is not None and not model.reoriented:
        ab = _a_form_params(model.origin.quad)
        if ab is not None:
            b1, b2 = ab
            d = model.origin.quad.d_param
            s = b1 * b1 + b2 * b2 * d
            out = IntPoly((1, -s, 2 * b1 * b1 - 2 * b2 * b2 * d - 2, -s, 1))
            # the (2,0)+(0,2) block carries (t-1)^2 since g1*g2 = det = 1
            assert model.h2_charpoly == IntPoly((1, -2, 1)) * out
            return out
    if rest.degree == 2:
        q = -rest.coeffs[1]
        if not (_is_square(q + 2) or _is_square(q - 2)) and is_projective(model):
            cof = model.h2_charpoly // rest
            jk = _quadratic_split(cof)
            assert jk is not None and jk[0] != jk[1], f"unexpected cofactor {cof}"
            quads = (IntPoly((1, jk[0], 1)), IntPoly((1, jk[1], 1)))
            which = _locate_product(model, tuple(squarefree_part(f) for f in quads))
            other = quads[1 - which]
            return rest * other
    return NotForced("rank data does not pin down the divisor action")
