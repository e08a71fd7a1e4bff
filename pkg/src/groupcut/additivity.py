"""Limit subadditivity slacks, minimality, and additivity classification.

The subadditivity slack of pi at (x, y) is pi(x) + pi(y) - pi(x+y).  On a
face F of the 2-D complex this extends to boundary points by one-sided
limits: the slack at a vertex uses, in each of the three projections, the
limit taken from within the relative interior of the projection of F.
Since pi is affine on the relative interior of every projection, the
extension is affine on F, so everything about the face is decided by its
finitely many vertex slacks:

  * the face is additive (slack identically zero on relint F, hence the
    relint lies in the additivity domain E(pi)) iff all vertex slacks are 0;
  * a nonadditive face with some zero vertex slack carries pure limit
    additivities (the E_F data living only on the boundary);
  * for a subadditive function, nonnegativity of all vertex slacks over
    all faces certifies subadditivity everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex2d import Complex2D, Face2D
from .exactnum import QNum, format_qnum
from .pwl import AT, MINUS, PLUS, PwlFunction

ADDITIVE = "additive"
LIMIT_ADDITIVE = "limit_additive"
NON_ADDITIVE = "non_additive"


def get_complex(fn: PwlFunction) -> Complex2D:
    """The 2-D complex over fn's breakpoints, cached on the function."""
    cached = getattr(fn, "_complex2d", None)
    if cached is None:
        cached = Complex2D(fn.breakpoints)
        fn._complex2d = cached
    return cached


def vertex_sides(face: Face2D, vertex) -> tuple[int, int, int]:
    """Limit directions (for x, y, x+y) of the face at one of its points.

    A coordinate sitting at the lower end of the face's projection is
    approached from above (plus), at the upper end from below (minus);
    anywhere else the genuine value is used (a singleton projection, or
    an interior point of a projection, which never hits a breakpoint).
    """
    u, v = vertex
    out = []
    for t, proj in ((u, face.p1), (v, face.p2), (u + v, face.p3)):
        if proj.is_point:
            out.append(AT)
        elif t == proj.a:
            out.append(PLUS)
        elif t == proj.b:
            out.append(MINUS)
        else:
            out.append(AT)
    return tuple(out)


def slack_at(fn: PwlFunction, face: Face2D, vertex) -> QNum:
    """The face-limit slack of fn at a point of the face."""
    u, v = vertex
    s = u + v
    if not (face.p1.contains(u) and face.p2.contains(v)
            and face.p3.contains(s)):
        raise ValueError(f"point ({u}, {v}) not in {face.label()}")
    s1, s2, s3 = vertex_sides(face, vertex)
    return fn.limit(u, s1) + fn.limit(v, s2) - fn.limit(s, s3)


@dataclass(frozen=True)
class SlackRecord:
    face: Face2D
    vertex: tuple[QNum, QNum]
    slack: QNum
    sides: tuple[int, int, int]


@dataclass(frozen=True)
class FaceClassification:
    face: Face2D
    slacks: tuple[SlackRecord, ...]
    status: str  # ADDITIVE / LIMIT_ADDITIVE / NON_ADDITIVE

    @property
    def zero_vertices(self) -> tuple[tuple[QNum, QNum], ...]:
        return tuple(r.vertex for r in self.slacks if r.slack == 0)


@dataclass
class AdditivityReport:
    fn: PwlFunction
    complex: Complex2D
    faces: tuple[FaceClassification, ...]

    def __post_init__(self):
        self._by_key = {fc.face.triple_key: fc for fc in self.faces}

    @property
    def additive_faces(self) -> list[Face2D]:
        return [fc.face for fc in self.faces if fc.status == ADDITIVE]

    @property
    def limit_additive_faces(self) -> list[Face2D]:
        return [fc.face for fc in self.faces if fc.status == LIMIT_ADDITIVE]

    def classification_of(self, face: Face2D) -> FaceClassification:
        return self._by_key[face.triple_key]

    def to_json(self) -> dict:
        """Lossless JSON form; all numbers as exact strings."""
        out = []
        for fc in self.faces:
            out.append({
                "face": {
                    "I": [format_qnum(fc.face.I.a), format_qnum(fc.face.I.b)],
                    "J": [format_qnum(fc.face.J.a), format_qnum(fc.face.J.b)],
                    "K": [format_qnum(fc.face.K.a), format_qnum(fc.face.K.b)],
                    "dim": fc.face.dim,
                },
                "status": fc.status,
                "slacks": [{
                    "vertex": [format_qnum(r.vertex[0]),
                               format_qnum(r.vertex[1])],
                    "sides": list(r.sides),
                    "slack": format_qnum(r.slack),
                } for r in fc.slacks],
            })
        return {"name": self.fn.name, "f": format_qnum(self.fn.f),
                "faces": out}


def classify_face(fn: PwlFunction, face: Face2D) -> FaceClassification:
    recs = tuple(SlackRecord(face, v, slack_at(fn, face, v),
                             vertex_sides(face, v))
                 for v in face.vertices)
    zeros = sum(1 for r in recs if r.slack == 0)
    if zeros == len(recs):
        status = ADDITIVE
    elif zeros > 0:
        status = LIMIT_ADDITIVE
    else:
        status = NON_ADDITIVE
    return FaceClassification(face, recs, status)


def additive_face_report(fn: PwlFunction,
                         complex: Complex2D | None = None) -> AdditivityReport:
    """Classify every face of the complex by its vertex slacks.

    The report over the function's own complex is cached on the function.
    """
    if complex is None:
        cached = getattr(fn, "_additivity_report", None)
        if cached is not None:
            return cached
        report = AdditivityReport(
            fn, get_complex(fn),
            tuple(classify_face(fn, F) for F in get_complex(fn).faces))
        fn._additivity_report = report
        return report
    return AdditivityReport(fn, complex,
                            tuple(classify_face(fn, F) for F in complex.faces))


# -- minimality ------------------------------------------------------------


@dataclass
class MinimalityReport:
    minimal: bool
    failure: str | None = None
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.minimal

    def __str__(self) -> str:
        if self.minimal:
            return "minimal"
        parts = ", ".join(f"{k}={v}" for k, v in (self.witness or {}).items())
        return f"not minimal: {self.failure} ({parts})"


def minimality_test(fn: PwlFunction, f=None) -> MinimalityReport:
    """Exact minimality check: pi(0)=0, bounds, subadditivity, symmetry.

    Subadditivity is certified by the vertex slacks of every face of the
    2-D complex (the slack is affine per face).  Symmetry
    pi(x) + pi(f-x) = 1 is checked for values and both one-sided limit
    pairings on the mesh refined by f-reflected breakpoints; both sides
    are affine between consecutive mesh points, so this is complete.
    """
    f = fn.f if f is None else QNum.of(f)

    if fn.eval(0) != 0:
        return MinimalityReport(False, "value_at_zero",
                                {"value": fn.eval(0)})

    for r in fn.rows:
        for side, t in (("left", r.left), ("value", r.value),
                        ("right", r.right)):
            if not (0 <= t <= 1):
                return MinimalityReport(False, "bounds",
                                        {"x": r.x, "limit": side, "value": t})

    cx = get_complex(fn)
    for face in cx.faces:
        for v in face.vertices:
            s = slack_at(fn, face, v)
            if s < 0:
                return MinimalityReport(
                    False, "subadditivity",
                    {"face": face.label(), "vertex": v, "slack": s})

    mesh = sorted({b for b in fn.breakpoints}
                  | {(f - b).mod1() for b in fn.breakpoints})
    for t in mesh:
        partner = f - t
        checks = (
            ("value", fn.eval(t) + fn.eval(partner)),
            ("plus", fn.limit(t, PLUS) + fn.limit(partner, MINUS)),
            ("minus", fn.limit(t, MINUS) + fn.limit(partner, PLUS)),
        )
        for kind, total in checks:
            if total != 1:
                return MinimalityReport(
                    False, "symmetry",
                    {"x": t, "pairing": kind, "sum": total})

    return MinimalityReport(True)


# -- E(pi) comparison --------------------------------------------------------


@dataclass(frozen=True)
class EContainmentResult:
    relation: str  # equal | strict_subset | strict_superset | incomparable
    witness_only_in_first: Face2D | None = None
    witness_only_in_second: Face2D | None = None

    def __str__(self):
        return self.relation


def e_containment(fn1: PwlFunction, fn2: PwlFunction) -> EContainmentResult:
    """Compare the additivity domains E(fn1) and E(fn2) exactly.

    Both E-sets are unions of relative interiors of additive faces of the
    common refined complex, so set comparison reduces to comparing the
    two collections of additive faces.
    """
    for fn in (fn1, fn2):
        if not isinstance(fn, PwlFunction):
            raise TypeError(
                f"e_containment needs piecewise linear inputs, got "
                f"{type(fn).__name__}; non-PWL functions are compared at "
                f"the face level by their dedicated verification suite")
    merged = sorted(set(fn1.breakpoints) | set(fn2.breakpoints))
    cx = Complex2D(merged)

    def additive_keys(fn):
        keys = {}
        for face in cx.faces:
            if all(slack_at(fn, face, v) == 0 for v in face.vertices):
                keys[face.triple_key] = face
        return keys

    a1 = additive_keys(fn1)
    a2 = additive_keys(fn2)
    only1 = sorted(set(a1) - set(a2))
    only2 = sorted(set(a2) - set(a1))
    w1 = a1[only1[0]] if only1 else None
    w2 = a2[only2[0]] if only2 else None
    if not only1 and not only2:
        return EContainmentResult("equal")
    if not only1:
        return EContainmentResult("strict_subset", None, w2)
    if not only2:
        return EContainmentResult("strict_superset", w1, None)
    return EContainmentResult("incomparable", w1, w2)
