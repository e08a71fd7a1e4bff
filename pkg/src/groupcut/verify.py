"""Machine checks for the headline claims about the built-in functions.

Each suite returns a ClaimReport.  A report is *verified* when every
sub-check passed, *refuted* with a witness string when an exact
computation contradicts the claim, and *skipped* only when a programmatic
precondition makes the check inapplicable.  All checks are deterministic;
sampling uses fixed rational lattices, never floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import QNum
from .pwl import PwlFunction, BreakpointRow
from .complex2d import Interval, centroid, n_f
from .additivity import (ADDITIVE, additive_face_report, e_containment,
                         get_complex, minimality_test, slack_at, vertex_sides)
from .covering import components as covering_components
from .perturbation import build_system, drop_one_ranks
from . import catalog

VERIFIED = "verified"
REFUTED = "refuted"
SKIPPED = "skipped"


@dataclass
class ClaimReport:
    claim: str
    status: str
    witness: str | None = None
    statistics: dict = field(default_factory=dict)

    def __bool__(self):
        return self.status == VERIFIED

    def __str__(self):
        lines = [f"claim {self.claim}: {self.status}"]
        if self.witness:
            lines.append(f"  witness: {self.witness}")
        for k in sorted(self.statistics):
            lines.append(f"  {k}: {self.statistics[k]}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"claim": self.claim, "status": self.status,
                "witness": self.witness,
                "statistics": {k: (str(v) if isinstance(v, QNum) else v)
                               for k, v in self.statistics.items()}}


def mutate_value(fn: PwlFunction, row: int,
                 delta=Fraction(1, 10**6)) -> PwlFunction:
    """Copy of fn with one table value nudged; used as a negative control."""
    rows = list(fn.rows)
    r = rows[row]
    rows[row] = BreakpointRow(r.x, r.left, r.value + QNum.of(delta), r.right)
    return PwlFunction(rows, fn.f, name=fn.name + "_mutated",
                       special_intervals=fn.special_intervals)


# -- suite 1: the separation example -----------------------------------------


def verify_psi_separation(psi: PwlFunction | None = None,
                          psi_prime: PwlFunction | None = None) -> ClaimReport:
    """psi and psi_prime are minimal, share all additivities of psi, and
    psi_prime has strictly more; the gap shows up in the northeast limit
    cone and makes their difference ineffective as a perturbation."""
    psi = psi if psi is not None else catalog.psi_function()
    psi_prime = (psi_prime if psi_prime is not None
                 else catalog.psi_prime_function())
    stats = {}

    for fn, tag in ((psi, "psi"), (psi_prime, "psi_prime")):
        rep = minimality_test(fn)
        stats[f"minimal_{tag}"] = bool(rep)
        if not rep:
            return ClaimReport("psi_separation", REFUTED,
                               witness=f"{tag} not minimal: {rep}",
                               statistics=stats)

    rel = e_containment(psi, psi_prime)
    stats["containment"] = rel.relation
    if rel.relation != "strict_subset":
        wit = f"e_containment(psi, psi_prime) = {rel.relation}"
        if rel.witness_only_in_first is not None:
            wit += f"; only in psi: {rel.witness_only_in_first.label()}"
        return ClaimReport("psi_separation", REFUTED, witness=wit,
                           statistics=stats)

    # the limit cone pointing northeast from (3/8, 3/8): additive in the
    # limit for psi, strictly positive for psi_prime
    cx = get_complex(psi)
    h = Fraction(1, 8)
    cone = cx.find_face(Interval(3 * h, 4 * h), Interval(3 * h, 4 * h),
                        Interval(5 * h, 7 * h))
    vertex = (QNum(3 * h), QNum(3 * h))
    s_psi = slack_at(psi, cone, vertex)
    s_prime = slack_at(psi_prime, cone, vertex)
    stats["cone_slack_psi"] = str(s_psi)
    stats["cone_slack_psi_prime"] = str(s_prime)
    if s_psi != 0 or s_prime <= 0:
        return ClaimReport(
            "psi_separation", REFUTED,
            witness=f"cone slacks: psi {s_psi}, psi_prime {s_prime}",
            statistics=stats)

    # psi_bar = psi_prime - psi is not an effective perturbation shape for
    # psi: some vanishing slack of psi does not vanish for psi_bar
    psi_bar = psi_prime - psi
    found = None
    for face in cx.faces:
        for v in face.vertices:
            if slack_at(psi, face, v) == 0 and slack_at(psi_bar, face, v) != 0:
                found = (face, v)
                break
        if found:
            break
    if found is None:
        return ClaimReport(
            "psi_separation", REFUTED,
            witness="psi_prime - psi vanishes on every vanishing slack of psi",
            statistics=stats)
    face, v = found
    stats["ineffective_witness"] = (
        f"{face.label()} at ({v[0]},{v[1]}): "
        f"slack(psi)=0, slack(psi_prime-psi)="
        f"{slack_at(psi_bar, face, v)}")
    return ClaimReport("psi_separation", VERIFIED, statistics=stats)


# -- suite 2: slack dichotomy near the special intervals ----------------------


def verify_kzh_claim_slacks(fn: PwlFunction | None = None) -> ClaimReport:
    """Faces touching the special intervals have all-zero vertex slacks or
    slacks at least n_F * s; ties happen only when one projection meets a
    special interval, and then every other slack is at least 3s."""
    fn = fn if fn is not None else catalog.kzh_function()
    s = catalog.kzh_params().s
    specials = fn.special_intervals
    report = additive_face_report(fn)
    stats = {"faces_nf_1": 0, "faces_nf_2": 0, "additive_nf_positive": 0,
             "tight_vertices": 0}

    for cls in report.faces:
        face = cls.face
        nf = n_f(face, specials)
        if nf == 0:
            continue
        if nf >= 3:
            return ClaimReport(
                "kzh_slack_dichotomy", REFUTED,
                witness=f"{face.label()} has n_F = {nf}",
                statistics=stats)
        stats[f"faces_nf_{nf}"] += 1
        slacks = [rec.slack for rec in cls.slacks]
        if all(v == 0 for v in slacks):
            stats["additive_nf_positive"] += 1
            continue
        bound = nf * s
        tight = 0
        for rec in cls.slacks:
            if rec.slack < bound:
                return ClaimReport(
                    "kzh_slack_dichotomy", REFUTED,
                    witness=(f"{face.label()} vertex "
                             f"({rec.vertex[0]},{rec.vertex[1]}) slack "
                             f"{rec.slack} < n_F*s = {bound}"),
                    statistics=stats)
            if rec.slack == bound:
                tight += 1
        if tight == len(slacks):
            return ClaimReport(
                "kzh_slack_dichotomy", REFUTED,
                witness=f"{face.label()} has every slack equal to n_F*s",
                statistics=stats)
        if tight:
            stats["tight_vertices"] += tight
            if nf != 1:
                return ClaimReport(
                    "kzh_slack_dichotomy", REFUTED,
                    witness=f"{face.label()} is tight with n_F = {nf}",
                    statistics=stats)
            for rec in cls.slacks:
                if rec.slack != bound and rec.slack < 3 * s:
                    return ClaimReport(
                        "kzh_slack_dichotomy", REFUTED,
                        witness=(f"{face.label()} mixes a tight vertex with "
                                 f"slack {rec.slack} < 3s"),
                        statistics=stats)
    return ClaimReport("kzh_slack_dichotomy", VERIFIED, statistics=stats)


# -- suite 3: the finite-dimensional perturbation system ----------------------

# Selected additive faces, one vertex each.  Intervals are encoded by
# breakpoint index; an index k >= 40 means breakpoint k-40 shifted by one
# period.  The vertex builder receives the extended coordinate list.
_KZH_SELECTED = [
    (((0, 1), (6,), (8,)), lambda x: (x[8] - x[6], x[6])),
    (((0, 1), (6,), (9, 10)), lambda x: (x[9] - x[6], x[6])),
    (((0, 1), (6,), (10, 11)), lambda x: (x[1], x[6])),
    (((0, 1), (10,), (12, 13)), lambda x: (x[12] - x[10], x[10])),
    (((0, 1), (10,), (13, 14)), lambda x: (x[1], x[10])),
    (((0, 1), (13,), (15,)), lambda x: (x[15] - x[13], x[13])),
    (((0, 1), (13,), (15, 16)), lambda x: (x[1], x[13])),
    (((0, 1), (36,), (36, 37)), lambda x: (x[0], x[36])),
    (((0, 1), (38,), (38, 39)), lambda x: (x[0], x[38])),
    (((1, 2), (1, 2), (1, 2)), lambda x: (x[1], x[1])),
    (((1, 2), (3,), (6, 7)), lambda x: (x[1], x[3])),
    (((1, 2), (6,), (11, 12)), lambda x: (x[1], x[6])),
    (((1, 2), (6,), (12,)), lambda x: (x[12] - x[6], x[6])),
    (((1, 2), (10,), (14, 15)), lambda x: (x[1], x[10])),
    (((1, 2), (11,), (14, 15)), lambda x: (x[1], x[11])),
    (((1, 2), (13,), (16, 17)), lambda x: (x[1], x[13])),
    (((1, 2), (16,), (16, 17)), lambda x: (x[1], x[16])),
    (((1, 2), (18,), (18, 19)), lambda x: (x[1], x[18])),
    (((1, 2), (20,), (20, 21)), lambda x: (x[1], x[20])),
    (((1, 2), (23,), (31,)), lambda x: (x[31] - x[23], x[23])),
    (((1, 2), (35,), (35, 36)), lambda x: (x[1], x[35])),
    (((1, 2), (36,), (37, 38)), lambda x: (x[1], x[36])),
    (((6,), (32,), (37, 38)), lambda x: (x[6], x[32])),
    (((6,), (33, 34), (37, 38)), lambda x: (x[6], x[33])),
    (((6,), (34, 35), (38, 39)), lambda x: (x[6], x[34])),
    (((10,), (30, 31), (37, 38)), lambda x: (x[10], x[30])),
    (((10,), (31, 32), (37, 38)), lambda x: (x[10], x[31])),
    (((10,), (32, 33), (38, 39)), lambda x: (x[10], x[32])),
    (((10,), (38, 39), (44,)), lambda x: (x[10], x[44] - x[10])),
    (((11,), (22,), (35, 36)), lambda x: (x[11], x[22])),
    (((13,), (16, 17), (18, 19)), lambda x: (x[13], x[16])),
    (((13,), (28,), (37, 38)), lambda x: (x[13], x[28])),
    (((13,), (28, 29), (37, 38)), lambda x: (x[13], x[28])),
    (((13,), (29, 30), (38, 39)), lambda x: (x[13], x[29])),
    (((30,), (39, 40), (67,)), lambda x: (x[30], x[67] - x[30])),
    (((33,), (39, 40), (71,)), lambda x: (x[33], x[71] - x[33])),
    (((35,), (38, 39), (71,)), lambda x: (x[35], x[71] - x[35])),
    (((38,), (39, 40), (77, 78)), lambda x: (x[38], x[39])),
    (((38, 39), (38, 39), (78, 79)), lambda x: (x[39], x[39])),
]


def _extended_coords(fn: PwlFunction) -> list[QNum]:
    # index i < 40 is breakpoint i; index 40 + i is breakpoint i shifted by
    # one period, so index 40 itself is the point 1
    one = QNum(1)
    base = list(fn.breakpoints)
    return base + [x + one for x in base]


def _interval_from_spec(coords, spec) -> Interval:
    if len(spec) == 1:
        return Interval(coords[spec[0]], coords[spec[0]])
    return Interval(coords[spec[0]], coords[spec[1]])


def kzh_selected_faces(fn: PwlFunction | None = None):
    """The tabulated (face, vertex) pairs driving the 39-variable system."""
    fn = fn if fn is not None else catalog.kzh_function()
    cx = get_complex(fn)
    coords = _extended_coords(fn)
    out = []
    for (ispec, jspec, kspec), vertex_fn in _KZH_SELECTED:
        face = cx.find_face(_interval_from_spec(coords, ispec),
                            _interval_from_spec(coords, jspec),
                            _interval_from_spec(coords, kspec))
        u, v = vertex_fn(coords)
        out.append((face, (QNum.of(u), QNum.of(v))))
    return out


def verify_kzh_perturbation_rank(fn: PwlFunction | None = None) -> ClaimReport:
    """Outside its special intervals the function is rigid: the covering has
    two slope components, and the selected additive faces force every
    perturbation variable to zero, each equation being essential."""
    fn = fn if fn is not None else catalog.kzh_function()
    stats = {}

    report = additive_face_report(fn)
    result = covering_components(report)
    stats["components"] = len(result.components)
    stats["uncovered"] = [(str(a), str(b)) for a, b in result.uncovered]
    expected_uncovered = [(QNum.of(a), QNum.of(b))
                          for a, b in fn.special_intervals]
    if len(result.components) != 2:
        return ClaimReport("kzh_perturbation_rank", REFUTED,
                           witness=f"{len(result.components)} covering "
                                   f"components instead of 2",
                           statistics=stats)
    if list(result.uncovered) != expected_uncovered:
        return ClaimReport("kzh_perturbation_rank", REFUTED,
                           witness=f"uncovered {stats['uncovered']} is not "
                                   f"the special intervals",
                           statistics=stats)

    try:
        selected = kzh_selected_faces(fn)
        system = build_system(fn, fn.special_intervals, selected)
    except ValueError as exc:
        return ClaimReport("kzh_perturbation_rank", REFUTED,
                           witness=str(exc), statistics=stats)
    stats["n_vars"] = system.n_vars
    stats["n_rows"] = system.n_rows
    stats["rank"] = system.rank
    stats["nullity"] = system.nullspace_dim
    if system.n_vars != 39 or system.rank != 39:
        return ClaimReport("kzh_perturbation_rank", REFUTED,
                           witness=f"rank {system.rank} of {system.n_vars} "
                                   f"variables; expected full rank 39",
                           statistics=stats)

    ranks = drop_one_ranks(system)
    stats["drop_one_ranks"] = sorted(set(ranks))
    if any(r != 38 for r in ranks):
        bad = next(i for i, r in enumerate(ranks) if r != 38)
        return ClaimReport("kzh_perturbation_rank", REFUTED,
                           witness=f"dropping row {bad} "
                                   f"({system.rows[bad][0]}) leaves rank "
                                   f"{ranks[bad]}, so it was redundant",
                           statistics=stats)

    full = build_system(fn, fn.special_intervals, selected,
                        eliminate_symmetry=False)
    stats["full_n_vars"] = full.n_vars
    stats["full_nullity"] = full.nullspace_dim
    if full.nullspace_dim != 0:
        return ClaimReport("kzh_perturbation_rank", REFUTED,
                           witness=f"without symmetry elimination the "
                                   f"nullity is {full.nullspace_dim}",
                           statistics=stats)
    return ClaimReport("kzh_perturbation_rank", VERIFIED, statistics=stats)


# -- suite 4: the lifted function ----------------------------------------------


def _lifted_face_classes(fn: PwlFunction):
    """The additive faces meeting the special intervals, by construction."""
    p = catalog.kzh_params()
    cx = get_complex(fn)
    lo = Interval(p.l, p.u)
    hi = Interval(p.f - p.u, p.f - p.l)
    zero = Interval(QNum(0), QNum(0))
    faces = []
    for a in (p.a0, p.a1, p.a2):
        pt = Interval(a, a)
        faces.append(("1", cx.find_face(lo, pt, hi)))
        faces.append(("1m", cx.find_face(pt, lo, hi)))
        fa = Interval(p.f - a, p.f - a)
        faces.append(("2", cx.find_face(lo, lo, fa)))
    fpt = Interval(p.f, p.f)
    faces.append(("3", cx.find_face(lo, hi, fpt)))
    faces.append(("3m", cx.find_face(hi, lo, fpt)))
    one = Interval(QNum(1), QNum(1))
    for intv in (lo, hi):
        faces.append(("4", cx.find_face(zero, intv, intv)))
        faces.append(("4m", cx.find_face(intv, zero, intv)))
        shifted = Interval(intv.a + 1, intv.b + 1)
        faces.append(("4", cx.find_face(one, intv, shifted)))
        faces.append(("4m", cx.find_face(intv, one, shifted)))
    return faces


def _special_class(t, p) -> str | None:
    """Coset class of a point interior to either special interval."""
    t = QNum.of(t).mod1()
    if p.l < t < p.u:
        return catalog.coset_classify(t, p, "lower").classification
    if p.f - p.u < t < p.f - p.l:
        return catalog.coset_classify(t, p, "upper").classification
    return None


def _fixed_coset_points(lo: QNum, hi: QNum, p, reps) -> list[QNum]:
    """All points of the reflection-fixed coset families in (lo, hi).

    Walks the generator lattice row by row, so density is guaranteed no
    matter how the window sits relative to the representatives.
    """
    out = []
    t1f = float(p.t1)
    for c in reps:
        for j in range(-8, 9):
            base = c + p.t2 * j
            i_lo = math.floor((float(lo) - float(base)) / t1f) - 1
            i_hi = math.ceil((float(hi) - float(base)) / t1f) + 1
            for i in range(i_lo, i_hi + 1):
                tau = base + p.t1 * i
                if lo < tau < hi:
                    out.append(tau)
    return out


def _face_samples(face, p, min_per_class: int):
    """Deterministic relint points of a 1-dim face, stratified by coset.

    Combines points aimed exactly at the reflection-fixed cosets of both
    special intervals (rational grids never land in those measure-zero
    families) with uniform rational grids that populate the two free
    classes.  Returns the distinct samples and the per-class hit counts.
    """
    (x0, y0), (x1, y1) = face.vertices[0], face.vertices[-1]
    lower_reps = catalog._c_representatives()
    # on the mirror interval the reflection-fixed points are f - C
    specials = (((p.l, p.u), lower_reps),
                ((p.f - p.u, p.f - p.l), [p.f - c for c in lower_reps]))

    seen = set()
    samples = []
    counts = {catalog.FIXED_C: 0, catalog.PLUS_CPLUS: 0, catalog.MINUS: 0}

    def add(t):
        pt = (x0 + (x1 - x0) * t, y0 + (y1 - y0) * t)
        if pt in seen:
            return
        seen.add(pt)
        samples.append(pt)
        hit = set()
        for coord in (pt[0], pt[1], pt[0] + pt[1]):
            cls = _special_class(coord, p)
            if cls is not None:
                hit.add(cls)
        for cls in hit:
            counts[cls] += 1

    # aim each moving coordinate at the fixed cosets inside its own sweep
    for a, b in ((x0, x1), (y0, y1), (x0 + y0, x1 + y1)):
        if a == b:
            continue
        sweep_lo, sweep_hi = (a, b) if a < b else (b, a)
        for shift in (QNum(0), QNum(1)):
            for (s_lo, s_hi), reps in specials:
                w_lo = s_lo + shift if s_lo + shift > sweep_lo else sweep_lo
                w_hi = s_hi + shift if s_hi + shift < sweep_hi else sweep_hi
                if not (w_lo < w_hi):
                    continue
                for tau in _fixed_coset_points(w_lo - shift, w_hi - shift,
                                               p, reps):
                    t = (tau + shift - a) / (b - a)
                    if 0 < t < 1:
                        add(t)

    grid = max(2 * min_per_class, 64)
    for _ in range(4):
        for k in range(1, grid + 1):
            add(QNum(Fraction(k, grid + 1)))
        if (counts[catalog.PLUS_CPLUS] >= min_per_class
                and counts[catalog.MINUS] >= min_per_class):
            break
        grid = 2 * grid + 1
    return samples, counts


def _lifted_delta(lifted, u: QNum, v: QNum) -> QNum:
    return lifted(u) + lifted(v) - lifted((u + v).mod1())


def verify_lifted(fn: PwlFunction | None = None, lifted=None,
                  min_per_class: int = 100) -> ClaimReport:
    """The lifted function changes values only on the special intervals,
    keeps every additivity of the base exactly, creates none, stays
    symmetric, and differs from the base by at most s with equality hit."""
    fn = fn if fn is not None else catalog.kzh_function()
    lifted = lifted if lifted is not None else catalog.lifted_function()
    p = lifted.params
    s = p.s
    specials = fn.special_intervals
    report = additive_face_report(fn)
    stats = {"nf0_faces": 0, "preserved_faces": 0, "broken_checked": 0,
             "samples": 0}

    # (a) faces clear of the special intervals: the lift agrees pointwise
    for cls in report.faces:
        face = cls.face
        if n_f(face, specials) != 0:
            continue
        stats["nf0_faces"] += 1
        pts = set(face.vertices)
        if face.dim > 0:
            pts.add(centroid(face.vertices))
        for (u, v) in pts:
            for t in (u, v, (u + v).mod1()):
                if lifted.sigma(t) != 0:
                    return ClaimReport(
                        "lifted_preserves_additivity", REFUTED,
                        witness=f"sigma({t}) != 0 outside the special "
                                f"intervals (face {face.label()})",
                        statistics=stats)

    # (b) the tabulated additive face classes: lift stays exactly additive
    class_faces = _lifted_face_classes(fn)
    expected = {f.triple_key for _, f in class_faces}
    additive_meeting = {c.face.triple_key for c in report.faces
                        if n_f(c.face, specials) > 0
                        and c.status == ADDITIVE}
    if additive_meeting != expected:
        extra = additive_meeting - expected
        missing = expected - additive_meeting
        return ClaimReport(
            "lifted_preserves_additivity", REFUTED,
            witness=f"additive faces meeting the specials do not match the "
                    f"construction: extra {len(extra)}, missing {len(missing)}",
            statistics=stats)

    by_key = {c.face.triple_key: c for c in report.faces}
    coverage = {catalog.FIXED_C: 0, catalog.PLUS_CPLUS: 0, catalog.MINUS: 0}
    min_face_coverage = None
    for tag, face in class_faces:
        if face.dim != 1 or n_f(face, specials) != 2:
            return ClaimReport(
                "lifted_preserves_additivity", REFUTED,
                witness=f"class {tag} face {face.label()} has dim "
                        f"{face.dim}, n_F {n_f(face, specials)}",
                statistics=stats)
        # vertex limits of the piecewise linear part, with the face's sides
        if any(r.slack != 0 for r in by_key[face.triple_key].slacks):
            return ClaimReport(
                "lifted_preserves_additivity", REFUTED,
                witness=f"class {tag} face {face.label()} has a nonzero "
                        f"vertex limit slack",
                statistics=stats)
        samples, counts = _face_samples(face, p, min_per_class)
        for (u, v) in samples:
            d = _lifted_delta(lifted, u, v)
            stats["samples"] += 1
            if d != 0:
                return ClaimReport(
                    "lifted_preserves_additivity", REFUTED,
                    witness=f"class {tag} face {face.label()} at "
                            f"({u},{v}): lifted delta {d}",
                    statistics=stats)
        low = min(counts.values())
        if min_face_coverage is None or low < min_face_coverage:
            min_face_coverage = low
        if low < min_per_class:
            return ClaimReport(
                "lifted_preserves_additivity", REFUTED,
                witness=f"sampler covered some coset class fewer than "
                        f"{min_per_class} times on face {face.label()}: "
                        f"{counts}",
                statistics=stats)
        for cls_, cnt in counts.items():
            coverage[cls_] += cnt
        stats["preserved_faces"] += 1
    stats["coset_coverage"] = dict(sorted(coverage.items()))
    stats["min_face_class_coverage"] = min_face_coverage

    # (c) faces meeting the specials that are not additive stay strictly
    # subadditive for the lift
    for cls in report.faces:
        face = cls.face
        if n_f(face, specials) == 0 or cls.status == ADDITIVE:
            continue
        if face.dim == 0:
            pts = [face.vertices[0]]
        else:
            pts = [centroid(face.vertices)]
            if face.dim == 1:
                a, b = face.vertices[0], face.vertices[-1]
                pts += [((3 * a[0] + b[0]) / 4, (3 * a[1] + b[1]) / 4)]
        for (u, v) in pts:
            d = _lifted_delta(lifted, u, v)
            stats["broken_checked"] += 1
            if d <= 0:
                return ClaimReport(
                    "lifted_preserves_additivity", REFUTED,
                    witness=f"non-additive face {face.label()} at "
                            f"({u},{v}): lifted delta {d} <= 0",
                    statistics=stats)

    # (d) symmetry and (e) the lift moves values, but never farther than s
    max_dev = QNum(0)
    witness_ne = None
    t1, t2 = p.t1, p.t2
    probes = [QNum(Fraction(k, 97)) for k in range(1, 97)]
    mid = (p.l + p.u) / 2
    probes += [mid + t1 * i + t2 * j
               for i in range(-3, 4) for j in range(-3, 4)]
    probes += [x for x, _ in ((r.x, 0) for r in fn.rows)]
    for x in probes:
        x = x.mod1()
        sym = lifted(x) + lifted((p.f - x).mod1())
        if sym != 1 and x != 0 and (p.f - x).mod1() != 0:
            return ClaimReport(
                "lifted_preserves_additivity", REFUTED,
                witness=f"symmetry fails at {x}: sum {sym}",
                statistics=stats)
        dev = abs(lifted(x) - fn.eval(x))
        if dev > s:
            return ClaimReport(
                "lifted_preserves_additivity", REFUTED,
                witness=f"|lift - base| = {dev} > s at {x}",
                statistics=stats)
        if dev > max_dev:
            max_dev = dev
            if dev == s and witness_ne is None:
                witness_ne = str(x)
    stats["max_deviation"] = str(max_dev)
    if max_dev != s:
        return ClaimReport(
            "lifted_preserves_additivity", REFUTED,
            witness=f"maximal deviation {max_dev} never reaches s = {s}",
            statistics=stats)
    stats["deviation_witness"] = witness_ne
    return ClaimReport("lifted_preserves_additivity", VERIFIED,
                       statistics=stats)


def verify_all() -> list[ClaimReport]:
    return [
        verify_psi_separation(),
        verify_kzh_claim_slacks(),
        verify_kzh_perturbation_rank(),
        verify_lifted(),
    ]
