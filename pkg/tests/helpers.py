"""Shared generators and oracles used by several test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from groupcut.exactnum import QNum
from groupcut.pwl import PwlFunction, BreakpointRow

# -- a midpoint pair for the step-size constants -------------------------------


def midpoint_pair():
    """(pi0, bar0) with pi0 = (pi1+pi2)/2 minimal and bar0 = (pi1-pi2)/2.

    pi1 is the classic two-slope function for f = 1/2, pi2 a minimal
    trapezoid with the same f; their midpoint is minimal but no longer
    extreme, which is exactly the situation the step-size bounds address.
    """
    h = Fraction(1, 2)
    pi1 = PwlFunction.continuous_from_values([(0, 0), (h, 1)], h,
                                             name="gmic_half")
    pi2 = PwlFunction.continuous_from_values(
        [(0, 0), (Fraction(1, 8), h), (Fraction(3, 8), h), (h, 1),
         (Fraction(5, 8), h), (Fraction(7, 8), h)], h, name="trapezoid")
    mid = (pi1 + pi2).scale(h)
    bar = (pi1 - pi2).scale(h)
    return mid, bar


# -- random periodic functions on a coarse grid --------------------------------

GRID = 12


def _grid_q(k: int) -> QNum:
    return QNum(Fraction(k % GRID, GRID))


def random_pwl(rng: random.Random) -> PwlFunction:
    """A random function with breakpoints on the 1/12 grid, f a breakpoint.

    Mixes plainly random tables, continuous interpolations, minimal
    two-slope functions, and near-minimal functions with one value nudged
    by 1e-6, so the minimality oracle sees both outcomes and near-misses.
    """
    style = rng.randrange(4)
    ks = sorted(rng.sample(range(1, GRID), rng.randint(1, 5)))
    bks = [QNum(0)] + [_grid_q(k) for k in ks]
    fk = rng.choice(ks)
    f = _grid_q(fk)

    def rv() -> QNum:
        return QNum(Fraction(rng.randint(0, GRID), GRID))

    if style == 0:  # arbitrary table, usually far from minimal
        rows = []
        for x in bks:
            v = rv()
            left = rv() if rng.random() < 0.3 else v
            right = rv() if rng.random() < 0.3 else v
            rows.append(BreakpointRow(x, left, v, right))
        return PwlFunction(rows, f, name="random_table")

    if style == 1:  # continuous interpolation through random values
        pts = [(QNum(0), QNum(0))]
        for x in bks[1:]:
            pts.append((x, QNum(1) if x == f else rv()))
        return PwlFunction.continuous_from_values(pts, f,
                                                  name="random_continuous")

    two_slope = PwlFunction.continuous_from_values(
        [(QNum(0), QNum(0)), (f, QNum(1))], f, name="two_slope")
    if style == 2:
        return two_slope

    rows = list(two_slope.rows)  # style 3: nudge one value off-minimal
    i = rng.randrange(len(rows))
    r = rows[i]
    d = QNum(Fraction(rng.choice((-1, 1)), 10**6))
    rows[i] = BreakpointRow(r.x, r.left, r.value + d, r.right)
    return PwlFunction(rows, f, name="two_slope_nudged")


# the realizable one-sided approach profiles (x side, y side, sum side)
DIRECTIONS = (
    (0, 0, 0),
    (0, 1, 1), (0, -1, -1), (1, 0, 1), (-1, 0, -1),
    (1, 1, 1), (-1, -1, -1),
    (1, -1, 1), (1, -1, 0), (1, -1, -1),
    (-1, 1, 1), (-1, 1, 0), (-1, 1, -1),
)


def sampling_minimality_oracle(fn: PwlFunction) -> bool:
    """Grid-plus-limits minimality check, independent of the 2-D complex.

    Complete for functions whose breakpoints (and f) lie on the 1/12
    grid: every face of the additivity complex then has its vertices on
    the grid, and each vertex limit is one of the 13 approach profiles.
    """
    if fn.eval(0) != 0:
        return False
    for r in fn.rows:
        for v in (r.left, r.value, r.right):
            if not (0 <= v <= 1):
                return False

    grid = [_grid_q(k) for k in range(GRID)]
    for x in grid:
        # symmetry, pointwise and for matched one-sided limits
        y = (fn.f - x).mod1()
        if fn.eval(x) + fn.eval(y) != 1:
            return False
        if fn.limit(x, 1) + fn.limit(y, -1) != 1:
            return False
        if fn.limit(x, -1) + fn.limit(y, 1) != 1:
            return False

    for x in grid:
        for y in grid:
            z = (x + y).mod1()
            for sx, sy, sz in DIRECTIONS:
                if (fn.limit(x, sx) + fn.limit(y, sy)
                        - fn.limit(z, sz)) < 0:
                    return False
    return True


# -- random polygon instances for the affine gap bound --------------------------


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def dist2_point_segment(p, a, b) -> Fraction:
    """Exact squared Euclidean distance from p to segment [a, b]."""
    ab = _sub(b, a)
    denom = _dot(ab, ab)
    if denom == 0:
        d = _sub(p, a)
        return _dot(d, d)
    t = _dot(_sub(p, a), ab) / denom
    t = max(Fraction(0), min(Fraction(1), t))
    q = (a[0] + t * ab[0], a[1] + t * ab[1])
    d = _sub(p, q)
    return _dot(d, d)


def _hull(points):
    """Convex hull (counterclockwise, no collinear points kept)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def half(seq):
        out = []
        for q in seq:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                cross = ((a[0] - o[0]) * (q[1] - o[1])
                         - (a[1] - o[1]) * (q[0] - o[0]))
                if cross <= 0:
                    out.pop()
                else:
                    break
            out.append(q)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_gap_instance(rng: random.Random):
    """A convex polygon in [0,1]^2 with an affine g >= 0 whose nonzero
    vertex values lie in [m, 10m]; returns (vertices, g, m, zero_set).

    g vanishes on a vertex, on an edge, or identically; zero_set lists
    the vertices spanning the zero face.
    """
    while True:
        while True:
            n = rng.randint(3, 7)
            pts = [(Fraction(rng.randint(0, 24), 24),
                    Fraction(rng.randint(0, 24), 24)) for _ in range(n)]
            hull = _hull(pts)
            if len(hull) >= 3:
                break
        m = Fraction(rng.randint(1, 36), 12)
        kind = rng.randrange(8)

        if kind == 0:  # g identically zero: the bound is trivially tight
            def g0(p):
                return Fraction(0)
            return hull, g0, m, list(hull)

        k = len(hull)
        i = rng.randrange(k)
        if kind <= 4:  # zero set = one edge of the hull
            a, b = hull[i], hull[(i + 1) % k]
            nx, ny = a[1] - b[1], b[0] - a[0]  # inward for ccw order

            def graw(p, _n=(nx, ny), _a=a):
                return _n[0] * (p[0] - _a[0]) + _n[1] * (p[1] - _a[1])
            zero = [a, b]
        else:  # zero set = one vertex, normal from the adjacent edges
            a = hull[i]
            prv, nxt = hull[(i - 1) % k], hull[(i + 1) % k]
            n1 = (a[1] - prv[1], prv[0] - a[0])
            n2 = (nxt[1] - a[1], a[0] - nxt[0])
            nx, ny = -(n1[0] + n2[0]), -(n1[1] + n2[1])

            def graw(p, _n=(nx, ny), _a=a):
                return _n[0] * (p[0] - _a[0]) + _n[1] * (p[1] - _a[1])
            zero = [a]

        vals = [graw(v) for v in hull if graw(v) != 0]
        if not vals or min(vals) <= 0:
            continue  # degenerate normal; resample
        if max(vals) > 10 * min(vals):
            continue  # cannot fit in [m, 10m]; resample
        scale = m / min(vals)

        def g0(p, _s=scale, _g=graw):
            return _s * _g(p)
        return hull, g0, m, zero


def gap_instance_holds(hull, g, m, zero, rng: random.Random) -> bool:
    """Check 2 g(x) >= m d(x, S) at vertices, midpoints, and random
    convex combinations, comparing squares so everything stays rational."""
    samples = list(hull)
    k = len(hull)
    for i in range(k):
        a, b = hull[i], hull[(i + 1) % k]
        samples.append(((a[0] + b[0]) / 2, (a[1] + b[1]) / 2))
    cx = sum(p[0] for p in hull) / k
    cy = sum(p[1] for p in hull) / k
    samples.append((cx, cy))
    for _ in range(8):
        w = [Fraction(rng.randint(0, 6)) for _ in range(k)]
        tot = sum(w)
        if tot == 0:
            continue
        samples.append((sum(wi * p[0] for wi, p in zip(w, hull)) / tot,
                        sum(wi * p[1] for wi, p in zip(w, hull)) / tot))

    whole = len(zero) >= 3  # g vanished identically, so S is all of F
    segs = ([(zero[i], zero[i + 1]) for i in range(len(zero) - 1)]
            or [(zero[0], zero[0])])
    for x in samples:
        d2 = (Fraction(0) if whole else
              min(dist2_point_segment(x, a, b) for a, b in segs))
        gx = g(x)
        if gx < 0:
            return False
        if 4 * gx * gx < m * m * d2:
            return False
    return True
