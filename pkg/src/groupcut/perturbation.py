"""Exact linear systems for perturbation spaces, and epsilon constants.

A minimality-preserving perturbation of a piecewise linear function is
parametrized here by a finite list of variables: one slope variable per
slope class outside the special intervals, one value variable per
breakpoint, and one midpoint-value variable per piece.  The symmetry
relations (value and midpoint pairs through f must cancel) are either
substituted away (``eliminate_symmetry=True``) or appended as extra
equations.  Each selected additive face contributes one equation saying
the perturbed slack at its selected vertex stays zero.  Nullity zero of
the resulting system certifies that no nonzero perturbation of this
shape survives all the additivity constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactnum import QNum
from .pwl import AT, MINUS, PLUS, PwlFunction
from .additivity import (ADDITIVE, additive_face_report, classify_face,
                         get_complex, minimality_test, slack_at, vertex_sides)
from .covering import components as covering_components

SLOPE = "slope"
VALUE_AT_BREAKPOINT = "value_at_breakpoint"
MIDPOINT_VALUE = "midpoint_value"


@dataclass(frozen=True)
class PerturbVar:
    kind: str
    index: int | str  # slope class name, or breakpoint / piece index

    @property
    def name(self) -> str:
        if self.kind == SLOPE:
            return str(self.index)
        prefix = "v" if self.kind == VALUE_AT_BREAKPOINT else "m"
        return f"{prefix}{self.index}"

    def __str__(self):
        return self.name


class LinearSystem:
    """Rows of exact linear equations ``sum coef*var = 0``."""

    def __init__(self, variables, rows):
        self.variables: tuple[PerturbVar, ...] = tuple(variables)
        self.rows: list[tuple[str, dict[str, QNum]]] = list(rows)
        names = [v.name for v in self.variables]
        assert len(set(names)) == len(names)
        self._order = {n: k for k, n in enumerate(names)}

    @property
    def var_names(self) -> list[str]:
        return [v.name for v in self.variables]

    @property
    def n_vars(self) -> int:
        return len(self.variables)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def matrix(self) -> list[list[QNum]]:
        zero = QNum(0)
        out = []
        for _, coeffs in self.rows:
            row = [zero] * self.n_vars
            for name, c in coeffs.items():
                row[self._order[name]] = c
            out.append(row)
        return out

    @cached_property
    def rank(self) -> int:
        mat = self.matrix()
        ncols = self.n_vars
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
            if piv is None:
                continue
            mat[r], mat[piv] = mat[piv], mat[r]
            inv = mat[r][c]
            for i in range(r + 1, len(mat)):
                if mat[i][c]:
                    factor = mat[i][c] / inv
                    mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
            r += 1
            if r == len(mat):
                break
        return r

    @property
    def nullspace_dim(self) -> int:
        return self.n_vars - self.rank

    def drop_row(self, i: int) -> "LinearSystem":
        rows = self.rows[:i] + self.rows[i + 1:]
        return LinearSystem(self.variables, rows)

    def dump(self) -> str:
        """One equation per line: label, then nonzero coefficients."""
        lines = []
        for label, coeffs in self.rows:
            parts = [f"{n}={coeffs[n]}" for n in self.var_names if n in coeffs]
            lines.append(f"{label} {' '.join(parts)}")
        return "\n".join(lines) + "\n"


def drop_one_ranks(system: LinearSystem) -> list[int]:
    return [system.drop_row(i).rank for i in range(system.n_rows)]


# -- building the system -------------------------------------------------------


class _Parametrization:
    def __init__(self, fn: PwlFunction, special_intervals, eliminate: bool):
        self.fn = fn
        self.eliminate = eliminate
        self.bks = list(fn.breakpoints)
        self.n = len(self.bks)
        self._index = {x: i for i, x in enumerate(self.bks)}

        self.special_pieces = set()
        for lo, hi in special_intervals:
            lo, hi = QNum.of(lo), QNum.of(hi)
            i = self._index.get(lo)
            if i is None or i + 1 >= self.n or self.bks[i + 1] != hi:
                raise ValueError(
                    f"special interval ({lo}, {hi}) is not a single piece")
            self.special_pieces.add(i)

        # exactly two slope classes outside the specials; the larger slope
        # is named c1, the smaller c3
        values = sorted({fn.slopes[j] for j in range(self.n)
                         if j not in self.special_pieces}, reverse=True)
        if len(values) != 2:
            raise ValueError(
                f"need exactly two slope classes outside the special "
                f"intervals, found {len(values)}")
        self.slope_name = {}
        for j in range(self.n):
            if j not in self.special_pieces:
                self.slope_name[j] = "c1" if fn.slopes[j] == values[0] else "c3"

        one = QNum(1)
        self.mids = []
        for j in range(self.n):
            hi = self.bks[j + 1] if j + 1 < self.n else one
            self.mids.append((self.bks[j] + hi) / 2)

        self._mirror_bk = [self._breakpoint_index((fn.f - x).mod1())
                           for x in self.bks]
        self._mirror_piece = [self._piece_mirror(j) for j in range(self.n)]
        for j in self.special_pieces:
            if self._mirror_piece[j] not in self.special_pieces:
                raise ValueError("special intervals are not symmetric")

        self.v_sub = {i: self._value_sub(i) for i in range(self.n)}
        self.m_sub = {j: self._mid_sub(j)
                      for j in range(self.n) if j not in self.special_pieces}

        variables = [PerturbVar(SLOPE, "c1"), PerturbVar(SLOPE, "c3")]
        if eliminate:
            kept_v = sorted({i for i in range(self.n)
                             if self.v_sub[i].get(f"v{i}") == 1})
            kept_m = sorted({j for j in self.m_sub
                             if self.m_sub[j].get(f"m{j}") == 1})
        else:
            kept_v = list(range(self.n))
            kept_m = sorted(self.m_sub)
        variables += [PerturbVar(VALUE_AT_BREAKPOINT, i) for i in kept_v]
        variables += [PerturbVar(MIDPOINT_VALUE, j) for j in kept_m]
        self.variables = tuple(variables)

    def _breakpoint_index(self, x: QNum) -> int:
        i = self._index.get(x)
        if i is None:
            raise ValueError(f"mirror point {x} is not a breakpoint; "
                             f"the breakpoint set is not symmetric in f")
        return i

    def _piece_mirror(self, j: int) -> int:
        one = QNum(1)
        hi = self.bks[j + 1] if j + 1 < self.n else one
        mlo = (self.fn.f - hi).mod1()
        k = self._breakpoint_index(mlo)
        mhi = self.bks[k + 1] if k + 1 < self.n else one
        if (self.fn.f - self.bks[j]).mod1() not in (mhi, QNum(0)):
            raise ValueError(f"piece {j} has no mirror piece")
        return k

    def _value_sub(self, i: int) -> dict[str, int]:
        x = self.bks[i]
        if not self.eliminate:
            return {f"v{i}": 1}
        if x == 0 or x == self.fn.f:
            return {}
        mi = self._mirror_bk[i]
        if mi == i:
            return {}  # pi-bar(x) = -pi-bar(x) forces zero
        keep = min(i, mi)
        return {f"v{keep}": 1 if i == keep else -1}

    def _mid_sub(self, j: int) -> dict[str, int]:
        if not self.eliminate:
            return {f"m{j}": 1}
        k = self._mirror_piece[j]
        if k == j:
            return {}
        keep = min(j, k)
        return {f"m{keep}": 1 if j == keep else -1}

    def symmetry_rows(self) -> list[tuple[str, dict[str, QNum]]]:
        """Explicit symmetry equations, used when nothing was substituted."""
        one = QNum(1)
        rows = []
        seen = set()
        for i, x in enumerate(self.bks):
            if x == 0 or x == self.fn.f:
                rows.append((f"symmetry v{i}", {f"v{i}": one}))
            else:
                mi = self._mirror_bk[i]
                if mi == i:
                    rows.append((f"symmetry v{i}", {f"v{i}": one}))
                elif (min(i, mi), max(i, mi)) not in seen:
                    seen.add((min(i, mi), max(i, mi)))
                    rows.append((f"symmetry v{i}+v{mi}",
                                 {f"v{i}": one, f"v{mi}": one}))
        seen = set()
        for j in self.m_sub:
            k = self._mirror_piece[j]
            if k == j:
                rows.append((f"symmetry m{j}", {f"m{j}": one}))
            elif (min(j, k), max(j, k)) not in seen:
                seen.add((min(j, k), max(j, k)))
                rows.append((f"symmetry m{j}+m{k}",
                             {f"m{j}": one, f"m{k}": one}))
        return rows

    def expansion(self, t, side: int) -> dict[str, QNum]:
        """Coefficients of the perturbation's one-sided limit at t."""
        red = QNum.of(t).mod1()
        kind, idx = self.fn.locate(red)
        if kind == "breakpoint":
            if side == AT:
                return {k: QNum(c) for k, c in self.v_sub[idx].items()}
            if side == PLUS:
                j, tau = idx, red
            elif idx > 0:
                j, tau = idx - 1, red
            else:
                j, tau = self.n - 1, QNum(1)
        else:
            j, tau = idx, red  # one affine formula on the open piece
        if j in self.special_pieces:
            raise ValueError(
                f"equation would touch special piece {j}; the parametrization "
                f"does not model the special intervals")
        out = {k: QNum(c) for k, c in self.m_sub[j].items()}
        name = self.slope_name[j]
        out[name] = out.get(name, QNum(0)) + (tau - self.mids[j])
        return out


def _check_slope_classes_covered(fn: PwlFunction, param: _Parametrization):
    """The slope classes must coincide with the covering components."""
    report = additive_face_report(fn)
    result = covering_components(report)
    if len(result.components) != 2:
        raise ValueError(
            f"covering yields {len(result.components)} components; the "
            f"two-slope parametrization is not justified")
    piece_lookup = {}
    for j in range(param.n):
        hi = param.bks[j + 1] if j + 1 < param.n else QNum(1)
        piece_lookup[(param.bks[j], hi)] = j
    component_classes = []
    for comp in result.components:
        pieces = set()
        for span in comp.intervals:
            j = piece_lookup.get(span)
            if j is None:
                raise ValueError(f"component interval {span} is not a piece")
            pieces.add(j)
        names = {param.slope_name[j] for j in pieces}
        if len(names) != 1:
            raise ValueError("a covering component mixes slope classes")
        component_classes.append((names.pop(), pieces))
    by_name = dict(component_classes)
    for j, name in param.slope_name.items():
        if j not in by_name[name]:
            raise ValueError(f"piece {j} not in its slope component")


def build_system(fn: PwlFunction, special_intervals, selected_faces,
                 *, eliminate_symmetry: bool = True,
                 check_covering: bool = True) -> LinearSystem:
    """Linear system for perturbations of fn from selected additive faces.

    ``selected_faces`` is a sequence of (face, vertex) pairs; every face
    must be additive (an equation derived from a non-additive face would
    not be valid, so that is an error).  Returns the system with one row
    per pair, plus explicit symmetry rows when ``eliminate_symmetry`` is
    off.
    """
    if special_intervals is None:
        special_intervals = fn.special_intervals
    param = _Parametrization(fn, special_intervals, eliminate_symmetry)
    if check_covering:
        _check_slope_classes_covered(fn, param)

    rows = []
    for face, vertex in selected_faces:
        cls = classify_face(fn, face)
        if cls.status != ADDITIVE:
            raise ValueError(
                f"selected face {face.label()} is {cls.status}, not additive")
        u, v = (QNum.of(vertex[0]), QNum.of(vertex[1]))
        s1, s2, s3 = vertex_sides(face, (u, v))
        coeffs: dict[str, QNum] = {}
        for term, sign in ((param.expansion(u, s1), 1),
                           (param.expansion(v, s2), 1),
                           (param.expansion(u + v, s3), -1)):
            for name, c in term.items():
                coeffs[name] = coeffs.get(name, QNum(0)) + (c if sign > 0 else -c)
        coeffs = {n: c for n, c in coeffs.items() if c}
        label = f"{face.label().replace(' ', '')} ({u},{v})".replace(" ", "")
        rows.append((label, coeffs))

    if not eliminate_symmetry:
        rows.extend(param.symmetry_rows())
    return LinearSystem(param.variables, rows)


# -- epsilon constants -----------------------------------------------------------


@dataclass(frozen=True)
class EpsilonResult:
    m: QNum      # smallest positive vertex slack of the base function
    M: QNum      # largest |perturbed slack| over all complex vertices
    C: QNum      # slope bound of the perturbation
    eps: QNum


def _vertex_slack_extremes(fn: PwlFunction):
    cx = get_complex(fn)
    m = None
    for face in cx.faces:
        for vertex in face.vertices:
            s = slack_at(fn, face, vertex)
            if s > 0 and (m is None or s < m):
                m = s
    return m


def lipschitz_epsilon(fn: PwlFunction, pert: PwlFunction) -> EpsilonResult:
    """Scale below which fn +/- eps*pert stays minimal, by slack margins.

    Requires fn minimal and pert continuous (jump discontinuities in the
    perturbation are not handled by this bound).  The constant is
    min(m/M, m/(8C)): vertex slacks shrink by at most eps*M, and between
    vertices the perturbed slack function is Lipschitz with constant at
    most 4C while the base slack grows at rate at least m/2 away from its
    zero set.
    """
    if not isinstance(pert, PwlFunction):
        raise TypeError("perturbation must be piecewise linear")
    if not pert.is_continuous:
        raise ValueError("perturbation has jumps; this bound needs a "
                         "continuous perturbation")
    if not minimality_test(fn):
        raise ValueError("base function is not minimal")

    m = _vertex_slack_extremes(fn)
    if m is None:
        raise ValueError("base function has no positive vertex slack")

    cx = get_complex(fn)
    points = {v for face in cx.faces for v in face.vertices}
    M = QNum(0)
    for u, v in points:
        d = abs(pert.eval(u) + pert.eval(v) - pert.eval((u + v).mod1()))
        if d > M:
            M = d
    if M == 0:
        raise ValueError("perturbation is additive at every complex vertex; "
                         "the bound degenerates")
    C = max((abs(s) for s in pert.slopes), default=QNum(0))
    if C == 0:
        C = QNum(1)
    eps = min(m / M, m / (8 * C))
    return EpsilonResult(m=m, M=M, C=C, eps=eps)


def scaling_epsilon(fn: PwlFunction, pert: PwlFunction) -> QNum:
    """Largest eps with fn - eps*pert still subadditive at vertices.

    Both functions must be continuous, and every additivity of fn must be
    shared by pert (otherwise no positive scale works and the ratio below
    would be meaningless).
    """
    for g, what in ((fn, "base function"), (pert, "perturbation")):
        if not isinstance(g, PwlFunction):
            raise TypeError(f"{what} must be piecewise linear")
        if not g.is_continuous:
            raise ValueError(f"{what} has jumps; scaling needs continuity")

    from .complex2d import Complex2D
    merged = sorted(set(fn.breakpoints) | set(pert.breakpoints))
    cx = Complex2D(merged)
    points = {v for face in cx.faces for v in face.vertices}
    best = None
    for u, v in sorted(points):
        dpi = fn.delta(u, v)
        dbar = pert.delta(u, v)
        if dpi == 0 and dbar != 0:
            raise ValueError(
                f"additivity of the base at ({u},{v}) is not shared by the "
                f"perturbation; containment of additivities fails")
        if dbar > 0:
            ratio = dpi / dbar
            if best is None or ratio < best:
                best = ratio
    if best is None:
        raise ValueError("perturbation never strains subadditivity; "
                         "no finite scale is determined")
    return best


@dataclass(frozen=True)
class EffectiveResult:
    plus: object   # minimality report of fn + eps*pert
    minus: object  # minimality report of fn - eps*pert

    def __bool__(self):
        return bool(self.plus) and bool(self.minus)


def verify_effective(fn: PwlFunction, pert: PwlFunction, eps) -> EffectiveResult:
    """Check that fn +/- eps*pert are both minimal."""
    if not isinstance(pert, PwlFunction):
        raise TypeError("perturbation must be piecewise linear to verify "
                        "minimality exactly")
    eps = QNum.of(eps)
    shifted = pert.scale(eps)
    return EffectiveResult(plus=minimality_test(fn + shifted),
                           minus=minimality_test(fn - shifted))
