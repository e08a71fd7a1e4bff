"""Exact arithmetic over the quadratic field Q(sqrt(2)).

Every quantity is a + b*sqrt(2) with rational a, b.  All comparisons are
exact: the sign of a + b*sqrt(2) is decided by integer arithmetic alone,
never by floating point.  Floats appear only in ``__float__`` (rendering)
and as a first guess inside ``floor`` (then verified exactly).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rat = Fraction

_COERCIBLE = (int, Fraction)

QNumLike = Union["QNum", int, Fraction, str]


def _sign_rat(r: Fraction) -> int:
    if r > 0:
        return 1
    if r < 0:
        return -1
    return 0


class QNum:
    """An immutable element a + b*sqrt(2) of Q(sqrt(2))."""

    __slots__ = ("a", "b")

    a: Fraction
    b: Fraction

    def __init__(self, a: QNumLike = 0, b: QNumLike = 0):
        if isinstance(a, str):
            if b != 0:
                raise ValueError("string form already fixes both parts")
            parsed = parse_qnum(a)
            object.__setattr__(self, "a", parsed.a)
            object.__setattr__(self, "b", parsed.b)
            return
        if isinstance(a, QNum):
            if b != 0:
                raise ValueError("cannot add a second part to a QNum")
            object.__setattr__(self, "a", a.a)
            object.__setattr__(self, "b", a.b)
            return
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QNum is immutable")

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def of(x: QNumLike) -> "QNum":
        """Coerce an int, Fraction, str, or QNum to a QNum."""
        if isinstance(x, QNum):
            return x
        if isinstance(x, str):
            return parse_qnum(x)
        return QNum(Fraction(x))

    @classmethod
    def _wrap(cls, other) -> "QNum | None":
        if isinstance(other, QNum):
            return other
        if isinstance(other, _COERCIBLE):
            return cls(Fraction(other))
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return QNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return QNum(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return QNum(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return QNum(self.a * o.a + 2 * self.b * o.b,
                    self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        # 1/(a + b*sqrt2) = (a - b*sqrt2)/(a^2 - 2 b^2); the denominator
        # vanishes only at 0 because sqrt2 is irrational.
        n = o.a * o.a - 2 * o.b * o.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return QNum((self.a * o.a - 2 * self.b * o.b) / n,
                    (self.b * o.a - self.a * o.b) / n)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QNum(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return QNum(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def conjugate(self) -> "QNum":
        return QNum(self.a, -self.b)

    # -- exact sign and order ---------------------------------------------

    def sign(self) -> int:
        """Sign of a + b*sqrt(2), decided exactly.

        When sign(a) and sign(b) agree (or one is zero) the answer is
        immediate.  Otherwise it reduces to comparing a^2 with 2*b^2,
        which is pure rational arithmetic; a tie would force sqrt(2)
        rational, so it cannot occur for nonzero parts.
        """
        sa = _sign_rat(self.a)
        sb = _sign_rat(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: |a| vs |b|*sqrt2, i.e. a^2 vs 2 b^2
        lhs = self.a.numerator ** 2 * self.b.denominator ** 2
        rhs = 2 * self.b.numerator ** 2 * self.a.denominator ** 2
        if lhs == rhs:  # impossible for rational a, b != 0
            raise ArithmeticError("sqrt2 cannot be rational")
        return sa if lhs > rhs else sb

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __hash__(self):
        # rational values must hash like their Fraction so that mixed
        # dict keys behave
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- floor / fractional part ------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(2)

    def floor(self) -> int:
        """Largest integer <= self, found by a float guess verified exactly."""
        n = math.floor(float(self))
        while self - n < 0:
            n -= 1
        while self - (n + 1) >= 0:
            n += 1
        return n

    def mod1(self) -> "QNum":
        """Fractional part, in [0, 1)."""
        return self - self.floor()

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        return format_qnum(self)

    def __repr__(self) -> str:
        return f"QNum({format_qnum(self)!r})"


_RAT_RE = r"[0-9]+(?:/[0-9]+)?"
_TERM_RE = re.compile(
    rf"^([+-]?)(?:({_RAT_RE})(\*sqrt2)?|(sqrt2))$"
)


def parse_qnum(text: str) -> QNum:
    """Parse ``R``, ``R*sqrt2``, or a two-term sum in either order.

    Accepted shapes (whitespace is ignored): ``19/100``, ``-3``,
    ``77/7752*sqrt2``, ``19/100 + 77/7752*sqrt2``,
    ``77/7752*sqrt2 + 19/100``, and the ``-`` separated variants.
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty number")
    # split on + or - that starts a new term (not the leading sign)
    parts: list[str] = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-" and s[i - 1] not in "*/+-":
            parts.append(s[start:i])
            start = i
    parts.append(s[start:])
    if len(parts) > 2:
        raise ValueError(f"too many terms in {text!r}")
    a = Fraction(0)
    b = Fraction(0)
    seen_rat = seen_irr = False
    for part in parts:
        m = _TERM_RE.match(part)
        if not m:
            raise ValueError(f"bad term {part!r} in {text!r}")
        sign_s, rat_s, irr_s, bare_s = m.groups()
        if bare_s:
            rat_s, irr_s = "1", bare_s
        try:
            coeff = Fraction(rat_s)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None
        if sign_s == "-":
            coeff = -coeff
        if irr_s:
            if seen_irr:
                raise ValueError(f"two sqrt2 terms in {text!r}")
            seen_irr = True
            b = coeff
        else:
            if seen_rat:
                raise ValueError(f"two rational terms in {text!r}")
            seen_rat = True
            a = coeff
    return QNum(a, b)


def format_qnum(x: QNumLike) -> str:
    """Canonical text form: rational part first, then the sqrt2 term."""
    q = QNum.of(x)
    if q.b == 0:
        return str(q.a)
    if q.a == 0:
        return f"{q.b}*sqrt2"
    if q.b > 0:
        return f"{q.a} + {q.b}*sqrt2"
    return f"{q.a} - {-q.b}*sqrt2"


SQRT2 = QNum(0, 1)
ZERO = QNum(0)
ONE = QNum(1)
