"""Exact arithmetic for tiles with a 2pi/3 angle.

Directions of tile edges live in the group of angles ``j*pi/3 + k*alpha``
(``AngleClass``), lengths are rational combinations of the three sides
(``SymLen``), and actual (unreduced) angle magnitudes such as corner
wedges are ``AngleMeasure`` values.  Nothing in here touches a floating
tolerance except ``check_tile_spec``.
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering

from .errors import InvalidSpec

__all__ = [
    "AngleClass", "AngleMeasure", "SymLen", "TileSpec", "ValidationReport",
    "AngleMode", "SideMode", "ALPHA", "BETA", "GAMMA", "PI", "FULL",
    "angle_add", "angle_negate", "zh_sign", "check_tile_spec", "get_eps",
    "as_rational", "measure_between", "LABELS", "canonical_class", "is_symmetric_alpha",
]

DEFAULT_EPS = 1e-9
GAMMA_RAD = 2 * math.pi / 3
LABELS = ("a", "b", "c")


def get_eps():
    """Geometric tolerance; ``TRITILE_EPS`` overrides the default 1e-9."""
    raw = os.environ.get("TRITILE_EPS")
    if raw:
        try:
            value = float(raw)
        except ValueError:
            raise InvalidSpec(f"TRITILE_EPS is not a number: {raw!r}") from None
        if value <= 0:
            raise InvalidSpec("TRITILE_EPS must be positive")
        return value
    return DEFAULT_EPS


def as_rational(x):
    """Return ``x`` as a Fraction when it is exactly rational, else a float.

    Strings like ``"3/2"`` parse as rationals; integral floats are promoted.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not lengths")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        try:
            return Fraction(s)
        except ValueError:
            pass
        if s.startswith("sqrt(") and s.endswith(")"):
            inner = Fraction(s[5:-1])
            root = _rational_sqrt(inner)
            return root if root is not None else math.sqrt(inner)
        return float(s)
    if isinstance(x, float):
        if x.is_integer():
            return Fraction(int(x))
        return x
    return float(x)


def _rational_sqrt(q):
    if q < 0:
        return None
    q = Fraction(q)
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# angle classes


@total_ordering
@dataclass(frozen=True)
class AngleClass:
    """Direction ``j*pi/3 + k*alpha`` with ``j`` reduced mod 6."""

    j: int
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "j", int(self.j) % 6)
        object.__setattr__(self, "k", int(self.k))

    def __add__(self, other):
        if isinstance(other, AngleMeasure):
            return AngleClass(self.j + other.p, self.k + other.q)
        return AngleClass(self.j + other.j, self.k + other.k)

    def __sub__(self, other):
        if isinstance(other, AngleMeasure):
            return AngleClass(self.j - other.p, self.k - other.q)
        return AngleClass(self.j - other.j, self.k - other.k)

    def __lt__(self, other):
        return (self.j, self.k) < (other.j, other.k)

    def inverse(self):
        """Group inverse (rotation by minus this angle)."""
        return AngleClass(-self.j, -self.k)

    def opposite(self):
        """The reversed direction: adds pi."""
        return AngleClass(self.j + 3, self.k)

    def line_key(self):
        """Direction modulo pi, i.e. the undirected line orientation."""
        return (self.j % 3, self.k)

    @property
    def sign(self):
        return -1 if self.j % 2 else 1

    def radians(self, alpha, frame=0.0):
        """Numeric direction in [0, 2pi)."""
        return (frame + self.j * math.pi / 3 + self.k * alpha) % (2 * math.pi)

    def unit(self, alpha, frame=0.0):
        t = frame + self.j * math.pi / 3 + self.k * alpha
        return (math.cos(t), math.sin(t))

    def as_dict(self):
        return {"j": self.j, "k": self.k}

    def __repr__(self):
        return f"AngleClass(j={self.j}, k={self.k})"


def is_symmetric_alpha(alpha):
    """True when alpha = pi/6 (a == b), where 2*alpha = pi/3 and classes collide."""
    return abs(alpha - math.pi / 6) <= 1e-12


def canonical_class(d, alpha):
    """The unique representative of ``d`` for this alpha.

    For alpha = pi/6 the pairs (j, k) and (j + 1, k - 2) name the same
    direction; the representative has k in {0, 1}.  Otherwise ``d`` is
    returned unchanged.
    """
    if not is_symmetric_alpha(alpha) or d.k in (0, 1):
        return d
    half, r = divmod(d.k, 2)
    return AngleClass(d.j + half, r)


def angle_add(x, y):
    return x + y


def angle_negate(x):
    """Rotate by pi: the direction of the reversed segment."""
    return x.opposite()


def zh_sign(x):
    """The sign character ``(-1)**j`` of a direction class."""
    return x.sign


@total_ordering
@dataclass(frozen=True)
class AngleMeasure:
    """An actual angle ``p*pi/3 + q*alpha`` (no reduction mod 2pi)."""

    p: int
    q: int = 0

    def __add__(self, other):
        return AngleMeasure(self.p + other.p, self.q + other.q)

    def __sub__(self, other):
        return AngleMeasure(self.p - other.p, self.q - other.q)

    def __mul__(self, n):
        return AngleMeasure(self.p * n, self.q * n)

    __rmul__ = __mul__

    def __neg__(self):
        return AngleMeasure(-self.p, -self.q)

    def __lt__(self, other):
        # only meaningful for a fixed alpha; callers compare values instead
        return (self.p, self.q) < (other.p, other.q)

    def value(self, alpha):
        return self.p * math.pi / 3 + self.q * alpha

    def as_class(self):
        return AngleClass(self.p, self.q)

    def decompose(self):
        """All non-negative (n_alpha, n_beta, n_gamma) with this total angle.

        Uses alpha=(0,1), beta=(1,-1), gamma=(2,0); exact, so it assumes
        alpha/pi is irrational.
        """
        out = []
        p, q = self.p, self.q
        for nb in range(max(0, -q), p + 1):
            rest = p - nb
            if rest % 2:
                continue
            out.append((q + nb, nb, rest // 2))
        return out

    def fillable(self):
        return bool(self.decompose())

    def __repr__(self):
        return f"AngleMeasure(p={self.p}, q={self.q})"


ALPHA = AngleMeasure(0, 1)
BETA = AngleMeasure(1, -1)
GAMMA = AngleMeasure(2, 0)
PI = AngleMeasure(3, 0)
FULL = AngleMeasure(6, 0)
CORNER_ANGLE = {"A": ALPHA, "B": BETA, "C": GAMMA}
# side opposite each corner
OPPOSITE = {"A": "a", "B": "b", "C": "c"}


def measure_between(d1, d2, alpha, *, allow_zero=False):
    """Counterclockwise angle from direction ``d1`` to ``d2`` as a measure.

    The residue mod 6 is exact; the winding is fixed numerically so the
    value lies in [0, 2pi) (or (0, 2pi] when ``allow_zero`` is false and
    the directions coincide).
    """
    dj = (d2.j - d1.j) % 6
    dq = d2.k - d1.k
    base = dj * math.pi / 3 + dq * alpha
    m = math.floor(base / (2 * math.pi))
    p = dj - 6 * m
    val = p * math.pi / 3 + dq * alpha
    # guard against round-off right at the seam
    if val < -1e-12:
        p += 6
    elif val >= 2 * math.pi - 1e-12 and not (dj == 0 and dq == 0):
        p -= 6
    if dj == 0 and dq == 0:
        p = 0 if allow_zero else 6
    return AngleMeasure(p, dq)


# ---------------------------------------------------------------------------
# symbolic lengths


@dataclass(frozen=True)
class SymLen:
    """A rational combination ``pa*a + pb*b + pc*c`` of the tile sides."""

    pa: Fraction = Fraction(0)
    pb: Fraction = Fraction(0)
    pc: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("pa", "pb", "pc"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def of(cls, label, coeff=1):
        if label not in LABELS:
            raise ValueError(f"unknown side label {label!r}")
        vals = {"a": 0, "b": 0, "c": 0}
        vals[label] = coeff
        return cls(vals["a"], vals["b"], vals["c"])

    @classmethod
    def zero(cls):
        return cls()

    def __add__(self, other):
        return SymLen(self.pa + other.pa, self.pb + other.pb, self.pc + other.pc)

    def __sub__(self, other):
        return SymLen(self.pa - other.pa, self.pb - other.pb, self.pc - other.pc)

    def __neg__(self):
        return SymLen(-self.pa, -self.pb, -self.pc)

    def __mul__(self, s):
        s = Fraction(s)
        return SymLen(self.pa * s, self.pb * s, self.pc * s)

    __rmul__ = __mul__

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self):
        return self.pa == 0 and self.pb == 0 and self.pc == 0

    def coeffs(self):
        return (self.pa, self.pb, self.pc)

    def evaluate(self, spec):
        a, b, c = spec.numeric
        return float(self.pa) * a + float(self.pb) * b + float(self.pc) * c

    def evaluate_exact(self, spec):
        """Exact value as a Fraction; requires rational sides."""
        if not spec.exact_sides:
            raise ValueError("tile sides are not all rational")
        return self.pa * spec.a + self.pb * spec.b + self.pc * spec.c

    def as_dict(self):
        return {k: _frac_str(v) for k, v in zip(LABELS, self.coeffs())}

    def __str__(self):
        parts = []
        for coeff, lab in zip(self.coeffs(), LABELS):
            if coeff == 0:
                continue
            mag = abs(coeff)
            term = lab if mag == 1 else f"{_frac_str(mag)}{lab}"
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


def _frac_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sum_symlen(items):
    total = SymLen()
    for s in items:
        total = total + s
    return total


# ---------------------------------------------------------------------------
# tile specification


class AngleMode(str, enum.Enum):
    INCOMMENSURABLE = "incommensurable"
    COMMENSURABLE = "commensurable"
    UNKNOWN = "unknown"


class SideMode(str, enum.Enum):
    COMMENSURABLE = "commensurable"       # a/b and c/b rational
    AB_RATIONAL = "ab_rational"           # a/b rational, c irrational
    INCOMMENSURABLE = "incommensurable"   # a/b irrational
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TileSpec:
    """Side lengths (a, b, c) opposite (alpha, beta, 2pi/3).

    Build with ``TileSpec.from_sides``; rational sides are kept as
    Fractions so that cos(2 alpha) and c**2 can be decided exactly.
    """

    a: object
    b: object
    c: object
    alpha: float
    angle_mode: AngleMode = AngleMode.UNKNOWN
    side_mode: SideMode = SideMode.UNKNOWN
    c_squared: Fraction | None = None

    @property
    def beta(self):
        return math.pi / 3 - self.alpha

    @property
    def gamma(self):
        return GAMMA_RAD

    @property
    def numeric(self):
        return (float(self.a), float(self.b), float(self.c))

    def length(self, label):
        return float({"a": self.a, "b": self.b, "c": self.c}[label])

    @property
    def area(self):
        a, b, _ = self.numeric
        return a * b * math.sin(GAMMA_RAD) / 2

    @property
    def exact_sides(self):
        return all(isinstance(x, Fraction) for x in (self.a, self.b, self.c))

    @classmethod
    def from_sides(cls, a, b, c=None, *, alpha=None, angle_mode=None,
                   side_mode=None, check=True):
        a = as_rational(a)
        b = as_rational(b)
        c_sq = None
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            c_sq = a * a + a * b + b * b
        if c is None:
            if c_sq is not None:
                root = _rational_sqrt(c_sq)
                c = root if root is not None else math.sqrt(c_sq)
            else:
                c = math.sqrt(float(a) ** 2 + float(a) * float(b) + float(b) ** 2)
        else:
            c = as_rational(c)
        if alpha is None:
            fa, fb, fc = float(a), float(b), float(c)
            cos_a = (fb * fb + fc * fc - fa * fa) / (2 * fb * fc)
            alpha = math.acos(max(-1.0, min(1.0, cos_a)))
        derived = _derive_angle_mode(a, b)
        if angle_mode is None:
            angle_mode = derived
        angle_mode = AngleMode(angle_mode)
        if side_mode is None:
            side_mode = _derive_side_mode(a, b, c)
        side_mode = SideMode(side_mode)
        spec = cls(a, b, c, float(alpha), angle_mode, side_mode, c_sq)
        if check:
            check_tile_spec(spec)
        return spec

    def as_dict(self):
        def enc(x):
            return _frac_str(x) if isinstance(x, Fraction) else repr(float(x))
        d = {
            "a": enc(self.a), "b": enc(self.b), "c": enc(self.c),
            "alpha": repr(self.alpha), "gamma": repr(GAMMA_RAD),
            "angle_mode": self.angle_mode.value, "side_mode": self.side_mode.value,
        }
        if self.c_squared is not None and not isinstance(self.c, Fraction):
            d["c_squared"] = _frac_str(self.c_squared)
        return d


def _cos2alpha_exact(a, b):
    """cos(2 alpha) as a Fraction when a and b are rational, else None.

    With gamma = 2pi/3, cos(alpha) = (2b + a) / (2c) and c^2 = a^2+ab+b^2,
    so cos^2(alpha) is rational whenever a/b is.
    """
    if not (isinstance(a, Fraction) and isinstance(b, Fraction)):
        return None
    c_sq = a * a + a * b + b * b
    cos_sq = (2 * b + a) ** 2 / (4 * c_sq)
    return 2 * cos_sq - 1


_NIVEN = {Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1)}


def _derive_angle_mode(a, b):
    c2a = _cos2alpha_exact(a, b)
    if c2a is None:
        return AngleMode.UNKNOWN
    # Niven: for rational x*pi, cos is rational only at 0, +-1/2, +-1
    return AngleMode.COMMENSURABLE if c2a in _NIVEN else AngleMode.INCOMMENSURABLE


def _derive_side_mode(a, b, c):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return SideMode.COMMENSURABLE if isinstance(c, Fraction) else SideMode.AB_RATIONAL
    return SideMode.UNKNOWN


@dataclass
class ValidationReport:
    ok: bool
    law_of_cosines_residual: float
    law_of_sines_residual: float
    alpha_in_range: bool
    cos_alpha: object = None
    cos_2alpha: Fraction | None = None
    derived_angle_mode: AngleMode = AngleMode.UNKNOWN
    messages: list = field(default_factory=list)


def check_tile_spec(t, *, eps=None, raise_on_error=True):
    """Consistency gate for a TileSpec.

    Checks c^2 = a^2 + ab + b^2 (exactly when all sides are rational), the
    law of sines, 0 < alpha < pi/3, and decides commensurability of the
    angles when a/b is rational.
    """
    eps = get_eps() if eps is None else eps
    a, b, c = t.numeric
    msgs = []
    if min(a, b, c) <= 0:
        msgs.append("side lengths must be positive")
    if t.exact_sides:
        loc = float(t.c * t.c - (t.a * t.a + t.a * t.b + t.b * t.b))
        exact_fail = loc != 0
    else:
        loc = c * c - (a * a + a * b + b * b)
        exact_fail = False
    scale = max(c * c, 1.0)
    if exact_fail or abs(loc) > eps * scale:
        msgs.append(f"law of cosines fails: c^2 - (a^2+ab+b^2) = {loc:.3g}")
    in_range = 0 < t.alpha < math.pi / 3
    if not in_range:
        msgs.append(f"alpha={t.alpha!r} outside (0, pi/3)")
    ratios = []
    for side, ang in ((a, t.alpha), (b, t.beta), (c, GAMMA_RAD)):
        s = math.sin(ang)
        ratios.append(side / s if s > 0 else math.inf)
    lsr = (max(ratios) - min(ratios)) / max(min(ratios), 1e-300)
    if not math.isfinite(lsr) or lsr > max(eps, 1e-9) * 10:
        msgs.append(f"law of sines residual {lsr:.3g} too large")
    c2a = _cos2alpha_exact(t.a, t.b)
    derived = _derive_angle_mode(t.a, t.b)
    cos_alpha = None
    if isinstance(t.a, Fraction) and isinstance(t.b, Fraction):
        if isinstance(t.c, Fraction):
            cos_alpha = (t.b * t.b + t.c * t.c - t.a * t.a) / (2 * t.b * t.c)
        else:
            cos_alpha = (b * b + c * c - a * a) / (2 * b * c)
    if derived is not AngleMode.UNKNOWN and t.angle_mode is not AngleMode.UNKNOWN \
            and derived is not t.angle_mode:
        msgs.append(f"declared angle_mode={t.angle_mode.value} but cos(2alpha)="
                    f"{_frac_str(c2a)} makes the angles {derived.value}")
    if t.angle_mode is AngleMode.INCOMMENSURABLE and abs(a - b) <= eps * max(a, b):
        msgs.append("a == b gives alpha = beta = pi/6, which is commensurable")
    report = ValidationReport(
        ok=not msgs, law_of_cosines_residual=loc, law_of_sines_residual=lsr,
        alpha_in_range=in_range, cos_alpha=cos_alpha, cos_2alpha=c2a,
        derived_angle_mode=derived, messages=msgs)
    if msgs and raise_on_error:
        raise InvalidSpec("; ".join(msgs))
    return report
