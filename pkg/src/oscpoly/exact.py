"""Exact arithmetic: rationals, the ring Q[g], polynomials over Q[g], moment values.

``GScalar`` stores integer numerators over one shared positive denominator,
in lowest terms, so products reduce to integer convolutions.  Everything here
is immutable and free of floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

ScalarLike = Union[int, Fraction, str, "GScalar"]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class MomentProductError(TypeError):
    """Raised when multiplying two moment values that both carry a transcendental unit."""


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rational_to_str(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _conv(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Integer polynomial product.  Large inputs go through Kronecker packing."""
    la, lb = len(a), len(b)
    if la * lb <= 16:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(map(abs, a)) * max(map(abs, b)) * min(la, lb)
    bits = bound.bit_length() + 2
    packed_a = 0
    for x in reversed(a):
        packed_a = (packed_a << bits) + x
    packed_b = 0
    for y in reversed(b):
        packed_b = (packed_b << bits) + y
    c = packed_a * packed_b
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    for _ in range(la + lb - 1):
        d = c & mask
        c >>= bits
        if d >= half:
            d -= full
            c += 1
        out.append(d)
    return out


class GScalar:
    """Polynomial in the coupling ``g`` with rational coefficients (index i = power of g)."""

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable = ()):
        fracs = [to_rational(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        num = [f.numerator * (den // f.denominator) for f in fracs]
        self._set(num, den)

    def _set(self, num: list[int], den: int) -> None:
        while num and num[-1] == 0:
            num.pop()
        if not num:
            self._num, self._den = (), 1
            return
        if den < 0:
            num = [-x for x in num]
            den = -den
        d = math.gcd(den, *num)
        if d != 1:
            num = [x // d for x in num]
            den //= d
        self._num, self._den = tuple(num), den

    @classmethod
    def _raw(cls, num: list[int], den: int) -> GScalar:
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def const(cls, value) -> GScalar:
        r = to_rational(value)
        return cls._raw([r.numerator], r.denominator)

    @classmethod
    def g(cls) -> GScalar:
        return cls._raw([0, 1], 1)

    @classmethod
    def coerce(cls, value: ScalarLike) -> GScalar:
        return value if isinstance(value, GScalar) else cls.const(value)

    # -- inspection -----------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._num)

    @property
    def degree(self) -> int | None:
        return len(self._num) - 1 if self._num else None

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    def constant_value(self) -> Fraction:
        if len(self._num) > 1:
            raise ValueError("GScalar depends on g")
        return Fraction(self._num[0], self._den) if self._num else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._num)

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GScalar.const(other)
        if not isinstance(other, GScalar):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    # -- ring operations ------------------------------------------------
    def __add__(self, other: ScalarLike) -> GScalar:
        if not isinstance(other, GScalar):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = GScalar.const(other)
        if not other._num:
            return self
        if not self._num:
            return other
        da, db = self._den, other._den
        g = math.gcd(da, db)
        fa, fb = db // g, da // g
        den = da * fa
        a, b = self._num, other._num
        if len(a) < len(b):
            a, b, fa, fb = b, a, fb, fa
        out = [x * fa for x in a]
        for i, y in enumerate(b):
            out[i] += y * fb
        return GScalar._raw(out, den)

    __radd__ = __add__

    def __neg__(self) -> GScalar:
        obj = GScalar.__new__(GScalar)
        obj._num = tuple(-x for x in self._num)
        obj._den = self._den
        return obj

    def __sub__(self, other: ScalarLike) -> GScalar:
        if not isinstance(other, (GScalar, int, Fraction)):
            return NotImplemented
        return self + (-GScalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> GScalar:
        return GScalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> GScalar:
        if isinstance(other, GScalar):
            if not self._num or not other._num:
                return GScalar()
            return GScalar._raw(_conv(self._num, other._num), self._den * other._den)
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            if r == 0 or not self._num:
                return GScalar()
            return GScalar._raw([x * r.numerator for x in self._num], self._den * r.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> GScalar:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, GScalar):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, k: int) -> GScalar:
        out = GScalar.const(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: GScalar) -> tuple[GScalar, GScalar]:
        """Euclidean division in Q[g]."""
        if not other._num:
            raise ZeroDivisionError("division by the zero GScalar")
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        dq = len(rem) - len(div)
        if dq < 0:
            return GScalar(), self
        quot = [Fraction(0)] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(div) - 1] / lead
            quot[i] = c
            if c:
                for j, d in enumerate(div):
                    rem[i + j] -= c * d
        return GScalar(quot), GScalar(rem[: len(div) - 1])

    def exact_div(self, other: GScalar) -> GScalar:
        q, r = self.divmod(other)
        if r:
            raise NotDivisibleError(f"{self} is not divisible by {other}")
        return q

    def eval(self, gval) -> Fraction:
        gval = to_rational(gval)
        acc = Fraction(0)
        for n in reversed(self._num):
            acc = acc * gval + n
        return acc / self._den

    def __repr__(self) -> str:
        return f"GScalar({[rational_to_str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_gscalar(self)


def format_gscalar(s: GScalar, var: str = "g") -> str:
    terms = []
    for i, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = rational_to_str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{rational_to_str(mag)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    terms.reverse()
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


ZERO = GScalar()
ONE = GScalar.const(1)
G = GScalar.g()


def gscalar_eval(s: GScalar, gval) -> Fraction:
    return s.eval(gval)


def gscalar_pochhammer(start: ScalarLike, k: int) -> GScalar:
    """Rising factorial ``start (start+1) ... (start+k-1)``; 1 when k == 0."""
    if k < 0:
        raise ValueError("Pochhammer index must be nonnegative")
    start = GScalar.coerce(start)
    out = ONE
    for j in range(k):
        out = out * (start + j)
    return out


class XPoly:
    """Polynomial in ``x`` whose coefficients are GScalars (index j = power of x)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [GScalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[GScalar, ...] = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: ScalarLike = 1) -> XPoly:
        return cls([ZERO] * power + [GScalar.coerce(coeff)])

    @classmethod
    def x(cls) -> XPoly:
        return cls.monomial(1)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def g_degree(self) -> int | None:
        degs = [c.degree for c in self.coeffs if c.degree is not None]
        return max(degs) if degs else None

    def __getitem__(self, j: int) -> GScalar:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GScalar)):
            other = XPoly([other])
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> XPoly:
        if not isinstance(other, XPoly):
            if not isinstance(other, (int, Fraction, GScalar)):
                return NotImplemented
            other = XPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return XPoly(out)

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> XPoly:
        if not isinstance(other, (XPoly, int, Fraction, GScalar)):
            return NotImplemented
        return self + (-(other if isinstance(other, XPoly) else XPoly([other])))

    def __rsub__(self, other) -> XPoly:
        return XPoly([other]) - self

    def __mul__(self, other) -> XPoly:
        if isinstance(other, XPoly):
            if not self.coeffs or not other.coeffs:
                return XPoly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return XPoly(out)
        if isinstance(other, (int, Fraction, GScalar)):
            return XPoly([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> XPoly:
        if isinstance(other, (int, Fraction)):
            inv = 1 / Fraction(other)
            return XPoly([c * inv for c in self.coeffs])
        return NotImplemented

    def shift(self, k: int) -> XPoly:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return XPoly([ZERO] * k + list(self.coeffs))

    def map_coeffs(self, fn) -> XPoly:
        return XPoly([fn(c) for c in self.coeffs])

    def is_even(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[0::2])

    def __repr__(self) -> str:
        return f"XPoly({[[rational_to_str(r) for r in c.coeffs] for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_xpoly(self)


# Same representation; the variable is read as eta wherever this alias appears.
EtaPoly = XPoly


def format_xpoly(p: XPoly, var: str = "x") -> str:
    parts = []
    for j in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[j]
        if c.is_zero():
            continue
        mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        if c.is_constant():
            r = c.constant_value()
            mag = rational_to_str(abs(r))
            body = mag if not mono else (mono if abs(r) == 1 else f"{mag}*{mono}")
            parts.append(("-" if r < 0 else "+", body))
        else:
            cs = format_gscalar(c)
            parts.append(("+", f"({cs})" + (f"*{mono}" if mono else "")))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def xpoly_derivative(p: XPoly) -> XPoly:
    return XPoly([c * j for j, c in enumerate(p.coeffs)][1:])


def xpoly_divide_by_x(p: XPoly) -> XPoly:
    if p.coeffs and not p.coeffs[0].is_zero():
        raise NotDivisibleError("not divisible by x")
    return XPoly(p.coeffs[1:])


def xpoly_substitute_eta_to_x2(p: EtaPoly) -> XPoly:
    out: list[GScalar] = []
    for c in p.coeffs:
        out.extend((c, ZERO))
    return XPoly(out)


def xpoly_eval(p: XPoly, gval, xval) -> Fraction:
    xval = to_rational(xval)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * xval + c.eval(gval)
    return acc


def xpoly_specialize(p: XPoly, gval) -> XPoly:
    """Replace g by a rational value, keeping the XPoly type."""
    return XPoly([c.eval(gval) for c in p.coeffs])


class MomentValue:
    """``one*1 + sqrt_pi*sqrt(pi) + gamma_g_half*Gamma(g+1/2)`` with GScalar components."""

    __slots__ = ("one", "sqrt_pi", "gamma_g_half")

    def __init__(self, one: ScalarLike = ZERO, sqrt_pi: ScalarLike = ZERO,
                 gamma_g_half: ScalarLike = ZERO):
        self.one = GScalar.coerce(one)
        self.sqrt_pi = GScalar.coerce(sqrt_pi)
        self.gamma_g_half = GScalar.coerce(gamma_g_half)

    @property
    def components(self) -> tuple[GScalar, GScalar, GScalar]:
        return (self.one, self.sqrt_pi, self.gamma_g_half)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_pure_one(self) -> bool:
        return self.sqrt_pi.is_zero() and self.gamma_g_half.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, MomentValue):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __add__(self, other: MomentValue) -> MomentValue:
        if not isinstance(other, MomentValue):
            return NotImplemented
        return MomentValue(*(a + b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> MomentValue:
        return MomentValue(*(-a for a in self.components))

    def __sub__(self, other: MomentValue) -> MomentValue:
        if not isinstance(other, MomentValue):
            return NotImplemented
        return self + (-other)

    def scale(self, s: ScalarLike) -> MomentValue:
        s = GScalar.coerce(s)
        return MomentValue(*(a * s for a in self.components))

    def __mul__(self, other) -> MomentValue:
        if isinstance(other, (int, Fraction, GScalar)):
            return self.scale(other)
        if not isinstance(other, MomentValue):
            return NotImplemented
        if other.is_pure_one():
            return self.scale(other.one)
        if self.is_pure_one():
            return other.scale(self.one)
        raise MomentProductError("product of two transcendental moment values is not representable")

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"MomentValue(one={self.one!s}, sqrt_pi={self.sqrt_pi!s}, gamma_g_half={self.gamma_g_half!s})"

    def __str__(self) -> str:
        parts = []
        for c, unit in zip(self.components, ("", "sqrt(pi)", "Gamma(g+1/2)")):
            if c.is_zero():
                continue
            cs = format_gscalar(c)
            if not unit:
                parts.append(cs)
            elif c == ONE:
                parts.append(unit)
            elif c.is_constant() or len([x for x in c.coeffs if x]) == 1:
                parts.append(f"{cs}*{unit}")
            else:
                parts.append(f"({cs})*{unit}")
        return " + ".join(parts) if parts else "0"


MOMENT_ZERO = MomentValue()


# -- JSON forms ------------------------------------------------------------

def rational_to_json(r: Fraction) -> str:
    return rational_to_str(r)


def rational_from_json(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"not a rational: {v!r}")
    return Fraction(v)


def gscalar_to_json(s: GScalar) -> list[str]:
    # zero renders as ["0"] so every slot of an XPoly array is non-empty
    return [rational_to_str(c) for c in s.coeffs] or ["0"]


def gscalar_from_json(v) -> GScalar:
    if not isinstance(v, list):
        raise ValueError(f"GScalar must be a JSON array, got {v!r}")
    return GScalar(rational_from_json(c) for c in v)


def xpoly_to_json(p: XPoly) -> list[list[str]]:
    return [gscalar_to_json(c) for c in p.coeffs]


def xpoly_from_json(v) -> XPoly:
    if not isinstance(v, list):
        raise ValueError(f"XPoly must be a JSON array, got {v!r}")
    return XPoly(gscalar_from_json(c) for c in v)


def moment_to_json(m: MomentValue) -> dict[str, list[str]]:
    return {
        "one": gscalar_to_json(m.one),
        "sqrt_pi": gscalar_to_json(m.sqrt_pi),
        "gamma_g_half": gscalar_to_json(m.gamma_g_half),
    }


def moment_from_json(v) -> MomentValue:
    if not isinstance(v, dict) or set(v) != {"one", "sqrt_pi", "gamma_g_half"}:
        raise ValueError(f"malformed MomentValue record: {v!r}")
    return MomentValue(gscalar_from_json(v["one"]), gscalar_from_json(v["sqrt_pi"]),
                       gscalar_from_json(v["gamma_g_half"]))
