"""Exact arithmetic in cyclotomic fields Q(zeta_N) and in the group of
roots of unity.

A CyclotomicNumber is stored at a *level* N as an integer coordinate
vector over the power basis 1, z, ..., z^(phi(N)-1) of Q[x]/Phi_N(x),
together with one positive denominator.  Representation at a fixed level
is unique, so the zero test is trivial.  Arithmetic between different
levels lifts lazily to the lcm of the levels.

Roots of unity are kept symbolically as reduced exponent fractions a/m
(the value exp(2*pi*i*a/m)); they are never converted to floats.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd, lcm


def euler_phi(n: int) -> int:
    """Euler totient of a positive integer."""
    if n < 1:
        raise ValueError("totient needs a positive integer")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def _poly_div_exact_int(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials (ascending coefficients),
    # denominator monic up to +-1 leading coefficient.
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    lead = den[dd]
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[dd + k]
        if c % lead != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // lead
        quot[k] = q
        if q:
            for i, d in enumerate(den):
                num[k + i] -= q * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {1: (-1, 1)}
_CYCLO_LOCK = threading.Lock()


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    with _CYCLO_LOCK:
        cached = _CYCLO_CACHE.get(n)
    if cached is not None:
        return cached
    # Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_polynomial(d)
            poly = _poly_div_exact_int(poly, list(phi_d))
    result = tuple(poly)
    with _CYCLO_LOCK:
        _CYCLO_CACHE[n] = result
    return result


class _Level:
    """Per-level reduction data: phi(N), Phi_N and cached powers of zeta
    reduced modulo Phi_N (integer vectors, since Phi_N is monic)."""

    __slots__ = ("n", "phi", "cyclo", "powers", "lock")

    def __init__(self, n: int):
        self.n = n
        self.phi = euler_phi(n)
        self.cyclo = cyclotomic_polynomial(n)
        powers = []
        for k in range(self.phi):
            vec = [0] * self.phi
            vec[k] = 1
            powers.append(tuple(vec))
        self.powers = powers
        self.lock = threading.Lock()

    def power(self, k: int) -> tuple[int, ...]:
        # coordinates of zeta^k mod Phi_N; extends the table as needed
        k %= self.n
        if k < len(self.powers):
            return self.powers[k]
        with self.lock:
            while len(self.powers) <= k:
                j = len(self.powers)
                prev = self.powers[j - 1]
                shifted = [0] + list(prev)
                top = shifted.pop()
                if top:
                    # x^phi = -(lower part of Phi_N)
                    for i in range(self.phi):
                        shifted[i] -= top * self.cyclo[i]
                self.powers.append(tuple(shifted))
            return self.powers[k]


_LEVELS: dict[int, _Level] = {}
_LEVELS_LOCK = threading.Lock()
_MINLEVEL_CACHE: dict = {}


def _level(n: int) -> _Level:
    lv = _LEVELS.get(n)
    if lv is None:
        with _LEVELS_LOCK:
            lv = _LEVELS.get(n)
            if lv is None:
                lv = _Level(n)
                _LEVELS[n] = lv
    return lv


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        return (0,) * len(num), 1
    return tuple(num), den


class CyclotomicNumber:
    """An exact element of the cyclotomic field Q(zeta_level)."""

    __slots__ = ("level", "num", "den")

    def __init__(self, level: int, num, den: int = 1):
        if level < 1:
            raise ValueError("level must be positive")
        phi = _level(level).phi
        num = list(num)
        if len(num) != phi:
            raise ValueError(f"need {phi} coordinates at level {level}")
        self.level = level
        self.num, self.den = _normalize(num, den)

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "CyclotomicNumber":
        q = Fraction(q)
        return cls(1, [q.numerator], q.denominator)

    @classmethod
    def zero(cls) -> "CyclotomicNumber":
        return cls(1, [0])

    @classmethod
    def one(cls) -> "CyclotomicNumber":
        return cls(1, [1])

    @classmethod
    def zeta(cls, level: int, power: int = 1) -> "CyclotomicNumber":
        """zeta_level^power as an exact field element."""
        vec = _level(level).power(power)
        return cls(level, list(vec))

    # ---- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    # ---- level handling -----------------------------------------------

    def embed_to_level(self, target: int) -> "CyclotomicNumber":
        """The same number re-expressed in Q(zeta_target); the current
        level must divide the target."""
        if target % self.level != 0:
            raise ValueError(
                f"level {self.level} does not divide target level {target}")
        if target == self.level:
            return self
        lv = _level(target)
        step = target // self.level
        vec = [0] * lv.phi
        for k, c in enumerate(self.num):
            if c:
                pw = lv.power(k * step)
                for i, p in enumerate(pw):
                    if p:
                        vec[i] += c * p
        return CyclotomicNumber(target, vec, self.den)

    def _common(self, other: "CyclotomicNumber"):
        l = lcm(self.level, other.level)
        return self.embed_to_level(l), other.embed_to_level(l)

    def minimal_level(self) -> "CyclotomicNumber":
        """Re-express at the smallest level d | level containing this
        number (d is automatically odd or divisible by 4)."""
        if self.is_rational():
            return CyclotomicNumber(1, [self.num[0]], self.den)
        key = (self.level, self.num, self.den)
        cached = _MINLEVEL_CACHE.get(key)
        if cached is not None:
            return cached
        n = self.level
        result = self
        for d in sorted(_divisors(n))[:-1]:
            if d == 1:
                continue
            coords = _subfield_coords(self, d)
            if coords is not None:
                result = _from_fraction_coords(d, coords)
                break
        if len(_MINLEVEL_CACHE) > 100000:
            _MINLEVEL_CACHE.clear()
        _MINLEVEL_CACHE[key] = result
        return result

    # ---- ring/field operations ----------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        den = lcm(a.den, b.den)
        ma, mb = den // a.den, den // b.den
        vec = [x * ma + y * mb for x, y in zip(a.num, b.num)]
        return CyclotomicNumber(a.level, vec, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.level, [-c for c in self.num], self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        lv = _level(a.level)
        phi = lv.phi
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        vec = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                pw = lv.power(k)
                for i, p in enumerate(pw):
                    if p:
                        vec[i] += c * p
        return CyclotomicNumber(a.level, vec, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            q = 1 / self.to_fraction()
            return CyclotomicNumber.from_rational(q)
        lv = _level(self.level)
        # extended Euclid in Q[x] against Phi_level
        a = [Fraction(c, self.den) for c in self.num]
        b = [Fraction(c) for c in lv.cyclo]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, b
        while any(r1):
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_frac(s0, _poly_mul_frac(q, s1))
        # r0 is a nonzero constant gcd (Phi irreducible over Q)
        c = next(x for x in r0 if x)
        inv_coords = [x / c for x in s0]
        inv_coords += [Fraction(0)] * (lv.phi - len(inv_coords))
        return _from_fraction_coords(self.level, inv_coords[:lv.phi])

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under the automorphism zeta_level -> zeta_level^k;
        k must be coprime to the level."""
        if gcd(k, self.level) != 1:
            raise ValueError("exponent not coprime to the level")
        lv = _level(self.level)
        vec = [0] * lv.phi
        for j, c in enumerate(self.num):
            if c:
                pw = lv.power(j * k)
                for i, p in enumerate(pw):
                    if p:
                        vec[i] += c * p
        return CyclotomicNumber(self.level, vec, self.den)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.level == other.level:
            return self.num == other.num and self.den == other.den
        a, b = self._common(other)
        return a.num == b.num and a.den == b.den

    def __bool__(self):
        return not self.is_zero()

    __hash__ = None  # equality crosses levels; not intended as a dict key

    def __repr__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            q = Fraction(c, self.den)
            if k == 0:
                parts.append(str(q))
            else:
                z = f"z{self.level}" if k == 1 else f"z{self.level}^{k}"
                parts.append(z if q == 1 else f"-{z}" if q == -1 else f"{q}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x):
    if isinstance(x, CyclotomicNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CyclotomicNumber.from_rational(x)
    if isinstance(x, RootOfUnity):
        return x.to_cyclotomic()
    return NotImplemented


def _from_fraction_coords(level: int, coords) -> CyclotomicNumber:
    den = 1
    for c in coords:
        den = lcm(den, Fraction(c).denominator)
    return CyclotomicNumber(level, [int(Fraction(c) * den) for c in coords], den)


def _poly_divmod_frac(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = max(i for i, c in enumerate(b) if c)
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[db + k]
        if c:
            f = c / b[db]
            q[k] = f
            for i in range(db + 1):
                a[k + i] -= f * b[i]
    return q, a


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub_frac(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _subfield_coords(x: CyclotomicNumber, d: int):
    """Coordinates of x over the power basis of Q(zeta_d) if x lies in
    that subfield, else None.  d must divide the level of x."""
    n = x.level
    lvn = _level(n)
    phd = euler_phi(d)
    step = n // d
    # column j = coordinates of zeta_d^j at level n
    cols = [lvn.power(j * step) for j in range(phd)]
    target = [Fraction(c, x.den) for c in x.num]
    # solve cols * y = target by Gaussian elimination
    rows = lvn.phi
    mat = [[Fraction(cols[j][i]) for j in range(phd)] + [target[i]]
           for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(phd):
        piv = next((i for i in range(r, rows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    # inconsistent rows mean x is outside the subfield
    for i in range(r, rows):
        if mat[i][phd]:
            return None
    sol = [Fraction(0)] * phd
    for i, c in enumerate(piv_cols):
        sol[c] = mat[i][phd]
    return sol


class RootOfUnity:
    """A root of unity exp(2*pi*i*a/m), stored as the reduced exponent
    a/m in Q/Z with 0 <= a/m < 1."""

    __slots__ = ("exponent",)

    def __init__(self, exponent):
        e = Fraction(exponent) % 1
        object.__setattr__(self, "exponent", e)

    def __setattr__(self, *a):
        raise AttributeError("RootOfUnity is immutable")

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(0)

    @classmethod
    def minus_one(cls) -> "RootOfUnity":
        return cls(Fraction(1, 2))

    @classmethod
    def primitive(cls, m: int, a: int = 1) -> "RootOfUnity":
        return cls(Fraction(a, m))

    @property
    def order(self) -> int:
        return self.exponent.denominator

    @property
    def numerator(self) -> int:
        return self.exponent.numerator

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent + other.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    def to_cyclotomic(self, level: int | None = None) -> CyclotomicNumber:
        m = self.order
        if level is None:
            level = m
        if level % m != 0:
            raise ValueError(f"order {m} does not divide level {level}")
        return CyclotomicNumber.zeta(level, self.numerator * (level // m))

    def __eq__(self, other):
        if isinstance(other, RootOfUnity):
            return self.exponent == other.exponent
        return NotImplemented

    def __lt__(self, other):
        return self.exponent < other.exponent

    def __hash__(self):
        return hash(self.exponent)

    def __repr__(self):
        return f"w({self.exponent})"


def conjugate_exponent(m: int) -> int:
    """The exponent p for which a primitive m-th root of unity w is
    conjugate to w^p: p = 2k+1 when m = 4k (w^p = -w), p = k+2 when
    m = 2k with k odd (w^p = -w^2), and p = 2 when m is odd
    (w^p = w^2)."""
    if m < 1:
        raise ValueError("order must be positive")
    if m % 4 == 0:
        return m // 2 + 1
    if m % 2 == 0:
        return m // 2 + 2
    return 2


class TorsionPoint:
    """A point of the algebraic torus all of whose coordinates are roots
    of unity."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(c if isinstance(c, RootOfUnity) else RootOfUnity(c)
                       for c in coords)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *a):
        raise AttributeError("TorsionPoint is immutable")

    @classmethod
    def ones(cls, n: int) -> "TorsionPoint":
        return cls([RootOfUnity.one()] * n)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def order(self) -> int:
        out = 1
        for c in self.coords:
            out = lcm(out, c.order)
        return out

    def power(self, v) -> RootOfUnity:
        """The monomial character value x^v = prod x_i^{v_i} at this
        point, as a root of unity."""
        if len(v) != len(self.coords):
            raise ValueError("exponent vector length mismatch")
        e = Fraction(0)
        for vi, c in zip(v, self.coords):
            if vi:
                e += vi * c.exponent
        return RootOfUnity(e)

    def __mul__(self, other: "TorsionPoint") -> "TorsionPoint":
        return TorsionPoint([a * b for a, b in zip(self.coords, other.coords)])

    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(c.exponent for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, TorsionPoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + ", ".join(str(c.exponent) for c in self.coords) + ")"


def point_power(point: TorsionPoint, v) -> RootOfUnity:
    return point.power(v)
