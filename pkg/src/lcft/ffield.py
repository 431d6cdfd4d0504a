"""Exact arithmetic in a residue-field pair k inside l.

A ``FieldTower`` models the field l = F_(p^(t*f)) together with its
distinguished subfield k = F_(p^t): k is recovered as the fixed field of
the q-power Frobenius (q = p^t), so no compatible-embedding machinery is
needed. The whole field is built once from a monic irreducible modulus
over F_p, chosen deterministically from (p, t, f) so runs reproduce.

Internally every nonzero element is stored as its discrete logarithm with
respect to a fixed multiplicative generator; addition goes through a
precomputed Zech-logarithm table. This keeps every field operation O(1)
after an O(field size) table build, which the size cap p^(t*f) <= 2^20
makes affordable. Coefficient vectors over F_p remain the construction
and printing surface.
"""

from __future__ import annotations

import math
import random

SIZE_CAP = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (n <= 2^20 here)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _poly_trim(out)


def _poly_mulmod(a, b, mod, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_rem(out, mod, p)


def _poly_rem(a, mod, p):
    a = list(a)
    n = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, n - 1, -1):
        c = a[i] % p
        if c:
            factor = (c * inv_lead) % p
            for j, mj in enumerate(mod):
                a[i - n + j] = (a[i - n + j] - factor * mj) % p
    del a[n:]
    return _poly_trim(a)


def _poly_powmod(a, k, mod, p):
    result = [1]
    base = _poly_rem(a, mod, p)
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        k >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a = _poly_mod(a, b, p)
        a, b = b, a
    return a


def _poly_mod(a, b, p):
    r = list(a)
    inv_lead = pow(b[-1], -1, p)
    while r and len(r) >= len(b):
        factor = (r[-1] * inv_lead) % p
        shift = len(r) - len(b)
        for j, bj in enumerate(b):
            r[shift + j] = (r[shift + j] - factor * bj) % p
        _poly_trim(r)
    return r


def _is_irreducible(mod, p):
    """Rabin test: x^(p^n) = x mod m and gcd(x^(p^(n/r)) - x, m) = 1."""
    n = len(mod) - 1
    x = _poly_rem([0, 1], mod, p)
    xq = _poly_powmod(x, p**n, mod, p)
    if _poly_sub(xq, x, p):
        return False
    for r in prime_factors(n):
        h = _poly_powmod(x, p ** (n // r), mod, p)
        g = _poly_gcd(list(mod), _poly_sub(h, x, p), p)
        if len(g) != 1:
            return False
    return True


def _x_is_primitive(mod, p, order_factors, order):
    for r in order_factors:
        if _poly_powmod([0, 1], order // r, mod, p) == [1]:
            return False
    return True


class FieldTower:
    """The field l = F_(p^(t*f)) with distinguished subfield k = F_(p^t).

    The modulus is a monic irreducible polynomial of degree t*f over F_p
    such that the class of x generates l*; it is found by a seeded random
    search so a tower built from the same (p, t, f) is always identical.
    A modulus can also be supplied explicitly (it is validated, including
    primitivity of x).
    """

    def __init__(self, p: int, t: int, f: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if t < 1 or f < 1:
            raise ValueError("t and f must be positive")
        if p ** (t * f) > SIZE_CAP:
            raise ValueError(f"field size {p}^{t * f} exceeds the cap 2^20")
        self.p = p
        self.t = t
        self.f = f
        self.degree = t * f
        self.size = p ** self.degree
        self.order = self.size - 1            # |l*|, always >= 1
        self.q = p**t                          # |k|
        self.subfield_units = self.q - 1       # |k*|
        self._order_factors = prime_factors(self.order)
        # norm exponent onto k: x |-> x^((q^f-1)/(q-1))
        self.subfield_norm_exponent = self.order // max(self.subfield_units, 1)
        if modulus is None:
            modulus = self._find_modulus()
        else:
            modulus = tuple(c % p for c in modulus)
            self._validate_modulus(modulus)
        self.modulus = tuple(modulus)
        self._build_tables()

    def _find_modulus(self):
        rng = random.Random(f"field-tower-{self.p}-{self.t}-{self.f}")
        n = self.degree
        while True:
            coeffs = [rng.randrange(self.p) for _ in range(n)] + [1]
            if coeffs[0] == 0:
                continue
            if not _is_irreducible(coeffs, self.p):
                continue
            if _x_is_primitive(coeffs, self.p, self._order_factors, self.order):
                return tuple(coeffs)

    def _validate_modulus(self, modulus):
        if len(modulus) != self.degree + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree t*f")
        if not _is_irreducible(list(modulus), self.p):
            raise ValueError("modulus is reducible over the prime field")
        if not _x_is_primitive(list(modulus), self.p,
                               self._order_factors, self.order):
            raise ValueError("class of x must generate the unit group")

    def _build_tables(self):
        p, n = self.p, self.degree
        size = self.size
        # exp[k] = packed coefficient vector of g^k, where g = class of x
        exp = [0] * self.order
        log = [-1] * size
        poly = [1] + [0] * (n - 1)
        top = n - 1
        # multiply-by-x uses x^n = -(lower part of the modulus)
        red = [(-c) % p for c in self.modulus[:-1]]
        powers = [p**i for i in range(n)]
        for k in range(self.order):
            packed = 0
            for i in range(n):
                packed += poly[i] * powers[i]
            exp[k] = packed
            log[packed] = k
            carry = poly[top]
            for i in range(top, 0, -1):
                poly[i] = (poly[i - 1] + carry * red[i]) % p
            poly[0] = (carry * red[0]) % p
        self._exp = exp
        self._log = log
        # zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
        zech = [0] * self.order
        for k in range(self.order):
            v = exp[k]
            bumped = v - (v % p) + (v % p + 1) % p
            zech[k] = log[bumped] if bumped else -1
        self._zech = zech

    # -- element constructors ------------------------------------------------

    def zero(self) -> "FieldElement":
        return FieldElement(self, None)

    def one(self) -> "FieldElement":
        return FieldElement(self, 0)

    def generator(self) -> "FieldElement":
        return FieldElement(self, 1 % self.order)

    def generator_power(self, k: int) -> "FieldElement":
        return FieldElement(self, k % self.order)

    def from_int(self, c: int) -> "FieldElement":
        """Constant from the prime field (c reduced mod p)."""
        c %= self.p
        if c == 0:
            return self.zero()
        return FieldElement(self, self._log[c])

    def minus_one(self) -> "FieldElement":
        return self.from_int(self.p - 1)

    def element(self, coeffs) -> "FieldElement":
        """Element from a coefficient vector over F_p, lowest degree first."""
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than the degree")
        packed = 0
        for i, c in enumerate(coeffs):
            packed += (c % self.p) * self.p**i
        if packed == 0:
            return self.zero()
        return FieldElement(self, self._log[packed])

    def subfield_generator(self) -> "FieldElement":
        """A fixed generator of k*: the norm of the stored generator."""
        return self.generator().norm_to_subfield()

    def subfield_unit_elements(self) -> list:
        """All of k*, as powers of the subfield generator."""
        g = self.subfield_generator()
        return [g**j for j in range(max(self.subfield_units, 1))]

    def unit_elements(self) -> list:
        """All of l* in generator-power order."""
        return [FieldElement(self, k) for k in range(self.order)]

    def parse(self, text: str) -> "FieldElement":
        """Parse "g^k", a bare integer, or a comma-separated coefficient list."""
        text = text.strip()
        if text.startswith("g^"):
            return self.generator_power(int(text[2:]))
        if text == "g":
            return self.generator()
        if "," in text:
            return self.element([int(c) for c in text.split(",")])
        return self.from_int(int(text))

    def modulus_str(self) -> str:
        return ",".join(str(c) for c in self.modulus)

    def __repr__(self):
        return f"FieldTower(p={self.p}, t={self.t}, f={self.f})"


class FieldElement:
    """An element of the tower field, stored as a generator exponent.

    ``log`` is None for zero. Arithmetic partners must come from the very
    same tower object; plain integers are lifted through the prime field.
    """

    __slots__ = ("tower", "log")

    def __init__(self, tower: FieldTower, log):
        self.tower = tower
        self.log = log

    # -- views ---------------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        """Coefficient vector over F_p, lowest degree first."""
        if self.log is None:
            return (0,) * self.tower.degree
        packed = self.tower._exp[self.log]
        out = []
        for _ in range(self.tower.degree):
            packed, r = divmod(packed, self.tower.p)
            out.append(r)
        return tuple(out)

    def coeff_str(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self):
        if self.log is None:
            return "0"
        coeffs = self.coeffs
        if not any(coeffs[1:]):
            return str(coeffs[0])
        if self.log == 1:
            return "g"
        return f"g^{self.log}"

    __repr__ = __str__

    def __bool__(self):
        return self.log is not None

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.tower.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.tower is other.tower and self.log == other.log

    def __hash__(self):
        return hash((id(self.tower), self.log))

    def _coerce(self, other):
        """Lift ints through the prime field; None means 'not our type'."""
        if isinstance(other, int):
            return self.tower.from_int(other)
        if isinstance(other, FieldElement):
            if other.tower is not self.tower:
                raise ValueError("elements belong to different towers")
            return other
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.log is None:
            return other
        if other.log is None:
            return self
        m = self.tower.order
        z = self.tower._zech[(other.log - self.log) % m]
        if z == -1:
            return self.tower.zero()
        return FieldElement(self.tower, (self.log + z) % m)

    __radd__ = __add__

    def __neg__(self):
        if self.log is None or self.tower.p == 2:
            return self
        m = self.tower.order
        return FieldElement(self.tower, (self.log + m // 2) % m)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.log is None or other.log is None:
            return self.tower.zero()
        return FieldElement(self.tower,
                            (self.log + other.log) % self.tower.order)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.log is None:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.tower, (-self.log) % self.tower.order)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if self.log is None:
            if k == 0:
                return self.tower.one()
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return self
        return FieldElement(self.tower, (self.log * k) % self.tower.order)

    # -- tower structure -----------------------------------------------------

    def frobenius(self, j: int = 1) -> "FieldElement":
        """The j-fold q-power Frobenius x^(q^j); depends on j only mod f."""
        if self.log is None:
            return self
        m = self.tower.order
        return FieldElement(
            self.tower,
            (self.log * pow(self.tower.q, j % self.tower.f, m)) % m)

    def in_subfield(self) -> bool:
        """True when the element lies in k, i.e. is fixed by x -> x^q."""
        if self.log is None:
            return True
        return self.log % self.tower.subfield_norm_exponent == 0

    def norm_to_subfield(self) -> "FieldElement":
        """Multiplicative norm from l down to k: x^((q^f-1)/(q-1))."""
        if self.log is None:
            raise ZeroDivisionError("norm of zero to the subfield")
        return self ** self.tower.subfield_norm_exponent

    def nth_roots(self, e: int) -> tuple:
        """All c with c^e = self, smallest generator exponent first.

        Empty when self is not an e-th power; otherwise the count is
        gcd(e, |l*|). Requires gcd(e, p) = 1 and self != 0.
        """
        if e < 1:
            raise ValueError("root degree must be positive")
        if math.gcd(e, self.tower.p) != 1:
            raise ValueError("root degree shares a factor with p")
        if self.log is None:
            raise ZeroDivisionError("cannot extract roots of zero")
        m = self.tower.order
        d = math.gcd(e, m)
        if self.log % d != 0:
            return ()
        step = m // d
        y0 = (self.log // d) * pow(e // d, -1, step) % step if step > 1 else 0
        logs = sorted((y0 + i * step) % m for i in range(d))
        return tuple(FieldElement(self.tower, L) for L in logs)

    def subfield_log(self) -> int:
        """Discrete log w.r.t. the subfield generator (element must be in k*)."""
        if self.log is None or not self.in_subfield():
            raise ValueError("element is not a unit of the subfield")
        return (self.log // self.tower.subfield_norm_exponent) % max(
            self.tower.subfield_units, 1)
