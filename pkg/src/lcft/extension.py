"""Tame abelian extensions of a Laurent series field, as explicit data.

The base field is K = k((t)) and the extension is presented canonically as
L = l((alpha)) with alpha^e = u0 * t for a constant unit u0 of l. In the
tame case every 1-unit is an e-th power, so any extension with invariants
(e, f) arises this way, and the Galois action on alpha is exactly linear.

A Galois element is the pair (a, c): it raises residue coefficients to the
q^a power and scales alpha by c, subject to the membership constraint
c^e = u0^(q^a - 1) obtained by applying the map to alpha^e = u0 * t. The
group law, the ramification filtration and the abelian invariant factors
are all computed from these pairs.
"""

from __future__ import annotations

import math

from .ffield import FieldElement, FieldTower
from .series import LaurentSeries
from .snf import invariant_factors

DEGREE_CAP = 64

BASE_SYMBOL = "t"
EXT_SYMBOL = "alpha"


class TameAbelianExtension:
    """L = l((alpha)) over K = k((t)) with alpha^e = u0 * t.

    Rejects wild input (p | e) and input with no tame abelian extension of
    the requested shape (e not dividing q - 1). Immutable after
    construction; the Galois group is enumerated once and cached.
    """

    def __init__(self, tower: FieldTower, e: int, u0=1, precision: int = 32):
        if isinstance(u0, int):
            u0 = tower.from_int(u0)
        if isinstance(u0, str):
            u0 = tower.parse(u0)
        if u0.tower is not tower:
            raise ValueError("u0 must live in the given tower")
        if not u0:
            raise ValueError("u0 must be a unit")
        if e < 1:
            raise ValueError("ramification index must be positive")
        if math.gcd(e, tower.p) != 1:
            raise ValueError(
                f"e = {e} is divisible by p = {tower.p}: wildly ramified "
                "extensions are out of scope")
        if (tower.q - 1) % e != 0:
            raise ValueError(
                f"e = {e} does not divide |k*| = {tower.q - 1}: no tame "
                "abelian extension with this ramification exists over K")
        if e * tower.f > DEGREE_CAP:
            raise ValueError(
                f"degree e*f = {e * tower.f} exceeds the cap {DEGREE_CAP}")
        if precision < 1:
            raise ValueError("precision must be positive")
        self.tower = tower
        self.e = e
        self.u0 = u0
        self.precision = precision
        self._group = None

    @classmethod
    def from_parameters(cls, p, t, f, e, u0="1", precision=32):
        tower = FieldTower(p, t, f)
        return cls(tower, e, u0, precision)

    # -- convenience views ---------------------------------------------------

    @property
    def p(self):
        return self.tower.p

    @property
    def t(self):
        return self.tower.t

    @property
    def f(self):
        return self.tower.f

    @property
    def q(self):
        return self.tower.q

    @property
    def degree(self):
        return self.e * self.tower.f

    def descriptor(self) -> dict:
        return {
            "p": self.p, "t": self.t, "f": self.f, "e": self.e,
            "u0": str(self.u0), "precision": self.precision,
        }

    @classmethod
    def from_descriptor(cls, d: dict):
        return cls.from_parameters(
            int(d["p"]), int(d["t"]), int(d["f"]), int(d["e"]),
            str(d.get("u0", "1")), int(d.get("precision", 32)))

    def descriptor_text(self) -> str:
        """The descriptor as key=value lines (the CLI config format)."""
        return "".join(f"{k}={v}\n" for k, v in self.descriptor().items())

    def __repr__(self):
        return (f"TameAbelianExtension(p={self.p}, t={self.t}, f={self.f}, "
                f"e={self.e}, u0={self.u0})")

    # -- series constructors and the K <-> L change of presentation ----------

    def uniformizer(self, precision=None) -> LaurentSeries:
        """The distinguished uniformizer alpha of L."""
        return LaurentSeries.uniformizer(
            self.tower, EXT_SYMBOL, precision or self.precision)

    def base_uniformizer(self, precision=None) -> LaurentSeries:
        """The uniformizer t of K."""
        return LaurentSeries.uniformizer(
            self.tower, BASE_SYMBOL, precision or self.precision)

    def constant(self, value, precision=None) -> LaurentSeries:
        return LaurentSeries.constant(
            self.tower, EXT_SYMBOL, value, precision or self.precision)

    def base_constant(self, value, precision=None) -> LaurentSeries:
        value = self.tower.from_int(value) if isinstance(value, int) else value
        if value and not value.in_subfield():
            raise ValueError("constant lies outside the residue subfield k")
        return LaurentSeries.constant(
            self.tower, BASE_SYMBOL, value, precision or self.precision)

    def embed(self, x: LaurentSeries) -> LaurentSeries:
        """Re-express a K-series in L via t = u0^(-1) * alpha^e. Exact."""
        if x.symbol != BASE_SYMBOL:
            raise ValueError("embed expects a series in the base uniformizer")
        if x.tower is not self.tower:
            raise ValueError("series belongs to a different tower")
        if x.is_zero():
            return LaurentSeries.zero(self.tower, EXT_SYMBOL)
        zero = self.tower.zero()
        out = [zero] * (self.e * len(x.coeffs))
        u0_pow = self.u0 ** (-x.valuation)
        u0_inv = self.u0.inverse()
        for j, lam in enumerate(x.coeffs):
            if lam:
                if not lam.in_subfield():
                    raise ValueError(
                        "base-field series has a coefficient outside k")
                out[j * self.e] = lam * u0_pow
            u0_pow = u0_pow * u0_inv
        return LaurentSeries(self.tower, EXT_SYMBOL,
                             self.e * x.valuation, out)

    def project(self, x: LaurentSeries) -> LaurentSeries:
        """Re-express an L-series lying in K as a series in t.

        Audits membership: every retained exponent must be divisible by e
        and every coefficient must land in k after the u0-twist.
        """
        if x.symbol != EXT_SYMBOL:
            raise ValueError("project expects a series in alpha")
        if x.tower is not self.tower:
            raise ValueError("series belongs to a different tower")
        if x.is_zero():
            return LaurentSeries.zero(self.tower, BASE_SYMBOL)
        e = self.e
        found = {}
        for j, lam in enumerate(x.coeffs):
            n = x.valuation + j
            if not lam:
                continue
            if n % e != 0:
                raise ValueError(
                    f"series is not in the base field: alpha^{n} term")
            lam_t = lam * self.u0 ** (n // e)
            if not lam_t.in_subfield():
                raise ValueError(
                    f"series is not in the base field: coefficient of "
                    f"alpha^{n} lies outside k")
            found[n // e] = lam_t
        start = -((-x.valuation) // e)
        stop = (x.valuation + len(x.coeffs) - 1) // e
        zero = self.tower.zero()
        coeffs = [found.get(j, zero) for j in range(start, stop + 1)]
        return LaurentSeries(self.tower, BASE_SYMBOL, start, coeffs)

    def is_base_member(self, x: LaurentSeries) -> bool:
        try:
            self.project(x)
        except ValueError:
            return False
        return True

    # -- the Galois group ------------------------------------------------------

    def galois_element(self, a: int, c) -> "GaloisElement":
        if isinstance(c, int):
            c = self.tower.from_int(c)
        return GaloisElement(self, a, c)

    def identity(self) -> "GaloisElement":
        return GaloisElement(self, 0, self.tower.one())

    def galois_group(self) -> tuple:
        """All e*f elements (a, c), sorted by (a, generator exponent of c)."""
        if self._group is None:
            out = []
            for a in range(self.f):
                rhs = self.u0.frobenius(a) / self.u0
                roots = rhs.nth_roots(self.e)
                assert len(roots) == math.gcd(self.e, self.tower.order), \
                    "tame pair equation must always be solvable"
                for c in roots:
                    out.append(GaloisElement(self, a, c))
            assert len(out) == self.degree
            self._group = tuple(out)
        return self._group

    def inertia_generator(self) -> "GaloisElement":
        """(0, zeta_e) for the fixed primitive e-th root of unity."""
        zeta = self.tower.generator_power(self.tower.order // self.e)
        return GaloisElement(self, 0, zeta)

    def residue_frobenius_lift(self) -> "GaloisElement":
        """The lift of residue Frobenius with the smallest-log alpha scale."""
        a = 1 % self.f
        rhs = self.u0.frobenius(a) / self.u0
        return GaloisElement(self, a, rhs.nth_roots(self.e)[0])

    def frobenius_element(self) -> "GaloisElement":
        """The canonical Frobenius; only unramified extensions have one."""
        if self.e != 1:
            raise ValueError(
                "the canonical Frobenius needs an unramified extension")
        return self.residue_frobenius_lift()

    def ramification_group(self, i: int) -> tuple:
        """G_i in lower numbering, from the closed form for tame pairs.

        G_(-1) is everything, G_0 the inertia (a = 0), G_i trivial for
        i >= 1; see ramification_group_direct for the definition-level
        computation used to audit this.
        """
        if i < -1:
            raise ValueError("ramification index starts at -1")
        if i == -1:
            return self.galois_group()
        if i == 0:
            return tuple(g for g in self.galois_group() if g.a == 0)
        return (self.identity(),)

    def ramification_group_direct(self, i: int) -> tuple:
        """G_i from the definition: min valuation of g(z) - z over O_L.

        A pair moves the monomial lam * alpha^n to
        frobenius^a(lam) * c^n * alpha^n, so membership in G_i only
        depends on the retained exponents n <= i, and testing the
        coefficient condition on lam in {1, generator} is exhaustive.
        """
        if i < -1:
            raise ValueError("ramification index starts at -1")
        gen = self.tower.generator()
        probes = (self.tower.one(), gen)
        out = []
        for g in self.galois_group():
            ok = True
            for n in range(0, i + 1):
                cn = g.c ** n
                if any(lam.frobenius(g.a) * cn != lam for lam in probes):
                    ok = False
                    break
            if ok:
                out.append(g)
        return tuple(out)

    def frobenius_relation_exponent(self) -> int:
        """The s with sigma^f = zeta^s for the distinguished generators.

        sigma is the smallest residue-Frobenius lift and zeta the inertia
        generator; together they generate the group with relation lattice
        spanned by (f, -s) and (0, e).
        """
        w = self.residue_frobenius_lift() ** self.f
        assert w.a == 0
        step = self.tower.order // self.e
        assert w.c.log % step == 0, "sigma^f must land in inertia"
        return (w.c.log // step) % self.e

    def structure(self) -> tuple:
        """Invariant factors of the Galois group (trivial factors dropped)."""
        s = self.frobenius_relation_exponent()
        return tuple(invariant_factors([[self.f, -s], [0, self.e]]))

    def is_cyclic(self) -> bool:
        return len(self.structure()) <= 1


class GaloisElement:
    """The automorphism sending alpha to c * alpha and lam to lam^(q^a)."""

    __slots__ = ("ext", "a", "c")

    def __init__(self, ext: TameAbelianExtension, a: int, c: FieldElement):
        a %= ext.f
        if not c:
            raise ValueError("alpha scale must be a unit")
        if c**ext.e != ext.u0.frobenius(a) / ext.u0:
            raise ValueError(
                "pair fails the membership constraint c^e = u0^(q^a - 1)")
        self.ext = ext
        self.a = a
        self.c = c

    def __repr__(self):
        return f"({self.a}, {self.c})"

    def __eq__(self, other):
        if not isinstance(other, GaloisElement):
            return NotImplemented
        return (self.ext is other.ext and self.a == other.a
                and self.c == other.c)

    def __hash__(self):
        return hash((id(self.ext), self.a, self.c))

    def __mul__(self, other: "GaloisElement") -> "GaloisElement":
        """Composition self after other."""
        if not isinstance(other, GaloisElement):
            return NotImplemented
        if other.ext is not self.ext:
            raise ValueError("elements of different extensions")
        return GaloisElement(self.ext, self.a + other.a,
                             other.c.frobenius(self.a) * self.c)

    def inverse(self) -> "GaloisElement":
        f = self.ext.f
        c_inv = self.c.inverse().frobenius((f - self.a) % f)
        return GaloisElement(self.ext, -self.a, c_inv)

    def __pow__(self, n: int) -> "GaloisElement":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = self.ext.identity()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return self.a == 0 and self.c == self.ext.tower.one()

    def order(self) -> int:
        n = 1
        g = self
        while not g.is_identity():
            g = g * self
            n += 1
            assert n <= self.ext.degree, "order exceeded the group size"
        return n

    def apply(self, beta: LaurentSeries) -> LaurentSeries:
        """Action on a series in alpha; valuation is preserved."""
        if beta.symbol != EXT_SYMBOL:
            raise ValueError("the Galois action acts on series in alpha")
        if beta.tower is not self.ext.tower:
            raise ValueError("series belongs to a different tower")
        if beta.is_zero():
            return beta
        zero = self.ext.tower.zero()
        c_pow = self.c**beta.valuation
        out = []
        for lam in beta.coeffs:
            out.append(lam.frobenius(self.a) * c_pow if lam else zero)
            c_pow = c_pow * self.c
        return LaurentSeries(self.ext.tower, EXT_SYMBOL, beta.valuation, out)
