"""The explicit local reciprocity map and its independent oracles.

Three routes to the same Galois element are implemented and kept apart so
they can check each other:

* ``reciprocity_map``: a closed form for the pair (a, c) of the image of
  the class u * t^i, derived by evaluating the defining congruence at
  beta = alpha and beta = a residue generator. Negative valuations go
  through the group inverse.
* ``reciprocity_search``: evaluates the congruence right-hand side as an
  exact series quotient and scans the whole Galois group for the unique
  element matching it on both probes.
* ``norm_group``: the exact norm image inside Z x k* with its Smith-form
  presentation, giving kernel/cokernel facts (which classes are norms,
  coset representatives) without reference to either formula.

Base-field classes are reduced pairs (valuation, unit residue); 1-units
are discarded throughout because they are norms in the tame case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .extension import EXT_SYMBOL, GaloisElement, TameAbelianExtension
from .ffield import FieldElement
from .series import LaurentSeries
from .snf import invariant_factors


@dataclass(frozen=True)
class BaseFieldClass:
    """The class of u * t^valuation modulo 1-units: (valuation, residue)."""

    valuation: int
    unit: FieldElement

    def __post_init__(self):
        if not self.unit:
            raise ValueError("unit residue must be nonzero")
        if not self.unit.in_subfield():
            raise ValueError("unit residue must lie in the base residue field")

    def __mul__(self, other: "BaseFieldClass") -> "BaseFieldClass":
        return BaseFieldClass(self.valuation + other.valuation,
                              self.unit * other.unit)

    def inverse(self) -> "BaseFieldClass":
        return BaseFieldClass(-self.valuation, self.unit.inverse())

    def __repr__(self):
        return f"[v={self.valuation}, u={self.unit}]"


def class_of_series(ext: TameAbelianExtension,
                    b: LaurentSeries) -> BaseFieldClass:
    """Reduce a nonzero K-series to its (valuation, unit residue) class."""
    if b.symbol != "t":
        raise ValueError("expected a series in the base uniformizer")
    if b.is_zero():
        raise ValueError("the zero series has no class")
    return BaseFieldClass(b.valuation, b.leading_coefficient)


def _sign_constant(ext: TameAbelianExtension) -> FieldElement:
    """(-1)^(e-1) as an element of k."""
    if (ext.e - 1) % 2 == 0:
        return ext.tower.one()
    return ext.tower.minus_one()


def reciprocity_map(ext: TameAbelianExtension,
                    b: BaseFieldClass) -> GaloisElement:
    """Closed-form image of a base-field class under local reciprocity.

    For i >= 0 the pair is a = i mod f and
        c = (-1)^((e-1)(q^i-1)/e) * u0^((q^i-1)/e) * ubar^(-(q-1)/e),
    which is the exact residue of the defining congruence at beta = alpha;
    the membership constraint is re-checked on construction. Negative i is
    mapped through the inverse class.
    """
    if b.valuation < 0:
        return reciprocity_map(ext, b.inverse()).inverse()
    q, e = ext.q, ext.e
    m = (q**b.valuation - 1) // e
    c = ext.u0**m * b.unit ** (-((q - 1) // e))
    if (e - 1) * m % 2:
        c = -c
    return GaloisElement(ext, b.valuation, c)


def reciprocity_of_series(ext: TameAbelianExtension,
                          b: LaurentSeries) -> GaloisElement:
    """Reciprocity image of a full K-series; its 1-unit part is dropped."""
    return reciprocity_map(ext, class_of_series(ext, b))


def congruence_rhs(ext: TameAbelianExtension, pi: LaurentSeries,
                   u: LaurentSeries, i: int,
                   beta: LaurentSeries) -> FieldElement:
    """Residue of beta^(q^i-1) / (((-1)^(e-1) pi)^(q^i-1)v * u^((q-1)v)).

    Here v is the base-field valuation of beta, so both exponents are
    integers because e divides q - 1. The quotient is always a unit;
    a nonzero valuation signals an internal error.
    """
    if i < 0:
        raise ValueError("the congruence form needs a nonnegative exponent")
    if pi.symbol != "t" or u.symbol != "t":
        raise ValueError("pi and u must be series in the base uniformizer")
    if pi.is_zero() or pi.valuation != 1:
        raise ValueError("pi must be a uniformizer of the base field")
    if u.is_zero() or u.valuation != 0:
        raise ValueError("u must be a unit of the base field")
    if beta.is_zero():
        raise ValueError("beta must be nonzero")
    q, e = ext.q, ext.e
    v_l = beta.valuation
    num = beta ** (q**i - 1)
    exp_pi, rem1 = divmod((q**i - 1) * v_l, e)
    exp_u, rem2 = divmod((q - 1) * v_l, e)
    assert rem1 == 0 and rem2 == 0, "tameness makes these exponents integral"
    window = max(len(beta.coeffs), 1)
    signed_pi = (ext.embed(pi) * _sign_constant(ext)).truncate(window)
    den = signed_pi**exp_pi * ext.embed(u).truncate(window) ** exp_u
    quotient = num / den
    if quotient.is_zero() or quotient.valuation != 0:
        raise ArithmeticError(
            "congruence quotient is not a unit: internal error")
    return quotient.residue()


def reciprocity_search(ext: TameAbelianExtension, pi: LaurentSeries,
                       u: LaurentSeries, i: int) -> GaloisElement:
    """Resolve the class of u * pi^i by scanning the Galois group.

    The congruence residues at beta = alpha and at a residue-field
    generator pin the pair (a, c) completely in the tame case; exactly one
    group element may match.
    """
    alpha = ext.uniformizer()
    omega = ext.constant(ext.tower.generator())
    want_alpha = congruence_rhs(ext, pi, u, i, alpha)
    want_omega = congruence_rhs(ext, pi, u, i, omega)
    matches = [
        g for g in ext.galois_group()
        if (g.apply(alpha) / alpha).residue() == want_alpha
        and (g.apply(omega) / omega).residue() == want_omega
    ]
    if len(matches) != 1:
        raise ArithmeticError(
            f"congruence search found {len(matches)} matches; "
            "the tame rigidity argument guarantees exactly one")
    return matches[0]


def norm(ext: TameAbelianExtension, beta: LaurentSeries) -> LaurentSeries:
    """Norm to the base field: the product of all Galois conjugates.

    The result is audited to lie in K and returned as a series in t; its
    t-valuation is f times the alpha-valuation of beta.
    """
    if beta.is_zero():
        raise ValueError("the norm of zero is not defined here")
    prod = None
    for g in ext.galois_group():
        img = g.apply(beta)
        prod = img if prod is None else prod * img
    try:
        out = ext.project(prod)
    except ValueError as exc:
        raise ArithmeticError(
            f"norm image failed the base-membership audit: {exc}") from exc
    assert out.valuation == ext.f * beta.valuation
    return out


@dataclass(frozen=True)
class NormGroupPresentation:
    """K*/N(L*) as the cokernel of the norm image inside Z x k*.

    The unit coordinate is the discrete log with respect to
    ``subfield_generator``. ``generator_rows`` are the classes of the
    norms of alpha and of a residue generator; ``relation_matrix`` adds
    the ambient relation (0, q-1) and its Smith form gives the invariant
    factors of the quotient.
    """

    ext: TameAbelianExtension = field(repr=False)
    subfield_generator: FieldElement
    generator_rows: tuple
    relation_matrix: tuple
    invariant_factors: tuple
    coset_representatives: tuple
    quotient_order: int

    def contains(self, b: BaseFieldClass) -> bool:
        """Is the class a norm? Solves m * row1 + n * row2 = class."""
        f = self.ext.f
        big_q = max(self.ext.q - 1, 1)
        if b.valuation % f != 0:
            return False
        mth = b.valuation // f
        d1 = self.generator_rows[0][1]
        d2 = self.generator_rows[1][1]
        d = math.gcd(d2, big_q)
        rem = (b.unit.subfield_log() - mth * d1) % big_q
        return rem % d == 0


def norm_group(ext: TameAbelianExtension) -> NormGroupPresentation:
    """Smith-form presentation of K* modulo the norm image.

    Generated by the classes of N(alpha) and N(omega) for a residue
    generator omega; 1-units contribute nothing because they are norms.
    The quotient order must come out as e*f.
    """
    tower = ext.tower
    gen = tower.generator()
    gk = tower.subfield_generator()
    big_q = max(tower.subfield_units, 1)

    alpha_norm = norm(ext, ext.uniformizer())
    d1 = alpha_norm.leading_coefficient.subfield_log()
    omega_norm = norm(ext, ext.constant(gen))
    d2 = omega_norm.leading_coefficient.subfield_log()

    rows = [[ext.f, d1], [0, d2], [0, big_q]]
    factors = tuple(invariant_factors(rows))
    order = 1
    for d in factors:
        order *= d
    assert order == ext.degree, (
        f"norm quotient has order {order}, expected {ext.degree}")

    d = math.gcd(d2, big_q)
    assert ext.f * d == ext.degree
    reps = tuple(BaseFieldClass(i, gk**j)
                 for i in range(ext.f) for j in range(d))
    return NormGroupPresentation(
        ext=ext, subfield_generator=gk,
        generator_rows=((ext.f, d1), (0, d2)),
        relation_matrix=tuple(tuple(r) for r in rows),
        invariant_factors=factors,
        coset_representatives=reps,
        quotient_order=order)


def is_norm(ext: TameAbelianExtension, b: BaseFieldClass) -> bool:
    """Norm-group membership of a base-field class."""
    return norm_group(ext).contains(b)


@dataclass
class NormCongruenceReport:
    unit_checks: int
    uniformizer_checks: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_norm_congruences(ext: TameAbelianExtension, rng,
                            unit_samples: int = 100,
                            uniformizer_samples: int = 10
                            ) -> NormCongruenceReport:
    """Residue identities satisfied by norms, checked on random samples.

    For a unit u of L: the residue of N(u) equals the residue norm of
    ubar raised to the e-th power. For a uniformizer w * alpha: the
    residue of N(pi_L) / ((-1)^(e-1) t)^f equals the residue norm of the
    unit pi_L^e / t.
    """
    tower = ext.tower
    failures = []
    for n in range(unit_samples):
        u = random_unit_series(ext, rng)
        lhs = norm(ext, u).residue()
        rhs = u.residue().norm_to_subfield() ** ext.e
        if lhs != rhs:
            failures.append(f"unit sample {n}: N(u) residue {lhs} != {rhs} "
                            f"for u = {u}")
    sign = _sign_constant(ext)
    t_emb = ext.embed(ext.base_uniformizer())
    for n in range(uniformizer_samples):
        w = random_unit_series(ext, rng)
        pi_l = w * ext.uniformizer()
        u_series = pi_l**ext.e / t_emb
        assert u_series.valuation == 0
        lhs_series = norm(ext, pi_l) / (ext.base_uniformizer()
                                        * sign) ** ext.f
        lhs = lhs_series.residue()
        rhs = u_series.residue().norm_to_subfield()
        if lhs != rhs:
            failures.append(
                f"uniformizer sample {n}: {lhs} != {rhs} for w = {w}")
    return NormCongruenceReport(unit_samples, uniformizer_samples, failures)


def random_element(tower, rng) -> FieldElement:
    idx = rng.randrange(tower.size)
    return tower.zero() if idx == 0 else FieldElement(tower, idx - 1)


def random_unit_series(ext: TameAbelianExtension, rng,
                       valuation: int = 0,
                       symbol: str = EXT_SYMBOL) -> LaurentSeries:
    """A random series with unit leading coefficient, at ext precision."""
    tower = ext.tower
    lead = FieldElement(tower, rng.randrange(tower.order))
    rest = [random_element(tower, rng) for _ in range(ext.precision - 1)]
    return LaurentSeries(tower, symbol, valuation, [lead] + rest)


def random_base_unit_series(ext: TameAbelianExtension, rng,
                            valuation: int = 0) -> LaurentSeries:
    """A random unit of K: coefficients drawn from the subfield k."""
    tower = ext.tower
    gk = tower.subfield_generator()
    units = max(tower.subfield_units, 1)

    def pick(allow_zero=True):
        j = rng.randrange(units + 1)
        if j == units:
            return tower.zero() if allow_zero else tower.one()
        return gk**j

    coeffs = [pick(allow_zero=False)]
    coeffs += [pick() for _ in range(ext.precision - 1)]
    return LaurentSeries(tower, "t", valuation, coeffs)

