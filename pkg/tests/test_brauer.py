import math
from fractions import Fraction

import pytest

from lcft import brauer
from lcft import reciprocity as rc


def _pi_class(ext):
    return rc.BaseFieldClass(1, ext.tower.one())


def test_character_group_sizes_and_additivity(matrix):
    for name, ext in matrix.items():
        chars = brauer.character_group(ext)
        assert len(chars) == ext.degree
        assert len(set(chars)) == ext.degree
        group = ext.galois_group()
        for chi in chars:
            assert chi(ext.identity()) == 0
            for g in group:
                for h in group:
                    assert chi(g * h) == (chi(g) + chi(h)) % 1


def test_faithful_character_counts(matrix):
    for name, ext in matrix.items():
        chars = brauer.character_group(ext)
        n_faithful = sum(1 for chi in chars if chi.is_faithful())
        if ext.is_cyclic():
            n = ext.degree
            expected = sum(1 for k in range(1, n + 1)
                           if math.gcd(k, n) == 1)
        else:
            expected = 0
        assert n_faithful == expected, name


def test_from_generator_examples(matrix):
    ext = matrix["mixed_c9"]
    sigma = ext.residue_frobenius_lift()
    chi = brauer.Character.from_generator(ext, sigma)
    assert chi(sigma) == Fraction(1, 9)
    assert chi(sigma**3) == Fraction(1, 3)    # additivity
    assert chi.is_faithful()
    trivial = brauer.Character.from_generator(ext, sigma, 0)
    assert trivial.is_trivial()
    # faithful iff gcd(k, n) = 1
    assert not brauer.Character.from_generator(ext, sigma, 3).is_faithful()
    with pytest.raises(ValueError):
        brauer.Character.from_generator(ext, sigma**3)


def test_two_element_character(matrix):
    ext = matrix["unram_f2"]
    frob = ext.frobenius_element()
    chi = brauer.Character.from_generator(ext, frob)
    assert chi(frob) == Fraction(1, 2)        # the only nontrivial value


def test_hasse_invariant_examples(matrix):
    ext = matrix["unram_f2"]
    chi = brauer.Character.from_generator(ext, ext.frobenius_element())
    assert brauer.hasse_invariant(chi, _pi_class(ext)) == Fraction(1, 2)
    trivial = brauer.Character.from_generator(ext, ext.frobenius_element(), 0)
    assert brauer.hasse_invariant(trivial, _pi_class(ext)) == 0
    # norms land at 0 under any faithful character
    for b in rc.norm_group(ext).coset_representatives:
        assert (brauer.hasse_invariant(chi, b) == 0) == rc.is_norm(ext, b)


def test_unramified_invariant_formula(matrix, rng):
    ext = matrix["unram_f2"]
    frob = ext.frobenius_element()
    chars = brauer.character_group(ext)
    gk = ext.tower.subfield_generator()
    for chi in chars:
        for i in range(-3, 4):
            for j in range(ext.tower.subfield_units):
                b = rc.BaseFieldClass(i, gk**j)
                assert brauer.hasse_invariant(chi, b) == \
                    (i * chi(frob)) % 1


def test_bilinearity(matrix, rng):
    for name, ext in matrix.items():
        chars = brauer.character_group(ext)
        reps = rc.norm_group(ext).coset_representatives
        for _ in range(25):
            c1, c2 = rng.choice(chars), rng.choice(chars)
            b1, b2 = rng.choice(reps), rng.choice(reps)
            assert brauer.hasse_invariant(c1, b1 * b2) == (
                brauer.hasse_invariant(c1, b1)
                + brauer.hasse_invariant(c1, b2)) % 1, name
            assert brauer.hasse_invariant(c1 + c2, b1) == (
                brauer.hasse_invariant(c1, b1)
                + brauer.hasse_invariant(c2, b1)) % 1, name


def test_faithful_invariant_has_full_order(matrix):
    for name, ext in matrix.items():
        if not ext.is_cyclic() or ext.degree == 1:
            continue
        chi = next(c for c in brauer.character_group(ext) if c.is_faithful())
        reps = rc.norm_group(ext).coset_representatives
        generator_b = next(
            b for b in reps
            if rc.reciprocity_map(ext, b).order() == ext.degree)
        inv = brauer.hasse_invariant(chi, generator_b)
        assert inv.denominator == ext.degree, name


def test_frobenius_exponent_unramified(matrix):
    ext = matrix["unram_f2"]
    spec = brauer.CyclicAlgebraSpec(ext, ext.frobenius_element(),
                                    _pi_class(ext))
    assert brauer.frobenius_exponent(spec) == 1


def test_frobenius_exponent_mixed_generates(matrix):
    for name in ("mixed_c9", "mixed_e2_cyclic"):
        ext = matrix[name]
        sigma = next(g for g in ext.galois_group()
                     if g.order() == ext.degree)
        spec = brauer.CyclicAlgebraSpec(ext, sigma, _pi_class(ext))
        r = brauer.frobenius_exponent(spec)
        assert sigma**r == rc.reciprocity_map(ext, _pi_class(ext))
        # the class of t generates here, so the exponent is a unit mod ef
        assert math.gcd(r, ext.degree) == 1, name


def test_frobenius_exponent_ramified_non_generator(matrix):
    # t is itself a norm for this extension, so its image is the identity
    ext = matrix["ram_e2"]
    sigma = ext.galois_element(0, 4)
    spec = brauer.CyclicAlgebraSpec(ext, sigma, _pi_class(ext))
    r = brauer.frobenius_exponent(spec)
    assert r == 0
    assert (sigma**r).is_identity()
    # the criterion residue ((-1)^(e-1) u0)^((q-1)/e) = 1 pins r mod 2
    crit = (ext.tower.minus_one() * ext.u0) ** ((ext.q - 1) // ext.e)
    assert crit == ext.tower.one()


def test_generator_unit_exponent_is_coprime_when_ramified(matrix):
    # the class of a residue generator always generates the quotient
    # of a totally ramified extension, so its exponent is invertible
    for name in ("ram_e2", "ram_e4"):
        ext = matrix[name]
        sigma = next(g for g in ext.galois_group()
                     if g.order() == ext.degree)
        gk = ext.tower.subfield_generator()
        target = rc.reciprocity_map(ext, rc.BaseFieldClass(0, gk))
        r, g = 0, ext.identity()
        while g != target:
            g, r = g * sigma, r + 1
        assert math.gcd(r, ext.degree) == 1, name


def test_cyclic_spec_requires_generator(matrix):
    ext = matrix["split_c3c3"]
    some = ext.galois_group()[1]
    with pytest.raises(ValueError):
        brauer.CyclicAlgebraSpec(ext, some, _pi_class(ext))


def test_crossed_product_square_example(matrix):
    # (delta v)^2 = delta sigma(delta) v^2 = -t * t for the quadratic case
    ext = matrix["ram_e2"]
    sigma = ext.galois_element(0, 4)
    spec = brauer.CyclicAlgebraSpec(ext, sigma, _pi_class(ext))
    alg = brauer.CrossedProduct(spec, 8)
    delta_v = alg.multiply(alg.scalar(ext.uniformizer(8)), alg.v())
    square = alg.multiply(delta_v, delta_v)
    t_emb = ext.embed(ext.base_uniformizer(8))
    assert alg.equal(square,
                     alg.scalar(t_emb * t_emb * ext.tower.minus_one()))


def test_crossed_product_rank_one():
    from lcft.extension import TameAbelianExtension
    ext = TameAbelianExtension.from_parameters(3, 1, 1, 1, "1")
    spec = brauer.CyclicAlgebraSpec(ext, ext.identity(), _pi_class(ext))
    alg = brauer.CrossedProduct(spec, 8)
    assert alg.equal(alg.power(alg.v(), 1), alg.scalar(alg.b_series))


def test_cyclic_algebra_check(matrix, rng):
    for name in ("ram_e2", "ram_e4", "mixed_c9", "mixed_e2_cyclic",
                 "unram_f2"):
        ext = matrix[name]
        sigma = next(g for g in ext.galois_group()
                     if g.order() == ext.degree)
        spec = brauer.CyclicAlgebraSpec(ext, sigma, _pi_class(ext))
        report = brauer.cyclic_algebra_check(spec, rng, samples=20)
        assert report.passed, (name, report.failures[:3])
        assert report.associativity_checks == 20
