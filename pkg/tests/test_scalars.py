import random
from fractions import Fraction

import pytest

from fpalg import (
    FieldAutomorphism,
    FieldSpec,
    MismatchError,
    ModScalar,
    Scalar,
    apply_automorphism,
    compose,
    invert,
    scalar_arith,
)
from randgen import rich_scalar

Q = FieldSpec(0)
QT = FieldSpec(1)
QT2 = FieldSpec(2)


def s(field, v):
    return Scalar.from_int(field, v)


class TestArithmetic:
    def test_polynomial_cancellation(self):
        t = Scalar.generator(QT, 0)
        assert scalar_arith(t * t - s(QT, 1), t - s(QT, 1), "div") == t + s(QT, 1)

    def test_additive_identity(self):
        t = Scalar.generator(QT, 0)
        a = (t + s(QT, 3)) / (t * t + s(QT, 1))
        assert scalar_arith(a, Scalar.zero(QT), "add") == a

    def test_multiplicative_inverse(self):
        t = Scalar.generator(QT, 0)
        assert scalar_arith(s(QT, 1) / t, t, "mul") == Scalar.one(QT)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            scalar_arith(s(Q, 1), Scalar.zero(Q), "div")

    def test_field_mismatch(self):
        with pytest.raises(MismatchError):
            s(Q, 1) + s(QT, 1)

    def test_canonical_uniqueness_bitwise(self):
        t = Scalar.generator(QT, 0)
        one = Scalar.one(QT)
        a = (t ** 2 - one) / (t - one)
        b = t + one
        assert a == b
        assert str(a) == str(b)
        assert a.numerator == b.numerator and a.denominator == b.denominator

    def test_canonical_routes_random(self):
        rng = random.Random(7)
        for _ in range(200):
            a = rich_scalar(rng, QT2)
            b = rich_scalar(rng, QT2, depth=2)
            if b.is_zero():
                continue
            left = (a / b) * b
            assert left == a
            assert str(left) == str(a)

    def test_denominator_sign_convention(self):
        t = Scalar.generator(QT, 0)
        a = Scalar.one(QT) / (Scalar.from_int(QT, -1) * t + Scalar.one(QT))
        # denominator t1 - 1 has positive leading coefficient
        assert str(a) == "(-1)/(t1 - 1)"

    def test_fraction_constants(self):
        a = Scalar.from_fraction(Q, Fraction(6, -4))
        assert a.as_fraction() == Fraction(-3, 2)
        assert str(a) == "(-3)/(2)"


class TestAutomorphisms:
    def test_shift_on_reciprocal(self):
        sigma = FieldAutomorphism.affine(QT, 0, 1, 1)
        t = Scalar.generator(QT, 0)
        image = apply_automorphism(sigma, Scalar.one(QT) / t)
        assert image == Scalar.one(QT) / (t + Scalar.one(QT))

    def test_identity_fixes(self):
        rng = random.Random(11)
        ident = FieldAutomorphism.identity(QT2)
        for _ in range(50):
            a = rich_scalar(rng, QT2)
            assert apply_automorphism(ident, a) == a

    def test_swap_on_ratio(self):
        sigma = FieldAutomorphism.permutation(QT2, [1, 0])
        t1 = Scalar.generator(QT2, 0)
        t2 = Scalar.generator(QT2, 1)
        assert apply_automorphism(sigma, t1 / t2) == t2 / t1

    def test_mismatched_field(self):
        sigma = FieldAutomorphism.identity(QT)
        with pytest.raises(MismatchError):
            apply_automorphism(sigma, s(QT2, 1))

    def test_compose_scale_with_inverse_scale(self):
        double = FieldAutomorphism.affine(QT, 0, 2, 0)
        halve = FieldAutomorphism.affine(QT, 0, Fraction(1, 2), 0)
        assert compose(double, halve).is_identity()

    def test_compose_transposition_involution(self):
        swap = FieldAutomorphism.permutation(QT2, [1, 0])
        assert compose(swap, swap).is_identity()

    def test_compose_shifts(self):
        shift = FieldAutomorphism.affine(QT, 0, 1, 1)
        twice = compose(shift, shift)
        t = Scalar.generator(QT, 0)
        assert twice(t) == t + s(QT, 2)

    def test_invert_shift(self):
        shift = FieldAutomorphism.affine(QT, 0, 1, 1)
        t = Scalar.generator(QT, 0)
        assert invert(shift)(t) == t - Scalar.one(QT)

    def test_invert_identity(self):
        assert invert(FieldAutomorphism.identity(QT)).is_identity()

    def test_invert_transposition_is_itself(self):
        swap = FieldAutomorphism.permutation(QT2, [1, 0])
        assert invert(swap) == swap

    def test_double_inversion(self):
        rng = random.Random(13)
        from randgen import random_automorphism

        for _ in range(50):
            sigma = random_automorphism(rng, QT2)
            assert invert(invert(sigma)) == sigma

    def test_forward_backward_fix_generators(self):
        rng = random.Random(17)
        from randgen import random_automorphism

        field = FieldSpec(3)
        for _ in range(30):
            sigma = random_automorphism(rng, field)
            for i in range(3):
                ti = Scalar.generator(field, i)
                assert invert(sigma)(sigma(ti)) == ti
                assert sigma(invert(sigma)(ti)) == ti


class TestHomomorphismLaws:
    def test_ring_homomorphism_on_random_scalars(self):
        rng = random.Random(23)
        from randgen import random_automorphism

        field = FieldSpec(2)
        for _ in range(1000):
            sigma = random_automorphism(rng, field)
            a = rich_scalar(rng, field, depth=2)
            b = rich_scalar(rng, field, depth=2)
            assert sigma(a + b) == sigma(a) + sigma(b)
            assert sigma(a * b) == sigma(a) * sigma(b)
        assert sigma(Scalar.one(field)) == Scalar.one(field)

    def test_roundtrip_on_random_scalars(self):
        rng = random.Random(29)
        from randgen import random_automorphism

        field = FieldSpec(2)
        for _ in range(1000):
            sigma = random_automorphism(rng, field)
            a = rich_scalar(rng, field, depth=2)
            assert apply_automorphism(invert(sigma), apply_automorphism(sigma, a)) == a


class TestModScalar:
    def test_arithmetic(self):
        a = ModScalar(3, 5)
        assert a + a == ModScalar(1, 5)
        assert a * a == ModScalar(4, 5)
        assert -a == ModScalar(2, 5)
        assert a / ModScalar(2, 5) == ModScalar(4, 5)

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            ModScalar(1, 4)
        with pytest.raises(ValueError):
            ModScalar(1, 9)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ModScalar(1, 5) / ModScalar(0, 5)
