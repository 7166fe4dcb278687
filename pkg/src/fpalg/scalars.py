"""Exact arithmetic in Q(t1,...,tk) and a supported class of its automorphisms.

A scalar is a quotient of two integer-coefficient multivariate polynomials in
the transcendental generators t1,...,tk, kept in a canonical reduced form:
gcd(numerator, denominator) = 1 over Z[t1,...,tk] and the denominator has
positive leading coefficient under graded-lex order with t1 < t2 < ... < tk.
Equal field elements therefore always have identical representations.

Automorphisms are restricted to the invertible coefficient-field maps
generated by generator permutations and per-generator affine maps
t_i -> a*t_i + b with a != 0.  This class is closed under composition; every
element has the shape t_i -> a_i * t_{pi(i)} + b_i for a permutation pi, and
its inverse is stored explicitly.

A finite-field scalar mode (ModScalar, odd prime modulus, no transcendentals)
is provided for the brute-force congruence searches in the aalpha module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy.polys.domains import QQ, ZZ
from sympy.polys.rings import ring as _sympy_ring


class MismatchError(ValueError):
    """Raised when operands live over different coefficient fields."""


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field Q(t1,...,tk); k = 0 means plain Q."""

    num_generators: int = 0

    def __post_init__(self):
        if self.num_generators < 0:
            raise ValueError("number of transcendental generators must be >= 0")

    def generator_names(self):
        return tuple(f"t{i + 1}" for i in range(self.num_generators))

    def __str__(self):
        if self.num_generators == 0:
            return "Q"
        return "Q(" + ",".join(self.generator_names()) + ")"


@lru_cache(maxsize=None)
def _int_ring(k):
    return _sympy_ring(" ".join(f"t{i + 1}" for i in range(k)), ZZ)[0]


@lru_cache(maxsize=None)
def _rat_ring(k):
    return _sympy_ring(" ".join(f"t{i + 1}" for i in range(k)), QQ)[0]


def _grlex_key(monomial):
    # graded-lex with t1 < t2 < ... < tk: higher-index generators dominate ties
    return (sum(monomial), tuple(reversed(monomial)))


def _leading_coeff(poly):
    lead = max(poly.keys(), key=_grlex_key)
    return poly[lead]


def _monomial_text(monomial, coeff):
    parts = []
    for i, e in enumerate(monomial):
        if e == 1:
            parts.append(f"t{i + 1}")
        elif e > 1:
            parts.append(f"t{i + 1}^{e}")
    c = int(coeff)
    if not parts:
        return str(c)
    body = "*".join(parts)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def _poly_text(poly):
    if not poly:
        return "0"
    pieces = []
    for monomial in sorted(poly.keys(), key=_grlex_key, reverse=True):
        pieces.append(_monomial_text(monomial, poly[monomial]))
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += " - " + piece[1:]
        else:
            text += " + " + piece
    return text


class Scalar:
    """An element of Q(t1,...,tk) in canonical reduced form."""

    __slots__ = ("field", "_num", "_den")

    def __init__(self, field, num, den):
        # internal constructor; use the classmethods or arithmetic instead
        self.field = field
        self._num = num
        self._den = den

    # -- construction -----------------------------------------------------

    @classmethod
    def _make(cls, field, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        R = _int_ring(field.num_generators)
        if not num:
            return cls(field, R.zero, R.one)
        g = num.gcd(den)
        num = num.exquo(g)
        den = den.exquo(g)
        if _leading_coeff(den) < 0:
            num, den = -num, -den
        return cls(field, num, den)

    @classmethod
    def from_int(cls, field, value):
        R = _int_ring(field.num_generators)
        return cls(field, R(value), R.one)

    @classmethod
    def from_fraction(cls, field, value):
        value = Fraction(value)
        R = _int_ring(field.num_generators)
        return cls._make(field, R(value.numerator), R(value.denominator))

    @classmethod
    def generator(cls, field, index):
        if not 0 <= index < field.num_generators:
            raise ValueError(f"generator index {index} outside {field}")
        R = _int_ring(field.num_generators)
        return cls(field, R.gens[index], R.one)

    @classmethod
    def zero(cls, field):
        return cls.from_int(field, 0)

    @classmethod
    def one(cls, field):
        return cls.from_int(field, 1)

    # -- queries -----------------------------------------------------------

    @property
    def numerator(self):
        """Canonical integer-coefficient numerator polynomial (read-only)."""
        return self._num

    @property
    def denominator(self):
        """Canonical integer-coefficient denominator polynomial (read-only)."""
        return self._den

    def __bool__(self):
        return bool(self._num)

    def is_zero(self):
        return not self._num

    def is_one(self):
        R = _int_ring(self.field.num_generators)
        return self._num == R.one and self._den == R.one

    def as_integer(self):
        """The value as a Python int when it is an integer constant, else None."""
        if self._den != _int_ring(self.field.num_generators).one:
            return None
        if not self._num:
            return 0
        items = list(self._num.items())
        if len(items) == 1 and not any(items[0][0]):
            return int(items[0][1])
        return None

    def as_fraction(self):
        """The value as a Fraction when constant, else None."""
        n = _constant_of(self._num)
        d = _constant_of(self._den)
        if n is None or d is None:
            return None
        return Fraction(n, d)

    def support_indices(self):
        """Set of generator indices occurring in numerator or denominator."""
        out = set()
        for poly in (self._num, self._den):
            for monomial in poly.keys():
                for i, e in enumerate(monomial):
                    if e:
                        out.add(i)
        return frozenset(out)

    def support_traversal(self):
        """Generator indices in canonical visit order: numerator before
        denominator, monomials in descending graded-lex order, variables
        within a monomial by descending exponent then ascending index."""
        for poly in (self._num, self._den):
            for monomial in sorted(poly.keys(), key=_grlex_key, reverse=True):
                idxs = [i for i, e in enumerate(monomial) if e]
                idxs.sort(key=lambda i: (-monomial[i], i))
                yield from idxs

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise MismatchError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        return Scalar._make(
            self.field,
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        )

    def __sub__(self, other):
        self._check(other)
        return Scalar._make(
            self.field,
            self._num * other._den - other._num * self._den,
            self._den * other._den,
        )

    def __mul__(self, other):
        self._check(other)
        return Scalar._make(self.field, self._num * other._num, self._den * other._den)

    def __truediv__(self, other):
        self._check(other)
        if not other._num:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar._make(self.field, self._num * other._den, self._den * other._num)

    def __neg__(self):
        return Scalar(self.field, -self._num, self._den)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        if exponent < 0:
            return Scalar.one(self.field) / self ** (-exponent)
        return Scalar._make(self.field, self._num ** exponent, self._den ** exponent)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.field == other.field
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self):
        return hash(
            (
                self.field,
                tuple(sorted((m, int(c)) for m, c in self._num.items())),
                tuple(sorted((m, int(c)) for m, c in self._den.items())),
            )
        )

    # -- text ----------------------------------------------------------------

    def __str__(self):
        if self._den == _int_ring(self.field.num_generators).one:
            return _poly_text(self._num)
        return f"({_poly_text(self._num)})/({_poly_text(self._den)})"

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


def _constant_of(poly):
    if not poly:
        return 0
    items = list(poly.items())
    if len(items) == 1 and not any(items[0][0]):
        return int(items[0][1])
    return None


def scalar_arith(a, b, op):
    """Dispatch form of the field operations; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def one_like(x):
    if isinstance(x, Scalar):
        return Scalar.one(x.field)
    if isinstance(x, ModScalar):
        return ModScalar(1, x.modulus)
    raise TypeError(type(x).__name__)


def zero_like(x):
    if isinstance(x, Scalar):
        return Scalar.zero(x.field)
    if isinstance(x, ModScalar):
        return ModScalar(0, x.modulus)
    raise TypeError(type(x).__name__)


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldAutomorphism:
    """An invertible map of Q(t1,...,tk) from the supported class.

    ``forward[i] = (j, a, b)`` records the image t_i -> a*t_j + b with a != 0
    and i -> j a permutation; ``backward`` is the explicit inverse in the same
    shape.  Compositions of generator permutations and per-generator affine
    maps all normalize to this form.
    """

    field: FieldSpec
    forward: tuple
    backward: tuple

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, field):
        images = tuple((i, Fraction(1), Fraction(0)) for i in range(field.num_generators))
        return cls(field, images, images)

    @classmethod
    def from_images(cls, field, images):
        """Build from forward images [(target, a, b), ...], one per generator."""
        k = field.num_generators
        images = tuple((j, Fraction(a), Fraction(b)) for (j, a, b) in images)
        if len(images) != k:
            raise ValueError(f"need {k} images, got {len(images)}")
        targets = [j for (j, _, _) in images]
        if sorted(targets) != list(range(k)):
            raise ValueError("generator targets do not form a permutation")
        for (j, a, _) in images:
            if not 0 <= j < k:
                raise ValueError(f"target index {j} out of range")
            if a == 0:
                raise ValueError("scale a = 0 is not invertible")
        backward = [None] * k
        for i, (j, a, b) in enumerate(images):
            backward[j] = (i, 1 / a, -b / a)
        return cls(field, images, tuple(backward))

    @classmethod
    def permutation(cls, field, targets):
        """The automorphism t_i -> t_{targets[i]}."""
        return cls.from_images(
            field, [(j, Fraction(1), Fraction(0)) for j in targets]
        )

    @classmethod
    def affine(cls, field, index, a, b):
        """The automorphism fixing all generators except t_index -> a*t_index + b."""
        images = [(i, Fraction(1), Fraction(0)) for i in range(field.num_generators)]
        images[index] = (index, Fraction(a), Fraction(b))
        return cls.from_images(field, images)

    # -- queries -----------------------------------------------------------

    def is_identity(self):
        return all(
            j == i and a == 1 and b == 0 for i, (j, a, b) in enumerate(self.forward)
        )

    # -- action ------------------------------------------------------------

    def __call__(self, scalar):
        return apply_automorphism(self, scalar)

    def __str__(self):
        clauses = []
        for i, (j, a, b) in enumerate(self.forward):
            if j == i and a == 1 and b == 0:
                continue
            clauses.append(f"t{i + 1} -> {_affine_text(j, a, b)}")
        if not clauses:
            return "identity"
        return ", ".join(clauses)


def _fraction_text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

def _affine_text(j, a, b):
    if a == 1:
        head = f"t{j + 1}"
    elif a == -1:
        head = f"-t{j + 1}"
    else:
        head = f"{_fraction_text(a)}*t{j + 1}"
    if b == 0:
        return head
    if b > 0:
        return f"{head} + {_fraction_text(b)}"
    return f"{head} - {_fraction_text(-b)}"


def apply_automorphism(sigma, a):
    """Apply sigma to a scalar by substituting its generator images."""
    if not isinstance(a, Scalar):
        raise TypeError("apply_automorphism expects a Scalar")
    if sigma.field != a.field:
        raise MismatchError(f"field mismatch: {sigma.field} vs {a.field}")
    k = sigma.field.num_generators
    if k == 0 or sigma.is_identity():
        return a
    Rq = _rat_ring(k)
    images = []
    for (j, fa, fb) in sigma.forward:
        images.append(Rq.gens[j] * QQ(fa.numerator, fa.denominator)
                      + QQ(fb.numerator, fb.denominator))
    num_q = _substitute(a._num, images, Rq)
    den_q = _substitute(a._den, images, Rq)
    return _scalar_from_rat_pair(a.field, num_q, den_q)


def _substitute(poly, images, Rq):
    acc = Rq.zero
    for monomial, coeff in poly.items():
        term = Rq(int(coeff))
        for i, e in enumerate(monomial):
            if e:
                term = term * images[i] ** e
        acc = acc + term
    return acc


def _scalar_from_rat_pair(field, num_q, den_q):
    common = 1
    for poly in (num_q, den_q):
        for _, coeff in poly.items():
            common = math.lcm(common, int(coeff.denominator))
    R = _int_ring(field.num_generators)
    num = R.from_dict({m: int(c * common) for m, c in (num_q * common).items()})
    den = R.from_dict({m: int(c * common) for m, c in (den_q * common).items()})
    return Scalar._make(field, num, den)


def compose(sigma, tau):
    """The automorphism a -> sigma(tau(a))."""
    if sigma.field != tau.field:
        raise MismatchError(f"field mismatch: {sigma.field} vs {tau.field}")
    forward = []
    for (j, a, b) in tau.forward:
        (j2, c, d) = sigma.forward[j]
        forward.append((j2, a * c, a * d + b))
    return FieldAutomorphism.from_images(sigma.field, forward)


def invert(sigma):
    """The inverse automorphism; forward and backward swap roles."""
    return FieldAutomorphism(sigma.field, sigma.backward, sigma.forward)


# ---------------------------------------------------------------------------
# finite-field mode
# ---------------------------------------------------------------------------


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ModScalar:
    """An element of F_p, p an odd prime.  Oracle-search companion to Scalar."""

    value: int
    modulus: int

    def __post_init__(self):
        if not _is_odd_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not an odd prime")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _check(self, other):
        if not isinstance(other, ModScalar):
            raise TypeError(f"expected ModScalar, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise MismatchError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other):
        self._check(other)
        return ModScalar(self.value + other.value, self.modulus)

    def __sub__(self, other):
        self._check(other)
        return ModScalar(self.value - other.value, self.modulus)

    def __mul__(self, other):
        self._check(other)
        return ModScalar(self.value * other.value, self.modulus)

    def __truediv__(self, other):
        self._check(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero in F_p")
        inv = pow(other.value, self.modulus - 2, self.modulus)
        return ModScalar(self.value * inv, self.modulus)

    def __neg__(self):
        return ModScalar(-self.value, self.modulus)

    def __bool__(self):
        return self.value != 0

    def is_zero(self):
        return self.value == 0

    def __str__(self):
        return str(self.value)
