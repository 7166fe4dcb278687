"""The one-relation quadratic family and its isomorphism classification.

A_alpha is the algebra on two generators with the single relation
x1^2 + x2^2 + alpha*x1*x2 = 0.  Two members are isomorphic exactly when the
parameters agree up to sign; the decision is backed by an explicit 2x2
congruence analysis of the relation's coefficient form (1 alpha; 0 1) and a
brute-force witness search over small prime fields as an independent oracle.

The not-congruent certificate comes from two invariants of a congruence
Q^T * F_beta * Q = gamma * F_alpha with Q invertible, gamma != 0:

  * the antisymmetric parts transform by det(Q), giving
    beta*det(Q) = gamma*alpha;
  * the symmetric-part determinants give
    (4 - beta^2)*det(Q)^2 = gamma^2*(4 - alpha^2).

Together these force det(Q)^2 = gamma^2 and hence beta^2 = alpha^2, so the
evaluated inequality beta^2 != alpha^2 refutes every candidate witness at
once.  The derivation only divides by 2, so it is valid in characteristic 0
and over every odd prime field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import NCPoly
from .presentation import Presentation
from .rewrite import groebner, is_generating, normal_form
from .scalars import (
    ModScalar,
    Scalar,
    apply_automorphism,
    one_like,
    zero_like,
)

# 2x2 matrices are tuples of row tuples of scalar-like entries.


def mat2(a, b, c, d):
    return ((a, b), (c, d))


def mat2_mul(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def mat2_transpose(A):
    return ((A[0][0], A[1][0]), (A[0][1], A[1][1]))


def mat2_det(A):
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def mat2_scale(c, A):
    return ((c * A[0][0], c * A[0][1]), (c * A[1][0], c * A[1][1]))


def mat2_identity(like):
    one, zero = one_like(like), zero_like(like)
    return mat2(one, zero, zero, one)


@dataclass(frozen=True)
class BilinearForm2:
    """A 2x2 coefficient form of a quadratic expression in x1, x2."""

    entries: tuple

    def quadratic(self, field, num_gens=2):
        """The polynomial sum of entries[i][j] * x_(i+1) * x_(j+1)."""
        pairs = []
        for i in range(2):
            for j in range(2):
                pairs.append(((i, j), self.entries[i][j]))
        return NCPoly.from_terms(field, num_gens, pairs)


@dataclass(frozen=True)
class CongruenceWitness:
    """An invertible change of basis Q and a nonzero scale gamma."""

    q: tuple
    gamma: object

    def __post_init__(self):
        if not mat2_det(self.q):
            raise ValueError("witness matrix must be nonsingular")
        if not self.gamma:
            raise ValueError("witness scale must be nonzero")


@dataclass(frozen=True)
class CongruenceDecision:
    congruent: bool
    witness: CongruenceWitness | None = None
    certificate: tuple | None = None  # (beta^2, alpha^2), evaluated, unequal


def make_aalpha(alpha):
    """The presentation <x1, x2 | x1^2 + x2^2 + alpha*x1*x2 = 0>."""
    if not isinstance(alpha, Scalar):
        raise TypeError("make_aalpha expects a Scalar parameter")
    one = Scalar.one(alpha.field)
    rel = NCPoly.from_terms(
        alpha.field, 2, [((0, 0), one), ((1, 1), one), ((0, 1), alpha)]
    )
    return Presentation(alpha.field, ("x1", "x2"), (rel,), name="A")


def form_of(alpha):
    """The coefficient form (1 alpha; 0 1) of the defining relation."""
    one, zero = one_like(alpha), zero_like(alpha)
    return BilinearForm2(mat2(one, alpha, zero, one))


def linear_constraint_matrix(beta, q):
    """The product (2 beta; beta 2) * Q.

    Its transpose rows are the coefficients of the two linear equations that
    the constant parts of a candidate generator pair must satisfy; the left
    factor is singular exactly when beta = +-2.
    """
    one = one_like(beta)
    two = one + one
    return mat2_mul(mat2(two, beta, beta, two), q)


def congruence_check(alpha, beta, witness):
    """Exact test of Q^T * (1 beta; 0 1) * Q = gamma * (1 alpha; 0 1)."""
    lhs = mat2_mul(
        mat2_mul(mat2_transpose(witness.q), form_of(beta).entries), witness.q
    )
    rhs = mat2_scale(witness.gamma, form_of(alpha).entries)
    return lhs == rhs


def decide_form_congruence(alpha, beta):
    """Closed-form congruence decision with witness or certificate.

    Congruent exactly when beta = +-alpha: Q = I for the same sign, Q =
    diag(1, -1) for the opposite sign, gamma = 1 in both cases.  Otherwise
    the invariant chain in the module docstring shows beta^2 = alpha^2 would
    be forced, so the evaluated pair (beta^2, alpha^2) refutes all witnesses.
    """
    if isinstance(alpha, ModScalar) or isinstance(beta, ModScalar):
        raise TypeError("decide_form_congruence needs characteristic-0 scalars")
    one, zero = one_like(alpha), zero_like(alpha)
    if beta == alpha:
        return CongruenceDecision(
            True, CongruenceWitness(mat2_identity(alpha), one)
        )
    if beta == -alpha:
        return CongruenceDecision(
            True, CongruenceWitness(mat2(one, zero, zero, -one), one)
        )
    return CongruenceDecision(False, certificate=(beta * beta, alpha * alpha))


def iso_aalpha(alpha, beta):
    """Whether A_alpha and A_beta are isomorphic: beta = +-alpha."""
    return beta == alpha or beta == -alpha


def iso_witness(alpha, beta):
    """Generator images realizing an isomorphism, when one exists.

    Returns (y1, y2) inside A_alpha with y1^2 + y2^2 + beta*y1*y2 in the
    relation ideal and {y1, y2} generating; absent when not isomorphic.
    """
    field = alpha.field
    x1 = NCPoly.gen(field, 2, 0)
    x2 = NCPoly.gen(field, 2, 1)
    if beta == alpha:
        return (x1, x2)
    if beta == -alpha:
        return (x1, -x2)
    return None


def verify_iso_witness(alpha, beta, images, maxdeg=3):
    """Check both contract halves for a claimed generator-image pair."""
    P = make_aalpha(alpha)
    substituted = make_aalpha(beta).relations[0].substitute(list(images))
    gb = groebner(P, max(maxdeg, substituted.degree(), 2))
    if not normal_form(substituted, gb).poly.is_zero():
        return False
    return bool(is_generating(list(images), P, max(maxdeg, 2)))


def _residue(x, p):
    ModScalar(0, p)  # validates the modulus
    if isinstance(x, ModScalar):
        if x.modulus != p:
            raise ValueError(f"parameter modulus {x.modulus} differs from {p}")
        return x.value
    if isinstance(x, int):
        return x % p
    raise TypeError("finite-field search takes int or ModScalar parameters")


def search_iso_degree2(alpha, beta, p):
    """Exhaustive degree-2 witness search over F_p (p an odd prime).

    Scans all invertible Q in GL_2(F_p) in lexicographic entry order and all
    gamma in F_p \\ {0} in ascending order; returns the first witness for
    Q^T * (1 beta; 0 1) * Q = gamma * (1 alpha; 0 1), or None.
    """
    a = _residue(alpha, p)
    b = _residue(beta, p)
    for q11 in range(p):
        for q12 in range(p):
            for q21 in range(p):
                for q22 in range(p):
                    det = (q11 * q22 - q12 * q21) % p
                    if det == 0:
                        continue
                    # M = Q^T (1 b; 0 1) Q
                    m11 = (q11 * q11 + b * q11 * q21 + q21 * q21) % p
                    m12 = (q11 * q12 + b * q11 * q22 + q21 * q22) % p
                    m21 = (q12 * q11 + b * q12 * q21 + q22 * q21) % p
                    m22 = (q12 * q12 + b * q12 * q22 + q22 * q22) % p
                    if m21 != 0:
                        continue
                    for gamma in range(1, p):
                        if (
                            m11 == gamma
                            and m22 == gamma
                            and m12 == (gamma * a) % p
                        ):
                            q = mat2(
                                ModScalar(q11, p),
                                ModScalar(q12, p),
                                ModScalar(q21, p),
                                ModScalar(q22, p),
                            )
                            return CongruenceWitness(q, ModScalar(gamma, p))
    return None


def orbit_sample(alpha, autos):
    """Deduplicated images of alpha under a list of field automorphisms.

    Every sampled parameter gives an algebra in the same semilinear (hence
    Morita) class as A_alpha; pairwise iso_aalpha then separates isomorphism
    classes inside it.
    """
    out = []
    for sigma in autos:
        image = apply_automorphism(sigma, alpha)
        if image not in out:
            out.append(image)
    return out
