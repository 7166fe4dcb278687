"""Matrix algebras over presented algebras, idempotents and corner fingerprints.

M_n(B) is presented on the n^2 matrix-unit generators e_ij followed by one
central lift z_k per base generator: the unit relations e_ij*e_kl = delta_jk
e_il, the unit sum e_11 + ... + e_nn = 1, commutation of every z_k with every
e_ij, and the base relations rewritten in the lifts.  For a ring containing a
full system of matrix units this is the standard centralizer decomposition,
so the quotient really is the n x n matrix algebra over the base quotient.

The matrix-unit relations are inhomogeneous, so dimensions here are filtered:
spans of normal forms of words up to a length bound.  Fullness of an
idempotent is a semidecision: a found combination sum a_i * e * b_i = 1 is a
re-verifiable certificate, while absence at a bound stays unknown.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import NCPoly
from .presentation import Presentation, twist
from .rewrite import (
    FactorAvoider,
    Span,
    groebner,
    reduce_by_entries,
)
from .scalars import MismatchError, Scalar


class DegreeBudgetError(ValueError):
    """A verification could not be completed within the degree bound."""


@dataclass(frozen=True)
class MatrixPresentation:
    """Presentation of the n x n matrix algebra over a presented base."""

    base: Presentation
    n: int
    pres: Presentation

    def unit_index(self, i, j):
        """Generator index of e_ij (1-based matrix positions)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"matrix position ({i},{j}) outside 1..{self.n}")
        return (i - 1) * self.n + (j - 1)

    def lift_index(self, k):
        """Generator index of z_(k+1), the lift of base generator k (0-based)."""
        if not 0 <= k < self.base.num_gens:
            raise ValueError(f"base generator index {k} out of range")
        return self.n * self.n + k

    def unit(self, i, j):
        return NCPoly.gen(self.pres.field, self.pres.num_gens, self.unit_index(i, j))

    def lift(self, k):
        return NCPoly.gen(self.pres.field, self.pres.num_gens, self.lift_index(k))


def _unit_name(i, j, n):
    return f"e{i}{j}" if n <= 9 else f"e{i}_{j}"


def matrix_presentation(P, n):
    """Build M_n over the base presentation P."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    field = P.field
    names = [_unit_name(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)]
    names += [f"z{k + 1}" for k in range(P.num_gens)]
    total = len(names)
    one = Scalar.one(field)

    def unit_word(i, j):
        return ((i - 1) * n + (j - 1),)

    def gen(index):
        return NCPoly.gen(field, total, index)

    relations = []
    # e_ij * e_kl - delta_jk * e_il
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    pairs = [(unit_word(i, j) + unit_word(k, l), one)]
                    if j == k:
                        pairs.append((unit_word(i, l), -one))
                    relations.append(NCPoly.from_terms(field, total, pairs))
    # unit sum
    pairs = [(unit_word(i, i), one) for i in range(1, n + 1)]
    pairs.append(((), -one))
    relations.append(NCPoly.from_terms(field, total, pairs))
    # central lifts
    for k in range(P.num_gens):
        z = n * n + k
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                relations.append(
                    NCPoly.from_terms(
                        field,
                        total,
                        [((z,) + unit_word(i, j), one), (unit_word(i, j) + (z,), -one)],
                    )
                )
    # base relations in the lifts
    lifts = [gen(n * n + k) for k in range(P.num_gens)]
    for rel in P.relations:
        relations.append(rel.substitute(lifts))

    pres = Presentation(
        field, tuple(names), tuple(relations), name=f"M{n}_{P.name}"
    )
    return MatrixPresentation(P, n, pres)


def twist_matrix_commutes(P, n, sigma):
    """Whether twisting commutes with the matrix construction, syntactically.

    Always true: the unit, sum and commutation relations have rational
    coefficients fixed by sigma, and the base relations move identically on
    both sides.
    """
    lhs = matrix_presentation(twist(P, sigma), n).pres
    rhs = twist(matrix_presentation(P, n).pres, sigma)
    return lhs == rhs


def _groebner_for(MP, maxdeg):
    need = max(maxdeg, MP.pres.max_relation_degree())
    return groebner(MP.pres, need)


def filtered_dimension(MP, d):
    """Dimension of the span of normal forms of all words of length <= d.

    Computed against the truncated basis at degree d + 2.  With a
    degree-compatible order the normal form of any word of length <= d is a
    combination of normal words of length <= d, and normal words are their
    own normal forms, so the span dimension equals the count of normal words.
    """
    if d < 2:
        raise ValueError("filtration degree must be >= 2")
    gb = _groebner_for(MP, d + 2)
    avoider = FactorAvoider(MP.pres.num_gens, gb.leading_words())
    return avoider.count_up_to(d)


def verify_idempotent(e, MP, d):
    """Exact check of e^2 = e modulo the relations, within the degree budget."""
    if e.field != MP.pres.field or e.num_gens != MP.pres.num_gens:
        raise MismatchError("element over a different context")
    gb = _groebner_for(MP, d)
    probe = e * e - e
    if probe.degree() > gb.complete_to:
        raise DegreeBudgetError(
            f"degree {probe.degree()} of e*e - e exceeds verified degree {gb.complete_to}"
        )
    return reduce_by_entries(probe, gb.entries()).is_zero()


@dataclass(frozen=True)
class FullnessVerdict:
    full: bool
    bound: int
    # certificate: tuple of ((u, v), coefficient) with sum c * u*e*v = 1
    certificate: tuple | None = None

    def __str__(self):
        return "full" if self.full else f"unknown-at-{self.bound}"


class _AugmentedSpan:
    """Span of normal forms that remembers how each vector was assembled."""

    def __init__(self):
        self._pivots = {}  # leading word -> (monic poly, combo dict)

    @staticmethod
    def _combine(target, source, factor):
        for tag, c in source.items():
            delta = c * factor
            if tag in target:
                s = target[tag] + delta
                if s:
                    target[tag] = s
                else:
                    del target[tag]
            else:
                target[tag] = delta

    def _reduce(self, f, combo):
        while True:
            hit = None
            for w, c in f.terms():
                if w in self._pivots:
                    hit = (w, c)
                    break
            if hit is None:
                return f, combo
            w, c = hit
            pivot, pivot_combo = self._pivots[w]
            f = f - pivot.scale(c)
            self._combine(combo, pivot_combo, -c)

    def add(self, f, tag):
        one = Scalar.one(f.field)
        f, combo = self._reduce(f, {tag: one})
        if f.is_zero():
            return False
        lead = f.leading_coeff()
        inv = one / lead
        self._pivots[f.leading_word()] = (
            f.monic(),
            {t: c * inv for t, c in combo.items()},
        )
        return True

    def express(self, target):
        f, combo = self._reduce(target, {})
        if f.is_zero():
            return {t: -c for t, c in combo.items()}
        return None


def _words_up_to(num_gens, length):
    """All words of length <= length, ascending by (length, lex)."""
    out = [()]
    frontier = [()]
    for _ in range(length):
        frontier = [w + (g,) for w in frontier for g in range(num_gens)]
        out.extend(frontier)
    return out


def is_full_idempotent(e, MP, d):
    """Search for 1 in the span of normal forms of u*e*v, |u| + |v| <= d.

    Returns a certificate combination when found (re-verify with
    normal_form); otherwise the verdict is unknown at this bound, since
    non-fullness is not certifiable by a bounded search.
    """
    edeg = max(e.degree(), 1)
    gbdeg = max(d + edeg, 2 * edeg)
    gb = _groebner_for(MP, gbdeg)
    entries = gb.entries()
    probe = e * e - e
    if probe.degree() > gb.complete_to:
        raise DegreeBudgetError("idempotency check exceeds the degree budget")
    if not reduce_by_entries(probe, entries).is_zero():
        raise ValueError("element is not an idempotent modulo the relations")
    if e.is_zero():
        raise ValueError("the zero element is never a full idempotent")

    m = MP.pres.num_gens
    one_poly = NCPoly.one(MP.pres.field, m)
    target = reduce_by_entries(one_poly, entries)
    span = _AugmentedSpan()
    left = {(): reduce_by_entries(e, entries)}  # u -> NF(u * e)
    for total in range(d + 1):
        for u in _words_up_to(m, total):
            if u not in left:
                # extend on the left by the last-added generator
                prev = left[u[1:]]
                left[u] = reduce_by_entries(
                    NCPoly.monomial(MP.pres.field, m, (u[0],)) * prev, entries
                )
            vlen = total - len(u)
            for v in _words_up_to(m, vlen):
                if len(v) != vlen:
                    continue
                vec = reduce_by_entries(left[u].mul_word((), v), entries)
                span.add(vec, (u, v))
        combo = span.express(target)
        if combo is not None:
            certificate = tuple(
                sorted(combo.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0]))
            )
            return FullnessVerdict(True, total, certificate)
    return FullnessVerdict(False, d)


def verify_fullness_certificate(e, MP, certificate, d):
    """Recompute sum c * u*e*v - 1 and reduce it to zero."""
    m = MP.pres.num_gens
    acc = -NCPoly.one(MP.pres.field, m)
    for (u, v), c in certificate:
        acc = acc + e.mul_word(u, v).scale(c)
    gb = _groebner_for(MP, max(acc.degree(), 2) + 2)
    return reduce_by_entries(acc, gb.entries()).is_zero()


def corner_filtered_dims(e, MP, d):
    """Span dimensions of normal forms of e*w*e for |w| <= c, c = 0..d."""
    edeg = max(e.degree(), 1)
    gbdeg = max(d + 2 * edeg, 2 * edeg)
    gb = _groebner_for(MP, gbdeg)
    entries = gb.entries()
    probe = e * e - e
    if probe.degree() > gb.complete_to:
        raise DegreeBudgetError("idempotency check exceeds the degree budget")
    if not reduce_by_entries(probe, entries).is_zero():
        raise ValueError("element is not an idempotent modulo the relations")

    m = MP.pres.num_gens
    span = Span()
    dims = []
    left = {(): reduce_by_entries(e, entries)}  # w -> NF(e * w)
    for c in range(d + 1):
        for w in _words_up_to(m, c):
            if len(w) != c:
                continue
            if w not in left:
                prev = left[w[:-1]]
                left[w] = reduce_by_entries(
                    prev * NCPoly.monomial(MP.pres.field, m, (w[-1],)), entries
                )
            vec = reduce_by_entries(left[w] * e, entries)
            span.add(vec)
        dims.append(len(span))
    return dims
