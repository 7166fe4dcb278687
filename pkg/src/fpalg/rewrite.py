"""Degree-truncated noncommutative Groebner bases and normal forms.

Completion follows Buchberger/Mora: resolve overlap ambiguities of the
leading words, in ascending deglex order of the overlap word, up to a
truncation degree.  With a degree-compatible order every S-element coming
from an overlap of degree <= maxdeg reduces inside the truncation, so the
returned basis always has complete_to = maxdeg: all ambiguities up to that
degree are resolved and normal forms of polynomials of degree <= maxdeg are
strategy-independent.  For inhomogeneous ideals a zero normal form certifies
membership while a nonzero one is only a bounded verdict; for homogeneous
ideals both directions are exact up to the truncation.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .freealg import NCPoly, deglex_key, find_factor
from .presentation import Presentation
from .scalars import MismatchError


@dataclass(frozen=True)
class TruncatedGB:
    """Reduced truncated basis: monic elements, pairwise irreducible leading
    words, tails in normal form, sorted by ascending deglex leading word."""

    field: object
    num_gens: int
    basis: tuple
    maxdeg: int
    complete_to: int

    def entries(self):
        return tuple((g.leading_word(), g) for g in self.basis)

    def leading_words(self):
        return tuple(g.leading_word() for g in self.basis)


class NormalForm(NamedTuple):
    poly: NCPoly
    verified: bool


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    exact: bool
    bound: int

    def __str__(self):
        if self.member:
            return "member"
        if self.exact:
            return "not-member"
        return f"not-member-up-to-{self.bound}"


@dataclass(frozen=True)
class GenerationVerdict:
    generating: bool
    bound: int

    def __bool__(self):
        return self.generating

    def __str__(self):
        return "yes" if self.generating else f"no-up-to-{self.bound}"


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------


def reduce_by_entries(f, entries, strategy="leftmost"):
    """Fully reduce f by a list of (leading word, monic poly) pairs.

    entries must be sorted by ascending deglex leading word; the first entry
    whose leading word occurs in the currently largest reducible word is
    applied, at its leftmost or rightmost occurrence per the strategy.
    """
    from_left = strategy == "leftmost"
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    work = dict(f._terms)
    out = {}
    while work:
        w = max(work, key=deglex_key)
        c = work.pop(w)
        hit = None
        for lw, g in entries:
            if len(lw) > len(w):
                break
            pos = find_factor(w, lw, from_left)
            if pos >= 0:
                hit = (lw, g, pos)
                break
        if hit is None:
            out[w] = c
            continue
        lw, g, pos = hit
        a, b = w[:pos], w[pos + len(lw):]
        for wg, cg in g._terms.items():
            if wg == lw:
                continue
            ww = a + wg + b
            delta = c * cg
            if ww in work:
                nc = work[ww] - delta
                if nc:
                    work[ww] = nc
                else:
                    del work[ww]
            else:
                work[ww] = -delta
    return NCPoly._make(f.field, f.num_gens, out)


def normal_form(f, gb, strategy="leftmost"):
    """Normal form of f modulo the truncated basis.

    The result is flagged unverified when deg(f) exceeds gb.complete_to; in
    that range reductions above the completed degree may depend on unresolved
    ambiguities.
    """
    if f.field != gb.field or f.num_gens != gb.num_gens:
        raise MismatchError("polynomial over a different context")
    reduced = reduce_by_entries(f, gb.entries(), strategy)
    return NormalForm(reduced, f.degree() <= gb.complete_to)


# ---------------------------------------------------------------------------
# completion
# ---------------------------------------------------------------------------


def _proper_overlaps(u, v):
    """Yield (a, b) for each overlap word a + v = u + b, nonempty shared part."""
    for shared in range(1, min(len(u), len(v))):
        if u[len(u) - shared:] == v[:shared]:
            yield u[: len(u) - shared], v[shared:]


def groebner(P, maxdeg):
    """Reduced truncated Groebner basis of P's relation ideal.

    Deterministic: initial relations are incorporated in list order, then
    pending S-elements by ascending deglex of the overlap word with ties by
    the creation order of the two parents.
    """
    if not isinstance(P, Presentation):
        raise TypeError("groebner expects a Presentation")
    if maxdeg < P.max_relation_degree():
        raise ValueError(
            f"maxdeg {maxdeg} below maximal relation degree {P.max_relation_degree()}"
        )
    m = P.num_gens

    live = {}          # seq -> monic poly
    lw_of = {}         # seq -> leading word
    sorted_entries = []  # (lw, poly) ascending deglex, rebuilt on change
    heap = []          # (deglex key of overlap word, lseq, rseq, a, b)
    work = deque(P.relations)
    seq_counter = 0

    def rebuild_entries():
        sorted_entries.clear()
        sorted_entries.extend(
            sorted(((lw_of[s], live[s]) for s in live), key=lambda e: deglex_key(e[0]))
        )

    def push_overlaps(s1, s2):
        u, v = lw_of[s1], lw_of[s2]
        for a, b in _proper_overlaps(u, v):
            w = u + b
            if len(w) <= maxdeg:
                heapq.heappush(heap, (deglex_key(w), s1, s2, a, b))

    while work or heap:
        if work:
            f = work.popleft()
        else:
            _, ls, rs, a, b = heapq.heappop(heap)
            if ls not in live or rs not in live:
                continue
            f = live[ls].mul_word((), b) - live[rs].mul_word(a, ())
        f = reduce_by_entries(f, sorted_entries)
        if f.is_zero():
            continue
        f = f.monic()
        new_lw = f.leading_word()
        displaced = [
            s for s in live if find_factor(lw_of[s], new_lw) >= 0
        ]
        for s in sorted(displaced):
            work.append(live[s])
            del live[s]
            del lw_of[s]
        seq = seq_counter
        seq_counter += 1
        live[seq] = f
        lw_of[seq] = new_lw
        rebuild_entries()
        for s in sorted(live):
            push_overlaps(seq, s)
            if s != seq:
                push_overlaps(s, seq)

    # tails into normal form against the other elements
    final = []
    order = sorted(live, key=lambda s: deglex_key(lw_of[s]))
    for s in order:
        others = [(lw_of[s2], live[s2]) for s2 in order if s2 != s]
        others.sort(key=lambda e: deglex_key(e[0]))
        final.append(reduce_by_entries(live[s], others))
    return TruncatedGB(P.field, m, tuple(final), maxdeg, maxdeg)


# ---------------------------------------------------------------------------
# membership, dimensions, generation
# ---------------------------------------------------------------------------


def ideal_membership(f, P, maxdeg):
    """Decide f in the relation ideal via the truncated basis.

    A zero normal form certifies membership; a nonzero one is exact for
    homogeneous P with deg(f) <= maxdeg and otherwise only up-to-degree.
    """
    if f.degree() > maxdeg:
        raise ValueError("polynomial degree exceeds maxdeg")
    gb = groebner(P, maxdeg)
    nf = normal_form(f, gb)
    if nf.poly.is_zero():
        return MembershipVerdict(True, True, maxdeg)
    exact = P.is_homogeneous() and nf.verified
    return MembershipVerdict(False, exact, maxdeg)


class FactorAvoider:
    """Counts words containing none of a set of forbidden factors.

    Aho-Corasick automaton over the forbidden words; the DP transfer is
    deterministic and linear in length x states x alphabet.
    """

    def __init__(self, num_gens, forbidden):
        self.num_gens = num_gens
        self.trivial_dead = any(len(w) == 0 for w in forbidden)
        children = [{}]
        terminal = [False]
        for word in forbidden:
            node = 0
            for letter in word:
                if letter not in children[node]:
                    children.append({})
                    terminal.append(False)
                    children[node][letter] = len(children) - 1
                node = children[node][letter]
            terminal[node] = True
        fail = [0] * len(children)
        queue = deque()
        for letter, child in children[0].items():
            queue.append(child)
        while queue:
            node = queue.popleft()
            for letter, child in children[node].items():
                f = fail[node]
                while f and letter not in children[f]:
                    f = fail[f]
                fail[child] = children[f].get(letter, 0)
                terminal[child] = terminal[child] or terminal[fail[child]]
                queue.append(child)
        # dense transition table
        table = [[0] * num_gens for _ in children]
        for node in self._bfs_order(children):
            for letter in range(num_gens):
                if letter in children[node]:
                    table[node][letter] = children[node][letter]
                elif node == 0:
                    table[node][letter] = 0
                else:
                    table[node][letter] = table[fail[node]][letter]
        self._table = table
        self._terminal = terminal

    @staticmethod
    def _bfs_order(children):
        order = [0]
        queue = deque([0])
        while queue:
            node = queue.popleft()
            for child in children[node].values():
                order.append(child)
                queue.append(child)
        return order

    def count(self, length):
        """Number of words of exactly this length avoiding all factors."""
        if self.trivial_dead:
            return 0
        vec = {0: 1}
        for _ in range(length):
            nxt = {}
            for state, ways in vec.items():
                row = self._table[state]
                for letter in range(self.num_gens):
                    target = row[letter]
                    if self._terminal[target]:
                        continue
                    nxt[target] = nxt.get(target, 0) + ways
            vec = nxt
        return sum(vec.values())

    def count_up_to(self, length):
        return sum(self.count(n) for n in range(length + 1))


def graded_dimension(P, n, maxdeg):
    """Dimension of the degree-n component of the quotient algebra.

    Counts deglex-normal words of length n with respect to the truncated
    basis; exact for homogeneous relations with n <= maxdeg.
    """
    if not P.is_homogeneous():
        raise ValueError(
            "graded dimension needs homogeneous relations; "
            "use the filtered dimension of a matrix presentation instead"
        )
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n > maxdeg:
        raise ValueError("degree exceeds maxdeg")
    gb = groebner(P, maxdeg)
    return FactorAvoider(P.num_gens, gb.leading_words()).count(n)


class Span:
    """Incremental row-reduced span of noncommutative polynomials."""

    def __init__(self):
        self._pivots = {}

    def __len__(self):
        return len(self._pivots)

    def reduce(self, f):
        while True:
            hit = None
            for w, c in f.terms():
                if w in self._pivots:
                    hit = (w, c)
                    break
            if hit is None:
                return f
            w, c = hit
            f = f - self._pivots[w].scale(c)

    def add(self, f):
        """Insert f if independent; True when the rank grew."""
        r = self.reduce(f)
        if r.is_zero():
            return False
        self._pivots[r.leading_word()] = r.monic()
        return True

    def contains(self, f):
        return self.reduce(f).is_zero()


def is_generating(elems, P, maxdeg):
    """Whether elems generate the quotient as a unital algebra.

    Saturates the span of normal forms of products of at most maxdeg factors
    from elems (and 1), all modulo the truncated basis; products whose raw
    degree exceeds the verified range are skipped.  A yes is a certificate,
    a no only holds up to the bound.
    """
    for e in elems:
        if e.field != P.field or e.num_gens != P.num_gens:
            raise MismatchError("element over a different context")
    gb = groebner(P, maxdeg)
    entries = gb.entries()
    span = Span()
    fresh = []
    for cand in [NCPoly.one(P.field, P.num_gens)] + list(elems):
        if cand.degree() > gb.complete_to:
            continue
        nf = reduce_by_entries(cand, entries)
        if span.add(nf):
            fresh.append(nf)
    targets = [
        reduce_by_entries(NCPoly.gen(P.field, P.num_gens, i), entries)
        for i in range(P.num_gens)
    ]

    def all_in_span():
        return all(span.contains(t) for t in targets)

    if all_in_span():
        return GenerationVerdict(True, maxdeg)
    for _ in range(2, maxdeg + 1):
        new_fresh = []
        for s in fresh:
            for e in elems:
                if s.degree() + e.degree() > gb.complete_to:
                    continue
                p = reduce_by_entries(s * e, entries)
                if span.add(p):
                    new_fresh.append(p)
        fresh = new_fresh
        if all_in_span():
            return GenerationVerdict(True, maxdeg)
        if not fresh:
            break
    return GenerationVerdict(False, maxdeg)
