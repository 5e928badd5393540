"""Buchberger engine over Q with exact fraction-free arithmetic.

Internally polynomials are content-stripped integer term lists; the surface
(`Ideal`, reduced bases) speaks Fraction-coefficient `Polynomial`s with monic
normalization.  A configurable pair budget turns runaway computations into a
reported failure instead of a wrong answer.
"""

import heapq
from fractions import Fraction
from itertools import combinations
from math import gcd

from .polynomials import (Polynomial, TermOrder, mono_div, mono_divides,
                          mono_lcm, mono_mul)

DEFAULT_PAIR_BUDGET = 200_000


class GroebnerBudgetExceeded(RuntimeError):
    """The pair budget ran out before the basis stabilized."""

    def __init__(self, budget):
        super().__init__(f"Groebner pair budget of {budget} exceeded")
        self.budget = budget


def _heap_key(order, mono):
    deg, tail = order.key(mono)
    return (-deg, tuple(-x for x in tail))


def _int_terms(poly):
    """Content-stripped integer term dict of a Fraction polynomial."""
    if poly.is_zero():
        return {}
    denom = 1
    for c in poly.terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = {m: int(c * denom) for m, c in poly.terms.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = {m: v // g for m, v in ints.items()}
    return ints


def _strip(terms):
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return terms
    if g > 1:
        return {m: v // g for m, v in terms.items()}
    return terms


def _leading(terms, order):
    return order.max(terms)


def _normal_form_int(terms, basis, order):
    """Full normal form of an integer term dict against prepared basis entries.

    ``basis`` holds triples (lt_mono, lt_coeff, terms).  The result is a
    content-stripped integer term dict equal to a positive rational multiple of
    the true normal form.
    """
    work = dict(terms)
    rem = {}
    heap = [(_heap_key(order, m), m) for m in work]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if not c:
            continue
        hit = None
        for lt, lc, gterms in basis:
            if mono_divides(lt, m):
                hit = (lt, lc, gterms)
                break
        if hit is None:
            rem[m] = c
            del work[m]
            continue
        lt, lc, gterms = hit
        d = gcd(lc, c)
        fmul, gmul = lc // d, c // d
        shift = mono_div(m, lt)
        if fmul != 1:
            for k in list(work):
                work[k] *= fmul
            for k in list(rem):
                rem[k] *= fmul
        for gm, gc in gterms.items():
            k = mono_mul(gm, shift)
            acc = work.get(k, 0) - gmul * gc
            if acc:
                if k not in work:
                    heapq.heappush(heap, (_heap_key(order, k), k))
                work[k] = acc
            else:
                work.pop(k, None)
        steps += 1
        if steps % 16 == 0 and (work or rem):
            g = 0
            for v in work.values():
                g = gcd(g, v)
            for v in rem.values():
                g = gcd(g, v)
            if g > 1:
                work = {k: v // g for k, v in work.items()}
                rem = {k: v // g for k, v in rem.items()}
    rem = _strip(rem)
    if rem and rem[_leading(rem, order)] < 0:
        rem = {m: -v for m, v in rem.items()}
    return rem


def _prepare(terms, order):
    lt = _leading(terms, order)
    return (lt, terms[lt], terms)


def _interreduce(polys, order):
    """Reduce each element against the current state of the others until stable."""
    polys = [dict(p) for p in polys if p]
    changed = True
    while changed:
        changed = False
        polys.sort(key=lambda t: order.key(_leading(t, order)))
        for i, p in enumerate(polys):
            others = [_prepare(q, order) for j, q in enumerate(polys) if j != i and q]
            red = _normal_form_int(p, others, order) if others else _strip(dict(p))
            if red and red[_leading(red, order)] < 0:
                red = {m: -v for m, v in red.items()}
            if red != p:
                changed = True
            polys[i] = red
        polys = [p for p in polys if p]
    return polys


def buchberger_int(generators, order, budget=None):
    """Reduced Groebner basis as integer term dicts (primitive, lc > 0)."""
    budget = DEFAULT_PAIR_BUDGET if budget is None else budget
    zero_mono = (0,) * order.nvars
    basis = []
    for g in generators:
        t = _strip({m: c for m, c in g.items() if c})
        if t:
            if t[_leading(t, order)] < 0:
                t = {m: -v for m, v in t.items()}
            basis.append(t)
    basis = _interreduce(basis, order)
    for t in basis:
        if _leading(t, order) == zero_mono:
            return [{zero_mono: 1}]
    prepared = [_prepare(t, order) for t in basis]
    pairs = []
    for i, j in combinations(range(len(basis)), 2):
        lcm = mono_lcm(prepared[i][0], prepared[j][0])
        heapq.heappush(pairs, (order.key(lcm), i, j, lcm))
    spent = 0
    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        lt_i, lt_j = prepared[i][0], prepared[j][0]
        if mono_lcm(lt_i, lt_j) != lcm:
            continue  # stale entry
        if mono_mul(lt_i, lt_j) == lcm:
            continue  # coprime leading terms
        key_ij = order.key(lcm)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            lt_k = prepared[k][0]
            if mono_divides(lt_k, lcm) and \
                    order.key(mono_lcm(lt_i, lt_k)) < key_ij and \
                    order.key(mono_lcm(lt_j, lt_k)) < key_ij:
                skip = True
                break
        if skip:
            continue
        spent += 1
        if spent > budget:
            raise GroebnerBudgetExceeded(budget)
        ci, cj = prepared[i][1], prepared[j][1]
        d = gcd(ci, cj)
        mi, mj = mono_div(lcm, lt_i), mono_div(lcm, lt_j)
        s = {}
        for m, c in prepared[i][2].items():
            k = mono_mul(m, mi)
            s[k] = s.get(k, 0) + (cj // d) * c
        for m, c in prepared[j][2].items():
            k = mono_mul(m, mj)
            acc = s.get(k, 0) - (ci // d) * c
            if acc:
                s[k] = acc
            else:
                s.pop(k, None)
        s = {m: c for m, c in s.items() if c}
        red = _normal_form_int(s, prepared, order)
        if not red:
            continue
        if _leading(red, order) == zero_mono:
            return [{zero_mono: 1}]
        new_index = len(basis)
        basis.append(red)
        prepared.append(_prepare(red, order))
        lt_new = prepared[new_index][0]
        for k in range(new_index):
            lcm = mono_lcm(prepared[k][0], lt_new)
            heapq.heappush(pairs, (order.key(lcm), k, new_index, lcm))
    basis = _interreduce(basis, order)
    basis.sort(key=lambda t: order.key(_leading(t, order)))
    return basis


class Ideal:
    """Ideal of Q[x_1..x_n] with a cached reduced Groebner basis per order."""

    def __init__(self, nvars, generators=()):
        self.nvars = nvars
        self.generators = tuple(generators)
        for g in self.generators:
            if g.nvars != nvars:
                raise ValueError("generator lives in the wrong ring")
        self._cache = {}

    def groebner(self, order=None, budget=None):
        """Reduced Groebner basis: inter-reduced, monic, unique for the order."""
        order = order or TermOrder(self.nvars)
        key = order.perm
        if key not in self._cache:
            ints = buchberger_int([_int_terms(g) for g in self.generators],
                                  order, budget)
            monic = []
            for t in ints:
                lc = t[_leading(t, order)]
                monic.append(Polynomial(
                    self.nvars, {m: Fraction(c, lc) for m, c in t.items()}))
            self._cache[key] = tuple(monic)
        return self._cache[key]

    def normal_form(self, f, order=None, budget=None):
        order = order or TermOrder(self.nvars)
        gb = self.groebner(order, budget)
        prepared = [_prepare(_int_terms(g), order) for g in gb]
        if not prepared:
            return f
        red = _normal_form_int(_int_terms(f), prepared, order)
        return Polynomial(self.nvars, {m: Fraction(c) for m, c in red.items()})

    def contains_one(self, order=None, budget=None):
        gb = self.groebner(order, budget)
        return len(gb) == 1 and gb[0] == Polynomial.constant(self.nvars, 1)

    def radical_membership(self, f, order=None, budget=None):
        """Is f zero on the vanishing locus of the ideal? (Rabinowitsch)"""
        if f.is_zero():
            return True
        order = order or TermOrder(self.nvars)
        if self.generators and self.normal_form(f, order, budget).is_zero():
            return True
        n = self.nvars
        ext = TermOrder(n + 1, tuple(order.perm) + (n,))
        lift = {i: i for i in range(n)}
        gens = [g.rename(lift, n + 1) for g in self.generators]
        y = Polynomial.variable(n + 1, n)
        gens.append(y * f.rename(lift, n + 1) - Polynomial.constant(n + 1, 1))
        return Ideal(n + 1, gens).contains_one(ext, budget)

    def krull_dimension(self, order=None, budget=None):
        """Dimension of the quotient ring via independent variable subsets."""
        order = order or TermOrder(self.nvars)
        gb = self.groebner(order, budget)
        if len(gb) == 1 and gb[0] == Polynomial.constant(self.nvars, 1):
            raise ValueError("the ideal is improper; the zero ring has no dimension")
        supports = []
        for g in gb:
            lm = g.leading_monomial(order)
            supports.append(frozenset(i for i, e in enumerate(lm) if e))
        n = self.nvars
        for size in range(n, -1, -1):
            for subset in combinations(range(n), size):
                s = set(subset)
                if not any(sup <= s for sup in supports):
                    return size
        return 0

    def substitute_zero(self, var_indices):
        gens = [g.substitute_zero(var_indices) for g in self.generators]
        return Ideal(self.nvars, [g for g in gens if not g.is_zero()])


def buchberger(ideal, order=None, budget=None):
    return ideal.groebner(order, budget)


def contains_one(ideal, order=None, budget=None):
    return ideal.contains_one(order, budget)


def radical_membership(f, ideal, order=None, budget=None):
    return ideal.radical_membership(f, order, budget)


def krull_dimension(ideal, order=None, budget=None):
    return ideal.krull_dimension(order, budget)


def substitute_zero(ideal, var_indices):
    return ideal.substitute_zero(var_indices)
