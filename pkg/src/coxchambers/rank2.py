"""Rank-two criteria: semistable loci, one-sided base loci, and the
wall / codimension tests deciding whether the GIT and stable-base-locus
decompositions of a pointed two-dimensional effective cone coincide."""

from .engine import PreconditionError
from .groebner import GroebnerBudgetExceeded, Ideal
from .intlinalg import primitive
from .polynomials import Polynomial
from .presentation import (class_geq_cone, class_leq_cone,
                           codim_canonical_embedding, rank2_cone_leq)


def _require_rank2(p):
    if p.cl_rank != 2:
        raise PreconditionError("this criterion needs class-group rank 2")


def non_semistable_locus_rank2(p, chamber):
    """Indices of generators weakly below / weakly above the chamber.

    The complement of the semistable locus of the chamber is the union of the
    two coordinate vanishing sets these index sets describe.
    """
    _require_rank2(p)
    cols = p.columns()
    low = frozenset(i for i, w in enumerate(cols) if class_leq_cone(p, w, chamber))
    high = frozenset(i for i, w in enumerate(cols) if class_geq_cone(p, w, chamber))
    return low, high


class Rank2SblReport:
    """B(w) for w in a chamber, as V(generators on the far side) inside X-bar."""

    def __init__(self, p, vanishing_indices):
        self.presentation = p
        self.vanishing_indices = frozenset(vanishing_indices)
        self.residual_relations = tuple(
            g for g in (rel.substitute_zero(self.vanishing_indices)
                        for rel in p.relations) if not g.is_zero())

    def is_empty(self):
        return not self.vanishing_indices

    @property
    def human_form(self):
        if self.is_empty():
            return "empty (base point free)"
        names = [self.presentation.var_names[i]
                 for i in sorted(self.vanishing_indices)]
        pieces = names + [g.format(self.presentation.var_names)
                          for g in self.residual_relations]
        return "V(" + ", ".join(pieces) + ")"

    def __eq__(self, other):
        return isinstance(other, Rank2SblReport) and \
            self.vanishing_indices == other.vanishing_indices

    def __hash__(self):
        return hash(self.vanishing_indices)


def stable_base_locus_rank2(p, ample, chamber):
    """Base locus of a chamber by the one-sided vanishing-set formula."""
    _require_rank2(p)
    if chamber == ample:
        return Rank2SblReport(p, frozenset())
    cols = p.columns()
    if rank2_cone_leq(p, chamber, ample):
        idx = [i for i, w in enumerate(cols) if class_leq_cone(p, w, chamber)]
    elif rank2_cone_leq(p, ample, chamber):
        idx = [i for i, w in enumerate(cols) if class_geq_cone(p, w, chamber)]
    else:
        raise PreconditionError("the chamber must lie on one side of the ample one")
    return Rank2SblReport(p, idx)


def sbl_walls(p, fan, partition):
    """Rays bounding the stable-base-locus chambers (including Eff's boundary)."""
    _require_rank2(p)
    walls = set()
    for group in partition:
        counts = {}
        for i in group:
            for r in fan.chambers[i].rays:
                counts[r] = counts.get(r, 0) + 1
        walls.update(r for r, c in counts.items() if c == 1)
    return walls


def check_crit1(p, ample, fan, partition):
    """Does every generator-degree ray lie on a wall of the SBL decomposition?"""
    _require_rank2(p)
    walls = sbl_walls(p, fan, partition)
    for w in p.columns():
        if not any(w):
            raise PreconditionError("a degree-zero generator has no ray")
        if primitive(w) not in walls:
            return False
    return True


VERDICT_APPLIES = "criterion_applies"
VERDICT_INCONCLUSIVE = "criterion_inconclusive"


class Rank2Report:
    """Generator counts on both sides of the ample chamber and the codimension."""

    def __init__(self, h_plus, h_minus, c, ample_chamber, verdict):
        self.h_plus = h_plus
        self.h_minus = h_minus
        self.c = c
        self.ample_chamber = ample_chamber
        self.verdict = verdict


def check_main2(p, ample, budget=None):
    """min(h+, h-) > codimension certifies that the decompositions coincide."""
    _require_rank2(p)
    cols = p.columns()
    h_minus = sum(1 for w in cols if class_leq_cone(p, w, ample))
    h_plus = sum(1 for w in cols if class_geq_cone(p, w, ample))
    c = codim_canonical_embedding(p, budget=budget)
    verdict = VERDICT_APPLIES if min(h_plus, h_minus) > c else VERDICT_INCONCLUSIVE
    return Rank2Report(h_plus, h_minus, c, ample, verdict)


class PairVerdict:
    """Strict-inclusion test for one ordered pair of same-side chambers."""

    def __init__(self, side, nearer, farther, holds):
        self.side = side          # "below" or "above" the ample chamber
        self.nearer = nearer      # chamber between the ample one and `farther`
        self.farther = farther
        self.holds = holds        # True / False / None (budget ran out)


class MainConditionsReport:
    def __init__(self, pairs, ample):
        self.pairs = tuple(pairs)
        self.ample = ample

    @property
    def all_hold(self):
        if any(v.holds is None for v in self.pairs):
            return None
        return all(v.holds for v in self.pairs)


def _vanishing_ideal(p, idx):
    """Ideal of V(T_i : i in idx) inside the total space, in compact form."""
    gens = [Polynomial.variable(p.nvars, i) for i in sorted(idx)]
    for rel in p.relations:
        g = rel.substitute_zero(idx)
        if not g.is_zero():
            gens.append(g)
    return Ideal(p.nvars, gens)


def _strictness_holds(p, a_idx, aprime_idx, c_idx, budget):
    """Is V(A') not contained in V(A) u V(C)?  (the strict-inclusion content)

    V(A) u V(C) = V(I_A . I_C); containment fails exactly when some product of
    generators escapes the radical of I_{A'}.  Products with a relation factor
    already lie in I_{A'}, so only variable pairs can escape.
    """
    ideal = _vanishing_ideal(p, aprime_idx)
    for a in sorted(a_idx):
        if a in aprime_idx:
            continue
        for c in sorted(c_idx):
            if c in aprime_idx:
                continue
            f = Polynomial.variable(p.nvars, a) * Polynomial.variable(p.nvars, c)
            if not ideal.radical_membership(f, budget=budget):
                return True
    return False


def check_main_conditions(p, ample, fan, budget=None):
    """Per-pair strict-inclusion verdicts; all holding certifies MCD = SBLD."""
    _require_rank2(p)
    cols = p.columns()
    chambers = [c for c in fan.chambers if c.is_fulldim()]
    below = [c for c in chambers if c != ample and rank2_cone_leq(p, c, ample)]
    above = [c for c in chambers if c != ample and rank2_cone_leq(p, ample, c)]
    c_below = frozenset(i for i, w in enumerate(cols) if class_leq_cone(p, w, ample))
    c_above = frozenset(i for i, w in enumerate(cols) if class_geq_cone(p, w, ample))
    pairs = []
    for side, pool, outward_leq, c_idx in (
            ("below", below, True, c_above),
            ("above", above, False, c_below)):
        for nearer in pool:
            for farther in pool:
                if nearer == farther:
                    continue
                if outward_leq and not rank2_cone_leq(p, farther, nearer):
                    continue
                if not outward_leq and not rank2_cone_leq(p, nearer, farther):
                    continue
                test = class_leq_cone if outward_leq else class_geq_cone
                a_idx = frozenset(i for i, w in enumerate(cols) if test(p, w, nearer))
                ap_idx = frozenset(i for i, w in enumerate(cols) if test(p, w, farther))
                try:
                    holds = _strictness_holds(p, a_idx, ap_idx, c_idx, budget)
                except GroebnerBudgetExceeded:
                    holds = None
                pairs.append(PairVerdict(side, nearer, farther, holds))
    return MainConditionsReport(pairs, ample)
