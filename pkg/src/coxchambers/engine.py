"""The chamber machinery: F-faces, orbit cones, GIT fans, bunches, SBL signatures.

Everything downstream of a presentation lives here: which coordinate faces of
the positive orthant survive the relations, their grading images, the fan those
images cut out of the effective cone, and the stable-base-locus comparison of
chambers for a chosen ample one.
"""

from itertools import combinations

from .cones import Arrangement, Cone, arrangement_cells
from .groebner import Ideal
from .polynomials import Polynomial, TermOrder


class PreconditionError(ValueError):
    pass


class EngineInvariantError(RuntimeError):
    """An internal cross-check failed; results would not be trustworthy."""


FFACE_ENUMERATION_CAP = 12


class FFace:
    """A coordinate face of the positive orthant surviving the relations."""

    __slots__ = ("indices", "nvars")

    def __init__(self, indices, nvars):
        self.indices = frozenset(indices)
        self.nvars = nvars

    @property
    def face_cone(self):
        return Cone.coordinate_face(self.nvars, self.indices)

    def __eq__(self, other):
        return isinstance(other, FFace) and self.indices == other.indices \
            and self.nvars == other.nvars

    def __hash__(self):
        return hash((self.indices, self.nvars))

    def __repr__(self):
        return f"FFace({sorted(self.indices)})"


def is_fface(p, indices, budget=None):
    """Does some point of the total space have support exactly ``indices``?

    Saturation test: set the complementary variables to zero, invert the face
    variables through an auxiliary variable, and ask whether 1 lands in the
    ideal.
    """
    indices = frozenset(indices)
    r = p.nvars
    if any(i < 0 or i >= r for i in indices):
        raise PreconditionError("face indices out of range")
    complement = [i for i in range(r) if i not in indices]
    substituted = [rel.substitute_zero(complement) for rel in p.relations]
    substituted = [g for g in substituted if not g.is_zero()]
    if not substituted:
        return True
    for g in substituted:
        if len(g.terms) == 1:
            # a single surviving term is a unit once the face variables are
            # inverted, so the localized ideal is everything
            return False
    # compactify to the face variables plus one saturation variable (last)
    face_vars = sorted(indices)
    mapping = {v: i for i, v in enumerate(face_vars)}
    m = len(face_vars) + 1
    gens = [g.rename(mapping, m) for g in substituted]
    prod = tuple(1 if i < m - 1 else 0 for i in range(m))
    sat = Polynomial(m, {tuple(e + (1 if i == m - 1 else 0)
                               for i, e in enumerate(prod)): 1,
                         (0,) * m: -1})
    order = TermOrder(m)
    return not Ideal(m, gens + [sat]).contains_one(order, budget)


def enumerate_ffaces(p, scope="all", budget=None, cap=FFACE_ENUMERATION_CAP):
    """All F-faces of the presentation, or exactly the listed candidates."""
    r = p.nvars
    if scope == "all":
        if r > cap:
            raise PreconditionError(
                f"full enumeration sweeps 2^{r} subsets; the cap is {cap} "
                "variables, pass an explicit face list instead")
        candidates = []
        for size in range(r + 1):
            candidates.extend(frozenset(c) for c in combinations(range(r), size))
    else:
        candidates = [frozenset(s) for s in scope]
    return [FFace(s, r) for s in candidates if is_fface(p, s, budget)]


class OrbitConeSet:
    """Deduplicated grading images of F-faces, with witness bookkeeping."""

    def __init__(self, cones, witnesses, eff):
        self.cones = tuple(cones)
        self.witnesses = witnesses
        self.eff = eff

    def __len__(self):
        return len(self.cones)


def effective_cone(p):
    return Cone.from_rays(p.columns(), p.cl_rank)


def moving_cone(p):
    cols = p.columns()
    k = p.cl_rank
    mov = None
    for i in range(len(cols)):
        c = Cone.from_rays(cols[:i] + cols[i + 1:], k)
        mov = c if mov is None else mov.intersect(c)
    return mov if mov is not None else Cone.zero(k)


def orbit_cones(p, ffaces):
    witnesses = {}
    for face in ffaces:
        cone = Cone.from_rays([p.column(i) for i in sorted(face.indices)],
                              p.cl_rank)
        witnesses.setdefault(cone, set()).add(face.indices)
    cones = sorted(witnesses, key=lambda c: c.key)
    witnesses = {c: frozenset(witnesses[c]) for c in cones}
    return OrbitConeSet(cones, witnesses, effective_cone(p))


def git_chamber(omega, w):
    """Intersection of all orbit cones containing the class (closed membership)."""
    w = tuple(w)
    if not omega.eff.contains(w):
        raise PreconditionError(f"class {w} lies outside the effective cone")
    members = [c for c in omega.cones if c.contains(w)]
    if not members:
        raise PreconditionError(f"no orbit cone contains {w}")
    out = members[0]
    for c in members[1:]:
        out = out.intersect(c)
    return out


class GitFan:
    """Maximal GIT chambers tiling the effective cone, with their signatures."""

    def __init__(self, chambers, signatures, omega):
        self.chambers = tuple(chambers)
        self.signatures = tuple(signatures)  # per chamber: frozenset of cone indices
        self.omega = omega

    def __len__(self):
        return len(self.chambers)

    def chambers_in(self, region):
        return [i for i, c in enumerate(self.chambers) if c.is_subcone(region)]


def git_fan(omega, eff=None):
    """Arrangement cells of all facet hyperplanes, merged by orbit-cone signature."""
    eff = eff if eff is not None else omega.eff
    k = eff.ambient_dim
    hyperplanes = []
    for c in omega.cones:
        if c.is_fulldim():
            hyperplanes.extend(c.ineqs)
    cells = arrangement_cells(Arrangement(eff, hyperplanes))
    groups = {}
    for cell in cells:
        sig = frozenset(i for i, c in enumerate(omega.cones)
                        if cell.is_subcone(c))
        groups.setdefault(sig, []).append(cell)
    merged = []
    for sig, members in groups.items():
        chamber = members[0]
        for cell in members[1:]:
            chamber = chamber.hull(cell)
        merged.append((chamber, sig))
    merged.sort(key=lambda pair: pair[0].key)
    for chamber, sig in merged:
        check = git_chamber(omega, chamber.relative_interior_point())
        if check != chamber:
            raise EngineInvariantError(
                f"chamber {chamber!r} is not fixed by its interior point "
                f"(got {check!r})")
    return GitFan([c for c, _ in merged], [s for _, s in merged], omega)


class Bunch:
    """Orbit cones whose relative interior contains the chamber's interior."""

    def __init__(self, member_cones, chamber, omega):
        self.member_cones = tuple(member_cones)
        self.chamber = chamber
        self.omega = omega


def bunch(omega, chamber):
    if chamber.dim() != chamber.ambient_dim:
        raise PreconditionError(
            "bunches are only defined here for full-dimensional chambers")
    point = chamber.relative_interior_point()
    members = [c for c in omega.cones
               if chamber.is_subcone(c)
               and c.contains(point, "relative_interior")]
    return Bunch(members, chamber, omega)


class SblSignature:
    """The bunch members containing a class; equality means equal stable base loci."""

    __slots__ = ("cones",)

    def __init__(self, cones):
        self.cones = frozenset(cones)

    def __eq__(self, other):
        return isinstance(other, SblSignature) and self.cones == other.cones

    def __hash__(self):
        return hash(self.cones)


def sbl_signature(phi, w):
    w = tuple(w)
    if not phi.omega.eff.contains(w):
        raise PreconditionError(f"class {w} lies outside the effective cone")
    return SblSignature(c for c in phi.member_cones if c.contains(w))


def _signature_intersection(sig):
    cones = sorted(sig.cones, key=lambda c: c.key)
    if not cones:
        return None
    out = cones[0]
    for c in cones[1:]:
        out = out.intersect(c)
    return out


def same_sbl(phi, w1, w2):
    """Signature equality, cross-checked against intersection equality."""
    s1 = sbl_signature(phi, w1)
    s2 = sbl_signature(phi, w2)
    by_signature = s1 == s2
    by_intersection = _signature_intersection(s1) == _signature_intersection(s2)
    if by_signature != by_intersection:
        raise EngineInvariantError(
            "signature and intersection criteria disagree for "
            f"{tuple(w1)} vs {tuple(w2)}")
    return by_signature


def same_sbl_sufficient(chamber, lam1, lam2):
    """cone(chamber u lam1) meets lam2's interior and vice versa (sufficient only)."""
    if lam1 == lam2 or chamber == lam1 or chamber == lam2:
        raise PreconditionError("the three chambers must be distinct")

    def meets_interior(hull_with, target):
        meet = chamber.hull(hull_with).intersect(target)
        if meet.is_zero():
            return False
        return target.contains(meet.relative_interior_point(),
                               "relative_interior")

    return meets_interior(lam1, lam2) and meets_interior(lam2, lam1)


class StableBaseLocusReport:
    """Strata description of a stable base locus in Cox coordinates."""

    def __init__(self, strata, nvars, var_names):
        self.strata = frozenset(strata)
        self.nvars = nvars
        self.var_names = tuple(var_names)

    @property
    def closure_components(self):
        """Inclusion-minimal vanishing sets V(T_i : i not in a stratum)."""
        complements = {frozenset(range(self.nvars)) - s for s in self.strata}
        minimal = [c for c in complements
                   if not any(o < c for o in complements)]
        return tuple(sorted(tuple(sorted(c)) for c in minimal))

    def is_empty(self):
        return not self.strata

    @property
    def human_form(self):
        if not self.strata:
            return "empty (base point free)"
        strata = " u ".join(
            "X({" + ",".join(self.var_names[i] for i in sorted(s)) + "})"
            for s in sorted(self.strata, key=lambda s: (len(s), sorted(s))))
        closure = " u ".join(
            "V(" + ",".join(self.var_names[i] for i in comp) + ")"
            for comp in self.closure_components)
        return f"{strata}  [closure: {closure}]"

    def __eq__(self, other):
        return isinstance(other, StableBaseLocusReport) and \
            self.strata == other.strata

    def __hash__(self):
        return hash(self.strata)


def stable_base_locus(p, phi, w):
    """The strata the class misses: relevant faces whose image avoids it."""
    w = tuple(w)
    if not phi.omega.eff.contains(w):
        raise PreconditionError(f"class {w} lies outside the effective cone")
    strata = set()
    for c in phi.member_cones:
        if not c.contains(w):
            strata |= phi.omega.witnesses[c]
    return StableBaseLocusReport(strata, p.nvars, p.var_names)


def sbl_decomposition(fan, phi):
    """Chambers grouped by the signature of their interior points."""
    groups = {}
    for i, chamber in enumerate(fan.chambers):
        sig = sbl_signature(phi, chamber.relative_interior_point())
        groups.setdefault(sig, []).append(i)
    return tuple(sorted((tuple(v) for v in groups.values())))


class ComparisonReport:
    """Where the GIT and stable-base-locus decompositions differ."""

    def __init__(self, fan, mov, partitions, triples):
        self.fan = fan
        self.mov = mov
        self.partitions = partitions  # ample chamber index -> partition
        self.triples = tuple(triples)  # (ample index, chamber index, chamber index)

    @property
    def git_chamber_count(self):
        return len(self.fan)


def find_triples(p, faces=None, all_chambers=False, budget=None):
    """Every (ample, chamber, chamber) whose stable base loci merge.

    Ample candidates are the full-dimensional chambers inside the moving cone
    unless ``all_chambers`` widens the search.
    """
    if faces is None:
        faces = enumerate_ffaces(p, budget=budget)
    omega = orbit_cones(p, faces)
    fan = git_fan(omega)
    mov = moving_cone(p)
    candidates = [i for i, c in enumerate(fan.chambers)
                  if c.is_fulldim() and (all_chambers or c.is_subcone(mov))]
    partitions = {}
    triples = []
    for a in candidates:
        phi = bunch(omega, fan.chambers[a])
        partition = sbl_decomposition(fan, phi)
        partitions[a] = partition
        for group in partition:
            for i, j in combinations(group, 2):
                triples.append((a, i, j))
    return ComparisonReport(fan, mov, partitions, triples)


class ChamberSetup:
    """One-stop computation shared by the CLI and the test-suite."""

    def __init__(self, p, faces, omega, eff, mov, fan):
        self.presentation = p
        self.faces = faces
        self.omega = omega
        self.eff = eff
        self.mov = mov
        self.fan = fan


def setup(p, faces=None, budget=None):
    if faces is None:
        faces = enumerate_ffaces(p, budget=budget)
    omega = orbit_cones(p, faces)
    fan = git_fan(omega)
    return ChamberSetup(p, faces, omega, omega.eff, moving_cone(p), fan)
