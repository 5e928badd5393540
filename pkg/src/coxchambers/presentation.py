"""Cox-ring presentations: data model, text format, grading arithmetic, rank-2 order.

The text format is section based::

    [vars] T1 T2 T3
    [grading]
    1 0 -2
    0 1 -1
    [relations]
    T1*T2 + T3^2
    [irrelevant]
    T1,T2 | T3
    [meta] label=demo projective=true seed=7

``#`` starts a comment.  Homogeneity of every relation is validated on parse.
"""

from .cones import Cone
from .groebner import Ideal
from .intlinalg import dot, primitive, rank
from .polynomials import parse_polynomial


class PresentationError(ValueError):
    def __init__(self, message, line=None, col=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {col}" if col is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.col = col


class CoxPresentation:
    """Variables, integer grading matrix, homogeneous relations, metadata."""

    def __init__(self, var_names, grading, relations=(), irrelevant=None,
                 label="", projective=None, seed=None):
        self.var_names = tuple(var_names)
        self.grading = tuple(tuple(row) for row in grading)
        self.relations = tuple(relations)
        self.irrelevant = None if irrelevant is None else \
            tuple(tuple(sorted(c)) for c in irrelevant)
        self.label = label
        self.projective = projective
        self.seed = seed
        self._validate()

    # -- derived quantities --------------------------------------------------

    @property
    def nvars(self):
        return len(self.var_names)

    @property
    def cl_rank(self):
        return len(self.grading)

    def column(self, i):
        return tuple(row[i] for row in self.grading)

    def columns(self):
        return [self.column(i) for i in range(self.nvars)]

    def degree_of_monomial(self, mono):
        if len(mono) != self.nvars:
            raise PresentationError(
                f"monomial has {len(mono)} exponents, expected {self.nvars}")
        return tuple(sum(row[i] * mono[i] for i in range(self.nvars))
                     for row in self.grading)

    def degree_of(self, poly):
        degs = {self.degree_of_monomial(m) for m in poly.terms}
        if len(degs) != 1:
            raise PresentationError("polynomial is not homogeneous")
        return degs.pop()

    def relations_ideal(self):
        return Ideal(self.nvars, self.relations)

    def effective_cone(self):
        return Cone.from_rays(self.columns(), self.cl_rank)

    # -- validation ----------------------------------------------------------

    def _validate(self):
        r = self.nvars
        for row in self.grading:
            if len(row) != r:
                raise PresentationError("grading row length mismatch")
        if self.grading and rank(self.grading) != self.cl_rank:
            raise PresentationError("grading matrix is rank deficient")
        for rel in self.relations:
            if rel.nvars != r:
                raise PresentationError("relation has the wrong variable count")
            if rel.is_zero():
                raise PresentationError("zero relation")
            degs = {}
            for m in rel.terms:
                degs.setdefault(self.degree_of_monomial(m), m)
            if len(degs) > 1:
                (d1, m1), (d2, m2) = list(degs.items())[:2]
                raise PresentationError(
                    "inhomogeneous relation: monomials "
                    f"{self._mono_str(m1)} and {self._mono_str(m2)} have degrees "
                    f"{d1} and {d2}")
        if self.irrelevant is not None:
            for comp in self.irrelevant:
                for i in comp:
                    if not 0 <= i < r:
                        raise PresentationError("irrelevant component index out of range")
        if self.projective and self.cl_rank == 2:
            if not self.effective_cone().is_pointed():
                raise PresentationError(
                    "projective rank-2 presentation must have a pointed effective cone")

    def _mono_str(self, mono):
        parts = [f"{self.var_names[i]}^{e}" if e > 1 else self.var_names[i]
                 for i, e in enumerate(mono) if e]
        return "*".join(parts) if parts else "1"

    # -- serialization -------------------------------------------------------

    def format(self):
        lines = ["[vars] " + " ".join(self.var_names), "[grading]"]
        for row in self.grading:
            lines.append(" ".join(str(x) for x in row))
        if self.relations:
            lines.append("[relations]")
            for rel in self.relations:
                lines.append(rel.format(self.var_names))
        if self.irrelevant is not None:
            lines.append("[irrelevant]")
            lines.append(" | ".join(
                ",".join(self.var_names[i] for i in comp) for comp in self.irrelevant))
        meta = []
        if self.label:
            meta.append(f"label={self.label}")
        if self.projective is not None:
            meta.append(f"projective={'true' if self.projective else 'false'}")
        if self.seed is not None:
            meta.append(f"seed={self.seed}")
        if meta:
            lines.append("[meta] " + " ".join(meta))
        return "\n".join(lines) + "\n"


def parse(source):
    """Parse the section-based text format into a validated CoxPresentation."""
    var_names = None
    grading_rows = []
    relation_sources = []
    irrelevant_sources = []
    meta = {}
    section = None
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            end = line.find("]")
            if end < 0:
                raise PresentationError("unterminated section header", lineno, 1)
            section = line[1:end].strip().lower()
            payload = line[end + 1:].strip()
            if section not in ("vars", "grading", "relations", "irrelevant", "meta"):
                raise PresentationError(f"unknown section [{section}]", lineno, 1)
            if not payload:
                continue
            line = payload
        if section == "vars":
            if var_names is not None:
                raise PresentationError("duplicate [vars] section", lineno)
            var_names = line.split()
        elif section == "grading":
            try:
                grading_rows.append(tuple(int(tok) for tok in line.split()))
            except ValueError:
                raise PresentationError("grading rows must be integers", lineno)
        elif section == "relations":
            relation_sources.append((lineno, line))
        elif section == "irrelevant":
            irrelevant_sources.append((lineno, line))
        elif section == "meta":
            for tok in line.split():
                if "=" not in tok:
                    raise PresentationError(f"malformed meta entry {tok!r}", lineno)
                k, v = tok.split("=", 1)
                meta[k.strip()] = v.strip()
        else:
            raise PresentationError("content before any section header", lineno, 1)
    if var_names is None:
        raise PresentationError("missing [vars] section")
    index = {name: i for i, name in enumerate(var_names)}
    if len(index) != len(var_names):
        raise PresentationError("duplicate variable name in [vars]")
    relations = []
    for lineno, text in relation_sources:
        try:
            relations.append(parse_polynomial(text, var_names))
        except ValueError as exc:
            raise PresentationError(str(exc), lineno) from exc
    irrelevant = None
    if irrelevant_sources:
        irrelevant = []
        for lineno, text in irrelevant_sources:
            for chunk in text.split("|"):
                chunk = chunk.strip()
                if not chunk:
                    continue
                comp = []
                for name in chunk.split(","):
                    name = name.strip()
                    if name not in index:
                        raise PresentationError(
                            f"unknown variable {name!r} in [irrelevant]", lineno)
                    comp.append(index[name])
                irrelevant.append(tuple(sorted(comp)))
    projective = None
    if "projective" in meta:
        if meta["projective"] not in ("true", "false"):
            raise PresentationError("projective must be true or false")
        projective = meta["projective"] == "true"
    seed = int(meta["seed"]) if "seed" in meta else None
    return CoxPresentation(var_names, grading_rows, relations, irrelevant,
                           label=meta.get("label", ""), projective=projective,
                           seed=seed)


# -- the rank-2 total preorder ------------------------------------------------

def _orientation(p):
    """Sign s with s*det(u, v) > 0 where u is the minimal extreme ray of Eff.

    The minimal ("left-most") extreme ray is the colexicographically smallest
    one; the criteria downstream are symmetric under reversing the convention.
    """
    if p.cl_rank != 2:
        raise PresentationError("the chamber order needs class-group rank 2")
    eff = p.effective_cone()
    if not eff.is_pointed() or eff.dim() != 2:
        raise PresentationError("the chamber order needs a pointed 2d effective cone")
    u, v = sorted(eff.rays, key=lambda r: tuple(reversed(r)))
    d = u[0] * v[1] - u[1] * v[0]
    return (1 if d > 0 else -1), eff


def rank2_leq(p, w, w2):
    """Total preorder by angle from the minimal extreme ray of Eff."""
    sgn, eff = _orientation(p)
    for x in (w, w2):
        if len(x) != 2:
            raise PresentationError("classes must have length 2")
        if not eff.contains(x):
            raise PresentationError(f"class {tuple(x)} lies outside the effective cone")
    return sgn * (w[0] * w2[1] - w[1] * w2[0]) >= 0


def class_leq_cone(p, w, cone):
    """w <= w' for every w' in the cone (weak order; wall classes count)."""
    sgn, eff = _orientation(p)
    if not eff.contains(w):
        raise PresentationError(f"class {tuple(w)} lies outside the effective cone")
    points = list(cone.rays) or [cone.relative_interior_point()]
    return all(sgn * (w[0] * q[1] - w[1] * q[0]) >= 0 for q in points)


def class_geq_cone(p, w, cone):
    """w >= w' for every w' in the cone (weak order; wall classes count)."""
    sgn, eff = _orientation(p)
    if not eff.contains(w):
        raise PresentationError(f"class {tuple(w)} lies outside the effective cone")
    points = list(cone.rays) or [cone.relative_interior_point()]
    return all(sgn * (q[0] * w[1] - q[1] * w[0]) >= 0 for q in points)


def rank2_cone_leq(p, a, b):
    """a <= b in the induced weak order on cones inside Eff."""
    sgn, _ = _orientation(p)
    return all(sgn * (x[0] * y[1] - x[1] * y[0]) >= 0
               for x in a.rays for y in b.rays)


def codim_canonical_embedding(p, budget=None):
    """r minus the Krull dimension of the relations ideal."""
    if not p.relations:
        return 0
    return p.nvars - p.relations_ideal().krull_dimension(budget=budget)
