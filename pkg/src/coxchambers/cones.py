"""Exact rational polyhedral cones with eager dual descriptions.

A cone is stored canonically: extreme rays of the pointed part (inside the
orthogonal complement of the lineality space), a Hermite basis of the lineality
space, facet normals of the pointed part, and a Hermite basis of span(C)^perp.
Equal cones therefore have identical representations.  All arithmetic is exact.
"""

from .intlinalg import (adjugate, det, dot, hnf, kernel_basis, primitive,
                        sign_primitive)


class DimensionMismatch(ValueError):
    pass


def _pointed_extreme_rays(normals, m):
    """Extreme rays of the pointed cone {y in Q^m : n.y >= 0 for n in normals}.

    Double description: start from an invertible subset of the normals,
    insert the rest one at a time, keeping only adjacent-pair combinations.
    Requires the constraint matrix to have trivial kernel.
    """
    if m == 0:
        return []
    normals = list(dict.fromkeys(tuple(n) for n in normals))
    # invertible initial subset
    chosen, rest = [], []
    for n in normals:
        if len(chosen) < m and len(hnf(chosen + [n])) > len(chosen):
            chosen.append(n)
        else:
            rest.append(n)
    if len(chosen) < m:
        raise ValueError("constraint matrix is rank deficient for a pointed cone")
    d = det(chosen)
    adj = adjugate(chosen)
    sgn = 1 if d > 0 else -1
    rays = [primitive(tuple(sgn * adj[i][j] for i in range(m))) for j in range(m)]
    processed = list(chosen)
    tight = [frozenset(i for i in range(m) if i != j) for j in range(m)]
    for a in rest:
        t = len(processed)
        processed.append(a)
        vals = [dot(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            tight = [z | {t} if v == 0 else z for z, v in zip(tight, vals)]
            continue
        keep_rays, keep_tight = [], []
        for r, z, v in zip(rays, tight, vals):
            if v >= 0:
                keep_rays.append(r)
                keep_tight.append(z | {t} if v == 0 else z)
        new = {}
        for rp, zp, vp in zip(rays, tight, vals):
            if vp <= 0:
                continue
            for rn, zn, vn in zip(rays, tight, vals):
                if vn >= 0:
                    continue
                zz = zp & zn
                adjacent = not any(z3 >= zz for r3, z3 in zip(rays, tight)
                                   if r3 is not rp and r3 is not rn)
                if not adjacent:
                    continue
                ray = primitive(tuple(vp * x - vn * y for x, y in zip(rn, rp)))
                if ray not in new:
                    new[ray] = frozenset(i for i, nn in enumerate(processed)
                                         if dot(nn, ray) == 0)
        rays = keep_rays + list(new)
        tight = keep_tight + list(new.values())
    return sorted(set(rays))


def _extreme_rays(normals, n):
    """(rays, lineality) of {x in Q^n : a.x >= 0 for a in normals}.

    ``rays`` are the extreme rays of the pointed part inside the orthogonal
    complement of the lineality space; ``lineality`` is a Hermite basis.
    """
    normals = [tuple(a) for a in normals if any(a)]
    lin = kernel_basis(normals, n) if normals else hnf([tuple(1 if j == i else 0 for j in range(n)) for i in range(n)])
    comp = kernel_basis(lin, n) if lin else hnf([tuple(1 if j == i else 0 for j in range(n)) for i in range(n)])
    m = len(comp)
    if m == 0:
        return (), lin
    transformed = [tuple(dot(a, b) for b in comp) for a in normals]
    ys = _pointed_extreme_rays(transformed, m)
    rays = sorted(primitive(tuple(sum(y[i] * comp[i][j] for i in range(m))
                                  for j in range(n))) for y in ys)
    return tuple(rays), lin


class Cone:
    """Rational polyhedral cone with both generator and facet descriptions."""

    __slots__ = ("ambient_dim", "rays", "lineality", "ineqs", "eqs")

    def __init__(self, ambient_dim, rays, lineality, ineqs, eqs):
        self.ambient_dim = ambient_dim
        self.rays = tuple(rays)
        self.lineality = tuple(lineality)
        self.ineqs = tuple(ineqs)
        self.eqs = tuple(eqs)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rays(rays, ambient_dim):
        rays = [tuple(r) for r in rays]
        for r in rays:
            if len(r) != ambient_dim:
                raise DimensionMismatch(
                    f"ray of length {len(r)} in ambient dimension {ambient_dim}")
        gens = [r for r in rays if any(r)]
        ineqs, eqs = _extreme_rays(gens, ambient_dim)
        return Cone._from_descr(ineqs, eqs, ambient_dim)

    @staticmethod
    def from_halfspaces(normals, ambient_dim):
        normals = [tuple(a) for a in normals]
        for a in normals:
            if len(a) != ambient_dim:
                raise DimensionMismatch(
                    f"normal of length {len(a)} in ambient dimension {ambient_dim}")
        rays, lin = _extreme_rays(normals, ambient_dim)
        gens = list(rays) + [l for l in lin] + [tuple(-x for x in l) for l in lin]
        ineqs, eqs = _extreme_rays(gens, ambient_dim)
        return Cone(ambient_dim, rays, lin, ineqs, eqs)

    @staticmethod
    def _from_descr(ineqs, eqs, ambient_dim):
        normals = list(ineqs) + list(eqs) + [tuple(-x for x in e) for e in eqs]
        rays, lin = _extreme_rays(normals, ambient_dim)
        return Cone(ambient_dim, rays, lin, ineqs, eqs)

    @staticmethod
    def coordinate_face(ambient_dim, indices):
        """The face cone(e_i : i in indices) of the positive orthant."""
        def unit(i):
            return tuple(1 if j == i else 0 for j in range(ambient_dim))
        idx = sorted(set(indices))
        rays = tuple(unit(i) for i in idx)
        eqs = tuple(unit(j) for j in range(ambient_dim) if j not in idx)
        return Cone(ambient_dim, rays, (), rays, eqs)

    @staticmethod
    def zero(ambient_dim):
        return Cone.from_rays([], ambient_dim)

    @staticmethod
    def full(ambient_dim):
        return Cone.from_halfspaces([], ambient_dim)

    # -- canonical identity -------------------------------------------------

    @property
    def key(self):
        return (self.ambient_dim, self.rays, self.lineality)

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        parts = [",".join(str(tuple(r)) for r in self.rays)]
        if self.lineality:
            parts.append(" lin " + ",".join(str(tuple(l)) for l in self.lineality))
        return "cone[" + "".join(parts) + "]"

    # -- queries -------------------------------------------------------------

    @property
    def halfspace_normals(self):
        return list(self.ineqs) + list(self.eqs) + \
            [tuple(-x for x in e) for e in self.eqs]

    def dim(self):
        return self.ambient_dim - len(self.eqs)

    def is_zero(self):
        return not self.rays and not self.lineality

    def is_pointed(self):
        return not self.lineality

    def is_fulldim(self):
        return not self.eqs

    def contains(self, x, mode="closed"):
        x = tuple(x)
        if len(x) != self.ambient_dim:
            raise DimensionMismatch(
                f"point of length {len(x)} in ambient dimension {self.ambient_dim}")
        if any(dot(e, x) != 0 for e in self.eqs):
            return False
        if mode == "closed":
            return all(dot(n, x) >= 0 for n in self.ineqs)
        if mode == "relative_interior":
            return all(dot(n, x) > 0 for n in self.ineqs)
        raise ValueError(f"unknown containment mode {mode!r}")

    def relative_interior_point(self):
        if self.rays:
            total = tuple(sum(r[j] for r in self.rays)
                          for j in range(self.ambient_dim))
            return primitive(total)
        if self.lineality:
            return primitive(self.lineality[0])
        raise ValueError("the zero cone has no relative interior point")

    def is_subcone(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        for r in self.rays:
            if not other.contains(r):
                return False
        for l in self.lineality:
            if not other.contains(l) or not other.contains(tuple(-x for x in l)):
                return False
        return True

    def intersect(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Cone.from_halfspaces(
            self.halfspace_normals + other.halfspace_normals, self.ambient_dim)

    def facets(self):
        out = []
        for n in self.ineqs:
            tight = [r for r in self.rays if dot(n, r) == 0]
            gens = tight + [l for l in self.lineality] + \
                [tuple(-x for x in l) for l in self.lineality]
            out.append(Cone.from_rays(gens, self.ambient_dim))
        return sorted(set(out), key=lambda c: c.key)

    def all_faces(self):
        seen = {self.key: self}
        stack = [self]
        while stack:
            c = stack.pop()
            for f in c.facets():
                if f.key not in seen:
                    seen[f.key] = f
                    stack.append(f)
        return sorted(seen.values(), key=lambda c: c.key)

    def hull(self, other):
        """Smallest cone containing both."""
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        gens = []
        for c in (self, other):
            gens.extend(c.rays)
            for l in c.lineality:
                gens.append(l)
                gens.append(tuple(-x for x in l))
        return Cone.from_rays(gens, self.ambient_dim)


def cone_from_rays(rays, ambient_dim):
    return Cone.from_rays(rays, ambient_dim)


def cone_from_halfspaces(normals, ambient_dim):
    return Cone.from_halfspaces(normals, ambient_dim)


def intersect(a, b):
    return a.intersect(b)


class Arrangement:
    """A full-dimensional support cone sliced by central hyperplanes."""

    def __init__(self, support, hyperplanes):
        if support.is_zero():
            raise ValueError("empty support")
        if not support.is_fulldim():
            raise ValueError("support must be full-dimensional")
        self.support = support
        self.hyperplanes = tuple(sorted(set(
            sign_primitive(h) for h in hyperplanes if any(h))))


def _cuts(cone, n):
    """Does the hyperplane n.x = 0 meet the interior of the cone?"""
    if any(dot(n, l) != 0 for l in cone.lineality):
        return True
    has_pos = any(dot(n, r) > 0 for r in cone.rays)
    has_neg = any(dot(n, r) < 0 for r in cone.rays)
    return has_pos and has_neg


def arrangement_cells(arr):
    """Closures of the connected components of support minus the hyperplanes.

    Cells are full-dimensional, tile the support, and come back in a
    deterministic canonical order.
    """
    out = []

    def split(cone, hps):
        for i, n in enumerate(hps):
            if _cuts(cone, n):
                rest = hps[i + 1:]
                neg = tuple(-x for x in n)
                split(Cone.from_halfspaces(cone.halfspace_normals + [n],
                                           cone.ambient_dim), rest)
                split(Cone.from_halfspaces(cone.halfspace_normals + [neg],
                                           cone.ambient_dim), rest)
                return
        out.append(cone)

    split(arr.support, arr.hyperplanes)
    return sorted(out, key=lambda c: c.key)
