"""Exact rational convex polytopes given by outward halfspaces.

A polytope is stored as its irredundant H-representation
``<x, conormal> <= level`` with primitive integer conormals, together
with the vertex list obtained by brute-force enumeration of all
``dim``-subsets of facets.  All coordinates are Fractions; nothing in
this module touches floating point.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import factorial, gcd
from functools import reduce

from . import exact
from .errors import (
    EmptyPolytope,
    NotFullDimensional,
    NotSimple,
    NotUnimodular,
    ParseError,
    RedundantHalfSpace,
    Unbounded,
)


@dataclass(frozen=True)
class HalfSpace:
    """The constraint ``<x, conormal> <= level``."""

    conormal: tuple
    level: Fraction

    def __post_init__(self):
        conormal = tuple(int(c) for c in self.conormal)
        if not any(conormal):
            raise ValueError("conormal must be nonzero")
        if reduce(gcd, (abs(c) for c in conormal), 0) != 1:
            raise ValueError(f"conormal {conormal} is not primitive")
        object.__setattr__(self, "conormal", conormal)
        object.__setattr__(self, "level", exact.rational(self.level))

    @classmethod
    def normalized(cls, conormal, level):
        """Build from any nonzero rational conormal, rescaling to the primitive one."""
        conormal = exact.vector(conormal)
        level = exact.rational(level)
        prim = exact.primitive(conormal)
        # conormal = c * prim with c > 0
        i = next(i for i, p in enumerate(prim) if p != 0)
        c = conormal[i] / prim[i]
        return cls(prim, level / c)

    def value(self, x):
        return exact.dot(self.conormal, x)

    def contains(self, x):
        return self.value(x) <= self.level

    def is_tight(self, x):
        return self.value(x) == self.level


@dataclass(frozen=True)
class VertexFrame:
    """Inward primitive edge generators at one vertex of a simple polytope."""

    vertex: tuple
    edges: tuple
    unimodular: bool

    @property
    def determinant(self):
        return int(exact.det(self.edges))


@dataclass(frozen=True, eq=False)
class Polytope:
    """A bounded, full-dimensional polytope with no redundant halfspace.

    Use :func:`build_polytope` rather than the constructor; it enumerates
    the vertices and checks the invariants.
    """

    dim: int
    halfspaces: tuple
    vertices: tuple
    vertex_facets: tuple

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.dim == other.dim and self.halfspaces == other.halfspaces

    def __hash__(self):
        return hash((self.dim, self.halfspaces))

    def __repr__(self):
        verts = ", ".join("(" + ", ".join(map(str, v)) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, vertices=[{verts}])"

    def contains(self, x, strict=False):
        x = exact.vector(x)
        if strict:
            return all(h.value(x) < h.level for h in self.halfspaces)
        return all(h.contains(x) for h in self.halfspaces)

    @cached_property
    def facet_vertices(self):
        """For each halfspace, the set of vertex indices lying on it."""
        sets = [set() for _ in self.halfspaces]
        for vi, facets in enumerate(self.vertex_facets):
            for j in facets:
                sets[j].add(vi)
        return tuple(frozenset(s) for s in sets)

    @property
    def is_simple(self):
        return all(len(f) == self.dim for f in self.vertex_facets)

    @cached_property
    def _triangulation(self):
        return tuple(_triangulate_face(self, frozenset(range(len(self.vertices))), self.dim))

    @cached_property
    def _volume_and_centroid(self):
        total = Fraction(0)
        moment = [Fraction(0)] * self.dim
        for simplex in triangulate(self):
            vol = simplex_volume(simplex)
            total += vol
            for k in range(self.dim):
                moment[k] += vol * sum(v[k] for v in simplex) / (self.dim + 1)
        return total, tuple(m / total for m in moment)


def build_polytope(dim, halfspaces):
    """Enumerate the vertices of ``{x : <x, n_j> <= l_j}`` and validate.

    Raises
    ------
    Unbounded
        The region has a nonzero recession direction, or the conormals do
        not span (the region would contain a line).
    EmptyPolytope
        No point satisfies all constraints.
    NotFullDimensional
        The vertices span a proper affine subspace.
    RedundantHalfSpace
        Some halfspace does not cut out a facet; ``exc.index`` names it.
    """
    if dim < 1:
        raise ValueError("dim must be at least 1")
    halfspaces = tuple(halfspaces)
    if not halfspaces:
        raise ValueError("at least one halfspace is required")
    for h in halfspaces:
        if len(h.conormal) != dim:
            raise ValueError(f"conormal {h.conormal} has wrong length for dim {dim}")

    normals = [h.conormal for h in halfspaces]
    if exact.rank(normals, dim) < dim:
        raise Unbounded("conormals do not span; the region contains a line or is empty")

    found = {}
    for subset in combinations(range(len(halfspaces)), dim):
        x = exact.solve([normals[j] for j in subset], [halfspaces[j].level for j in subset])
        if x is None or x in found:
            continue
        if all(h.contains(x) for h in halfspaces):
            found[x] = frozenset(j for j, h in enumerate(halfspaces) if h.is_tight(x))
    if not found:
        raise EmptyPolytope("no point satisfies all constraints")

    for subset in combinations(range(len(halfspaces)), dim - 1):
        rows = [normals[j] for j in subset]
        if exact.rank(rows, dim) < dim - 1:
            continue
        (d,) = exact.nullspace(rows, dim)
        for direction in (d, exact.scale(-1, d)):
            if all(exact.dot(nu, direction) <= 0 for nu in normals):
                raise Unbounded(
                    "recession direction " + str([exact.format_rational(c) for c in direction])
                )

    vertices = tuple(sorted(found))
    if exact.affine_rank(vertices) < dim:
        raise NotFullDimensional("vertices span a proper affine subspace")

    vertex_facets = tuple(found[v] for v in vertices)
    seen = {}
    for j in range(len(halfspaces)):
        on = [vertices[i] for i, fs in enumerate(vertex_facets) if j in fs]
        if not on or exact.affine_rank(on) < dim - 1:
            raise RedundantHalfSpace(j)
        key = frozenset(on)
        if key in seen:
            raise RedundantHalfSpace(j, f"halfspace {j} duplicates halfspace {seen[key]}")
        seen[key] = j

    return Polytope(dim, halfspaces, vertices, vertex_facets)


def vertex_frames(P):
    """Inward primitive edge generators at every vertex, in vertex order.

    At a simple vertex with tight facets ``F`` the edge leaving facet ``k``
    is the direction orthogonal to the other conormals of ``F`` that points
    strictly into the halfspace of ``k``.  Edges are ordered by the index
    of the facet they leave.
    """
    frames = []
    for vi, (v, facets) in enumerate(zip(P.vertices, P.vertex_facets)):
        if len(facets) != P.dim:
            raise NotSimple(vi)
        order = sorted(facets)
        inv = exact.inverse([P.halfspaces[j].conormal for j in order])
        cols = exact.transpose(inv)
        edges = tuple(exact.primitive(exact.scale(-1, c)) for c in cols)
        frames.append(VertexFrame(v, edges, abs(exact.det(edges)) == 1))
    return frames


def delzant_defects(P):
    """Indices of vertices where the Delzant condition fails (non-simple or non-unimodular)."""
    bad = [vi for vi, fs in enumerate(P.vertex_facets) if len(fs) != P.dim]
    if bad:
        return bad
    return [vi for vi, fr in enumerate(vertex_frames(P)) if not fr.unimodular]


def is_delzant(P):
    return not delzant_defects(P)


def _triangulate_face(P, face, k):
    if k == 0:
        return [tuple(face)]
    apex = min(face)  # vertices are sorted, so this is the lex-smallest vertex
    subfaces = set()
    for fv in P.facet_vertices:
        sub = face & fv
        if apex in sub or sub == face or len(sub) < k:
            continue
        if exact.affine_rank([P.vertices[i] for i in sub]) == k - 1:
            subfaces.add(sub)
    result = []
    for sub in sorted(subfaces, key=sorted):
        for simplex in _triangulate_face(P, sub, k - 1):
            result.append((apex,) + simplex)
    return result


def triangulate(P):
    """Deterministic lexicographic-fan triangulation: a list of vertex tuples."""
    return [tuple(P.vertices[i] for i in s) for s in P._triangulation]


def simplex_volume(simplex):
    v0 = simplex[0]
    n = len(v0)
    return abs(exact.det([exact.sub(v, v0) for v in simplex[1:]])) / factorial(n)


def volume(P):
    return P._volume_and_centroid[0]


def centroid(P):
    """Exact Euclidean centroid, the mass center of the toric manifold."""
    return P._volume_and_centroid[1]


def is_quantizable(P):
    return all(exact.is_integral(v) for v in P.vertices)


def origin_vertex(P):
    """The lexicographically smallest vertex, moved to the origin by normalization."""
    return P.vertices[0]


def minimal_rescale(P):
    """Largest r > 0 with every coordinate of ``P - origin_vertex(P)`` in rZ."""
    v0 = origin_vertex(P)
    return exact.gcd_rationals(c for v in P.vertices for c in exact.sub(v, v0))


def transform(P, U, w=None):
    """The image ``U P + w`` for integer ``U`` with ``|det U| = 1``."""
    n = P.dim
    U = tuple(tuple(int(x) for x in row) for row in U)
    if len(U) != n or any(len(row) != n for row in U):
        raise ValueError("U must be dim x dim")
    if abs(exact.det(U)) != 1:
        raise NotUnimodular(f"det U = {exact.det(U)}")
    w = exact.vector(w) if w is not None else (Fraction(0),) * n
    inv_t = exact.transpose(exact.inverse(U))
    halfspaces = []
    for h in P.halfspaces:
        nu = exact.matvec(inv_t, h.conormal)
        halfspaces.append(HalfSpace.normalized(nu, h.level + exact.dot(w, nu)))
    return build_polytope(n, halfspaces)


def translate(P, w):
    return transform(P, [[int(i == j) for j in range(P.dim)] for i in range(P.dim)], w)


def from_json(obj):
    """Parse the canonical ``{"dim": n, "halfspaces": [...]}`` object."""
    try:
        dim = obj["dim"]
        raw = obj["halfspaces"]
        if not isinstance(dim, int) or isinstance(dim, bool) or not isinstance(raw, list):
            raise ParseError("dim must be an integer and halfspaces a list")
        halfspaces = []
        for item in raw:
            conormal = item["conormal"]
            if not isinstance(conormal, list) or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in conormal
            ):
                raise ParseError(f"conormal must be a list of integers: {conormal!r}")
            halfspaces.append(HalfSpace.normalized(conormal, exact.rational(item["level"])))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed polytope object: {exc}") from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    try:
        return build_polytope(dim, halfspaces)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_json(P, with_vertices=True):
    out = {
        "dim": P.dim,
        "halfspaces": [
            {"conormal": list(h.conormal), "level": exact.format_rational(h.level)}
            for h in P.halfspaces
        ],
    }
    if with_vertices:
        out["vertices"] = [[exact.format_rational(c) for c in v] for v in P.vertices]
    return out
