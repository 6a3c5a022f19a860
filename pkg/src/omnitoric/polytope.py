"""Combinatorial simple polytopes.

A simple n-polytope is stored as its vertex-facet incidences: an ordered list
of facet names and, for every vertex, the set of the ``n`` facets meeting at
it. A face is identified with the set of facets containing it, so the faces
are exactly the subsets of vertex facet sets (the empty set being the whole
polytope).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb

from .errors import InvalidFaceError, InvalidPolytopeError, UnknownFacetError

Face = frozenset  # frozenset[int] of facet indices


@dataclass(frozen=True)
class SimplePolytope:
    dim: int
    facets: tuple[str, ...]
    vertices: tuple[frozenset, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        verts = sorted((frozenset(v) for v in self.vertices), key=sorted)
        object.__setattr__(self, "vertices", tuple(verts))

    @property
    def m(self) -> int:
        return len(self.facets)

    @property
    def q(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.facets)}

    def facet_index(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownFacetError(f"no facet named {name!r}", {"facets": list(self.facets)}) from None

    def face_of(self, names) -> frozenset:
        """Facet-index set for a collection of facet names, checked to be a face."""
        s = frozenset(self.facet_index(x) for x in names)
        if not self.is_face(s):
            raise InvalidFaceError(f"facets {sorted(names)} do not meet", {"facets": sorted(names)})
        return s

    def names(self, s) -> list[str]:
        return [self.facets[i] for i in sorted(s)]

    def is_face(self, s) -> bool:
        return any(s <= v for v in self.vertices)

    def vertices_of(self, s) -> list[frozenset]:
        return [v for v in self.vertices if s <= v]

    def to_json(self) -> dict:
        return {
            "type": "polytope",
            "dim": self.dim,
            "facets": list(self.facets),
            "vertices": [sorted(v) for v in self.vertices],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SimplePolytope":
        # vertex entries may be facet indices or facet names
        try:
            facets = tuple(doc["facets"])
            where = {name: i for i, name in enumerate(facets)}
            verts = tuple(
                frozenset(where[x] if isinstance(x, str) else int(x) for x in v) for v in doc["vertices"]
            )
            p = cls(int(doc["dim"]), facets, verts)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidPolytopeError(f"malformed polytope document: {exc!r}") from None
        check(p)
        return p

    def relabel(self, names) -> "SimplePolytope":
        return SimplePolytope(self.dim, tuple(names), self.vertices)


def validation_problems(p: SimplePolytope) -> list[str]:
    """Necessary conditions for ``p`` to be a simple polytope; empty when all hold."""
    problems = []
    n, m = p.dim, p.m
    if n < 0:
        return ["negative dimension"]
    if n >= 1 and m <= n:
        problems.append(f"need more than {n} facets, got {m}")
    if len(set(p.facets)) != m:
        dup = sorted(k for k, c in Counter(p.facets).items() if c > 1)
        problems.append(f"duplicate facet names {dup}")
    if not p.vertices:
        problems.append("no vertices")
    for v in p.vertices:
        if len(v) != n:
            problems.append(f"vertex {sorted(v)} lies on {len(v)} facets, expected {n}")
        if any(not 0 <= i < m for i in v):
            problems.append(f"vertex {sorted(v)} refers to a missing facet")
    if len(set(p.vertices)) != len(p.vertices):
        problems.append("repeated vertex")
    used = set().union(*p.vertices) if p.vertices else set()
    for i, name in enumerate(p.facets):
        if i not in used:
            problems.append(f"facet {name} contains no vertex")
    if problems:
        return problems
    f = f_vector(p)
    if sum((-1) ** i * x for i, x in enumerate(f)) != 1:
        problems.append(f"Euler relation fails for f={f}")
    h = h_vector(p)
    if h != h[::-1]:
        problems.append(f"h-vector {h} is not symmetric")
    return problems


def check(p: SimplePolytope) -> SimplePolytope:
    problems = validation_problems(p)
    if problems:
        raise InvalidPolytopeError("not a simple polytope", problems)
    return p


# ---------------------------------------------------------------- constructors


def make_simplex(n: int) -> SimplePolytope:
    if n < 1:
        raise InvalidPolytopeError("simplex dimension must be positive", {"n": n})
    facets = tuple(f"D{r}" for r in range(1, n + 2))
    return SimplePolytope(n, facets, tuple(frozenset(c) for c in combinations(range(n + 1), n)))


def make_cube(n: int) -> SimplePolytope:
    """n-cube with facets ``C1^0, C1^1, ..., Cn^0, Cn^1`` (index ``2(r-1)+eps``)."""
    if n < 1:
        raise InvalidPolytopeError("cube dimension must be positive", {"n": n})
    facets = tuple(f"C{r}^{e}" for r in range(1, n + 1) for e in (0, 1))
    verts = []
    for bits in range(2**n):
        verts.append(frozenset(2 * r + ((bits >> r) & 1) for r in range(n)))
    return SimplePolytope(n, facets, tuple(verts))


def point() -> SimplePolytope:
    """The 0-dimensional polytope; only needed as a face or a trivial factor."""
    return SimplePolytope(0, (), (frozenset(),))


def product(p: SimplePolytope, q: SimplePolytope, prefixes=("L.", "R.")) -> SimplePolytope:
    a, b = prefixes
    facets = tuple(a + x for x in p.facets) + tuple(b + x for x in q.facets)
    shift = p.m
    verts = tuple(v | frozenset(i + shift for i in w) for v in p.vertices for w in q.vertices)
    return SimplePolytope(p.dim + q.dim, facets, verts)


# ------------------------------------------------------------------ face data


@dataclass(frozen=True)
class FaceLattice:
    """All nonempty faces as facet-index sets, with their covering relation.

    ``faces`` is sorted by codimension then lexicographically; the whole
    polytope (empty facet set) comes first. ``covers`` lists pairs
    ``(i, j)`` meaning face ``faces[j]`` is a facet of face ``faces[i]``.
    """

    polytope: SimplePolytope
    faces: tuple[frozenset, ...]
    covers: tuple[tuple[int, int], ...] = field(repr=False)

    def dim_of(self, s) -> int:
        return self.polytope.dim - len(s)

    def of_codim(self, k: int) -> list[frozenset]:
        return [s for s in self.faces if len(s) == k]

    def counts_by_dim(self) -> list[int]:
        n = self.polytope.dim
        c = Counter(n - len(s) for s in self.faces)
        return [c[i] for i in range(n + 1)]

    def __len__(self):
        return len(self.faces)

    def to_dot(self) -> str:
        p = self.polytope
        lines = ["digraph face_lattice {", "  rankdir=BT;"]
        for i, s in enumerate(self.faces):
            label = "{" + ",".join(p.names(s)) + "}" if s else "P"
            lines.append(f'  f{i} [label="{label}", dim={self.dim_of(s)}];')
        for i, j in self.covers:
            lines.append(f"  f{j} -> f{i};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        p = self.polytope
        return {
            "type": "lattice",
            "faces": [{"facets": p.names(s), "dim": self.dim_of(s)} for s in self.faces],
            "covers": [list(c) for c in self.covers],
        }


def all_faces(p: SimplePolytope) -> set[frozenset]:
    faces: set[frozenset] = set()
    for v in p.vertices:
        items = sorted(v)
        for k in range(len(items) + 1):
            faces.update(frozenset(c) for c in combinations(items, k))
    return faces


def face_lattice(p: SimplePolytope) -> FaceLattice:
    faces = sorted(all_faces(p), key=lambda s: (len(s), sorted(s)))
    pos = {s: i for i, s in enumerate(faces)}
    covers = []
    for i, s in enumerate(faces):
        for f in range(p.m):
            if f not in s:
                t = s | {f}
                if t in pos:
                    covers.append((i, pos[t]))
    return FaceLattice(p, tuple(faces), tuple(sorted(covers)))


def f_vector(p: SimplePolytope) -> list[int]:
    """Face counts ``f_0..f_n`` by dimension; ``f_n == 1``."""
    n = p.dim
    c = Counter(n - len(s) for s in all_faces(p))
    return [c[i] for i in range(n + 1)]


def h_from_f(f) -> list[int]:
    # sum_i f_i (t-1)^i = sum_i h_i t^i
    n = len(f) - 1
    h = [0] * (n + 1)
    for i, fi in enumerate(f):
        for k in range(i + 1):
            h[k] += fi * comb(i, k) * (-1) ** (i - k)
    return h


def h_vector(p: SimplePolytope) -> list[int]:
    return h_from_f(f_vector(p))


@dataclass(frozen=True)
class CountVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]


def count_vectors(p: SimplePolytope) -> CountVectors:
    f = f_vector(p)
    return CountVectors(tuple(f), tuple(h_from_f(f)))


def face_polytope(p: SimplePolytope, s) -> tuple[SimplePolytope, list[int]]:
    """The face with facet set ``s`` as a simple polytope in its own right.

    Returns the polytope and, for each of its facets, the index of the facet
    of ``p`` it came from (the facets meeting the face properly).
    """
    s = frozenset(s)
    verts = p.vertices_of(s)
    if not verts:
        raise InvalidFaceError("facets do not meet", {"facets": p.names(s)})
    kept = sorted(set().union(*verts) - s) if verts else []
    new = {f: i for i, f in enumerate(kept)}
    fv = tuple(frozenset(new[f] for f in v - s) for v in verts)
    return SimplePolytope(p.dim - len(s), tuple(p.facets[f] for f in kept), fv), kept


# ---------------------------------------------------------------- equivalence


def _refined_colors(ps):
    """Joint colour refinement of the facet/vertex incidence graphs of ``ps``.

    Returns per-polytope facet colours; equal colours are necessary for a
    facet to be mapped onto another by a combinatorial equivalence.
    """
    fcol = [[sum(1 for v in p.vertices if f in v) for f in range(p.m)] for p in ps]
    vcol = [[0] * p.q for p in ps]
    nclasses = -1
    for _ in range(max(p.m + p.q for p in ps) + 1):
        vsig = [
            [tuple(sorted(fc[f] for f in v)) for v in p.vertices]
            for p, fc in zip(ps, fcol)
        ]
        fsig = [
            [
                (fc[f], tuple(sorted(vs[k] for k, v in enumerate(p.vertices) if f in v)))
                for f in range(p.m)
            ]
            for p, fc, vs in zip(ps, fcol, vsig)
        ]
        vkeys = {s: i for i, s in enumerate(sorted({s for vs in vsig for s in vs}))}
        fkeys = {s: i for i, s in enumerate(sorted({s for fs in fsig for s in fs}))}
        vcol = [[vkeys[s] for s in vs] for vs in vsig]
        fcol = [[fkeys[s] for s in fs] for fs in fsig]
        if len(fkeys) + len(vkeys) == nclasses:
            break
        nclasses = len(fkeys) + len(vkeys)
    return fcol, vcol


def iter_equivalences(p: SimplePolytope, q: SimplePolytope):
    """Yield every facet bijection ``phi`` (a tuple, ``phi[i]`` = image of facet ``i``)
    that carries the vertex sets of ``p`` onto those of ``q``.

    The enumeration order is deterministic.
    """
    if p.dim != q.dim or p.m != q.m or p.q != q.q:
        return
    (fp, fq), (vp, vq) = _refined_colors([p, q])
    if sorted(fp) != sorted(fq) or sorted(vp) != sorted(vq):
        return
    m = p.m
    # assign rare colours first, ties by index
    freq = Counter(fp)
    order = sorted(range(m), key=lambda f: (freq[fp[f]], f))
    cands = {f: [g for g in range(m) if fq[g] == fp[f]] for f in order}
    target = set(q.vertices)
    phi: dict[int, int] = {}
    used: set[int] = set()

    def consistent(assigned_p):
        img = frozenset(phi[f] for f in assigned_p)
        left = Counter(frozenset(phi[f] for f in v & assigned_p) for v in p.vertices)
        right = Counter(w & img for w in q.vertices)
        return left == right

    def search(k):
        if k == m:
            if {frozenset(phi[f] for f in v) for v in p.vertices} == target:
                yield tuple(phi[f] for f in range(m))
            return
        f = order[k]
        for g in cands[f]:
            if g in used:
                continue
            phi[f] = g
            used.add(g)
            if consistent(frozenset(order[: k + 1])):
                yield from search(k + 1)
            used.discard(g)
            del phi[f]

    yield from search(0)


def is_equivalent(p: SimplePolytope, q: SimplePolytope):
    """First combinatorial equivalence ``p -> q`` as a facet bijection, or ``None``."""
    return next(iter_equivalences(p, q), None)


def bijection_names(p: SimplePolytope, q: SimplePolytope, phi) -> dict[str, str]:
    return {p.facets[i]: q.facets[j] for i, j in enumerate(phi)}
