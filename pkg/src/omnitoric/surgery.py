"""Connected sums and pruning (face truncation) of simple polytopes and pairs."""

from __future__ import annotations

from dataclasses import dataclass

from .dichar import Dicharacteristic, normalize_at_vertex, validate
from .errors import (
    DegenerateDimensionError,
    DimensionMismatchError,
    InvalidFaceError,
    InvariantViolation,
)
from .polytope import SimplePolytope, make_simplex, validation_problems

DEGENERATE_MESSAGE = (
    "connected sum needs dimension >= 2: in dimension 1 each vertex is a facet, "
    "so gluing would drop the columns at both chosen vertices. Sums of 1-dimensional "
    "pairs are rejected instead of extending the definition."
)


@dataclass(frozen=True)
class ConnSumSpec:
    """Polytopes with a distinguished vertex each, given by ordered facet names."""

    left: SimplePolytope
    left_order: tuple[str, ...]
    right: SimplePolytope
    right_order: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "left_order", tuple(self.left_order))
        object.__setattr__(self, "right_order", tuple(self.right_order))
        if self.left.dim != self.right.dim:
            raise DimensionMismatchError(
                f"cannot sum dimensions {self.left.dim} and {self.right.dim}"
            )
        if self.left.dim <= 1:
            raise DegenerateDimensionError(DEGENERATE_MESSAGE, {"dim": self.left.dim})
        for p, order in ((self.left, self.left_order), (self.right, self.right_order)):
            ids = [p.facet_index(x) for x in order]
            if len(set(ids)) != len(ids) or frozenset(ids) not in set(p.vertices):
                raise InvalidFaceError("ordering is not the facet set of a vertex", {"ordering": list(order)})


def default_order(p: SimplePolytope) -> tuple[str, ...]:
    """Facets of the lexicographically least vertex, in facet-list order."""
    return tuple(p.names(p.vertices[0]))


def connected_sum(spec: ConnSumSpec) -> SimplePolytope:
    """Glue ``spec.left`` and ``spec.right`` at their vertices.

    Facets avoiding the left vertex keep their names with prefix ``L.``,
    those avoiding the right vertex get ``R.``; the r-th facets at the two
    vertices merge into ``G<r>``.
    """
    p, q = spec.left, spec.right
    n = p.dim
    facets = []
    remap_p, remap_q = {}, {}
    glued = {p.facet_index(x): r for r, x in enumerate(spec.left_order)}
    for i, name in enumerate(p.facets):
        if i not in glued:
            remap_p[i] = len(facets)
            facets.append("L." + name)
    g0 = len(facets)
    facets.extend(f"G{r + 1}" for r in range(n))
    for i, r in glued.items():
        remap_p[i] = g0 + r
    glued_q = {q.facet_index(x): r for r, x in enumerate(spec.right_order)}
    for i, name in enumerate(q.facets):
        if i not in glued_q:
            remap_q[i] = len(facets)
            facets.append("R." + name)
    for i, r in glued_q.items():
        remap_q[i] = g0 + r
    v = frozenset(glued)
    w = frozenset(glued_q)
    verts = [frozenset(remap_p[f] for f in u) for u in p.vertices if u != v]
    verts += [frozenset(remap_q[f] for f in u) for u in q.vertices if u != w]
    out = SimplePolytope(n, tuple(facets), tuple(verts))
    problems = validation_problems(out)
    if problems:
        raise InvariantViolation("connected sum is not a simple polytope", problems)
    return out


def _fresh_name(p: SimplePolytope, stem: str = "H") -> str:
    k = 1
    while f"{stem}{k}" in p.index:
        k += 1
    return f"{stem}{k}"


def prune(p: SimplePolytope, face_facets, new_name: str | None = None) -> SimplePolytope:
    """Cut off the face given by ``face_facets`` with one new facet.

    Each vertex ``v`` of the face is replaced by one vertex per facet ``f``
    containing the face, lying on ``(facets(v) - f) + new``; every other vertex
    is kept. The face must be proper and not a facet.
    """
    s = p.face_of(face_facets)
    k = len(s)
    if k < 2:
        raise InvalidFaceError(
            "pruning needs a face of codimension at least 2", {"facets": p.names(s)}
        )
    name = new_name or _fresh_name(p)
    if name in p.index:
        raise InvalidFaceError(f"facet name {name!r} already in use")
    new = p.m
    verts = []
    for v in p.vertices:
        if s <= v:
            verts.extend((v - {f}) | {new} for f in sorted(s))
        else:
            verts.append(v)
    out = SimplePolytope(p.dim, p.facets + (name,), tuple(verts))
    problems = validation_problems(out)
    if problems:
        raise InvariantViolation("pruned polytope is not simple", problems)
    return out


def pruning_sequence_for(dims) -> list[frozenset]:
    """Faces to prune, in order, turning the simplex into a product of simplices.

    ``dims`` are the factor dimensions ``m_1..m_k`` with ``n = sum(dims)``.
    Faces are returned as sets of facet names of the running polytope, which
    starts as :func:`make_simplex` ``(n)`` and gains facets ``H1, H2, ...``.
    The i-th cut splits off the i-th factor: after it, the facets
    ``(S_{i-1} - S_i) + {H_i}`` are those of that factor, where
    ``S_i = {D1, ..., D_{m_{i+1}+...+m_k+1}}``. The remaining ``S_{k-1}``
    becomes the last factor. Fewer than two factors need no cuts.
    """
    dims = list(dims)
    if any(d < 1 for d in dims):
        raise ValueError("factor dimensions must be positive")
    if len(dims) < 2:
        return []
    seq = []
    rest = sum(dims)
    for d in dims[:-1]:
        rest -= d
        seq.append(frozenset(f"D{r}" for r in range(1, rest + 2)))
    return seq


def apply_pruning_sequence(n: int, seq) -> SimplePolytope:
    p = make_simplex(n)
    for face in seq:
        p = prune(p, face)
    return p


def dichar_connected_sum(a: Dicharacteristic, a_order, b: Dicharacteristic, b_order) -> Dicharacteristic:
    """Connected sum of omnioriented pairs at the vertices given by the orderings.

    Both sides are first normalised so that the r-th ordered facet carries the
    r-th standard vector; the glued facet ``G<r>`` then gets that vector.
    """
    if a.n != b.n:
        raise DimensionMismatchError(f"cannot sum dimensions {a.n} and {b.n}")
    if a.n <= 1:
        raise DegenerateDimensionError(DEGENERATE_MESSAGE, {"dim": a.n})
    spec = ConnSumSpec(a.base, a_order, b.base, b_order)
    base = connected_sum(spec)
    _, na = normalize_at_vertex(a, spec.left_order)
    _, nb = normalize_at_vertex(b, spec.right_order)
    cols = {}
    for name, c in zip(a.base.facets, na.columns):
        cols["L." + name] = c
    for name, c in zip(b.base.facets, nb.columns):
        cols["R." + name] = c
    for r in range(a.n):
        cols[f"G{r + 1}"] = tuple(int(i == r) for i in range(a.n))
    out = Dicharacteristic.from_mapping(base, cols)
    if not validate(out).valid:
        raise InvariantViolation("connected sum dicharacteristic is singular")
    return out

