"""Dicharacteristics: one primitive integer vector per facet.

A dicharacteristic over a simple n-polytope with m facets is an integer n x m
matrix whose columns are indexed by facets. Column signs matter: flipping one
gives a different omniorientation over the same polytope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from . import lattice
from .errors import (
    DimensionMismatchError,
    InvalidDicharacteristicError,
    InvalidFaceError,
    InvariantViolation,
    NotUnimodularError,
)
from .polytope import SimplePolytope, check, face_polytope, iter_equivalences

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Dicharacteristic:
    base: SimplePolytope
    columns: tuple[Vector, ...]

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if len(cols) != self.base.m:
            raise DimensionMismatchError(
                f"{len(cols)} columns for {self.base.m} facets", {"facets": list(self.base.facets)}
            )
        for name, c in zip(self.base.facets, cols):
            if len(c) != self.base.dim:
                raise DimensionMismatchError(
                    f"column {name} has length {len(c)}, base has dimension {self.base.dim}",
                    {"facet": name},
                )

    @property
    def n(self) -> int:
        return self.base.dim

    def column(self, name: str) -> Vector:
        return self.columns[self.base.facet_index(name)]

    def as_dict(self) -> dict[str, list[int]]:
        return {name: list(c) for name, c in zip(self.base.facets, self.columns)}

    def matrix(self) -> list[list[int]]:
        """The n x m matrix (rows are torus coordinates)."""
        return [[c[i] for c in self.columns] for i in range(self.n)]

    def at(self, facet_ids) -> list[list[int]]:
        """Square matrix whose columns are the given facets' vectors."""
        return lattice.transpose([self.columns[f] for f in facet_ids]) if facet_ids else []

    def to_json(self) -> dict:
        doc = self.base.to_json()
        doc["type"] = "pair"
        doc["columns"] = self.as_dict()
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Dicharacteristic":
        base = SimplePolytope.from_json(doc)
        cols = doc.get("columns")
        if not isinstance(cols, dict):
            raise InvalidDicharacteristicError("pair document needs a 'columns' mapping")
        missing = [f for f in base.facets if f not in cols]
        extra = [f for f in cols if f not in base.index]
        if missing or extra:
            raise InvalidDicharacteristicError(
                "columns do not match facets", {"missing": missing, "unknown": extra}
            )
        return cls(base, tuple(tuple(cols[f]) for f in base.facets))

    @classmethod
    def from_mapping(cls, base: SimplePolytope, cols: dict) -> "Dicharacteristic":
        return cls(base, tuple(tuple(cols[f]) for f in base.facets))


# A characteristic pair is just the dicharacteristic: it always carries its base.
CharacteristicPair = Dicharacteristic


@dataclass(frozen=True)
class LatticeMap:
    matrix: tuple[Vector, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("lattice map must be square")
        if abs(lattice.det([list(r) for r in rows])) != 1:
            raise NotUnimodularError("determinant is not +-1", {"matrix": [list(r) for r in rows]})

    @classmethod
    def identity(cls, n: int) -> "LatticeMap":
        return cls(tuple(map(tuple, lattice.identity(n))))

    def __call__(self, v) -> Vector:
        return tuple(lattice.matvec(self.matrix, v))

    def inverse(self) -> "LatticeMap":
        return LatticeMap(tuple(map(tuple, lattice.inverse_unimodular([list(r) for r in self.matrix]))))

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        return LatticeMap(tuple(map(tuple, lattice.matmul(self.matrix, other.matrix))))


@dataclass(frozen=True)
class DicharReport:
    valid: bool
    nonprimitive: tuple[str, ...] = ()
    singular_vertices: tuple[tuple[tuple[str, ...], int], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "nonprimitive": list(self.nonprimitive),
            "singular_vertices": [{"facets": list(v), "det": d} for v, d in self.singular_vertices],
        }


def validate(ell: Dicharacteristic) -> DicharReport:
    """Primitivity of every column and |det| = 1 at every vertex."""
    p = ell.base
    bad_cols = tuple(name for name, c in zip(p.facets, ell.columns) if lattice.content(c) != 1)
    bad_verts = []
    for v in p.vertices:
        d = lattice.det(ell.at(sorted(v)))
        if abs(d) != 1:
            bad_verts.append((tuple(p.names(v)), d))
    return DicharReport(not bad_cols and not bad_verts, bad_cols, tuple(bad_verts))


def kernel_basis(ell: Dicharacteristic) -> list[list[int]]:
    """Integer kernel of the dicharacteristic, rows indexed by facets, in Hermite form."""
    basis = lattice.integer_kernel(ell.matrix(), ell.base.m) if ell.n else lattice.identity(ell.base.m)
    if len(basis) != ell.base.m - lattice.rank(ell.matrix()):
        raise InvariantViolation("kernel has the wrong rank")
    if basis and not lattice.is_saturated(basis):
        raise InvariantViolation("kernel basis is not saturated")
    return basis


def translate(theta: LatticeMap, ell: Dicharacteristic) -> Dicharacteristic:
    if len(theta.matrix) != ell.n:
        raise DimensionMismatchError(f"lattice map has size {len(theta.matrix)}, expected {ell.n}")
    return Dicharacteristic(ell.base, tuple(theta(c) for c in ell.columns))


def flip(ell: Dicharacteristic, facet: str) -> Dicharacteristic:
    i = ell.base.facet_index(facet)
    cols = list(ell.columns)
    cols[i] = tuple(-x for x in cols[i])
    return Dicharacteristic(ell.base, tuple(cols))


def normalize_at_vertex(ell: Dicharacteristic, ordering) -> tuple[LatticeMap, Dicharacteristic]:
    """Change basis so the r-th facet of ``ordering`` gets the r-th standard vector.

    ``ordering`` lists facet names; as a set it must be a vertex of the base.
    """
    p = ell.base
    ids = [p.facet_index(x) for x in ordering]
    if len(set(ids)) != len(ids) or frozenset(ids) not in set(p.vertices):
        raise InvalidFaceError("ordering is not the facet set of a vertex", {"ordering": list(ordering)})
    try:
        inv = lattice.inverse_unimodular(ell.at(ids))
    except ValueError:
        raise InvalidDicharacteristicError(
            "columns at the vertex are not a lattice basis", {"ordering": list(ordering)}
        ) from None
    theta = LatticeMap(tuple(map(tuple, inv)))
    return theta, translate(theta, ell)


def restrict_to_face(ell: Dicharacteristic, face_facets) -> Dicharacteristic:
    """Dicharacteristic of the facial submanifold over the face cut out by ``face_facets``.

    The face's own facets are those of the base meeting it properly (names are
    kept). Their vectors are pushed into ``Z^n / span(face columns)``, with the
    quotient identified with ``Z^(n-k)`` by the Smith decomposition of the
    face columns.
    """
    p = ell.base
    s = p.face_of(face_facets)
    k = len(s)
    if k == 0:
        return ell
    sub, kept = face_polytope(p, s)
    a = ell.at(sorted(s))
    d, u, _ = lattice.smith_decomp(a)
    if [d[i][i] for i in range(k)] != [1] * k:
        raise InvariantViolation("quotient lattice is not free", {"diagonal": [d[i][i] for i in range(k)]})
    cols = tuple(tuple(lattice.matvec(u, ell.columns[f])[k:]) for f in kept)
    out = Dicharacteristic(sub, cols)
    if not validate(out).valid:
        raise InvariantViolation("restriction is not a valid dicharacteristic")
    return out


@dataclass(frozen=True)
class PairWitness:
    bijection: tuple[int, ...]
    theta: LatticeMap
    signs: tuple[int, ...]

    def to_json(self, a: Dicharacteristic, b: Dicharacteristic) -> dict:
        return {
            "bijection": {a.base.facets[i]: b.base.facets[j] for i, j in enumerate(self.bijection)},
            "theta": [list(r) for r in self.theta.matrix],
            "signs": {a.base.facets[i]: s for i, s in enumerate(self.signs)},
        }


def pairs_equivalent(a: Dicharacteristic, b: Dicharacteristic, directed: bool = True):
    """Find ``(phi, theta, signs)`` with ``theta a(F) = signs[F] * b(phi F)`` for all facets.

    With ``directed`` every sign must be +1. Returns a :class:`PairWitness` or
    ``None``. Candidate bijections come from the face-lattice isomorphisms of
    the bases, in their deterministic order.
    """
    if a.n != b.n:
        return None
    n = a.n
    pa = a.base
    if n == 0:
        return PairWitness((), LatticeMap(()), ())
    v0 = sorted(pa.vertices[0])
    ma_inv = lattice.inverse_unimodular(a.at(v0))
    sign_choices = [(1,) * n] if directed else list(cartesian((1, -1), repeat=n))
    for phi in iter_equivalences(pa, b.base):
        mb = b.at([phi[f] for f in v0])
        for eps in sign_choices:
            signed = [[x * e for x, e in zip(row, eps)] for row in mb]
            theta = lattice.matmul(signed, ma_inv)
            signs = []
            for f in range(pa.m):
                img = tuple(lattice.matvec(theta, a.columns[f]))
                target = b.columns[phi[f]]
                if img == target:
                    signs.append(1)
                elif not directed and img == tuple(-x for x in target):
                    signs.append(-1)
                else:
                    break
            else:
                return PairWitness(phi, LatticeMap(tuple(map(tuple, theta))), tuple(signs))
    return None


def omniorientations(ell: Dicharacteristic):
    """All 2^m sign variants of ``ell``."""
    for eps in cartesian((1, -1), repeat=ell.base.m):
        yield Dicharacteristic(ell.base, tuple(tuple(e * x for x in c) for e, c in zip(eps, ell.columns)))


def checked(ell: Dicharacteristic) -> Dicharacteristic:
    check(ell.base)
    rep = validate(ell)
    if not rep.valid:
        raise InvalidDicharacteristicError("dicharacteristic fails validation", rep.to_json())
    return ell
