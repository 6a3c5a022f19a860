"""Graded face ring of a dicharacteristic, with rational coefficients.

The ring is ``Q[x_F] / (I + J)`` where ``I`` is generated by the squarefree
monomials of minimal non-faces and ``J`` by the linear forms
``lambda_i = sum_F ell(F)_i x_F``. Everything is graded with ``deg x_F = 1``
(cohomological degree 2).

Monomials are exponent tuples over the facet list. They are ordered
graded-lexicographically with ``x_{F_1} > x_{F_2} > ...``; in each degree the
relations are put in echelon form with leading terms as large as possible, and
the remaining (standard) monomials form the reported basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .dichar import Dicharacteristic
from .polytope import all_faces, h_vector

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class GradedPresentation:
    pair: Dicharacteristic
    variables: tuple[str, ...]
    nonfaces: tuple[frozenset, ...]  # minimal non-faces, as facet-index sets
    linear_forms: tuple[tuple[int, ...], ...]  # lambda_i coefficients over the variables

    @property
    def n(self) -> int:
        return self.pair.n

    def ideal_names(self) -> list[list[str]]:
        return [[self.variables[i] for i in sorted(s)] for s in self.nonfaces]

    def linear_form_dicts(self) -> list[dict[str, int]]:
        return [{self.variables[k]: c for k, c in enumerate(row) if c} for row in self.linear_forms]

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "I": self.ideal_names(),
            "J": self.linear_form_dicts(),
        }


def minimal_nonfaces(faces: set, m: int) -> list[frozenset]:
    """Facet sets that are not faces although every proper subset is."""
    out = set()
    for s in faces:
        for f in range(m):
            if f in s:
                continue
            t = s | {f}
            if t not in faces and all(t - {g} in faces for g in t):
                out.add(t)
    return sorted(out, key=lambda t: (len(t), sorted(t)))


def presentation(pair: Dicharacteristic) -> GradedPresentation:
    p = pair.base
    faces = all_faces(p)
    return GradedPresentation(
        pair,
        p.facets,
        tuple(minimal_nonfaces(faces, p.m)),
        tuple(tuple(row) for row in pair.matrix()),
    )


# ------------------------------------------------------------ graded pieces


@lru_cache(maxsize=None)
def _faces(pres: GradedPresentation) -> frozenset:
    return frozenset(all_faces(pres.pair.base))


def _compositions(total: int, parts: int):
    """Tuples of ``parts`` positive ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cut in combinations(range(1, total), parts - 1):
        bounds = (0,) + cut + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def face_monomials(pres: GradedPresentation, d: int) -> list[Monomial]:
    """Degree-d monomials not in I (support is a face), largest first."""
    m = len(pres.variables)
    out = []
    for s in _faces(pres):
        if len(s) > d or (d > 0 and not s):
            continue
        idx = sorted(s)
        for exps in _compositions(d, len(idx)):
            e = [0] * m
            for i, k in zip(idx, exps):
                e[i] = k
            out.append(tuple(e))
    out.sort(reverse=True)
    return out


@dataclass(frozen=True)
class QuotientComponent:
    degree: int
    monomials: tuple[Monomial, ...]
    pivots: dict  # column -> echelon row (dict column -> Fraction), leading entry 1
    basis: tuple[int, ...]  # columns of standard monomials

    def __hash__(self):
        return hash((self.degree, self.monomials))


def _eliminate(row: dict, pivots: dict) -> dict:
    """Reduce a sparse row against echelon rows until no pivot column remains."""
    row = dict(row)
    while True:
        hit = [c for c in row if c in pivots]
        if not hit:
            return row
        c = min(hit)
        f = row[c]
        for k, v in pivots[c].items():
            x = row.get(k, 0) - f * v
            if x:
                row[k] = x
            else:
                row.pop(k, None)


@lru_cache(maxsize=None)
def component(pres: GradedPresentation, d: int) -> QuotientComponent:
    mons = face_monomials(pres, d)
    col = {mono: i for i, mono in enumerate(mons)}
    pivots: dict[int, dict] = {}
    if d >= 1:
        for lower in face_monomials(pres, d - 1):
            for form in pres.linear_forms:
                row: dict[int, Fraction] = {}
                for k, c in enumerate(form):
                    if not c:
                        continue
                    mono = list(lower)
                    mono[k] += 1
                    mono = tuple(mono)
                    if mono in col:  # otherwise the term lies in I
                        row[col[mono]] = row.get(col[mono], 0) + Fraction(c)
                row = _eliminate({k: v for k, v in row.items() if v}, pivots)
                if row:
                    lead = min(row)
                    inv = 1 / row[lead]
                    pivots[lead] = {k: v * inv for k, v in row.items()}
    basis = tuple(i for i in range(len(mons)) if i not in pivots)
    return QuotientComponent(d, tuple(mons), pivots, basis)


def graded_rank(pres: GradedPresentation, d: int) -> int:
    if d < 0:
        return 0
    return len(component(pres, d).basis)


def graded_ranks(pres: GradedPresentation, top: int | None = None) -> list[int]:
    top = pres.n if top is None else top
    return [graded_rank(pres, d) for d in range(top + 1)]


# ------------------------------------------------------------ classes


@dataclass(frozen=True)
class GradedClass:
    degree: int
    basis: tuple[Monomial, ...]
    coefficients: tuple[Fraction, ...]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def as_polynomial(self) -> dict[Monomial, Fraction]:
        return {m: c for m, c in zip(self.basis, self.coefficients) if c}

    def to_json(self, variables) -> dict:
        return {
            "degree": self.degree,
            "cohomological_degree": 2 * self.degree,
            "basis": [monomial_str(m, variables) for m in self.basis],
            "coefficients": [str(c) for c in self.coefficients],
        }


def monomial_str(mono: Monomial, variables) -> str:
    parts = []
    for name, k in zip(variables, mono):
        if k == 1:
            parts.append(f"x[{name}]")
        elif k > 1:
            parts.append(f"x[{name}]^{k}")
    return "*".join(parts) or "1"


def reduce(pres: GradedPresentation, poly: dict, d: int) -> GradedClass:
    """Normal form of a homogeneous degree-d polynomial in the quotient."""
    comp = component(pres, d)
    col = {mono: i for i, mono in enumerate(comp.monomials)}
    row: dict[int, Fraction] = {}
    for mono, c in poly.items():
        if sum(mono) != d:
            raise ValueError(f"monomial {mono} is not of degree {d}")
        if c and mono in col:
            row[col[mono]] = row.get(col[mono], 0) + Fraction(c)
    row = _eliminate({k: v for k, v in row.items() if v}, comp.pivots)
    return GradedClass(
        d,
        tuple(comp.monomials[i] for i in comp.basis),
        tuple(Fraction(row.get(i, 0)) for i in comp.basis),
    )


def elementary_symmetric(m: int, d: int) -> dict[Monomial, int]:
    out = {}
    for s in combinations(range(m), d):
        e = [0] * m
        for i in s:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def total_chern(pair: Dicharacteristic, d: int, pres: GradedPresentation | None = None) -> GradedClass:
    """Degree-d part of ``prod_F (1 + x_F)`` in the quotient basis."""
    pres = pres or presentation(pair)
    return reduce(pres, elementary_symmetric(pair.base.m, d), d)


def substitute_sign(poly: dict, var: int) -> dict:
    """Apply ``x_var -> -x_var``."""
    return {mono: (-c if mono[var] % 2 else c) for mono, c in poly.items()}


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            out[mono] = out.get(mono, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def chern_polynomial(m: int, signs=None) -> dict:
    """Full ``prod_F (1 + sign_F x_F)`` as a polynomial (all degrees)."""
    signs = signs or [1] * m
    poly = {(0,) * m: 1}
    for i in range(m):
        e = [0] * m
        e[i] = 1
        poly = poly_mul(poly, {(0,) * m: 1, tuple(e): signs[i]})
    return poly


def homogeneous_part(poly: dict, d: int) -> dict:
    return {mono: c for mono, c in poly.items() if sum(mono) == d}


@dataclass(frozen=True)
class BettiReport:
    ranks: tuple[int, ...]
    h: tuple[int, ...]
    vertices: int
    failing_degrees: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.failing_degrees and sum(self.ranks) == self.vertices

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "ranks": list(self.ranks),
            "h": list(self.h),
            "vertices": self.vertices,
            "failing_degrees": list(self.failing_degrees),
        }


def betti_check(pair: Dicharacteristic) -> BettiReport:
    """Graded ranks of the quotient against the h-vector of the base."""
    pres = presentation(pair)
    ranks = graded_ranks(pres)
    h = h_vector(pair.base)
    bad = tuple(d for d, (r, x) in enumerate(zip(ranks, h)) if r != x)
    return BettiReport(tuple(ranks), tuple(h), pair.base.q, bad)

