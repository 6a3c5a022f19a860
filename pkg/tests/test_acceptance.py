"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` and read the "acceptance criteria"
section at the end of the report. Criterion 10 (cobordism-generator status and
formal-group computations) has no executable check here.
"""

from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from omnitoric import lattice
from omnitoric.dichar import (
    Dicharacteristic,
    LatticeMap,
    flip,
    kernel_basis,
    pairs_equivalent,
    restrict_to_face,
    translate,
    validate,
)
from omnitoric.facering import betti_check, total_chern
from omnitoric.families import bij, bn, build, cpn, parse_spec, product_pair
from omnitoric.polytope import (
    f_vector,
    face_lattice,
    h_vector,
    is_equivalent,
    make_cube,
    make_simplex,
    product,
)
from omnitoric.surgery import (
    ConnSumSpec,
    apply_pruning_sequence,
    connected_sum,
    dichar_connected_sum,
    prune,
    pruning_sequence_for,
)

from conftest import ACCEPTANCE_LINES, FAMILY_SPECS


def record(k, title, failures):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {k}: {title}"
    if failures:
        line += f" ({len(failures)} failing: {failures[:3]})"
    ACCEPTANCE_LINES[k] = line
    print(line)
    assert not failures, line


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def same_lattice_by_divisors(a, b):
    """Both lattices match their sum in rank and in elementary divisors."""
    both = a + b
    ra, rb, rab = lattice.rank(a), lattice.rank(b), lattice.rank(both)
    if not ra == rb == rab:
        return False
    return lattice.invariant_factors(a) == lattice.invariant_factors(b) == lattice.invariant_factors(both)


def test_criterion_1_censuses():
    bad = []
    if len(face_lattice(make_cube(3))) != 27:
        bad.append("I^3 face count")
    for m, n in ((1, 1), (2, 2), (1, 3)):
        p = product(make_cube(m), make_simplex(n))
        if p.m != 2 * m + n + 1:
            bad.append(("facets", m, n, p.m))
    record(1, "face and facet censuses", bad)


def test_criterion_2_kernels():
    bad = []
    for n in range(1, 5):
        k = kernel_basis(cpn(n, "lprime"))
        if not same_lattice_by_divisors(k, [[1] * n + [-1]]):
            bad.append(("cpn lprime", n, k))
    for n in range(1, 5):
        ell = bn(n)
        if len(kernel_basis(ell)) != n or ell.base.m - n != n:
            bad.append(("bn", n))
    for i, j in ((1, 2), (1, 3), (2, 2), (2, 3)):
        ell = bij(i, j)
        if len(kernel_basis(ell)) != i + 1 or ell.base.m - ell.n != i + 1:
            bad.append(("bij", i, j))
    record(2, "kernel lattices and ranks", bad)


def test_criterion_3_validity():
    bad = [s for s in FAMILY_SPECS if not validate(build(parse_spec(s))).valid]
    ell = bij(1, 2)
    for j, col in enumerate(ell.columns):
        for i, x in enumerate(col):
            if x == 0:
                continue  # negating a zero entry changes nothing
            cols = [list(c) for c in ell.columns]
            cols[j][i] = -x
            mutated = Dicharacteristic(ell.base, tuple(map(tuple, cols)))
            dets = [abs(lattice.det(mutated.at(sorted(v)))) for v in ell.base.vertices]
            if all(d == 1 for d in dets):
                bad.append(("entry stays unimodular", ell.base.facets[j], i, tuple(cols[j])))
    record(3, "family validity and single-entry sensitivity of B_{1,2}", bad)


def _bn_factors(a, b):
    parts = [bn(k) for k in (a, b) if k]
    return parts[0] if len(parts) == 1 else product_pair(*parts)


def test_criterion_4_restrictions():
    bad = []

    def same(x, y, tag):
        if pairs_equivalent(x, y, directed=False) is None:
            bad.append(tag)

    for n in (2, 3):
        for r in range(1, n + 2):
            same(restrict_to_face(cpn(n), [f"D{r}"]), cpn(n - 1), ("cpn", n, r))
        for r in range(1, n + 1):
            same(restrict_to_face(bn(n), [f"C{r}^0"]), bn(n - 1), ("bn C0", n, r))
            same(restrict_to_face(bn(n), [f"C{r}^1"]), _bn_factors(r - 1, n - r), ("bn C1", n, r))
    for i, j in ((1, 2), (2, 2)):
        for r in range(1, i + 1):
            same(restrict_to_face(bij(i, j), [f"E{r}^0"]), bij(i - 1, j), ("bij E0", i, j, r))
        for s in range(i + 1, j + 1):
            same(restrict_to_face(bij(i, j), [f"E{s}"]), bij(i, j - 1), ("bij Es", i, j, s))
    record(4, "facial submanifold restrictions", bad)


def test_criterion_5_connected_sum_counts(rng):
    pool = [build(parse_spec(s)).base for s in FAMILY_SPECS]
    pool = [p for p in pool if 2 <= p.dim <= 4]
    bad = []
    for trial in range(20):
        p = rng.choice(pool)
        q = rng.choice([x for x in pool if x.dim == p.dim])
        v = p.names(rng.choice(p.vertices))
        w = q.names(rng.choice(q.vertices))
        rng.shuffle(v)
        rng.shuffle(w)
        out = connected_sum(ConnSumSpec(p, v, q, w))
        if out.m != p.m + q.m - p.dim or out.q != p.q + q.q - 2:
            bad.append(trial)
    record(5, "connected-sum facet and vertex counts (20 random instances)", bad)


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def test_criterion_6_pruning_calculus():
    bad = []
    for name, q in (
        ("I2", make_cube(2)),
        ("prism", product(make_simplex(1), make_simplex(2))),
        ("I3", make_cube(3)),
    ):
        simplex = make_simplex(q.dim)
        for w in q.vertices:
            out = connected_sum(ConnSumSpec(simplex, simplex.names(simplex.vertices[0]), q, q.names(w)))
            if is_equivalent(out, prune(q, q.names(w))) is None:
                bad.append((name, sorted(w)))
    for n in range(1, 5):
        for dims in _compositions(n):
            target = make_simplex(dims[0])
            for d in dims[1:]:
                target = product(target, make_simplex(d))
            if is_equivalent(apply_pruning_sequence(n, pruning_sequence_for(dims)), target) is None:
                bad.append(dims)
    record(6, "pruning calculus", bad)


def test_criterion_7_betti():
    bad = []
    pairs = {s: build(parse_spec(s)) for s in FAMILY_SPECS}
    for spec, ell in pairs.items():
        if ell.n <= 4 and not betti_check(ell).passed:
            bad.append(spec)
    sums = [
        dichar_connected_sum(cpn(2), ("D1", "D2"), bn(2), ("C1^1", "C2^0")),
        dichar_connected_sum(bn(3), ("C1^0", "C2^0", "C3^0"), bij(2, 2), ("E1^1", "E2", "E2^0")),
        dichar_connected_sum(
            product_pair(bij(1, 2), bij(1, 2)),
            ("L.E1^0", "L.E1", "R.E1^0", "R.E1"),
            bij(2, 3),
            ("E1^0", "E2^0", "E1", "E2"),
        ),
    ]
    for k, ell in enumerate(sums):
        if not betti_check(ell).passed:
            bad.append(("sum", k))
    record(7, "graded ranks equal h-vectors", bad)


def test_criterion_8_chern():
    bad = []
    if not total_chern(cpn(1, "lprime"), 1).is_zero():
        bad.append("cp1 lprime")
    if total_chern(cpn(1, "l"), 1).coefficients != (2,):
        bad.append("cp1 l")
    for n in (1, 2, 3):
        for k in range(n + 1):
            c = total_chern(cpn(n), k)
            if len(c.basis) != 1 or c.coefficients != (comb(n + 1, k),):
                bad.append(("cpn", n, k))
    record(8, "total Chern class fixtures", bad)


_PROPERTY_FAILURES: list = []


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from([s for s in FAMILY_SPECS if s != "bij:3:3"]),
    st.integers(0, 10_000),
    st.lists(st.integers(-2, 2), min_size=4, max_size=4),
)
def _flip_and_translate(spec, pick, coeffs):
    ell = build(parse_spec(spec))
    name = ell.base.facets[pick % ell.base.m]
    if flip(flip(ell, name), name) != ell:
        _PROPERTY_FAILURES.append(("flip", spec, name))
    # upper unitriangular times one lower elementary matrix: determinant 1
    n = ell.n
    upper = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(n - 1):
        upper[k][k + 1] = coeffs[k % 4]
    lower = [[int(i == j) for j in range(n)] for i in range(n)]
    if n >= 2:
        lower[n - 1][0] = coeffs[-1]
    rows = lattice.matmul(upper, lower)
    theta = LatticeMap(tuple(map(tuple, rows)))
    moved = translate(theta, ell)
    if not validate(moved).valid or kernel_basis(moved) != kernel_basis(ell):
        _PROPERTY_FAILURES.append(("translate", spec, coeffs))


def test_criterion_9_properties(rng):
    _PROPERTY_FAILURES.clear()
    _flip_and_translate()
    bad = list(_PROPERTY_FAILURES)
    polys = [build(parse_spec(s)).base for s in FAMILY_SPECS]
    polys += [make_simplex(n) for n in range(1, 5)] + [make_cube(n) for n in range(1, 5)]
    for p in polys:
        f, h = f_vector(p), h_vector(p)
        if h != h[::-1] or sum((-1) ** i * x for i, x in enumerate(f)) != 1:
            bad.append(("h/euler", p.facets[:3]))
    small = [s for s in FAMILY_SPECS if build(parse_spec(s)).n <= 3]
    for _ in range(10):
        a, b = (build(parse_spec(rng.choice(small))) for _ in range(2))
        prod = product_pair(a, b)
        if h_vector(prod.base) != poly_mul(h_vector(a.base), h_vector(b.base)):
            bad.append(("h product", a.base.facets[:2], b.base.facets[:2]))
    record(9, "property suites", bad)


def test_criterion_10_documented_exclusion():
    ACCEPTANCE_LINES[10] = "[SKIP] criterion 10: excluded by design, no executable check"
