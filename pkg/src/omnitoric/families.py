"""Standard omnioriented examples (projective spaces and bounded flag
manifolds) together with products and connected sums of them.

Each constructor returns a :class:`~omnitoric.dichar.Dicharacteristic`
(a characteristic pair carrying its base polytope).

Conventions for B_{i,j} (dimension ``n = i + j - 1``, base ``I^i x Delta^(j-1)``):

* ``E<s>``, ``s < j``: ``e_{i+s}``; ``E<j>``: ``-(e_{i+1} + ... + e_{i+j-1})``
* ``E<r>^1``: ``-(e_1 + ... + e_r) + (e_{i+1} + ... + e_{i+r-1})``
* ``E<r>^0``: ``-e_r + vec(E<r>)``, which is ``-e_r + e_{i+r}`` unless ``r = j``

``B_{0,j}`` is ``CP^(j-1)`` with the variety-compatible dicharacteristic and
``B_{1,1}`` is ``B_1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .dichar import Dicharacteristic
from .errors import DimensionMismatchError, ToricError
from .polytope import SimplePolytope, make_cube, make_simplex, product
from .surgery import default_order, dichar_connected_sum


class FamilySpecError(ToricError):
    code = "bad-spec"


def _e(n, *positions, sign=1):
    v = [0] * n
    for p in positions:
        v[p - 1] += sign
    return tuple(v)


def cpn(n: int, variant: str = "l") -> Dicharacteristic:
    """``variant="lprime"`` gives (1,...,1) on the last facet, ``"l"`` gives (-1,...,-1)."""
    if n < 1:
        raise FamilySpecError("CP^n needs n >= 1", {"n": n})
    if variant not in ("l", "lprime"):
        raise FamilySpecError(f"unknown CP^n variant {variant!r}")
    last = 1 if variant == "lprime" else -1
    cols = [_e(n, r) for r in range(1, n + 1)] + [(last,) * n]
    return Dicharacteristic(make_simplex(n), tuple(cols))


def bn(n: int) -> Dicharacteristic:
    if n < 1:
        raise FamilySpecError("B_n needs n >= 1", {"n": n})
    cols = []
    for r in range(1, n + 1):
        cols.append(_e(n, r, sign=-1))
        cols.append(_e(n, *range(1, r + 1), sign=-1))
    return Dicharacteristic(make_cube(n), tuple(cols))


def bij(i: int, j: int) -> Dicharacteristic:
    if not 0 <= i <= j or j < 1:
        raise FamilySpecError("B_{i,j} needs 0 <= i <= j, j >= 1", {"i": i, "j": j})
    if i == 0:
        if j < 2:
            raise FamilySpecError("B_{0,1} is a point", {"i": i, "j": j})
        return cpn(j - 1, "l")
    if j == 1:
        return bn(i)
    n = i + j - 1
    base = product(make_cube(i), make_simplex(j - 1), prefixes=("", ""))
    names = [f"E{r}^{e}" for r in range(1, i + 1) for e in (0, 1)] + [f"E{s}" for s in range(1, j + 1)]
    base = base.relabel(names)

    def e_s(s):
        if s < j:
            return _e(n, i + s)
        return _e(n, *range(i + 1, i + j), sign=-1)

    cols = []
    for r in range(1, i + 1):
        cols.append(tuple(a + b for a, b in zip(_e(n, r, sign=-1), e_s(r))))
        plus = _e(n, *range(i + 1, i + r))
        minus = _e(n, *range(1, r + 1), sign=-1)
        cols.append(tuple(a + b for a, b in zip(minus, plus)))
    cols += [e_s(s) for s in range(1, j + 1)]
    return Dicharacteristic(base, tuple(cols))


def product_pair(a: Dicharacteristic, b: Dicharacteristic) -> Dicharacteristic:
    """Product omniorientation: block-diagonal columns over the product polytope."""
    base = product(a.base, b.base)
    cols = [c + (0,) * b.n for c in a.columns] + [(0,) * a.n + c for c in b.columns]
    return Dicharacteristic(base, tuple(cols))


@dataclass(frozen=True)
class FamilySpec:
    """``kind`` is one of ``cpn``, ``bn``, ``bij``, ``product``.

    ``args`` holds the integer parameters (and the CP^n variant),
    ``factors`` the sub-specs of a product.
    """

    kind: str
    args: tuple = ()
    factors: tuple["FamilySpec", ...] = ()

    @property
    def dim(self) -> int:
        if self.kind == "cpn":
            return self.args[0]
        if self.kind == "bn":
            return self.args[0]
        if self.kind == "bij":
            return self.args[0] + self.args[1] - 1
        return sum(f.dim for f in self.factors)

    def to_json(self):
        if self.kind == "product":
            return {"kind": "product", "factors": [f.to_json() for f in self.factors]}
        if self.kind == "cpn":
            return {"kind": "cpn", "n": self.args[0], "variant": self.args[1]}
        if self.kind == "bn":
            return {"kind": "bn", "n": self.args[0]}
        return {"kind": "bij", "i": self.args[0], "j": self.args[1]}

    @classmethod
    def from_json(cls, doc) -> "FamilySpec":
        if isinstance(doc, str):
            return parse_spec(doc)
        try:
            kind = doc["kind"]
            if kind == "cpn":
                return cls("cpn", (int(doc["n"]), doc.get("variant", "l")))
            if kind == "bn":
                return cls("bn", (int(doc["n"]),))
            if kind == "bij":
                return cls("bij", (int(doc["i"]), int(doc["j"])))
            if kind == "product":
                return cls("product", (), tuple(cls.from_json(f) for f in doc["factors"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FamilySpecError(f"malformed family spec: {exc}", doc) from None
        raise FamilySpecError(f"unknown family kind {kind!r}", doc)


def parse_spec(text: str) -> FamilySpec:
    """Compact text form: ``cpn:2:lprime``, ``bn:3``, ``bij:1:2``; ``*`` joins factors."""
    text = text.strip()
    if text.startswith("{"):
        return FamilySpec.from_json(json.loads(text))
    if "*" in text:
        return FamilySpec("product", (), tuple(parse_spec(t) for t in text.split("*")))
    parts = text.split(":")
    try:
        if parts[0] == "cpn":
            return FamilySpec("cpn", (int(parts[1]), parts[2] if len(parts) > 2 else "l"))
        if parts[0] == "bn" and len(parts) == 2:
            return FamilySpec("bn", (int(parts[1]),))
        if parts[0] == "bij" and len(parts) == 3:
            return FamilySpec("bij", (int(parts[1]), int(parts[2])))
    except (IndexError, ValueError):
        pass
    raise FamilySpecError(f"cannot parse family spec {text!r}")


def build(spec: FamilySpec) -> Dicharacteristic:
    if spec.kind == "cpn":
        return cpn(*spec.args)
    if spec.kind == "bn":
        return bn(*spec.args)
    if spec.kind == "bij":
        return bij(*spec.args)
    if spec.kind == "product":
        if not spec.factors:
            raise FamilySpecError("empty product")
        out = build(spec.factors[0])
        for f in spec.factors[1:]:
            out = product_pair(out, build(f))
        return out
    raise FamilySpecError(f"unknown family kind {spec.kind!r}")


@dataclass(frozen=True)
class Summand:
    spec: FamilySpec
    order: tuple[str, ...] | None = None  # facet names at the gluing vertex


def representative(summands) -> Dicharacteristic:
    """Connected sum of the built summands, folded left to right.

    A summand without an explicit ``order`` is glued at its base's
    lexicographically least vertex with facets in facet-list order. When
    the running sum is the left operand it is glued at its own least vertex.
    """
    summands = [s if isinstance(s, Summand) else Summand(s) for s in summands]
    if not summands:
        raise FamilySpecError("need at least one summand")
    dims = {s.spec.dim for s in summands}
    if len(dims) != 1:
        raise DimensionMismatchError(
            "summands have different dimensions", {"dims": [s.spec.dim for s in summands]}
        )
    first = summands[0]
    acc = build(first.spec)
    acc_order = first.order
    for s in summands[1:]:
        nxt = build(s.spec)
        acc = dichar_connected_sum(
            acc, acc_order or default_order(acc.base), nxt, s.order or default_order(nxt.base)
        )
        acc_order = None
    return acc


def summands_from_json(doc) -> list[Summand]:
    """Accepts ``{"summands": [...]}`` or a bare list; each item is a spec or
    ``{"spec": ..., "order": [...]}``."""
    items = doc["summands"] if isinstance(doc, dict) else doc
    out = []
    for item in items:
        if isinstance(item, dict) and "spec" in item:
            order = item.get("order")
            out.append(Summand(FamilySpec.from_json(item["spec"]), tuple(order) if order else None))
        else:
            out.append(Summand(FamilySpec.from_json(item)))
    return out


def base_of(spec: FamilySpec) -> SimplePolytope:
    return build(spec).base
