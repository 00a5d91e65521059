"""Construction of named schemes and relation-file I/O."""

import json
from dataclasses import dataclass, field
from itertools import combinations, product

import networkx as nx

from .errors import ParseError, StructureError, UnsupportedParameters
from .scheme import RelationPartition

MAX_VERTICES = 4096


@dataclass(frozen=True)
class SchemeSpec:
    """A named scheme family with parameters, or an explicit file path."""

    family: str
    params: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, text):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad scheme spec: {e}") from e
        if not isinstance(obj, dict) or "family" not in obj:
            raise ParseError("scheme spec must be an object with a 'family' key")
        return cls(obj["family"], dict(obj.get("params", {})))


def _from_distance(n, dist):
    """RelationPartition from a symmetric 'distance' function on 0..n-1."""
    rel = tuple(tuple(dist(x, y) for y in range(n)) for x in range(n))
    d = max(max(r) for r in rel)
    return RelationPartition(n, d, rel)


def _complete(n):
    if n < 2:
        raise UnsupportedParameters("complete(n) needs n >= 2")
    return _from_distance(n, lambda x, y: 0 if x == y else 1)


def _cycle(n):
    if n < 3:
        raise UnsupportedParameters("cycle(n) needs n >= 3")
    return _from_distance(n, lambda x, y: min((x - y) % n, (y - x) % n))


def _hamming(d, q):
    if d < 1 or q < 2:
        raise UnsupportedParameters("hamming(d, q) needs d >= 1, q >= 2")
    if q**d > MAX_VERTICES:
        raise UnsupportedParameters(f"hamming({d},{q}) exceeds {MAX_VERTICES} vertices")
    pts = list(product(range(q), repeat=d))
    dist = lambda x, y: sum(a != b for a, b in zip(pts[x], pts[y]))
    return _from_distance(len(pts), dist)


def _johnson(v, k):
    if not v > k >= 1:
        raise UnsupportedParameters("johnson(v, k) needs v > k >= 1")
    from math import comb

    if comb(v, k) > MAX_VERTICES:
        raise UnsupportedParameters(f"johnson({v},{k}) exceeds {MAX_VERTICES} vertices")
    pts = [frozenset(s) for s in combinations(range(v), k)]
    dist = lambda x, y: k - len(pts[x] & pts[y])
    return _from_distance(len(pts), dist)


def _petersen():
    # Kneser K(5,2): adjacent iff disjoint; diameter 2
    pts = [frozenset(s) for s in combinations(range(5), 2)]

    def dist(x, y):
        if x == y:
            return 0
        return 1 if not (pts[x] & pts[y]) else 2

    return _from_distance(len(pts), dist)


def _cocktail_party(n):
    if n < 2:
        raise UnsupportedParameters("cocktail_party(n) needs n >= 2")

    def dist(x, y):
        if x == y:
            return 0
        return 2 if x // 2 == y // 2 else 1

    return _from_distance(2 * n, dist)


def _icosahedron():
    g = nx.icosahedral_graph()
    n = g.number_of_nodes()
    paths = dict(nx.all_pairs_shortest_path_length(g))
    return _from_distance(n, lambda x, y: paths[x][y])


_FAMILIES = {
    "complete": (_complete, ("n",)),
    "cycle": (_cycle, ("n",)),
    "hamming": (_hamming, ("d", "q")),
    "johnson": (_johnson, ("v", "k")),
    "petersen": (_petersen, ()),
    "cocktail_party": (_cocktail_party, ("n",)),
    "icosahedron": (_icosahedron, ()),
}


def generate(spec):
    """Build the RelationPartition for a named family spec."""
    if spec.family not in _FAMILIES:
        raise UnsupportedParameters(f"unknown family {spec.family!r}")
    fn, names = _FAMILIES[spec.family]
    missing = [p for p in names if p not in spec.params]
    if missing:
        raise UnsupportedParameters(f"{spec.family} needs parameters {missing}")
    extra = [p for p in spec.params if p not in names]
    if extra:
        raise UnsupportedParameters(f"{spec.family} got unexpected parameters {extra}")
    args = []
    for p in names:
        v = spec.params[p]
        if not isinstance(v, int) or isinstance(v, bool):
            raise UnsupportedParameters(f"parameter {p} must be an integer")
        args.append(v)
    return fn(*args)


def serialize(rp):
    """The documented JSON encoding of a relation partition."""
    return json.dumps(
        {"n": rp.n, "d": rp.d, "relations": [list(r) for r in rp.rel]},
        separators=(",", ":"),
    )


def load_relation_text(text, source="<string>"):
    if not text.strip():
        raise ParseError(f"{source}: empty input")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}:{e.lineno}: {e.msg}") from e
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: top level must be an object")
    for key in ("n", "d", "relations"):
        if key not in obj:
            raise ParseError(f"{source}: missing field {key!r}")
    n, d, rel = obj["n"], obj["d"], obj["relations"]
    if not (isinstance(n, int) and isinstance(d, int)):
        raise ParseError(f"{source}: 'n' and 'd' must be integers")
    if not isinstance(rel, list) or len(rel) != n:
        raise StructureError(f"{source}: 'relations' must have {n} rows")
    for i, row in enumerate(rel):
        if not isinstance(row, list) or len(row) != n:
            raise StructureError(f"{source}: row {i} is not length {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"{source}: relations[{i}][{j}] is not an integer")
            if not 0 <= v <= d:
                raise StructureError(
                    f"{source}: label {v} at relations[{i}][{j}] outside 0..{d}"
                )
    return RelationPartition(n, d, tuple(tuple(r) for r in rel))


def load_relation_file(path):
    """Parse and structurally validate a scheme JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from e
    return load_relation_text(text, source=str(path))
