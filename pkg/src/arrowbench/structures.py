"""Finite relational structures over a universe 0..n-1.

A structure carries named binary relations (sets of ordered pairs) and named
unary predicates (subsets of the universe) under a declared signature.  All
values are frozensets; structures are immutable and hashable, so they can be
deduplicated, cached and used as dict keys throughout the search code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

Pair = tuple[int, int]

DIGRAPH_EDGE = "digraph-edge"
LINEAR_ORDER = "linear-order"
STRICT_PARTIAL_ORDER = "strict-partial-order"
FREE_BINARY = "free-binary"

KIND_TAGS = (DIGRAPH_EDGE, LINEAR_ORDER, STRICT_PARTIAL_ORDER, FREE_BINARY)


class StructureError(ValueError):
    """Malformed structure data or an out-of-contract argument."""


@dataclass(frozen=True)
class Signature:
    """Ordered lists of binary and unary symbol names; names are unique."""

    binary: tuple[str, ...] = ()
    unary: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "binary", tuple(self.binary))
        object.__setattr__(self, "unary", tuple(self.unary))
        syms = self.binary + self.unary
        if len(set(syms)) != len(syms):
            raise StructureError(f"duplicate symbols in signature {syms!r}")

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.binary + self.unary


DIGRAPH = Signature(binary=("E",))


class Structure:
    """Immutable finite structure; vertices are 0..n-1."""

    __slots__ = ("n", "signature", "binary", "unary", "_hash")

    def __init__(
        self,
        n: int,
        signature: Signature = DIGRAPH,
        binary: Mapping[str, Iterable[Pair]] | None = None,
        unary: Mapping[str, Iterable[int]] | None = None,
    ):
        if n < 0:
            raise StructureError(f"universe size must be >= 0, got {n}")
        binary = dict(binary or {})
        unary = dict(unary or {})
        for sym in binary:
            if sym not in signature.binary:
                raise StructureError(f"unknown binary symbol {sym!r}")
        for sym in unary:
            if sym not in signature.unary:
                raise StructureError(f"unknown unary symbol {sym!r}")
        norm_b: dict[str, frozenset[Pair]] = {}
        for sym in signature.binary:
            pairs = frozenset(tuple(p) for p in binary.get(sym, ()))
            for x, y in pairs:
                if not (0 <= x < n and 0 <= y < n):
                    raise StructureError(f"pair {(x, y)} of {sym!r} outside universe [{n}]")
            norm_b[sym] = pairs
        norm_u: dict[str, frozenset[int]] = {}
        for sym in signature.unary:
            elems = frozenset(unary.get(sym, ()))
            for x in elems:
                if not 0 <= x < n:
                    raise StructureError(f"element {x} of {sym!r} outside universe [{n}]")
            norm_u[sym] = elems
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "binary", norm_b)
        object.__setattr__(self, "unary", norm_u)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *args):
        raise AttributeError("Structure is immutable")

    def _key(self):
        return (
            self.n,
            self.signature,
            tuple(tuple(sorted(self.binary[s])) for s in self.signature.binary),
            tuple(tuple(sorted(self.unary[s])) for s in self.signature.unary),
        )

    def __eq__(self, other):
        if not isinstance(other, Structure):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash(self._key())
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        rels = ", ".join(f"{s}:{len(self.binary[s])}" for s in self.signature.binary)
        return f"Structure(n={self.n}, {rels})"

    def vertices(self) -> range:
        return range(self.n)

    def adjacent(self, sym: str, x: int, y: int) -> bool:
        """True when x,y are related by sym in either direction."""
        ps = self.binary[sym]
        return (x, y) in ps or (y, x) in ps


def make_structure(
    n: int,
    binary: Mapping[str, Iterable[Pair]] | None = None,
    unary: Mapping[str, Iterable[int]] | None = None,
    signature: Signature = DIGRAPH,
) -> Structure:
    """Build a structure verbatim; no axiom checking (see validate_kind)."""
    return Structure(n, signature, binary, unary)


def induced_substructure(s: Structure, verts: Iterable[int]) -> Structure:
    """Restrict to verts, relabeled to 0..|verts|-1 preserving vertex order."""
    vs = sorted(set(verts))
    for v in vs:
        if not 0 <= v < s.n:
            raise StructureError(f"vertex {v} outside universe [{s.n}]")
    pos = {v: i for i, v in enumerate(vs)}
    binary = {
        sym: {(pos[x], pos[y]) for (x, y) in s.binary[sym] if x in pos and y in pos}
        for sym in s.signature.binary
    }
    unary = {sym: {pos[x] for x in s.unary[sym] if x in pos} for sym in s.signature.unary}
    return Structure(len(vs), s.signature, binary, unary)


def reduct(s: Structure, keep: Iterable[str]) -> Structure:
    """Forget all symbols outside `keep`; same universe."""
    keep = set(keep)
    unknown = keep - set(s.signature.symbols)
    if unknown:
        raise StructureError(f"unknown symbols {sorted(unknown)!r}")
    sig = Signature(
        binary=tuple(sym for sym in s.signature.binary if sym in keep),
        unary=tuple(sym for sym in s.signature.unary if sym in keep),
    )
    return Structure(
        s.n,
        sig,
        {sym: s.binary[sym] for sym in sig.binary},
        {sym: s.unary[sym] for sym in sig.unary},
    )


def relabel(s: Structure, perm: Iterable[int]) -> Structure:
    """Apply a vertex permutation, perm[old] = new."""
    perm = tuple(perm)
    if sorted(perm) != list(range(s.n)):
        raise StructureError(f"not a permutation of [{s.n}]: {perm}")
    binary = {
        sym: {(perm[x], perm[y]) for (x, y) in s.binary[sym]} for sym in s.signature.binary
    }
    unary = {sym: {perm[x] for x in s.unary[sym]} for sym in s.signature.unary}
    return Structure(s.n, s.signature, binary, unary)


# ---------------------------------------------------------------------------
# Axiom validation


@dataclass(frozen=True)
class KindSpec:
    """Assignment of axiom kinds to binary symbols, plus unary partition groups."""

    kinds: tuple[tuple[str, str], ...]
    partitions: tuple[tuple[str, ...], ...] = ()

    @staticmethod
    def of(kinds: Mapping[str, str], partitions: Iterable[Iterable[str]] = ()) -> "KindSpec":
        for sym, tag in kinds.items():
            if tag not in KIND_TAGS:
                raise StructureError(f"unknown kind tag {tag!r} for {sym!r}")
        return KindSpec(
            kinds=tuple(sorted(kinds.items())),
            partitions=tuple(tuple(g) for g in partitions),
        )

    def kind_of(self, sym: str) -> str | None:
        return dict(self.kinds).get(sym)


@dataclass(frozen=True)
class Violation:
    symbol: str
    axiom: str
    witness: tuple


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def default_kinds(signature: Signature) -> KindSpec:
    """Kind assignment by symbol-name convention: E edges, lt/prec orders,
    everything else free; indexed unary families become partition groups."""
    kinds = {}
    for sym in signature.binary:
        if sym == "E":
            kinds[sym] = DIGRAPH_EDGE
        elif sym == "lt":
            kinds[sym] = LINEAR_ORDER
        elif sym == "prec":
            kinds[sym] = STRICT_PARTIAL_ORDER
        else:
            kinds[sym] = FREE_BINARY
    groups: dict[str, list[str]] = {}
    for sym in signature.unary:
        prefix = sym.rstrip("0123456789")
        if prefix != sym:
            groups.setdefault(prefix, []).append(sym)
    return KindSpec.of(kinds, [g for g in groups.values() if len(g) >= 1])


def validate_kind(s: Structure, k: KindSpec) -> ValidationReport:
    """Check every declared axiom; the report lists all violations found."""
    kinds = dict(k.kinds)
    for sym in s.signature.binary:
        if sym not in kinds:
            raise StructureError(f"kind spec does not cover binary symbol {sym!r}")
    violations: list[Violation] = []
    for sym in s.signature.binary:
        tag = kinds[sym]
        if tag == FREE_BINARY:
            continue
        ps = s.binary[sym]
        for x in range(s.n):
            if (x, x) in ps:
                violations.append(Violation(sym, "irreflexive", ((x, x),)))
        for (x, y) in sorted(ps):
            if x < y and (y, x) in ps:
                violations.append(Violation(sym, "asymmetric", ((x, y), (y, x))))
        if tag in (LINEAR_ORDER, STRICT_PARTIAL_ORDER):
            for (x, y) in sorted(ps):
                for z in range(s.n):
                    if (y, z) in ps and z != x and (x, z) not in ps:
                        violations.append(Violation(sym, "transitive", ((x, y), (y, z), (x, z))))
        if tag == LINEAR_ORDER:
            for x in range(s.n):
                for y in range(x + 1, s.n):
                    if (x, y) not in ps and (y, x) not in ps:
                        violations.append(Violation(sym, "total", ((x, y),)))
    for group in k.partitions:
        for sym in group:
            if sym not in s.signature.unary:
                raise StructureError(f"partition group names unknown unary {sym!r}")
        seen: dict[int, str] = {}
        for sym in group:
            for x in sorted(s.unary[sym]):
                if x in seen:
                    violations.append(Violation("|".join(group), "disjoint", (x, seen[x], sym)))
                else:
                    seen[x] = sym
        for x in range(s.n):
            if x not in seen:
                violations.append(Violation("|".join(group), "cover", (x,)))
    return ValidationReport(ok=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# JSON encoding.  Sets are sorted (lexicographically for pairs) so that dumps
# are bit-exact reproducible and usable as golden files.


def to_json_dict(s: Structure) -> dict:
    return {
        "n": s.n,
        "signature": {"binary": list(s.signature.binary), "unary": list(s.signature.unary)},
        "binary": {sym: [list(p) for p in sorted(s.binary[sym])] for sym in s.signature.binary},
        "unary": {sym: sorted(s.unary[sym]) for sym in s.signature.unary},
    }


def from_json_dict(d: Mapping) -> Structure:
    sig = Signature(
        binary=tuple(d.get("signature", {}).get("binary", [])),
        unary=tuple(d.get("signature", {}).get("unary", [])),
    )
    binary = {sym: [tuple(p) for p in pairs] for sym, pairs in d.get("binary", {}).items()}
    unary = {sym: list(elems) for sym, elems in d.get("unary", {}).items()}
    return Structure(d["n"], sig, binary, unary)


def dumps(s: Structure) -> str:
    return json.dumps(to_json_dict(s), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Structure:
    return from_json_dict(json.loads(text))


def save(s: Structure, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(s))


def load(path) -> Structure:
    with open(path) as fh:
        return loads(fh.read())
