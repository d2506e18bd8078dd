"""Embedding enumeration, copy sets, isomorphism and canonical forms.

Embeddings are strong (induced): relations must be preserved and reflected,
unary predicates must match exactly.  Enumeration order is deterministic,
lexicographic on the map sequence, so certificates and catalogs reproduce
bit-exactly across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .structures import Structure, StructureError, induced_substructure, relabel, to_json_dict


class SignatureMismatch(StructureError):
    pass


@dataclass(frozen=True)
class Embedding:
    dom_size: int
    map: tuple[int, ...]


@dataclass(frozen=True)
class CopySet:
    base: Structure
    pattern: Structure
    copies: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.copies)


def _require_same_signature(a: Structure, b: Structure) -> None:
    if a.signature != b.signature:
        raise SignatureMismatch(f"signatures differ: {a.signature} vs {b.signature}")


def embeddings(a: Structure, b: Structure, limit: int | None = None) -> list[Embedding]:
    """All induced embeddings of a into b, in lexicographic map order."""
    _require_same_signature(a, b)
    k, n = a.n, b.n
    if k > n:
        return []
    if k == 0:
        return [Embedding(0, ())]
    usyms = a.signature.unary
    prof_a = [tuple(v in a.unary[u] for u in usyms) for v in range(k)]
    prof_b = [tuple(v in b.unary[u] for u in usyms) for v in range(n)]
    cands = [[w for w in range(n) if prof_b[w] == prof_a[v]] for v in range(k)]
    bsyms = a.signature.binary
    apairs = [a.binary[s] for s in bsyms]
    bpairs = [b.binary[s] for s in bsyms]

    found: list[Embedding] = []
    mapping = [-1] * k
    used = [False] * n

    def down(d: int) -> bool:
        if d == k:
            found.append(Embedding(k, tuple(mapping)))
            return limit is not None and len(found) >= limit
        for w in cands[d]:
            if used[w]:
                continue
            ok = True
            for u in range(d):
                mu = mapping[u]
                for ap, bp in zip(apairs, bpairs):
                    if ((d, u) in ap) != ((w, mu) in bp) or ((u, d) in ap) != ((mu, w) in bp):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                mapping[d] = w
                used[w] = True
                stop = down(d + 1)
                used[w] = False
                mapping[d] = -1
                if stop:
                    return True
        return False

    down(0)
    return found


def copies(a: Structure, b: Structure) -> CopySet:
    """Vertex subsets of b inducing a structure isomorphic to a, each once."""
    seen = {tuple(sorted(e.map)) for e in embeddings(a, b)}
    return CopySet(base=b, pattern=a, copies=tuple(sorted(seen)))


def is_isomorphic(a: Structure, b: Structure) -> tuple[bool, Embedding | None]:
    _require_same_signature(a, b)
    if a.n != b.n:
        return False, None
    for sym in a.signature.binary:
        if len(a.binary[sym]) != len(b.binary[sym]):
            return False, None
    for sym in a.signature.unary:
        if len(a.unary[sym]) != len(b.unary[sym]):
            return False, None
    embs = embeddings(a, b, limit=1)
    if embs:
        return True, embs[0]
    return False, None


def automorphism_count(a: Structure) -> int:
    return len(embeddings(a, a))


def is_rigid(a: Structure) -> bool:
    """True iff the identity is the only automorphism."""
    return len(embeddings(a, a, limit=2)) == 1


# ---------------------------------------------------------------------------
# Canonical form by iterative colour refinement with branching.  Exponential
# in the worst case but instances here stay below ~10 vertices; two structures
# get equal keys iff they are isomorphic, which is what catalog deduplication
# and deterministic catalog order need.


def _refine(s: Structure, colors: tuple[int, ...]) -> tuple[int, ...]:
    bsyms = s.signature.binary
    pairsets = [s.binary[sym] for sym in bsyms]
    n = s.n
    while True:
        keys = []
        for v in range(n):
            nbr = tuple(
                tuple(sorted((colors[u], (v, u) in ps, (u, v) in ps) for u in range(n) if u != v))
                for ps in pairsets
            )
            keys.append((colors[v], nbr))
        ranking = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = tuple(ranking[keys[v]] for v in range(n))
        if new == colors:
            return colors
        colors = new


def _certificate(s: Structure, perm: tuple[int, ...]) -> bytes:
    return json.dumps(to_json_dict(relabel(s, perm)), sort_keys=True).encode()


def canonical_form(s: Structure) -> tuple[Structure, tuple[int, ...]]:
    """Canonical relabeling: returns (canonical structure, perm old->new)."""
    n = s.n
    if n == 0:
        return s, ()
    usyms = s.signature.unary
    init = [tuple(v in s.unary[u] for u in usyms) for v in range(n)]
    ranking = {key: i for i, key in enumerate(sorted(set(init)))}
    start = tuple(ranking[init[v]] for v in range(n))

    best: list = [None, None]

    def explore(colors: tuple[int, ...]) -> None:
        colors = _refine(s, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, m in counts.items() if m > 1), default=None)
        if target is None:
            perm = colors  # discrete: colour ranks are a bijection onto 0..n-1
            cert = _certificate(s, perm)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, perm
            return
        for v in range(n):
            if colors[v] != target:
                continue
            keyed = [(colors[u], 0 if u == v else 1) for u in range(n)]
            rank = {key: i for i, key in enumerate(sorted(set(keyed)))}
            explore(tuple(rank[keyed[u]] for u in range(n)))

    explore(start)
    return relabel(s, best[1]), best[1]


def canonical_key(s: Structure) -> bytes:
    canon, _ = canonical_form(s)
    return json.dumps(to_json_dict(canon), sort_keys=True).encode()


def dedup_by_isomorphism(items) -> list[Structure]:
    """Canonical representatives of the distinct iso classes, in key order."""
    reps: dict[bytes, Structure] = {}
    for s in items:
        canon, _ = canonical_form(s)
        key = json.dumps(to_json_dict(canon), sort_keys=True).encode()
        reps.setdefault(key, canon)
    return [reps[k] for k in sorted(reps)]


def copy_subsets_json(cs: CopySet) -> list[list[int]]:
    return [list(c) for c in cs.copies]


__all__ = [
    "Embedding",
    "CopySet",
    "SignatureMismatch",
    "embeddings",
    "copies",
    "is_isomorphic",
    "automorphism_count",
    "is_rigid",
    "canonical_form",
    "canonical_key",
    "dedup_by_isomorphism",
    "copy_subsets_json",
    "induced_substructure",
]
