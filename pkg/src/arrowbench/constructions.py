"""Explicit combinatorial constructions on finite digraph structures.

Composition operators (fibered products, disjoint unions, the edge-flipped
double cover), the collapse/recipe/lift machinery between a composition and
its base, the parity-completed multipartite family S[n,k], the three-way
twisting between labeled posets and their recoded digraphs, diagonal product
structures, and the small fixture structures used by the expansion checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .structures import (
    DIGRAPH,
    Signature,
    Structure,
    StructureError,
    make_structure,
)

POSET_SIG = Signature(binary=("prec",))
K1_SIG = Signature(binary=("prec", "lt"))
K2_SIG = Signature(binary=("lt",), unary=("R0", "R1", "R2"))
K0_SIG = Signature(binary=("prec", "lt"), unary=("R0", "R1", "R2"))
P3_STAR_SIG = Signature(binary=("E", "lt"), unary=("R0", "R1", "R2"))


class NotATournament(StructureError):
    pass


class MalformedComposition(StructureError):
    pass


class TwistError(StructureError):
    pass


def is_tournament(s: Structure) -> bool:
    E = s.binary["E"]
    for x in range(s.n):
        if (x, x) in E:
            return False
        for y in range(x + 1, s.n):
            if ((x, y) in E) == ((y, x) in E):
                return False
    return True


def _require_tournament(t: Structure) -> None:
    if "E" not in t.signature.binary or not is_tournament(t):
        raise NotATournament(f"{t!r} is not a tournament")


def c3() -> Structure:
    return make_structure(3, {"E": {(0, 1), (1, 2), (2, 0)}})


def transitive_tournament(n: int) -> Structure:
    return make_structure(n, {"E": {(i, j) for i in range(n) for j in range(i + 1, n)}})


def edgeless(n: int) -> Structure:
    return make_structure(n, {"E": set()})


def order_pairs(seq) -> set[tuple[int, int]]:
    """Linear-order pair set putting seq[0] first."""
    seq = list(seq)
    return {(seq[i], seq[j]) for i in range(len(seq)) for j in range(i + 1, len(seq))}


def named_c3_star(prefix: str = "P") -> Structure:
    """The 3-cycle with one unary per point and the fixed order 0 < 1 < 2."""
    sig = Signature(binary=("E", "lt"), unary=tuple(f"{prefix}{i}" for i in range(3)))
    return make_structure(
        3,
        {"E": {(0, 1), (1, 2), (2, 0)}, "lt": order_pairs(range(3))},
        {f"{prefix}{i}": {i} for i in range(3)},
        sig,
    )


def named_point_star(prefix: str = "P") -> Structure:
    sig = Signature(binary=("E", "lt"), unary=(f"{prefix}0",))
    return make_structure(1, {"E": set(), "lt": set()}, {f"{prefix}0": {0}}, sig)


# ---------------------------------------------------------------------------
# Compositions.  Vertex indexing conventions are part of the file format:
# fibered composition puts (x, i) at x*n + i, the disjoint-union composition
# puts (i, x) at i*|T| + x.


def compose_T_In(t: Structure, n: int) -> Structure:
    """Fibered composition: n-point fiber over each vertex of the tournament;
    ((x,i),(y,j)) is an edge iff (x,y) is."""
    _require_tournament(t)
    if n < 1:
        raise StructureError("fiber size must be >= 1")
    E = {
        (x * n + i, y * n + j)
        for (x, y) in t.binary["E"]
        for i in range(n)
        for j in range(n)
    }
    return make_structure(t.n * n, {"E": E})


def compose_In_T(t: Structure, n: int) -> Structure:
    """Disjoint union of n copies of the tournament; no cross edges."""
    _require_tournament(t)
    if n < 1:
        raise StructureError("copy count must be >= 1")
    m = t.n
    E = {(p * m + x, p * m + y) for p in range(n) for (x, y) in t.binary["E"]}
    return make_structure(n * m, {"E": E})


def hat(t: Structure) -> Structure:
    """Doubled tournament: two fibers, same-index pairs follow the base edge,
    crossed-index pairs reverse it."""
    _require_tournament(t)
    E = set()
    for (x, y) in t.binary["E"]:
        for i in range(2):
            E.add((x * 2 + i, y * 2 + i))
            for j in range(2):
                if i != j:
                    E.add((y * 2 + i, x * 2 + j))
    return make_structure(t.n * 2, {"E": E})


def _star_parts(tstar: Structure) -> None:
    if "E" not in tstar.signature.binary or "lt" not in tstar.signature.binary:
        raise StructureError("starred base needs E and lt")
    _require_tournament(reduct_to_digraph(tstar))


def reduct_to_digraph(s: Structure) -> Structure:
    return make_structure(s.n, {"E": s.binary["E"]})


def compose_T_In_star(tstar: Structure, n: int, fiber_prefix: str = "L") -> Structure:
    """Starred fibered composition: base relations copied along fibers, fiber
    labels added, order is the base order refined by fiber index."""
    _star_parts(tstar)
    if n < 1:
        raise StructureError("fiber size must be >= 1")
    sig = Signature(
        binary=("E", "lt"),
        unary=tstar.signature.unary + tuple(f"{fiber_prefix}{i}" for i in range(n)),
    )
    m = tstar.n
    E = {
        (x * n + i, y * n + j)
        for (x, y) in tstar.binary["E"]
        for i in range(n)
        for j in range(n)
    }
    lt = {
        (x * n + i, y * n + j)
        for (x, y) in tstar.binary["lt"]
        for i in range(n)
        for j in range(n)
    }
    lt |= {(x * n + i, x * n + j) for x in range(m) for i in range(n) for j in range(n) if i < j}
    unary = {u: {x * n + i for x in tstar.unary[u] for i in range(n)} for u in tstar.signature.unary}
    for i in range(n):
        unary[f"{fiber_prefix}{i}"] = {x * n + i for x in range(m)}
    return make_structure(m * n, {"E": E, "lt": lt}, unary, sig)


def compose_In_T_star(tstar: Structure, n: int, part_prefix: str = "P") -> Structure:
    """Starred disjoint union: part labels added, parts ordered by index and
    each copy carrying the base order and base unaries."""
    _star_parts(tstar)
    if n < 1:
        raise StructureError("copy count must be >= 1")
    sig = Signature(
        binary=("E", "lt"),
        unary=tuple(f"{part_prefix}{i}" for i in range(n)) + tstar.signature.unary,
    )
    m = tstar.n
    E = {(p * m + x, p * m + y) for p in range(n) for (x, y) in tstar.binary["E"]}
    lt = {(p * m + x, p * m + y) for p in range(n) for (x, y) in tstar.binary["lt"]}
    lt |= {
        (p * m + x, q * m + y)
        for p in range(n)
        for q in range(n)
        if p < q
        for x in range(m)
        for y in range(m)
    }
    unary = {f"{part_prefix}{p}": {p * m + x for x in range(m)} for p in range(n)}
    for u in tstar.signature.unary:
        unary[u] = {p * m + x for p in range(n) for x in tstar.unary[u]}
    return make_structure(n * m, {"E": E, "lt": lt}, unary, sig)


def hat_star(tstar: Structure, fiber_prefix: str = "L") -> Structure:
    base = compose_T_In_star(tstar, 2, fiber_prefix)
    E = set()
    for (x, y) in tstar.binary["E"]:
        for i in range(2):
            E.add((x * 2 + i, y * 2 + i))
            for j in range(2):
                if i != j:
                    E.add((y * 2 + i, x * 2 + j))
    return make_structure(base.n, {"E": E, "lt": base.binary["lt"]}, base.unary, base.signature)


# ---------------------------------------------------------------------------
# Collapse / recipe / lift.


@dataclass(frozen=True)
class Recipe:
    """Fiber label sets, one per collapsed vertex in order position."""

    entries: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class SignatureVector:
    """Fiber sizes, one per collapsed vertex in order position."""

    sizes: tuple[int, ...]


def nonadjacency_classes(s: Structure, sym: str = "E"):
    """Classes of the "not adjacent or equal" relation, sorted by minimum, or
    (None, witness triple) when that relation is not transitive."""
    rel = s.binary[sym]
    adj = [[False] * s.n for _ in range(s.n)]
    for (x, y) in rel:
        adj[x][y] = True
        adj[y][x] = True
    parent = list(range(s.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(s.n):
        for y in range(x + 1, s.n):
            if not adj[x][y]:
                parent[find(x)] = find(y)
    groups: dict[int, list[int]] = {}
    for v in range(s.n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])
    for g in classes:
        for x, y in itertools.combinations(g, 2):
            if adj[x][y]:
                # x, y landed in one group through some chain; report a triple
                for z in g:
                    if z not in (x, y) and not adj[x][z] and not adj[z][y]:
                        return None, (x, z, y)
                return None, (x, y, None)
    return classes, None


def adjacency_classes(s: Structure, sym: str = "E"):
    """Classes of the "adjacent or equal" relation (cliques), or a witness
    triple when it is not transitive."""
    rel = s.binary[sym]
    adj = [[False] * s.n for _ in range(s.n)]
    for (x, y) in rel:
        adj[x][y] = True
        adj[y][x] = True
    parent = list(range(s.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(s.n):
        for y in range(x + 1, s.n):
            if adj[x][y]:
                parent[find(x)] = find(y)
    groups: dict[int, list[int]] = {}
    for v in range(s.n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])
    for g in classes:
        for x, y in itertools.combinations(g, 2):
            if not adj[x][y]:
                for z in g:
                    if z not in (x, y) and adj[x][z] and adj[z][y]:
                        return None, (x, z, y)
                return None, (x, y, None)
    return classes, None


def lt_positions(s: Structure, sym: str = "lt") -> list[int]:
    """Rank of each vertex in the linear order; raises if not linear."""
    lt = s.binary[sym]
    ranks = [0] * s.n
    for x in range(s.n):
        below = sum(1 for y in range(s.n) if (y, x) in lt)
        ranks[x] = below
    if sorted(ranks) != list(range(s.n)):
        raise StructureError(f"{sym!r} is not a linear order")
    return ranks


def fiber_symbols(s: Structure, prefix: str = "L") -> tuple[str, ...]:
    return tuple(u for u in s.signature.unary if u.startswith(prefix) and u[len(prefix):].isdigit())


def _collapse_classes(a: Structure) -> list[tuple[int, ...]]:
    classes, witness = nonadjacency_classes(a)
    if classes is None:
        raise MalformedComposition(f"point classes are not well defined, witness {witness}")
    # cross-class edges must be complete and uniformly directed
    E = a.binary["E"]
    for g, h in itertools.combinations(classes, 2):
        dirs = set()
        for x in g:
            for y in h:
                if (x, y) in E:
                    dirs.add("fwd")
                elif (y, x) in E:
                    dirs.add("bwd")
                else:
                    raise MalformedComposition(f"non-adjacent cross pair {(x, y)}")
        if len(dirs) != 1:
            raise MalformedComposition(f"mixed edge directions between {g} and {h}")
    return classes


def collapse(a: Structure, fiber_prefix: str = "L") -> Structure:
    """One vertex per point class, all base relations inherited, fiber labels
    dropped; output vertices follow the lt-order of the classes."""
    if "lt" not in a.signature.binary:
        raise MalformedComposition("collapse needs an lt order")
    classes = _collapse_classes(a)
    ranks = lt_positions(a)
    # classes must be convex in lt; order them by their first rank
    ordered = sorted(classes, key=lambda g: min(ranks[v] for v in g))
    spans = [sorted(ranks[v] for v in g) for g in ordered]
    flat = [r for span in spans for r in span]
    if flat != list(range(a.n)):
        raise MalformedComposition("point classes are not convex in lt")
    drop = set(fiber_symbols(a, fiber_prefix))
    sig = Signature(
        binary=a.signature.binary,
        unary=tuple(u for u in a.signature.unary if u not in drop),
    )
    reps = [g[0] for g in ordered]
    cls_of = {v: ci for ci, g in enumerate(ordered) for v in g}
    E = a.binary["E"]
    newE = set()
    for ci, g in enumerate(ordered):
        for cj in range(len(ordered)):
            if ci != cj and (reps[ci], reps[cj]) in E:
                newE.add((ci, cj))
    newlt = {(ci, cj) for ci in range(len(ordered)) for cj in range(len(ordered)) if ci != cj
             and (reps[ci], reps[cj]) in a.binary["lt"]}
    binary = {"E": newE, "lt": newlt}
    for sym in a.signature.binary:
        if sym not in ("E", "lt"):
            binary[sym] = {
                (cls_of[x], cls_of[y])
                for (x, y) in a.binary[sym]
                if cls_of[x] != cls_of[y]
            }
    unary = {}
    for u in sig.unary:
        members = {cls_of[x] for x in a.unary[u]}
        unary[u] = members
    return make_structure(len(ordered), binary, unary, sig)


def recipe_of(a: Structure, fiber_prefix: str = "L") -> Recipe:
    """Fiber label sets per point class, classes taken in lt order."""
    classes = _collapse_classes(a)
    ranks = lt_positions(a)
    ordered = sorted(classes, key=lambda g: min(ranks[v] for v in g))
    fsyms = fiber_symbols(a, fiber_prefix)
    if not fsyms:
        raise MalformedComposition("no fiber label predicates present")
    label_of = {}
    for u in fsyms:
        idx = int(u[len(fiber_prefix):])
        for v in a.unary[u]:
            if v in label_of:
                raise MalformedComposition(f"vertex {v} carries two fiber labels")
            label_of[v] = idx
    entries = []
    for g in ordered:
        labels = set()
        for v in g:
            if v not in label_of:
                raise MalformedComposition(f"vertex {v} carries no fiber label")
            labels.add(label_of[v])
        if len(labels) != len(g):
            raise MalformedComposition(f"fiber labels repeat inside class {g}")
        entries.append(frozenset(labels))
    return Recipe(entries=tuple(entries))


def signature_of(a: Structure) -> SignatureVector:
    """Fiber sizes per point class in lt order (no labels needed)."""
    classes = _collapse_classes(a)
    ranks = lt_positions(a)
    ordered = sorted(classes, key=lambda g: min(ranks[v] for v in g))
    return SignatureVector(sizes=tuple(len(g) for g in ordered))


def trace_of(verts, parts) -> frozenset[int]:
    """Indices of the parts met by the vertex set."""
    vs = set(verts)
    return frozenset(i for i, p in enumerate(parts) if vs & set(p))


def lift(abar: Structure, recipe: Recipe, n: int | None = None, fiber_prefix: str = "L") -> Structure:
    """Rebuild the composition member over abar whose fiber labels per point,
    in order position, are the recipe entries."""
    if abar.n != len(recipe):
        raise StructureError(f"recipe length {len(recipe)} != base size {abar.n}")
    ranks = lt_positions(abar)
    by_rank = sorted(range(abar.n), key=lambda v: ranks[v])
    if n is None:
        n = max((max(e) for e in recipe.entries if e), default=-1) + 1
    for e in recipe.entries:
        if not e:
            raise StructureError("recipe entries must be non-empty")
        if max(e) >= n:
            raise StructureError("recipe label outside fiber range")
    points = [
        (p, lab)
        for p in range(abar.n)
        for lab in sorted(recipe.entries[p])
    ]
    idx = {pt: i for i, pt in enumerate(points)}
    sig = Signature(
        binary=abar.signature.binary,
        unary=abar.signature.unary + tuple(f"{fiber_prefix}{i}" for i in range(n)),
    )
    binary = {}
    for sym in abar.signature.binary:
        ps = abar.binary[sym]
        rel = set()
        for (p, lab) in points:
            for (q, lab2) in points:
                if p != q and (by_rank[p], by_rank[q]) in ps:
                    rel.add((idx[(p, lab)], idx[(q, lab2)]))
        if sym == "lt":
            rel |= {
                (idx[(p, l1)], idx[(p, l2)])
                for p in range(abar.n)
                for l1 in sorted(recipe.entries[p])
                for l2 in sorted(recipe.entries[p])
                if l1 < l2
            }
        binary[sym] = rel
    unary = {
        u: {idx[(p, lab)] for (p, lab) in points if by_rank[p] in abar.unary[u]}
        for u in abar.signature.unary
    }
    for i in range(n):
        unary[f"{fiber_prefix}{i}"] = {idx[(p, lab)] for (p, lab) in points if lab == i}
    return make_structure(len(points), binary, unary, sig)


# ---------------------------------------------------------------------------
# The parity-completed multipartite family S[n,k].


def _snk_vertices(n: int, k: int):
    verts = []
    for i in range(k):
        for f in itertools.product((0, 1), repeat=k - 1):
            for j in range(n):
                verts.append((i, f, j))
    return verts


def _fval(k: int, i: int, f: tuple[int, ...], other: int) -> int:
    others = [x for x in range(k) if x != i]
    return f[others.index(other)]


SNK_SIG = Signature(binary=("E", "R", "lt"))


def build_S(n: int, k: int) -> Structure:
    """k parts of n*2^(k-1) points each; cross edges are the unique completion
    through an ordered imaginary transversal that keeps every 2+2 quadruple
    parity even, R records transversal in-edges, lt is the lexicographic
    convex order."""
    if n < 1 or k < 2:
        raise StructureError("need n >= 1 and k >= 2")
    verts = _snk_vertices(n, k)
    N = len(verts)
    E: set[tuple[int, int]] = set()
    R: set[tuple[int, int]] = set()
    for a in range(N):
        i, f, _ = verts[a]
        for b in range(N):
            i2, f2, _ = verts[b]
            if a == b or i == i2:
                continue
            # R(x, u) with x in part i, u in part i2: set iff u's function
            # sends part i to 0 (the transversal point of part i beats u)
            if _fval(k, i2, f2, i) == 0:
                R.add((a, b))
    for a in range(N):
        for b in range(a + 1, N):
            i, f, _ = verts[a]
            i2, f2, _ = verts[b]
            if i == i2:
                continue
            fwd = (_fval(k, i, f, i2) + _fval(k, i2, f2, i) + (1 if i < i2 else 0) + 1) % 2
            E.add((a, b) if fwd else (b, a))
    lt = {(a, b) for a in range(N) for b in range(a + 1, N)}
    return make_structure(N, {"E": E, "R": R, "lt": lt}, {}, SNK_SIG)


def snk_parts(n: int, k: int) -> list[tuple[int, ...]]:
    verts = _snk_vertices(n, k)
    return [tuple(t for t, v in enumerate(verts) if v[0] == i) for i in range(k)]


def snk_class_blocks(n: int, k: int) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """(part index, function bits, vertex indices) per subclass, in lex order."""
    verts = _snk_vertices(n, k)
    blocks = []
    for i in range(k):
        for f in itertools.product((0, 1), repeat=k - 1):
            members = tuple(t for t, v in enumerate(verts) if v[0] == i and v[1] == f)
            blocks.append((i, f, members))
    return blocks


# ---------------------------------------------------------------------------
# Twisting between labeled posets and their recoded digraphs.  Each ordered
# pair has a type in {-1, 0, 1}: forward edge, no edge, backward edge.  The
# recoding shifts the type by the label difference mod 3.


@dataclass(frozen=True)
class TwistLabeling:
    poset: Structure  # signature ("prec",)
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.poset.n:
            raise TwistError("label count != universe size")
        if any(l not in (0, 1, 2) for l in self.labels):
            raise TwistError("labels must be in {0,1,2}")


def _wrap(v: int) -> int:
    return ((v + 1) % 3) - 1


def _pair_type(pairs, x: int, y: int) -> int:
    if (x, y) in pairs:
        return -1
    if (y, x) in pairs:
        return 1
    return 0


def twist(tl: TwistLabeling, direction: str = "forward") -> Structure:
    """Forward: recode the poset digraph into its shifted-edge form.
    Backward: interpret tl.poset's prec pairs as the shifted digraph and
    unshift (the two directions are mutually inverse)."""
    if direction == "forward":
        return twist_forward(tl)
    if direction == "backward":
        shifted = make_structure(tl.poset.n, {"E": tl.poset.binary["prec"]})
        return twist_backward(shifted, tl.labels).poset
    raise StructureError(f"unknown direction {direction!r}")


def twist_forward(tl: TwistLabeling) -> Structure:
    prec = tl.poset.binary["prec"]
    labels = tl.labels
    E = set()
    for x in range(tl.poset.n):
        for y in range(x + 1, tl.poset.n):
            t = _pair_type(prec, x, y)
            t2 = _wrap(t + (labels[y] - labels[x]))
            if t2 == -1:
                E.add((x, y))
            elif t2 == 1:
                E.add((y, x))
    return make_structure(tl.poset.n, {"E": E})


def untwist_pairs(s: Structure, labels) -> set[tuple[int, int]] | None:
    """Unshifted pair set, or None when the result is not transitive."""
    E = s.binary["E"]
    prec = set()
    for x in range(s.n):
        for y in range(x + 1, s.n):
            t2 = _pair_type(E, x, y)
            t = _wrap(t2 - (labels[y] - labels[x]))
            if t == -1:
                prec.add((x, y))
            elif t == 1:
                prec.add((y, x))
    for (x, y) in prec:
        for z in range(s.n):
            if (y, z) in prec and z != x and (x, z) not in prec:
                return None
    return prec


def twist_backward(s: Structure, labels) -> TwistLabeling:
    labels = tuple(labels)
    prec = untwist_pairs(s, labels)
    if prec is None:
        raise TwistError("unshifted relation is not a strict partial order")
    return TwistLabeling(make_structure(s.n, {"prec": prec}, signature=POSET_SIG), labels)


def untwist_search(s: Structure) -> TwistLabeling | None:
    """First 3-labeling (in lexicographic order) whose unshift is a poset."""
    for labels in itertools.product((0, 1, 2), repeat=s.n):
        prec = untwist_pairs(s, labels)
        if prec is not None:
            return TwistLabeling(make_structure(s.n, {"prec": prec}, signature=POSET_SIG), labels)
    return None


# ---------------------------------------------------------------------------
# Products of an ordered poset with an ordered 3-partitioned set, and their
# diagonal substructures.


def k0_violations(s: Structure) -> list[str]:
    """Empty iff prec is a strict poset, R0..R2 partition the universe and lt
    is a linear order extending prec."""
    out = []
    prec = s.binary["prec"]
    for x in range(s.n):
        if (x, x) in prec:
            out.append(f"prec reflexive at {x}")
    for (x, y) in prec:
        if (y, x) in prec:
            out.append(f"prec symmetric on {(x, y)}")
        for z in range(s.n):
            if (y, z) in prec and z != x and (x, z) not in prec:
                out.append(f"prec not transitive via {(x, y, z)}")
    try:
        lt_positions(s)
    except StructureError:
        out.append("lt not linear")
    lt = s.binary["lt"]
    for p in prec:
        if p not in lt:
            out.append(f"lt does not extend prec on {p}")
    seen = {}
    for i in range(3):
        for v in s.unary[f"R{i}"]:
            if v in seen:
                out.append(f"R classes overlap at {v}")
            seen[v] = i
    for v in range(s.n):
        if v not in seen:
            out.append(f"R classes miss {v}")
    return out


def k0_product(c1: Structure, c2: Structure) -> Structure:
    """Product structure: poset data from the first factor, class labels from
    the second, order lexicographic."""
    n1, n2 = c1.n, c2.n
    prec1 = c1.binary["prec"]
    lt1 = c1.binary["lt"]
    lt2 = c2.binary["lt"]
    prec = set()
    lt = set()
    for x in range(n1):
        for y in range(n2):
            a = x * n2 + y
            for z in range(n1):
                for w in range(n2):
                    b = z * n2 + w
                    if a == b:
                        continue
                    if (x, z) in prec1:
                        prec.add((a, b))
                    if (x, z) in lt1 or (x == z and (y, w) in lt2):
                        lt.add((a, b))
    unary = {f"R{i}": {x * n2 + y for x in range(n1) for y in c2.unary[f"R{i}"]} for i in range(3)}
    return make_structure(n1 * n2, {"prec": prec, "lt": lt}, unary, K0_SIG)


def diagonal(d1: Structure, d2: Structure) -> Structure:
    """Diagonal of the product: match the i-th point of each factor in their
    lt orders; inherits poset data from the first and labels from the second."""
    if d1.n != d2.n:
        raise StructureError(f"size mismatch {d1.n} != {d2.n}")
    m = d1.n
    pos1, pos2 = lt_positions(d1), lt_positions(d2)
    seq1 = sorted(range(m), key=lambda v: pos1[v])
    seq2 = sorted(range(m), key=lambda v: pos2[v])
    prec1 = d1.binary["prec"]
    prec = {
        (r, t)
        for r in range(m)
        for t in range(m)
        if r != t and (seq1[r], seq1[t]) in prec1
    }
    lt = {(r, t) for r in range(m) for t in range(m) if r < t}
    unary = {f"R{i}": {r for r in range(m) if seq2[r] in d2.unary[f"R{i}"]} for i in range(3)}
    return make_structure(m, {"prec": prec, "lt": lt}, unary, K0_SIG)


# ---------------------------------------------------------------------------
# Fixture structures for the 3-partitioned poset expansion checks.


def gadget(name: str) -> Structure:
    """Fixture structure by name: X0..X2, D0..D2, Eplus{ij} (i<=j),
    Eminus{ij} (i<j), F0..F2, G{ij} (i!=j)."""
    kind = name.rstrip("0123456789")
    digits = name[len(kind):]
    if kind == "X" and len(digits) == 1:
        i = int(digits)
        u = {f"R{j}": ({0} if j == i else set()) for j in range(3)}
        return make_structure(1, {"E": set(), "lt": set()}, u, P3_STAR_SIG)
    if kind == "D" and len(digits) == 1:
        i = int(digits)
        u = {f"R{j}": set() for j in range(3)}
        u[f"R{i}"] = {0, 1}
        u[f"R{(i + 1) % 3}"] = {2}
        return make_structure(
            3,
            {"E": {(0, 1), (1, 2), (2, 0)}, "lt": {(0, 1), (1, 2), (0, 2)}},
            u,
            P3_STAR_SIG,
        )
    if kind in ("Eplus", "Eminus") and len(digits) == 2:
        i, j = int(digits[0]), int(digits[1])
        if kind == "Eplus" and not i <= j:
            raise StructureError(f"{name}: need i <= j")
        if kind == "Eminus" and not i < j:
            raise StructureError(f"{name}: need i < j")
        u = {f"R{t}": set() for t in range(3)}
        u[f"R{i}"] |= {0}
        u[f"R{j}"] |= {1}
        lt = {(0, 1)} if kind == "Eplus" else {(1, 0)}
        if j == i:
            E = set()
        elif j == i + 1:
            E = {(1, 0)}
        else:  # j == i + 2
            E = {(0, 1)}
        return make_structure(2, {"E": E, "lt": lt}, u, P3_STAR_SIG)
    if kind == "F" and len(digits) == 1:
        i = int(digits)
        u = {f"R{j}": ({0, 1, 2} if j == i else set()) for j in range(3)}
        return make_structure(
            3, {"E": {(0, 2)}, "lt": {(0, 1), (1, 2), (0, 2)}}, u, P3_STAR_SIG
        )
    if kind == "G" and len(digits) == 2:
        i, j = int(digits[0]), int(digits[1])
        if i == j:
            raise StructureError(f"{name}: need i != j")
        u = {f"R{t}": set() for t in range(3)}
        u[f"R{i}"] = {0, 1}
        u[f"R{j}"] = {2}
        lt = {(2, 0), (0, 1), (2, 1)}
        d = j - i
        if d == 1:
            E = {(0, 2), (1, 2)}
        elif d == 2:
            E = {(0, 1), (1, 2)}
        elif d == -1:
            E = {(1, 2)}
        else:  # d == -2
            E = {(0, 2), (2, 1)}
        return make_structure(3, {"E": E, "lt": lt}, u, P3_STAR_SIG)
    raise StructureError(f"unknown gadget {name!r}")


def gadget_names() -> list[str]:
    names = [f"X{i}" for i in range(3)]
    names += [f"D{i}" for i in range(3)]
    names += [f"Eplus{i}{j}" for i in range(3) for j in range(3) if i <= j]
    names += [f"Eminus{i}{j}" for i in range(3) for j in range(3) if i < j]
    names += [f"F{i}" for i in range(3)]
    names += [f"G{i}{j}" for i in range(3) for j in range(3) if i != j]
    return names
