"""Indecomposable inventories, support tau-tilting pairs, and their posets.

Two independent enumeration routes are provided and kept apart on purpose:

* :func:`enumerate_stpairs` realizes pairs as size-n cliques in the pairwise
  compatibility graph (modules plus support-vertex tokens);
* :func:`oracle_stpairs_via_quotients` follows the defining recipe directly:
  for every support set build the vertex quotient, enumerate its tau-tilting
  modules by brute force, and inflate back.

Their set equality on a given algebra is the central correctness check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, vertex_subalgebra_quotient
from .errors import InventoryError, UnknownVertex
from .linalg import Matrix, rank_and_rowbasis
from .reps import (
    Representation,
    direct_sum,
    hom_basis,
    is_iso,
    projective,
    tau,
    zero_rep,
)
from .strings import enumerate_strings, string_name, string_to_rep

log = logging.getLogger(__name__)


@dataclass
class IndecRecord:
    id: int
    name: str
    rep: Representation
    tau_rep: Representation
    is_tau_rigid: bool
    is_projective: bool
    projective_vertex: str | None = None
    tau_id: int | None = None
    external: bool = False  # recorded but not offered as a pair candidate

    @property
    def dim_vector(self):
        return self.rep.dim_vector


@dataclass(frozen=True)
class STPair:
    """A support tau-tilting pair: summand ids plus support-projective vertices."""

    modules: tuple[int, ...]
    supports: tuple[str, ...]

    @property
    def is_tau_tilting(self) -> bool:
        return not self.supports

    def key(self):
        return (frozenset(self.modules), frozenset(self.supports))


class Inventory:
    """The universe of indecomposables over one algebra, with tau precomputed."""

    def __init__(self, algebra: Algebra, records: list[IndecRecord]):
        self.algebra = algebra
        self.records = records
        self._hom_cache: dict[tuple[int, int], list] = {}
        self._hom_tau_cache: dict[tuple[int, int], int] = {}
        self._fac_cache: dict[tuple[int, frozenset], bool] = {}
        self._proj_cache: dict[str, Representation] = {}

    def __len__(self):
        return len(self.records)

    def candidates(self) -> list[IndecRecord]:
        return [r for r in self.records if not r.external]

    def record_by_name(self, name: str) -> IndecRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def projective_rep(self, v: str) -> Representation:
        if v not in self._proj_cache:
            self._proj_cache[v] = projective(self.algebra, v)
        return self._proj_cache[v]

    def find_iso(self, rep: Representation) -> int | None:
        for r in self.records:
            if r.dim_vector == rep.dim_vector and is_iso(r.rep, rep):
                return r.id
        return None

    def hom(self, i: int, j: int) -> list:
        if (i, j) not in self._hom_cache:
            self._hom_cache[(i, j)] = hom_basis(self.records[i].rep, self.records[j].rep)
        return self._hom_cache[(i, j)]

    def hom_to_tau(self, i: int, j: int) -> int:
        """dim Hom(X_i, tau X_j)."""
        if (i, j) not in self._hom_tau_cache:
            self._hom_tau_cache[(i, j)] = len(
                hom_basis(self.records[i].rep, self.records[j].tau_rep))
        return self._hom_tau_cache[(i, j)]

    def hom_proj_dim(self, v: str, i: int) -> int:
        """dim Hom(P_v, X_i) = dim X_i at v."""
        return self.records[i].rep.dims[v]

    def fac_contains(self, j: int, sources: frozenset) -> bool:
        """Is X_j generated by (in Fac of) the direct sum over ``sources``?"""
        key = (j, sources)
        if key in self._fac_cache:
            return self._fac_cache[key]
        target = self.records[j].rep
        alg = self.algebra
        ok = True
        for v in alg.vertices:
            d = target.dims[v]
            if d == 0:
                continue
            mats = [f.blocks[v] for i in sources for f in self.hom(i, j)]
            stacked = Matrix.stack(mats, d, alg.field) if mats else Matrix.zeros(0, d, alg.field)
            if rank_and_rowbasis(stacked)[0] != d:
                ok = False
                break
        self._fac_cache[key] = ok
        return ok

    def sum_rep(self, ids) -> Representation:
        return direct_sum([self.records[i].rep for i in sorted(ids)], self.algebra)

    def pair_label(self, pair: STPair, sep: str = "+") -> str:
        if not pair.modules:
            return "0"
        return sep.join(sorted(self.records[i].name for i in pair.modules))

    def pair_sort_key(self, pair: STPair):
        return (len(pair.supports), tuple(sorted(self.records[i].name for i in pair.modules)),
                tuple(sorted(pair.supports)))


def _names_for(algebra: Algebra, words) -> list[str]:
    names = []
    seen: dict[str, int] = {}
    for w in words:
        n = string_name(algebra, w)
        if n in seen:
            seen[n] += 1
            n = f"{n}#{seen[n]}"
        else:
            seen[n] = 0
        names.append(n)
    return names


def _is_local_endo_ring(rep: Representation) -> bool:
    """Local endomorphism ring test via the trace form (char 0 criterion)."""
    homs = hom_basis(rep, rep)
    n = len(homs)
    alg = rep.algebra
    field = alg.field

    def compose_blocks(f, g):
        return {v: f.blocks[v] @ g.blocks[v] for v in alg.vertices}

    gram = Matrix.zeros(n, n, field)
    for i in range(n):
        for j in range(n):
            prod = compose_blocks(homs[i], homs[j])
            tr = field.zero
            for v in alg.vertices:
                m = prod[v]
                for k in range(m.rows):
                    tr = tr + m.data[k][k]
            gram.data[i][j] = tr
    radical_dim = n - gram.rank()
    return n - radical_dim == 1


def build_inventory(algebra: Algebra, backend="strings",
                    supplied: list[tuple[str, Representation]] | None = None) -> Inventory:
    """Enumerate the indecomposables and precompute tau for each.

    backend="strings" uses the string-module enumeration (complete for string
    algebras); backend="supplied" trusts an explicit list, auditing each
    module's endomorphism ring for local-ness.
    """
    if backend == "strings":
        words = enumerate_strings(algebra)
        reps = [string_to_rep(algebra, w) for w in words]
        names = _names_for(algebra, words)
    elif backend == "supplied":
        if not supplied:
            raise InventoryError("supplied backend needs modules")
        names = [n for n, _ in supplied]
        reps = [r for _, r in supplied]
        for n, r in supplied:
            r.assert_valid()
            if not _is_local_endo_ring(r):
                log.warning("supplied module %s fails the local-endomorphism audit", n)
    else:
        raise ValueError(f"unknown backend {backend!r}")

    records: list[IndecRecord] = []
    for i, (name, rep) in enumerate(zip(names, reps)):
        records.append(IndecRecord(i, name, rep, zero_rep(algebra), False, False))
    inv = Inventory(algebra, records)

    # audit: distinct records sharing a dim vector must be non-isomorphic
    by_dv: dict[tuple, list[int]] = {}
    for r in records:
        by_dv.setdefault(r.dim_vector, []).append(r.id)
    for ids in by_dv.values():
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                if is_iso(records[ids[i]].rep, records[ids[j]].rep):
                    raise InventoryError(
                        f"records {records[ids[i]].name} and {records[ids[j]].name} are isomorphic")

    proj_meta = {}
    for v in algebra.vertices:
        proj_meta[v] = inv.projective_rep(v)

    for r in records:
        t = tau(r.rep)
        r.tau_rep = t
        r.is_projective = t.is_zero()
        if r.is_projective:
            for v in algebra.vertices:
                if r.dim_vector == proj_meta[v].dim_vector and is_iso(r.rep, proj_meta[v]):
                    r.projective_vertex = v
                    break
        else:
            match = inv.find_iso(t)
            if match is None:
                log.warning("tau of %s is not in the inventory; recording standalone", r.name)
                extra = IndecRecord(len(records), f"tau({r.name})", t, zero_rep(algebra),
                                    False, False, external=True)
                records.append(extra)
                match = extra.id
            r.tau_id = match
        r.is_tau_rigid = len(hom_basis(r.rep, r.tau_rep)) == 0
    for r in records:
        if r.external and r.tau_rep.is_zero() and not r.rep.is_zero():
            r.tau_rep = tau(r.rep)
            r.is_tau_rigid = len(hom_basis(r.rep, r.tau_rep)) == 0
    return inv


def compatible(inv: Inventory, x, y) -> bool:
    """Pairwise compatibility for pair members.

    Module / module: Hom(X, tau Y) = 0 = Hom(Y, tau X); a module with itself:
    tau-rigidity.  Module / support vertex v: Hom(P_v, X) = 0.  Two support
    vertices are always compatible.
    """
    x_is_mod = isinstance(x, IndecRecord)
    y_is_mod = isinstance(y, IndecRecord)
    if x_is_mod and y_is_mod:
        if x.id == y.id:
            return x.is_tau_rigid
        return inv.hom_to_tau(x.id, y.id) == 0 and inv.hom_to_tau(y.id, x.id) == 0
    if x_is_mod and not y_is_mod:
        return inv.hom_proj_dim(y, x.id) == 0
    if y_is_mod and not x_is_mod:
        return inv.hom_proj_dim(x, y.id) == 0
    return True


def enumerate_stpairs(inv: Inventory) -> list[STPair]:
    """All size-n cliques in the compatibility graph, canonically ordered."""
    n = len(inv.algebra.vertices)
    mods = [r for r in inv.candidates() if r.is_tau_rigid]
    elements: list = list(mods) + list(inv.algebra.vertices)
    m = len(elements)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if compatible(inv, elements[i], elements[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    pairs: list[STPair] = []

    def extend(chosen: list[int], allowed: int, start: int):
        if len(chosen) == n:
            mods_sel = tuple(sorted(elements[i].id for i in chosen
                                    if isinstance(elements[i], IndecRecord)))
            sups = tuple(sorted(elements[i] for i in chosen
                                if not isinstance(elements[i], IndecRecord)))
            pairs.append(STPair(mods_sel, sups))
            return
        remaining = n - len(chosen)
        for i in range(start, m):
            if m - i < remaining:
                break
            if not (allowed >> i) & 1:
                continue
            chosen.append(i)
            extend(chosen, allowed & adj[i], i + 1)
            chosen.pop()

    extend([], (1 << m) - 1, 0)
    pairs.sort(key=inv.pair_sort_key)
    return pairs


def tau_tilting_pairs(inv: Inventory) -> list[STPair]:
    return [p for p in enumerate_stpairs(inv) if p.is_tau_tilting]


def oracle_stpairs_via_quotients(inv: Inventory) -> list[STPair]:
    """The defining recipe: tau-tilting modules over every vertex quotient.

    For each nonempty support set S the quotient A/AeA is built outright and
    its tau-tilting modules are found by testing Hom(M, tau M) = 0 over the
    quotient on all size-|S| summand sets; results are inflated back and
    matched against the ambient inventory.  The empty support contributes the
    zero pair.
    """
    algebra = inv.algebra
    verts = list(algebra.vertices)
    n = len(verts)
    seen: dict = {}
    zero = STPair((), tuple(sorted(verts)))
    seen[zero.key()] = zero
    from itertools import combinations

    from .reps import inflate

    for size in range(1, n + 1):
        for support in combinations(verts, size):
            quot = vertex_subalgebra_quotient(algebra, set(support))
            qinv = build_inventory(quot)
            cands = [r for r in qinv.candidates()]
            k = len(quot.vertices)
            homtau = {}
            for a in cands:
                for b in cands:
                    homtau[(a.id, b.id)] = len(hom_basis(a.rep, b.tau_rep))
            for subset in combinations(cands, k):
                if any(homtau[(a.id, b.id)] != 0 for a in subset for b in subset):
                    continue
                ids = []
                for r in subset:
                    lifted = inflate(r.rep)
                    match = inv.find_iso(lifted)
                    if match is None:
                        raise InventoryError(
                            f"inflated module (dims {lifted.dim_vector}) missing from inventory")
                    ids.append(match)
                pair = STPair(tuple(sorted(ids)),
                              tuple(sorted(v for v in verts if v not in support)))
                seen[pair.key()] = pair
    out = list(seen.values())
    out.sort(key=inv.pair_sort_key)
    return out


def order_ge(inv: Inventory, p1: STPair, p2: STPair) -> bool:
    """Fac(M1) contains Fac(M2), tested summand by summand."""
    src = frozenset(p1.modules)
    return all(inv.fac_contains(j, src) for j in p2.modules)


@dataclass(frozen=True)
class PosetQuiver:
    """A finite DAG with labeled vertices and its reachability closure."""

    labels: tuple[str, ...]
    arrows: tuple[tuple[int, int], ...]
    payload: dict = dc_field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate vertex labels in poset quiver")
        # reachability via arrows; reject cycles
        closure = self._closure()
        for i in range(len(self.labels)):
            if (closure[i] >> i) & 1:
                raise ValueError("poset quiver contains a cycle")
        object.__setattr__(self, "_reach", closure)

    def _closure(self):
        nv = len(self.labels)
        succ = [0] * nv
        for s, t in self.arrows:
            succ[s] |= 1 << t
        changed = True
        while changed:
            changed = False
            for i in range(nv):
                acc = succ[i]
                extra = 0
                rest = acc
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    extra |= succ[j]
                if acc | extra != acc:
                    succ[i] = acc | extra
                    changed = True
        return succ

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def reaches(self, i: int, j: int) -> bool:
        """Strict reachability along arrows."""
        return bool((self._reach[i] >> j) & 1)

    def ge(self, i: int, j: int) -> bool:
        return i == j or self.reaches(i, j)

    def edge_labels(self) -> set[tuple[str, str]]:
        return {(self.labels[s], self.labels[t]) for s, t in self.arrows}


def hasse(inv: Inventory, pairs: list[STPair]) -> PosetQuiver:
    """Covering relations of the Fac order on the given pairs."""
    nv = len(pairs)
    ge_rows = [0] * nv
    for i in range(nv):
        for j in range(nv):
            if i != j and order_ge(inv, pairs[i], pairs[j]):
                ge_rows[i] |= 1 << j
    for i in range(nv):
        for j in range(nv):
            if i != j and (ge_rows[i] >> j) & 1 and (ge_rows[j] >> i) & 1:
                raise AssertionError("Fac order is not antisymmetric on these pairs")
    arrows = []
    for i in range(nv):
        blocked = 0
        rest = ge_rows[i]
        while rest:
            k = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            blocked |= ge_rows[k]
        covers = ge_rows[i] & ~blocked
        while covers:
            j = (covers & -covers).bit_length() - 1
            covers &= covers - 1
            arrows.append((i, j))
    labels = tuple(inv.pair_label(p) for p in pairs)
    pq = PosetQuiver(labels, tuple(sorted(arrows)),
                     payload={"pairs": list(pairs)})
    # the transitive closure of the covers must reproduce the order
    for i in range(nv):
        reach = 0
        for j in range(nv):
            if i != j and pq.reaches(i, j):
                reach |= 1 << j
        if reach != ge_rows[i]:
            raise AssertionError("covers do not regenerate the Fac order")
    return pq


def full_subquiver(pq: PosetQuiver, keep) -> PosetQuiver:
    """Vertices in ``keep`` and the arrows of ``pq`` between them (not recomputed)."""
    keep = list(keep)
    for lbl in keep:
        if lbl not in pq.labels:
            raise UnknownVertex(lbl)
    pos = {lbl: i for i, lbl in enumerate(keep)}
    arrows = []
    for s, t in pq.arrows:
        ls, lt = pq.labels[s], pq.labels[t]
        if ls in pos and lt in pos:
            arrows.append((pos[ls], pos[lt]))
    return PosetQuiver(tuple(keep), tuple(sorted(arrows)))
