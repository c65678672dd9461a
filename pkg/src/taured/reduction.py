"""Socle-quotient reduction for algebras with a projective-injective module.

Given an indecomposable projective-injective Q = P_v with simple socle, the
span of the socle is a two-sided ideal and the quotient by it is again an
algebra.  The tau-tilting modules over the ambient algebra split into three
families matched, via the quotient functor, with explicitly described sets
over the quotient; the restriction of the Hasse quiver to tau-tilting modules
transports along this matching, and at the support level the full Hasse
quiver is a subposet surgery of the quotient's.  Every claim is checked
executably, one report entry per claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, quotient_by_elements
from .errors import NonSimpleSocle, NoProjInjective, NotProjInjective, UnknownVertex
from .linalg import Matrix, left_nullspace
from .reps import (
    Representation,
    bar,
    hom_basis,
    inflate,
    injective,
    is_iso,
    is_sincere,
    projective,
)
from .tilting import (
    Inventory,
    PosetQuiver,
    STPair,
    build_inventory,
    enumerate_stpairs,
    full_subquiver,
    hasse,
)

PLUS = "⁺"


def find_proj_injectives(algebra: Algebra) -> list[tuple[str, str]]:
    """Vertices v with P_v injective, each with the matching injective vertex."""
    out = []
    projs = {v: projective(algebra, v) for v in algebra.vertices}
    injs = {v: injective(algebra, v) for v in algebra.vertices}
    for v in algebra.vertices:
        for w in algebra.vertices:
            if projs[v].dim_vector == injs[w].dim_vector and is_iso(projs[v], injs[w]):
                out.append((v, w))
                break
    return out


@dataclass
class ReductionContext:
    algebra: Algebra
    vertex: str                      # Q = P_vertex
    socle_vertex: str
    socle_element: dict              # algebra element spanning Soc(Q)
    quotient: Algebra                # ambient algebra modulo the socle span
    q_rep: Representation
    qbar_rep: Representation         # Q modulo its socle, over the quotient
    q_is_simple: bool

    inv: Inventory | None = None
    quotient_inv: Inventory | None = None
    _bar_cache: dict = dc_field(default_factory=dict)
    _hom_q_cache: dict = dc_field(default_factory=dict)
    _lift_cache: dict = dc_field(default_factory=dict)

    def inventory(self) -> Inventory:
        if self.inv is None:
            self.inv = build_inventory(self.algebra)
        return self.inv

    def quotient_inventory(self) -> Inventory:
        if self.quotient_inv is None:
            self.quotient_inv = build_inventory(self.quotient)
        return self.quotient_inv

    @property
    def qbar_id(self) -> int | None:
        """Quotient-inventory id of Q/Soc(Q); None when Q is simple."""
        if self.qbar_rep.is_zero():
            return None
        i = self.quotient_inventory().find_iso(self.qbar_rep)
        if i is None:
            raise NonSimpleSocle("Q/Soc(Q) missing from the quotient inventory")
        return i

    def q_id(self) -> int:
        i = self.inventory().find_iso(self.q_rep)
        if i is None:
            raise NotProjInjective("Q missing from the inventory")
        return i

    def qbar_ambient_id(self) -> int | None:
        """Ambient-inventory id of the inflated Q/Soc(Q); None when Q is simple."""
        if self.qbar_id is None:
            return None
        return self.lift_record(self.qbar_id)

    def bar_record(self, rec_id: int) -> int | None:
        """Quotient id of the image of an ambient record (None if the image is zero)."""
        if rec_id in self._bar_cache:
            return self._bar_cache[rec_id]
        rep = self.inventory().records[rec_id].rep
        image = bar(rep, self.quotient)
        match = None
        if not image.is_zero():
            match = self.quotient_inventory().find_iso(image)
            if match is None:
                raise NonSimpleSocle("bar image missing from the quotient inventory")
        self._bar_cache[rec_id] = match
        return match

    def lift_record(self, quotient_rec_id: int) -> int:
        """Ambient id of an inflated quotient record."""
        if quotient_rec_id in self._lift_cache:
            return self._lift_cache[quotient_rec_id]
        rep = inflate(self.quotient_inventory().records[quotient_rec_id].rep)
        match = self.inventory().find_iso(rep)
        if match is None:
            raise NonSimpleSocle("inflated summand missing from the ambient inventory")
        self._lift_cache[quotient_rec_id] = match
        return match

    def lift_set(self, mods) -> frozenset:
        return frozenset(self.lift_record(i) for i in mods)

    def hom_to_q_dim(self, quotient_rec_id: int) -> int:
        """dim Hom over the ambient algebra from an inflated quotient record to Q."""
        if quotient_rec_id not in self._hom_q_cache:
            rep = inflate(self.quotient_inventory().records[quotient_rec_id].rep)
            self._hom_q_cache[quotient_rec_id] = len(hom_basis(rep, self.q_rep))
        return self._hom_q_cache[quotient_rec_id]

    def hom_set_to_q(self, mods) -> int:
        return sum(self.hom_to_q_dim(i) for i in mods)


def socle_quotient(algebra: Algebra, v: str) -> ReductionContext:
    """Quotient the algebra by Soc(P_v) for a projective-injective P_v."""
    pi = dict(find_proj_injectives(algebra))
    if v not in pi:
        raise NotProjInjective(f"P_{v} is not projective-injective")
    field = algebra.field
    # Soc(P_v) inside the algebra: elements of e_v . A killed by every arrow
    rows_idx = algebra.basis_from(v)
    cols = 0
    rows = []
    for bidx in rows_idx:
        row = []
        for a in algebra.arrows:
            prod = algebra.multiply({bidx: field.one}, algebra.element_of_arrow(a.name))
            for k in algebra.basis_from(v):
                row.append(prod.get(k, field.zero))
        rows.append(row)
        cols = len(row)
    m = Matrix.from_rows(rows, cols, field)
    ker = Matrix.identity(len(rows_idx), field) if cols == 0 else left_nullspace(m)
    if ker.rows != 1:
        raise NonSimpleSocle(f"Soc(P_{v}) has dimension {ker.rows}")
    soc_vec = {rows_idx[k]: c for k, c in enumerate(ker.data[0]) if c}
    tgts = {algebra.basis[i].tgt for i in soc_vec}
    if len(tgts) != 1:
        raise NonSimpleSocle("socle element spreads over several vertices")
    socle_vertex = tgts.pop()

    # two-sidedness witness: arrows annihilate the socle element on both sides
    for a in algebra.arrows:
        ar = algebra.element_of_arrow(a.name)
        if algebra.multiply(soc_vec, ar) or algebra.multiply(ar, soc_vec):
            raise NonSimpleSocle("socle span is not a two-sided ideal")

    q_is_simple = all(algebra.basis[i].is_idempotent for i in soc_vec)
    quotient = quotient_by_elements(algebra, [soc_vec])
    q_rep = projective(algebra, v)
    qbar = bar(q_rep, quotient)
    return ReductionContext(algebra, v, socle_vertex, soc_vec, quotient,
                            q_rep, qbar, q_is_simple)


def bar_summands(ctx: ReductionContext, module_ids) -> frozenset:
    """Image of a summand set under the quotient functor, made basic.

    Zero images are dropped (arises only for a simple Q); duplicates merge.
    """
    out = set()
    for i in module_ids:
        b = ctx.bar_record(i)
        if b is not None:
            out.add(b)
    return frozenset(out)


@dataclass
class ReductionSets:
    """Families over the quotient that mirror tau-tilt of the ambient algebra.

    keep: tau-tilting quotient modules without the top summand Q/Soc(Q); they
        lift unchanged.
    extend: support tau-tilting quotient modules containing Q/Soc(Q), with no
        maps to Q and one summand short of full size; Q gets adjoined.
    swap: tau-tilting quotient modules containing Q/Soc(Q) with maps to Q;
        Q/Soc(Q) is exchanged for Q.
    surgery: the support-level set (Q/Soc(Q) present, no maps to Q, any size)
        whose duplication rebuilds the ambient support Hasse quiver.
    """

    keep: list[frozenset]
    extend: list[frozenset]
    swap: list[frozenset]
    surgery: list[STPair]


def compute_nsets(ctx: ReductionContext) -> ReductionSets:
    qinv = ctx.quotient_inventory()
    pairs = enumerate_stpairs(qinv)
    nbar = len(ctx.quotient.vertices)
    qbar = ctx.qbar_id
    keep, extend, swap, surgery = [], [], [], []
    for p in pairs:
        mods = frozenset(p.modules)
        has_qbar = qbar is not None and qbar in mods
        if p.is_tau_tilting:
            if not has_qbar:
                keep.append(mods)
            elif ctx.hom_set_to_q(mods) != 0:
                swap.append(mods)
        if qbar is None:
            # simple Q: the zero module belongs to every additive closure
            if ctx.hom_set_to_q(mods) == 0:
                surgery.append(p)
        elif has_qbar and ctx.hom_set_to_q(mods) == 0:
            surgery.append(p)
            if len(mods) == nbar - 1:
                extend.append(mods)
    return ReductionSets(keep, extend, swap, surgery)


def reconstruct_tau_tilt(ctx: ReductionContext, nsets: ReductionSets) -> list[frozenset]:
    """Assemble tau-tilt of the ambient algebra from the quotient families."""
    inv = ctx.inventory()
    q = ctx.q_id()
    result: set[frozenset] = set()
    if ctx.q_is_simple:
        for mods in nsets.keep:
            result.add(ctx.lift_set(mods) | {q})
    else:
        qbar = ctx.qbar_id
        for mods in nsets.keep:
            result.add(ctx.lift_set(mods))
        for mods in nsets.extend:
            result.add(ctx.lift_set(mods) | {q})
        for mods in nsets.swap:
            result.add(ctx.lift_set(mods - {qbar}) | {q})
    return sorted(result, key=lambda s: tuple(sorted(inv.records[i].name for i in s)))


def surgery(pq: PosetQuiver, n_labels) -> PosetQuiver:
    """Duplicate the subposet N inside the quiver, rewiring the arrow families.

    Arrows within the complement and from N outward are kept; arrows within N
    are kept and copied; arrows from the complement into N are redirected to
    the copy; each copy points at its original.
    """
    n_set = set(n_labels)
    for lbl in n_set:
        if lbl not in pq.labels:
            raise UnknownVertex(lbl)
    plus = {lbl: lbl + PLUS for lbl in pq.labels if lbl in n_set}
    labels = list(pq.labels) + [plus[l] for l in pq.labels if l in n_set]
    pos = {l: i for i, l in enumerate(labels)}
    arrows = set()
    for s, t in pq.arrows:
        ls, lt = pq.labels[s], pq.labels[t]
        if lt in n_set and ls not in n_set:
            arrows.add((pos[ls], pos[plus[lt]]))
        else:
            arrows.add((pos[ls], pos[lt]))
            if ls in n_set and lt in n_set:
                arrows.add((pos[plus[ls]], pos[plus[lt]]))
    for lbl in pq.labels:
        if lbl in n_set:
            arrows.add((pos[plus[lbl]], pos[lbl]))
    return PosetQuiver(tuple(labels), tuple(sorted(arrows)))


@dataclass
class Check:
    name: str
    statement: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.witness}]" if (self.witness and not self.passed) else ""
        return f"[{tag}] {self.name}: {self.statement}{extra}"


@dataclass
class Report:
    algebra_name: str
    checks: list[Check] = dc_field(default_factory=list)

    def add(self, name: str, statement: str, passed: bool, witness: str = "") -> None:
        self.checks.append(Check(name, statement, bool(passed), witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _iso_along_map(src: PosetQuiver, dst: PosetQuiver, vmap: dict[str, str]):
    """Quiver isomorphism along an explicit vertex map; returns (ok, witness)."""
    if len(vmap) != src.n or len(set(vmap.values())) != src.n or dst.n != src.n:
        return False, (f"vertex map is not a bijection "
                       f"({len(set(vmap.values()))} images, {src.n} -> {dst.n} vertices)")
    missing = [lbl for lbl in src.labels if vmap[lbl] not in dst.labels]
    if missing:
        return False, f"image vertex {vmap[missing[0]]!r} missing from the target"
    src_edges = {(vmap[a], vmap[b]) for a, b in src.edge_labels()}
    dst_edges = dst.edge_labels()
    if src_edges - dst_edges:
        return False, f"arrow not preserved: {sorted(src_edges - dst_edges)[0]}"
    if dst_edges - src_edges:
        return False, f"arrow not reflected: {sorted(dst_edges - src_edges)[0]}"
    return True, ""


def _pair_with_modules(pairs: list[STPair], mods: frozenset) -> STPair | None:
    for p in pairs:
        if frozenset(p.modules) == mods:
            return p
    return None


def verify_reduction(algebra: Algebra, name: str = "algebra",
                     inv: Inventory | None = None) -> Report:
    """Run every reduction claim for each projective-injective of the algebra."""
    pis = find_proj_injectives(algebra)
    if not pis:
        raise NoProjInjective("no indecomposable projective-injective module")
    report = Report(name)
    inv = inv or build_inventory(algebra)
    pairs = enumerate_stpairs(inv)
    H = hasse(inv, pairs)
    tau_pairs = [p for p in pairs if p.is_tau_tilting]
    tt_sets = {frozenset(p.modules) for p in tau_pairs}

    for v, _ in pis:
        tag = f"Q=P_{v}"
        ctx = socle_quotient(algebra, v)
        ctx.inv = inv
        report.add(f"{tag}/socle-simple", "Soc(Q) is one dimensional", True)
        report.add(f"{tag}/socle-two-sided",
                   "the socle span is a two-sided ideal (arrow products vanish)", True)

        qinv = ctx.quotient_inventory()
        qpairs = enumerate_stpairs(qinv)
        QH = hasse(qinv, qpairs)
        q_tau_pairs = [p for p in qpairs if p.is_tau_tilting]
        q_tt_sets = {frozenset(p.modules) for p in q_tau_pairs}
        nsets = compute_nsets(ctx)
        q = ctx.q_id()

        bad = []
        for r in inv.candidates():
            if r.id == q:
                continue
            b = ctx.bar_record(r.id)
            if b is None or ctx.lift_record(b) != r.id:
                bad.append(r.name)
        report.add(f"{tag}/bar-fixes-non-q",
                   "the socle quotient functor fixes every non-Q indecomposable",
                   not bad, f"moved: {bad[:3]}")

        src = full_subquiver(H, [inv.pair_label(p) for p in tau_pairs])

        if ctx.q_is_simple:
            vmap = {}
            all_have_q = all(q in p.modules for p in tau_pairs)
            for p in tau_pairs:
                img = bar_summands(ctx, frozenset(p.modules))
                qp = _pair_with_modules(q_tau_pairs, img)
                vmap[inv.pair_label(p)] = qinv.pair_label(qp) if qp else f"<missing {sorted(img)}>"
            dst = full_subquiver(QH, [qinv.pair_label(p) for p in q_tau_pairs])
            ok, wit = ((False, "a tau-tilting module misses Q") if not all_have_q
                       else _iso_along_map(src, dst, vmap))
            report.add(f"{tag}/simple-bijection",
                       "Q simple: the tau-tilt quivers agree after dropping Q", ok, wit)
        else:
            qbar = ctx.qbar_id
            qbar_amb = ctx.qbar_ambient_id()
            m1 = [p for p in tau_pairs if q not in p.modules and qbar_amb not in p.modules]
            m2 = [p for p in tau_pairs if q in p.modules and qbar_amb in p.modules]
            m3 = [p for p in tau_pairs if q in p.modules and qbar_amb not in p.modules]
            report.add(f"{tag}/no-qbar-without-q",
                       "no tau-tilting module contains Q/Soc(Q) but not Q",
                       len(m1) + len(m2) + len(m3) == len(tau_pairs))

            images: dict[frozenset, str] = {}
            collision = None
            for p in tau_pairs:
                img = bar_summands(ctx, frozenset(p.modules))
                if img in images:
                    collision = (inv.pair_label(p), images[img])
                images[img] = inv.pair_label(p)
            n_keep = set(nsets.keep)
            n_extend = set(nsets.extend)
            n_swap = set(nsets.swap)
            img_m1 = {bar_summands(ctx, frozenset(p.modules)) for p in m1}
            img_m2 = {bar_summands(ctx, frozenset(p.modules)) for p in m2}
            img_m3 = {bar_summands(ctx, frozenset(p.modules)) for p in m3}
            report.add(f"{tag}/split-bijections",
                       "the three tau-tilt families biject onto keep / extend / swap",
                       collision is None and img_m1 == n_keep and img_m2 == n_extend
                       and img_m3 == n_swap,
                       f"collision {collision}" if collision else "family image mismatch")

            target_pairs = [p for p in qpairs
                            if p.is_tau_tilting or frozenset(p.modules) in n_extend]
            dst = full_subquiver(QH, [qinv.pair_label(p) for p in target_pairs])
            vmap = {}
            for p in tau_pairs:
                img = bar_summands(ctx, frozenset(p.modules))
                qp = _pair_with_modules(qpairs, img)
                vmap[inv.pair_label(p)] = qinv.pair_label(qp) if qp else f"<missing {sorted(img)}>"
            ok, wit = _iso_along_map(src, dst, vmap)
            report.add(f"{tag}/tau-tilt-bijection",
                       "the tau-tilt quiver matches the quotient-side quiver, arrows both ways",
                       ok, wit)

            if ctx.qbar_rep.dims.get(ctx.socle_vertex, 0) > 0:
                report.add(f"{tag}/socle-factor-forces-empty",
                           "Q/Soc(Q) has the socle as composition factor, so the "
                           "boundary family is empty",
                           not nsets.extend, f"extend has {len(nsets.extend)} members")

            report.add(f"{tag}/no-tau-tilt-qbar-homless",
                       "no tau-tilting quotient module keeps the top summand yet "
                       "kills all maps to Q",
                       not any(qbar in mods and ctx.hom_set_to_q(mods) == 0
                               for mods in q_tt_sets))

            keep_ok = all(ctx.lift_set(mods) in tt_sets for mods in nsets.keep) and \
                all(bar_summands(ctx, frozenset(p.modules)) in n_keep for p in m1)
            report.add(f"{tag}/keep-cross-enumeration",
                       "modules without the top summand are tau-tilting over both algebras",
                       keep_ok)

            swap_ok = all(
                bar_summands(ctx, frozenset(p.modules)) in q_tt_sets
                and ctx.hom_set_to_q(bar_summands(ctx, frozenset(p.modules))) != 0
                for p in m3)
            swap_ok = swap_ok and all(
                (ctx.lift_set(mods - {qbar}) | {q}) in tt_sets for mods in nsets.swap)
            report.add(f"{tag}/swap-cross-enumeration",
                       "exchanging Q for the top summand preserves tau-tilting, both ways",
                       swap_ok)

        recon = set(reconstruct_tau_tilt(ctx, compute_nsets(ctx)))
        report.add(f"{tag}/reconstruction",
                   "tau-tilt of the ambient algebra rebuilds from the quotient families",
                   recon == tt_sets)

        insincere = [inv.pair_label(p) for p in tau_pairs
                     if not is_sincere(inv.sum_rep(p.modules))]
        report.add(f"{tag}/tau-tilt-sincere", "every tau-tilting module is sincere",
                   not insincere, f"insincere: {insincere[:3]}")

        surgery_labels = [qinv.pair_label(p) for p in nsets.surgery]
        W = surgery(QH, surgery_labels)
        vmap = {}
        broken = ""
        slabels = set(surgery_labels)
        for p in pairs:
            mods = frozenset(p.modules)
            img = bar_summands(ctx, mods)
            qp = _pair_with_modules(qpairs, img)
            if qp is None:
                broken = f"no quotient pair with the module part of {inv.pair_label(p)}"
                vmap[inv.pair_label(p)] = "<missing>"
                continue
            lbl = qinv.pair_label(qp)
            if q in mods and lbl in slabels:
                lbl = lbl + PLUS
            vmap[inv.pair_label(p)] = lbl
        ok, wit = _iso_along_map(H, W, vmap)
        report.add(f"{tag}/surgery-isomorphism",
                   "the support Hasse quiver is the subposet surgery of the quotient's",
                   ok and not broken, broken or wit)

    return report
