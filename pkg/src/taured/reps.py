"""Right modules over a bound quiver algebra.

A representation assigns a vector space to each vertex and a matrix to each
arrow.  Vectors are rows and act on the left, so a path ``a b`` acts by
``M_a @ M_b``.  The translate ``tau`` is computed as the kernel of the
Nakayama image of a minimal projective presentation:

    0 -> tau M -> nu P1 -> nu P0   (exact),

which keeps the whole computation inside right modules.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import Algebra, Vec
from .errors import AlgebraMismatch, QuotientMismatch, UnknownVertex, ZeroModule
from .linalg import (
    Matrix,
    is_invertible,
    left_nullspace,
    nullspace,
    rank_and_rowbasis,
    solve_left,
)


class Representation:
    """A right module: per-vertex spaces plus arrow-indexed matrices."""

    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra: Algebra, dims: dict[str, int], maps: dict[str, Matrix],
                 check: bool = False):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        self.maps = {}
        field = algebra.field
        for a in algebra.arrows:
            m = maps.get(a.name)
            if m is None:
                m = Matrix.zeros(self.dims[a.src], self.dims[a.tgt], field)
            if (m.rows, m.cols) != (self.dims[a.src], self.dims[a.tgt]):
                raise ValueError(f"map for arrow {a.name} has wrong shape")
            self.maps[a.name] = m
        if check:
            self.assert_valid()

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def word_action(self, word) -> Matrix:
        """Matrix of a path acting on this module (empty word not allowed)."""
        m = self.maps[word[0]]
        for name in word[1:]:
            m = m @ self.maps[name]
        return m

    def element_action(self, vec: Vec, src: str, tgt: str) -> Matrix:
        """Action of an algebra element supported in e_src . A . e_tgt."""
        field = self.algebra.field
        out = Matrix.zeros(self.dims[src], self.dims[tgt], field)
        for i, c in vec.items():
            b = self.algebra.basis[i]
            if b.src != src or b.tgt != tgt:
                raise ValueError("element does not lie in the requested slice")
            if b.is_idempotent:
                out = out + Matrix.identity(self.dims[src], field).scale(c)
            else:
                out = out + self.word_action(b.word).scale(c)
        return out

    def assert_valid(self) -> None:
        """Check the defining equations of the algebra on this assignment."""
        alg = self.algebra
        if alg.relations is not None:
            for r in alg.relations:
                first = r.terms[0][1]
                src = alg.quiver.arrow(first[0]).src
                tgt = alg.quiver.arrow(first[-1]).tgt
                acc = Matrix.zeros(self.dims[src], self.dims[tgt], alg.field)
                for coeff, word in r.terms:
                    acc = acc + self.word_action(word).scale(alg.field.from_fraction(coeff))
                if not acc.is_zero():
                    raise ValueError("representation violates a relation")
        else:
            # table algebra: products of basis words must match the table
            for (i, j), prod in [((i, j), alg.mult.get((i, j)))
                                 for i in range(alg.dim) for j in range(alg.dim)]:
                bi, bj = alg.basis[i], alg.basis[j]
                if bi.tgt != bj.src:
                    continue
                lhs = self.element_action({i: alg.field.one}, bi.src, bi.tgt) @ \
                    self.element_action({j: alg.field.one}, bj.src, bj.tgt)
                rhs = self.element_action(prod or {}, bi.src, bj.tgt)
                if not (lhs - rhs).is_zero():
                    raise ValueError("representation violates the multiplication table")

    def __repr__(self):
        return f"Rep{self.dim_vector}"


@dataclass
class Morphism:
    source: Representation
    target: Representation
    blocks: dict[str, Matrix]

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.blocks.values())

    def compose(self, other: "Morphism") -> "Morphism":
        """self followed by other (source of other = target of self)."""
        blocks = {v: self.blocks[v] @ other.blocks[v] for v in self.blocks}
        return Morphism(self.source, other.target, blocks)

    def verify(self) -> bool:
        M, N = self.source, self.target
        for a in M.algebra.arrows:
            lhs = M.maps[a.name] @ self.blocks[a.tgt]
            rhs = self.blocks[a.src] @ N.maps[a.name]
            if not (lhs - rhs).is_zero():
                return False
        return True


def zero_rep(algebra: Algebra) -> Representation:
    return Representation(algebra, {}, {})


def simple(algebra: Algebra, v: str) -> Representation:
    if v not in algebra.vertices:
        raise UnknownVertex(v)
    return Representation(algebra, {v: 1}, {})


def projective(algebra: Algebra, v: str) -> Representation:
    """P_v: basis at w = residue paths v -> w; arrows act by right concatenation."""
    if v not in algebra.vertices:
        raise UnknownVertex(v)
    rows_at = {w: algebra.basis_by_ends(v, w) for w in algebra.vertices}
    dims = {w: len(rows_at[w]) for w in algebra.vertices}
    field = algebra.field
    maps = {}
    for a in algebra.arrows:
        m = Matrix.zeros(dims[a.src], dims[a.tgt], field)
        col_pos = {b: k for k, b in enumerate(rows_at[a.tgt])}
        ar = algebra.element_of_arrow(a.name)
        for r, bidx in enumerate(rows_at[a.src]):
            prod = algebra.multiply({bidx: field.one}, ar)
            for k, c in prod.items():
                m.data[r][col_pos[k]] = c
        maps[a.name] = m
    return Representation(algebra, dims, maps)


def injective(algebra: Algebra, v: str) -> Representation:
    """I_v: basis at w = residue paths w -> v; arrows act by dualized left concatenation."""
    if v not in algebra.vertices:
        raise UnknownVertex(v)
    rows_at = {w: algebra.basis_by_ends(w, v) for w in algebra.vertices}
    dims = {w: len(rows_at[w]) for w in algebra.vertices}
    field = algebra.field
    maps = {}
    for a in algebra.arrows:
        m = Matrix.zeros(dims[a.src], dims[a.tgt], field)
        col_pos = {b: k for k, b in enumerate(rows_at[a.tgt])}
        ar = algebra.element_of_arrow(a.name)
        # (q^* . a)(x) = q^*(a x): entry at (q, x) is the q-coefficient of a.x
        for r, q in enumerate(rows_at[a.src]):
            for x in rows_at[a.tgt]:
                prod = algebra.multiply(ar, {x: field.one})
                c = prod.get(q)
                if c:
                    m.data[r][col_pos[x]] = c
        maps[a.name] = m
    return Representation(algebra, dims, maps)


def direct_sum(parts: list[Representation], algebra: Algebra | None = None) -> Representation:
    if not parts:
        if algebra is None:
            raise ValueError("empty direct sum needs an explicit algebra")
        return zero_rep(algebra)
    alg = parts[0].algebra
    for p in parts:
        if p.algebra is not alg:
            raise AlgebraMismatch("direct sum across different algebras")
    dims = {v: sum(p.dims[v] for p in parts) for v in alg.vertices}
    field = alg.field
    maps = {}
    for a in alg.arrows:
        m = Matrix.zeros(dims[a.src], dims[a.tgt], field)
        ro = co = 0
        for p in parts:
            blk = p.maps[a.name]
            for i in range(blk.rows):
                for j in range(blk.cols):
                    m.data[ro + i][co + j] = blk.data[i][j]
            ro += p.dims[a.src]
            co += p.dims[a.tgt]
        maps[a.name] = m
    return Representation(alg, dims, maps)


def hom_basis(M: Representation, N: Representation) -> list[Morphism]:
    """A basis of the space of intertwiners M -> N."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("hom between modules over different algebras")
    alg = M.algebra
    field = alg.field
    offsets = {}
    total = 0
    for v in alg.vertices:
        offsets[v] = total
        total += M.dims[v] * N.dims[v]
    if total == 0:
        return []
    rows = []
    for a in alg.arrows:
        s, t = a.src, a.tgt
        Ma, Na = M.maps[a.name], N.maps[a.name]
        for i in range(M.dims[s]):
            for j in range(N.dims[t]):
                row = [field.zero] * total
                # (M_a F_t)[i][j] = sum_k M_a[i][k] F_t[k][j]
                for k in range(M.dims[t]):
                    c = Ma.data[i][k]
                    if c:
                        row[offsets[t] + k * N.dims[t] + j] = row[offsets[t] + k * N.dims[t] + j] + c
                # (F_s N_a)[i][j] = sum_l F_s[i][l] N_a[l][j]
                for l in range(N.dims[s]):
                    c = Na.data[l][j]
                    if c:
                        pos = offsets[s] + i * N.dims[s] + l
                        row[pos] = row[pos] - c
                rows.append(row)
    if rows:
        sols = nullspace(Matrix.from_rows(rows, total, field))
    else:
        sols = Matrix.identity(total, field)
    out = []
    for srow in sols.data:
        blocks = {}
        for v in alg.vertices:
            m = Matrix.zeros(M.dims[v], N.dims[v], field)
            for i in range(M.dims[v]):
                for j in range(N.dims[v]):
                    m.data[i][j] = srow[offsets[v] + i * N.dims[v] + j]
            blocks[v] = m
        out.append(Morphism(M, N, blocks))
    return out


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_basis(M, N))


def is_iso(M: Representation, N: Representation) -> bool:
    """Isomorphism test with a verified invertible witness on success.

    Searches random small-integer combinations of a Hom basis, then an
    exhaustive grid; a True answer always carries a checked witness, so false
    positives cannot occur.
    """
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("iso test across different algebras")
    if M.dim_vector != N.dim_vector:
        return False
    if M.total_dim == 0:
        return True
    homs = hom_basis(M, N)
    if not homs:
        return False

    def witness_ok(coeffs) -> bool:
        field = M.algebra.field
        blocks = {}
        for v in M.algebra.vertices:
            m = Matrix.zeros(M.dims[v], N.dims[v], field)
            for c, f in zip(coeffs, homs):
                if c:
                    m = m + f.blocks[v].scale(field.from_int(c))
            blocks[v] = m
        if not all(is_invertible(blocks[v]) for v in M.algebra.vertices):
            return False
        return Morphism(M, N, blocks).verify()

    h = len(homs)
    if h == 1 and witness_ok((1,)):
        return True
    rng = random.Random(0x5EED)
    for bound in (1, 2, 4, 8):
        for _ in range(16):
            coeffs = tuple(rng.randint(-bound, bound) for _ in range(h))
            if witness_ok(coeffs):
                return True
    if 5 ** h <= 200_000:
        from itertools import product

        for coeffs in product(range(-2, 3), repeat=h):
            if witness_ok(coeffs):
                return True
    return False


def radical_subspaces(M: Representation) -> dict[str, Matrix]:
    """Rows spanning M.rad at each vertex (sum of arrow images)."""
    alg = M.algebra
    out = {}
    for v in alg.vertices:
        mats = [M.maps[a.name] for a in alg.arrows if a.tgt == v]
        stacked = Matrix.stack(mats, M.dims[v], alg.field) if mats else \
            Matrix.zeros(0, M.dims[v], alg.field)
        _, basis = rank_and_rowbasis(stacked)
        out[v] = basis
    return out


def top_lifts(M: Representation) -> list[tuple[str, list]]:
    """Vectors in M whose classes form a basis of M / M.rad, as (vertex, row)."""
    alg = M.algebra
    rad = radical_subspaces(M)
    out = []
    for v in alg.vertices:
        d = M.dims[v]
        if d == 0:
            continue
        red, pivots = rad[v].rref()
        free = [c for c in range(d) if c not in pivots]
        for c in free:
            row = [alg.field.zero] * d
            row[c] = alg.field.one
            out.append((v, row))
    return out


class ProjSum:
    """Direct sum of projectives P_{v_i} with per-slot path bookkeeping."""

    def __init__(self, algebra: Algebra, vertices: list[str]):
        self.algebra = algebra
        self.vertices = list(vertices)
        self.slot_paths = {}  # (slot, vertex) -> list of basis indices
        self.offsets = {}     # (slot, vertex) -> coordinate offset at vertex
        dims = {v: 0 for v in algebra.vertices}
        for s, pv in enumerate(self.vertices):
            for w in algebra.vertices:
                paths = algebra.basis_by_ends(pv, w)
                self.slot_paths[(s, w)] = paths
                self.offsets[(s, w)] = dims[w]
                dims[w] += len(paths)
        self.rep = direct_sum([projective(algebra, v) for v in self.vertices], algebra)
        assert self.rep.dims == dims

    def generator_coord(self, slot: int) -> tuple[str, int]:
        """Vertex and coordinate of the slot generator e_{v_slot}."""
        v = self.vertices[slot]
        paths = self.slot_paths[(slot, v)]
        k = paths.index(self.algebra.e_idx[v])
        return v, self.offsets[(slot, v)] + k


class InjSum:
    """Direct sum of injectives I_{v_i} with per-slot path bookkeeping."""

    def __init__(self, algebra: Algebra, vertices: list[str]):
        self.algebra = algebra
        self.vertices = list(vertices)
        self.slot_paths = {}
        self.offsets = {}
        dims = {v: 0 for v in algebra.vertices}
        for s, iv in enumerate(self.vertices):
            for w in algebra.vertices:
                paths = algebra.basis_by_ends(w, iv)
                self.slot_paths[(s, w)] = paths
                self.offsets[(s, w)] = dims[w]
                dims[w] += len(paths)
        self.rep = direct_sum([injective(algebra, v) for v in self.vertices], algebra)
        assert self.rep.dims == dims


@dataclass
class PresentationMap:
    """Minimal projective presentation P1 -> P0 -> M -> 0.

    ``entries[i][j]`` is an algebra element in e_{p0[j]} . A . e_{p1[i]},
    the (i, j) block acting by left multiplication.
    """

    p1_vertices: list[str]
    p0_vertices: list[str]
    entries: list[list[Vec]]

    def all_entries_in_radical(self, algebra: Algebra) -> bool:
        for row in self.entries:
            for vec in row:
                for bidx, c in vec.items():
                    if algebra.basis[bidx].is_idempotent and c:
                        return False
        return True


def projective_cover_map(M: Representation) -> tuple[ProjSum, Morphism]:
    lifts = top_lifts(M)
    alg = M.algebra
    ps = ProjSum(alg, [v for v, _ in lifts])
    field = alg.field
    blocks = {w: Matrix.zeros(ps.rep.dims[w], M.dims[w], field) for w in alg.vertices}
    for slot, (v, row) in enumerate(lifts):
        for w in alg.vertices:
            paths = ps.slot_paths[(slot, w)]
            off = ps.offsets[(slot, w)]
            for k, bidx in enumerate(paths):
                b = alg.basis[bidx]
                if b.is_idempotent:
                    img = row
                else:
                    act = M.word_action(b.word)
                    img = Matrix.from_rows([row], M.dims[v], field) @ act
                    img = img.data[0]
                blocks[w].data[off + k] = list(img)
    f = Morphism(ps.rep, M, blocks)
    return ps, f


def kernel_of(f: Morphism) -> tuple[Representation, Morphism]:
    """Kernel subrepresentation with its inclusion."""
    M = f.source
    alg = M.algebra
    field = alg.field
    bases = {v: left_nullspace(f.blocks[v]) for v in alg.vertices}
    dims = {v: bases[v].rows for v in alg.vertices}
    maps = {}
    for a in alg.arrows:
        moved = bases[a.src] @ M.maps[a.name]
        sol = solve_left(bases[a.tgt], moved)
        if sol is None:
            raise AssertionError("kernel is not arrow-stable; morphism invalid")
        maps[a.name] = sol
    K = Representation(alg, dims, maps)
    incl = Morphism(K, M, {v: bases[v] for v in alg.vertices})
    return K, incl


def minimal_presentation(M: Representation) -> PresentationMap:
    if M.is_zero():
        raise ZeroModule("zero module has no minimal presentation here")
    alg = M.algebra
    p0, cover = projective_cover_map(M)
    # cover must be onto
    for v in alg.vertices:
        if rank_and_rowbasis(cover.blocks[v])[0] != M.dims[v]:
            raise AssertionError("projective cover fails to surject")
    K, incl = kernel_of(cover)
    if K.is_zero():
        pres = PresentationMap([], p0.vertices, [])
        return pres
    p1, kcover = projective_cover_map(K)
    comp = kcover.compose(incl)  # P1 -> P0
    entries = []
    for slot in range(len(p1.vertices)):
        v, coord = p1.generator_coord(slot)
        image_row = comp.blocks[v].data[coord]
        row_entries = []
        for j in range(len(p0.vertices)):
            paths = p0.slot_paths[(j, v)]
            off = p0.offsets[(j, v)]
            vec: Vec = {}
            for k, bidx in enumerate(paths):
                c = image_row[off + k]
                if c:
                    vec[bidx] = c
            row_entries.append(vec)
        entries.append(row_entries)
    pres = PresentationMap(p1.vertices, p0.vertices, entries)
    if not pres.all_entries_in_radical(alg):
        raise AssertionError("presentation entries not in the radical; cover not minimal")
    return pres


def nakayama_map(algebra: Algebra, pres: PresentationMap) -> tuple[InjSum, InjSum, Morphism]:
    """nu P1 -> nu P0 induced by the presentation entries."""
    field = algebra.field
    s1 = InjSum(algebra, pres.p1_vertices)
    s0 = InjSum(algebra, pres.p0_vertices)
    blocks = {}
    for z in algebra.vertices:
        m = Matrix.zeros(s1.rep.dims[z], s0.rep.dims[z], field)
        for i in range(len(pres.p1_vertices)):
            qs = s1.slot_paths[(i, z)]
            qoff = s1.offsets[(i, z)]
            for j in range(len(pres.p0_vertices)):
                u = pres.entries[i][j]
                if not u:
                    continue
                xs = s0.slot_paths[(j, z)]
                xoff = s0.offsets[(j, z)]
                for xi, x in enumerate(xs):
                    prod = algebra.multiply({x: field.one}, u)
                    for q_k, q in enumerate(qs):
                        c = prod.get(q)
                        if c:
                            m.data[qoff + q_k][xoff + xi] = c
        blocks[z] = m
    return s1, s0, Morphism(s1.rep, s0.rep, blocks)


def tau(M: Representation) -> Representation:
    """Auslander-Reiten translate; zero exactly on projectives."""
    if M.is_zero():
        return zero_rep(M.algebra)
    pres = minimal_presentation(M)
    if not pres.p1_vertices:
        return zero_rep(M.algebra)
    _, _, nu = nakayama_map(M.algebra, pres)
    K, _ = kernel_of(nu)
    return K


def in_fac(N: Representation, M: Representation) -> bool:
    """Is N a factor of a finite direct sum of copies of M?

    Decided exactly: the joint image of a Hom(M, N) basis must fill N at
    every vertex.
    """
    if N.algebra is not M.algebra:
        raise AlgebraMismatch("Fac test across different algebras")
    if N.is_zero():
        return True
    homs = hom_basis(M, N)
    alg = M.algebra
    for v in alg.vertices:
        if N.dims[v] == 0:
            continue
        mats = [f.blocks[v] for f in homs]
        stacked = Matrix.stack(mats, N.dims[v], alg.field) if mats else \
            Matrix.zeros(0, N.dims[v], alg.field)
        if rank_and_rowbasis(stacked)[0] != N.dims[v]:
            return False
    return True


def module_times_ideal(M: Representation, slices) -> dict[str, Matrix]:
    """Rows spanning M . J at each vertex, J given by Peirce slices."""
    alg = M.algebra
    out = {}
    for v in alg.vertices:
        rows = []
        for (u, w, vecs) in slices:
            if w != v:
                continue
            for vec in vecs:
                act = M.element_action(vec, u, w)
                rows.append(act)
        stacked = Matrix.stack(rows, M.dims[v], alg.field) if rows else \
            Matrix.zeros(0, M.dims[v], alg.field)
        _, basis = rank_and_rowbasis(stacked)
        out[v] = basis
    return out


def _quotient_coords(space_dim: int, sub: Matrix, field):
    """Projection data for K^d / rowspace(sub).

    Returns (proj, lift): proj maps ambient rows to quotient coordinates,
    lift embeds quotient coordinates as coset representatives.
    """
    red, pivots = sub.rref()
    free = [c for c in range(space_dim) if c not in pivots]
    proj = Matrix.zeros(space_dim, len(free), field)
    # reduce each unit vector modulo the subspace, read free coordinates
    for d in range(space_dim):
        v = [field.zero] * space_dim
        v[d] = field.one
        for i, pc in enumerate(pivots):
            if v[pc]:
                f = v[pc]
                for j in range(space_dim):
                    if red.data[i][j]:
                        v[j] = v[j] - f * red.data[i][j]
        for k, c in enumerate(free):
            proj.data[d][k] = v[c]
    lift = Matrix.zeros(len(free), space_dim, field)
    for k, c in enumerate(free):
        lift.data[k][c] = field.one
    return proj, lift


def bar(M: Representation, quotient: Algebra) -> Representation:
    """M / (M . J) as a module over the quotient algebra A/J."""
    if quotient.parent is not M.algebra:
        raise QuotientMismatch("quotient algebra does not come from this module's algebra")
    alg = M.algebra
    field = alg.field
    mj = module_times_ideal(M, quotient.ideal_slices)
    proj = {}
    lift = {}
    dims = {}
    for v in alg.vertices:
        p, l = _quotient_coords(M.dims[v], mj[v], field)
        proj[v], lift[v] = p, l
        dims[v] = p.cols
    qdims = {v: dims.get(v, 0) for v in quotient.vertices}
    for v in alg.vertices:
        if v not in quotient.vertices and dims[v] != 0:
            raise QuotientMismatch("quotient module lives on a killed vertex")
    maps = {}
    for a in quotient.arrows:
        maps[a.name] = lift[a.src] @ M.maps[a.name] @ proj[a.tgt]
    return Representation(quotient, qdims, maps)


def inflate(M: Representation) -> Representation:
    """View a module over a quotient algebra as a module over the parent."""
    quotient = M.algebra
    parent = quotient.parent
    if parent is None:
        raise QuotientMismatch("module's algebra is not a quotient")
    dims = {v: M.dims.get(v, 0) for v in parent.vertices}
    field = parent.field
    maps = {}
    for a in parent.arrows:
        old_idx = parent.arrow_idx[a.name]
        image = quotient.projection[old_idx]
        m = Matrix.zeros(dims[a.src], dims[a.tgt], field)
        for k, c in image.items():
            b = quotient.basis[k]
            m = m + M.element_action({k: field.one}, b.src, b.tgt).scale(c)
        maps[a.name] = m
    return Representation(parent, dims, maps)


def is_sincere(M: Representation) -> bool:
    """Every vertex carries a composition factor (all dim-vector entries > 0)."""
    return all(d > 0 for d in M.dims.values())
