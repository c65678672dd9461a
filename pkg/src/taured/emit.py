"""DOT and JSON output for inventories, pair lists and poset quivers."""

from __future__ import annotations

from .tilting import Inventory, PosetQuiver, STPair


def emit_dot(pq: PosetQuiver, double_border: set[str] | None = None,
             highlight: set[str] | None = None, ascii_labels: bool = False,
             name: str = "hasse") -> str:
    """A DOT digraph with deterministic vertex and edge order.

    Vertices in ``double_border`` get two peripheries, vertices in
    ``highlight`` are filled red.  Labels join summand names with a direct-sum
    sign (ASCII ``+`` on request).
    """
    double_border = double_border or set()
    highlight = highlight or set()
    joiner = "+" if ascii_labels else "⊕"
    lines = [f"digraph {name} {{"]
    for lbl in sorted(pq.labels):
        shown = lbl if lbl == "0" else lbl.replace("+", joiner)
        attrs = [f'label="{shown}"']
        if lbl in double_border:
            attrs.append("peripheries=2")
        if lbl in highlight:
            attrs.append("style=filled")
            attrs.append("fillcolor=red")
        lines.append(f'  "{lbl}" [{", ".join(attrs)}];')
    for s, t in sorted(pq.edge_labels()):
        lines.append(f'  "{s}" -> "{t}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def json_payload(name: str, inv: Inventory, pairs: list[STPair],
                 pq: PosetQuiver | None) -> dict:
    """The stable JSON schema: algebra, indecomposables, stpairs, hasse."""
    pair_index = {p.key(): i for i, p in enumerate(pairs)}
    indecs = []
    for r in inv.records:
        indecs.append({
            "id": r.id,
            "name": r.name,
            "dim_vector": list(r.dim_vector),
        })
    stpairs = []
    for i, p in enumerate(pairs):
        stpairs.append({
            "id": i,
            "module_summands": sorted(p.modules),
            "support_vertices": sorted(p.supports),
            "is_tau_tilting": p.is_tau_tilting,
        })
    edges = []
    if pq is not None:
        by_label = {inv.pair_label(p): i for i, p in enumerate(pairs)}
        for s, t in sorted(pq.edge_labels()):
            edges.append([by_label[s], by_label[t]])
    return {
        "algebra": name,
        "indecomposables": indecs,
        "stpairs": stpairs,
        "hasse": {"edges": edges},
    }
