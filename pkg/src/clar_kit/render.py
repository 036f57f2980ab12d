"""Fixed-width text sketches of benzenoids, with Clar hexagons circled."""

from __future__ import annotations

from .benzenoid import BenzenoidGraph, dualist_tree, lattice_centers, spec_from_graph
from .clar import ClarCertificate


def _token(graph: BenzenoidGraph, h: int, cert: ClarCertificate | None) -> str:
    if cert is None:
        return "( )"
    if h in cert.clar_set:
        return "(O)"
    inside = sum(e in cert.witness.edges for e in graph.hexagon_edges(h))
    return f"({inside})"


def _legend(cert: ClarCertificate | None) -> list[str]:
    if cert is None:
        return []
    edges = " ".join(f"{u}-{v}" for u, v in sorted(cert.witness.edges))
    return [
        f"clar number: {cert.value}",
        f"clar set: {' '.join(map(str, cert.clar_set)) or '-'}",
        f"witness: {edges}",
    ]


def _render_tree(graph: BenzenoidGraph, cert: ClarCertificate | None) -> list[str]:
    tree = dualist_tree(graph)
    lines = ["tree mode (hexagons overlap in the plane)"]
    seen = {0}

    def walk(h: int, prefix: str, last: bool, top: bool) -> None:
        branch = "" if top else ("`- " if last else "+- ")
        lines.append(f"{prefix}{branch}{h} {_token(graph, h, cert)}")
        kids = [w for w in tree.adjacency[h] if w not in seen]
        seen.update(kids)
        child_prefix = prefix if top else prefix + ("   " if last else "|  ")
        for i, w in enumerate(kids):
            walk(w, child_prefix, i == len(kids) - 1, False)

    walk(0, "", True, True)
    return lines


def render_ascii(graph: BenzenoidGraph, cert: ClarCertificate | None = None) -> str:
    """Honeycomb sketch: one ``(.)`` cell per hexagon, ``(O)`` for Clar hexagons.

    Other cells show how many witness edges they contain.  Helicenes whose
    lattice placement overlaps are printed as an indented dualist tree.
    """
    centers, overlaps = lattice_centers(spec_from_graph(graph))
    if overlaps:
        return "\n".join(_render_tree(graph, cert) + _legend(cert)) + "\n"
    cells = {h: (r, 2 * (2 * q + r)) for h, (q, r) in centers.items()}
    top = min(r for r, _ in cells.values())
    left = min(x for _, x in cells.values())
    rows: dict[int, list[str]] = {}
    for h, (r, x) in cells.items():
        row = rows.setdefault(r - top, [])
        col = x - left
        if len(row) < col + 3:
            row.extend(" " * (col + 3 - len(row)))
        row[col:col + 3] = _token(graph, h, cert)
    lines = ["".join(rows.get(i, [])).rstrip() for i in range(max(rows) + 1)]
    return "\n".join(lines + _legend(cert)) + "\n"
