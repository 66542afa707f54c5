"""DOT output for order diagrams (lattices and congruence lattices)."""

from __future__ import annotations


def _esc(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def hasse_dot(labels, cover_pairs, title: str = "L") -> str:
    """Hasse diagram as DOT text: edges point upward along covers."""
    lines = [f'digraph "{_esc(title)}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for lab in labels:
        lines.append(f'  "{_esc(lab)}";')
    for a, b in sorted(cover_pairs):
        lines.append(f'  "{_esc(a)}" -> "{_esc(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_dot(lat) -> str:
    pairs = [(lat.labels[i], lat.labels[j]) for i, j in lat.cover_pairs]
    return hasse_dot(lat.labels, pairs, title=lat.name or "L")


def con_dot(con) -> str:
    """Hasse diagram of a ConLattice, nodes labelled by block notation."""
    base_labels = con.base.labels
    names = [m.render(base_labels) for m in con.members]
    order = con.order
    m = len(con.members)
    pairs = []
    for i in range(m):
        for j in range(m):
            if i != j and (order[i] >> j) & 1:
                between = False
                for k in range(m):
                    if k in (i, j):
                        continue
                    if (order[i] >> k) & 1 and (order[k] >> j) & 1:
                        between = True
                        break
                if not between:
                    pairs.append((names[i], names[j]))
    title = f"Con({con.base.name})" if con.base.name else "Con"
    return hasse_dot(names, pairs, title=title)
