"""
Graphviz DOT rendering of the Hasse diagram of a poset of layers.
"""

from torarr.layers.poset import LayerPoset


def hasse_dot(P: LayerPoset, name: str = "layers") -> str:
    """
    DOT digraph of the cover relations, bottom to top, one rank per row.

    Hypertori are labeled H1..Hn, the other layers r<rank>.<position>.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for rank, group in enumerate(P.ranks):
        members = " ".join(f"n{i};" for i in group)
        lines.append(f"  {{ rank=same; {members} }}")
    for i in range(len(P)):
        lines.append(f'  n{i} [label="{P.describe(i)}"];')
    for a, b in P.covers():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
