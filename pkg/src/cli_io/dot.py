"""DOT rendering of degeneration posets: one rank per dimension, arrows toward smaller strata."""

from itertools import groupby

from graphviz import Digraph

from ..strata import PosetDag


def poset_to_dot(dag: PosetDag) -> str:
    title = "Gr" if dag.family == "A" else "sGr"
    dot = Digraph(name=f"{title}_{dag.N}_{dag.d}", comment=f"{dag.family} stratification of {title}({dag.N},{dag.d})")
    dot.attr(rankdir="TB")
    dot.attr("node", shape="box", fontname="Helvetica")

    ordered = sorted(range(len(dag.nodes)), key=lambda i: -dag.nodes[i].dimension)
    for dimension, members in groupby(ordered, key=lambda i: dag.nodes[i].dimension):
        with dot.subgraph(name=f"dim_{dimension}") as rank:
            rank.attr(rank="same")
            for i in members:
                node = dag.nodes[i]
                style = {"style": "dashed", "color": "gray"} if node.empty else {}
                rank.node(f"n{i}", str(node.label), **style)

    for edge in dag.edges:
        style = {"style": "dashed"} if edge.dashed else {}
        dot.edge(f"n{edge.parent}", f"n{edge.child}", **style)
    return dot.source
