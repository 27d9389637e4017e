"""Rich rendering of degeneration posets for the terminal."""

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ..strata import PosetDag, covering_degree, symmetry_coefficient

console = Console()

# column key -> (header, style, justify)
STRATUM_COLUMNS = {
    "label": ("Label", "cyan", "left"),
    "dimension": ("n", "white", "right"),
    "b": ("b", "white", "right"),
    "invdim": ("Invariants", "white", "right"),
    "degree": ("Covering degree", "green", "right"),
}


def print_header(title: str, subtitle: str = "") -> None:
    console.print()
    console.rule(f"[bold cyan]{title}[/bold cyan]", align="left")
    console.print(f"[dim]{subtitle}[/dim]\n" if subtitle else "")


def stratum_rows(dag: PosetDag) -> list[dict[str, str]]:
    """One row per node; empty strata carry no covering degree."""
    rows = []
    for node in dag.nodes:
        label = node.label
        rows.append(
            {
                "label": f"{label} (empty)" if node.empty else str(label),
                "dimension": str(node.dimension),
                "b": str(symmetry_coefficient(label)),
                "invdim": str(label.invariant_dim),
                "degree": "-" if node.empty else str(covering_degree(label)),
            }
        )
    return rows


def poset_counts(dag: PosetDag) -> dict[str, int]:
    solid = len(dag.solid_edges())
    return {
        "Strata": len(dag.labels()),
        "Empty": len(dag.nodes) - len(dag.labels()),
        "Edges": solid,
        "Dashed edges": len(dag.edges) - solid,
    }


def print_summary_panel(counts: dict[str, int], title: str = "Summary") -> None:
    summary_text = Text()
    for i, (key, value) in enumerate(counts.items()):
        if i > 0:
            summary_text.append("\n")
        summary_text.append(f"{key}: ", style="bold")
        summary_text.append(str(value), style="bold cyan" if value else "dim")

    console.print(Panel(summary_text, title=f"[bold]{title}[/bold]", border_style="green"))
    console.print()


def print_stratification(dag: PosetDag) -> None:
    """
    Header, a table of strata ordered as in the poset (largest dimension
    first) and a panel with node and edge counts.
    """
    title = "Gr" if dag.family == "A" else "sGr"
    print_header(f"{title}({dag.N},{dag.d})", f"{dag.family} stratification, N(d-N) = {dag.N * (dag.d - dag.N)}")

    table = Table(show_lines=False)
    for header, style, justify in STRATUM_COLUMNS.values():
        table.add_column(header, style=style, justify=justify, overflow="fold")
    for row in stratum_rows(dag):
        table.add_row(*(row[key] for key in STRATUM_COLUMNS))
    console.print(table)
    console.print()

    print_summary_panel(poset_counts(dag))
