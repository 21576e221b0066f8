"""Matplotlib renderings for report output: automaton graphs and closure
length histograms, written to image files next to the textual output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .engine import ClosureResult
from .nfa import Nfa


def render_nfa(automaton: Nfa, path: str | Path) -> Path:
    """Draw the automaton as a labeled digraph and save it to path."""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(automaton.num_states))
    edge_labels: dict[tuple[int, int], list[str]] = {}
    for q, label, r in automaton.transitions:
        text = "ε" if label is None else label
        edge_labels.setdefault((q, r), []).append(text)
        graph.add_edge(q, r)
    pos = nx.spring_layout(graph, seed=0)
    fig, ax = plt.subplots(figsize=(max(6, automaton.num_states ** 0.5 * 2),) * 2)
    ordinary = [q for q in graph.nodes if q not in automaton.accepting]
    nx.draw_networkx_nodes(
        graph, pos, nodelist=ordinary, node_color="lightsteelblue", ax=ax
    )
    nx.draw_networkx_nodes(
        graph,
        pos,
        nodelist=sorted(automaton.accepting),
        node_color="lightgreen",
        linewidths=2,
        edgecolors="darkgreen",
        ax=ax,
    )
    nx.draw_networkx_nodes(
        graph,
        pos,
        nodelist=sorted(automaton.initial),
        node_color="none",
        linewidths=2,
        edgecolors="black",
        ax=ax,
    )
    nx.draw_networkx_labels(graph, pos, font_size=8, ax=ax)
    nx.draw_networkx_edges(graph, pos, connectionstyle="arc3,rad=0.1", ax=ax)
    nx.draw_networkx_edge_labels(
        graph,
        pos,
        edge_labels={k: ",".join(sorted(v)) for k, v in edge_labels.items()},
        font_size=7,
        ax=ax,
    )
    ax.set_axis_off()
    out = Path(path)
    fig.savefig(out, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return out


def render_closure_histogram(result: ClosureResult, path: str | Path) -> Path:
    """Histogram of member lengths in a bounded closure, saved to path."""
    lengths = sorted(len(w) for w in result.members)
    fig, ax = plt.subplots(figsize=(7, 4))
    bins = range(min(lengths), max(lengths) + 2)
    ax.hist(lengths, bins=bins, color="steelblue", edgecolor="black", align="left")
    ax.set_xlabel("member length")
    ax.set_ylabel("count")
    ax.set_title(
        f"closure of {result.seed} (bound {result.bound}, {len(result.members)} members)"
    )
    out = Path(path)
    fig.savefig(out, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return out
