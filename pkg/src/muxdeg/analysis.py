"""Degree-based actor importance under three views of a multiplex network.

* aggregate:  flatten by edge-support union, then count neighbours
* per layer:  neighbour count on each layer separately
* multilayer: multidegree of the supra-adjacency, coupling included
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from . import tensor
from .errors import EmptyInput, InvalidArgument
from .network import ActorId, MultiplexNetwork
from .tensor import DegreeVector

DEFAULT_K = 20


@dataclass(frozen=True)
class RoleRecord:
    actor: ActorId
    role: str
    family: Optional[str] = None

    def label(self) -> str:
        """Display form, e.g. ``Caporegime Mistretta Family``."""
        return f"{self.role} {self.family} Family" if self.family else self.role


@dataclass(frozen=True)
class RankingEntry:
    rank: int
    actor: ActorId
    score: int
    role: Optional[RoleRecord] = None


@dataclass(frozen=True)
class DegreeRow:
    actor: ActorId
    multilayer: int
    aggregate: int
    layers: Dict[str, Optional[int]]
    role: Optional[RoleRecord] = None


@dataclass
class DegreeTable:
    """Per-actor scores; a layer cell is None when the actor is absent there."""

    layer_names: Tuple[str, ...]
    rows: List[DegreeRow] = field(default_factory=list)

    def row(self, actor: ActorId) -> DegreeRow:
        for r in self.rows:
            if r.actor == actor:
                return r
        raise KeyError(actor)

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class HistogramSeries:
    actor: ActorId
    values: Dict[str, Optional[int]]


def union_flatten(network: MultiplexNetwork) -> sp.csr_matrix:
    """Binary single-layer graph with an edge wherever any layer has one."""
    support = tensor.overlay_network(network, mode="binary")
    support.data[:] = 1
    return support


def approach1_aggregate_degrees(network: MultiplexNetwork) -> DegreeVector:
    return tensor.degree_vector(union_flatten(network), "binary", network.actors)


def approach2_per_layer_degrees(network: MultiplexNetwork) -> Dict[str, DegreeVector]:
    return {
        lid.name: tensor.degree_vector(tensor.layer_adjacency(network, lid), "binary")
        for lid in network.layers
    }


def approach3_multilayer_degrees(network: MultiplexNetwork) -> DegreeVector:
    return tensor.multidegree(network)


def rank_top_k(
    scores,
    k: int = DEFAULT_K,
    roles: Optional[Mapping[ActorId, RoleRecord]] = None,
) -> List[RankingEntry]:
    """Top ``k`` actors by descending score; ties go to the lower actor id.

    ``scores`` is a DegreeVector or a plain ``{actor: score}`` mapping.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")
    if isinstance(scores, DegreeVector):
        scores = scores.as_dict()
    roles = roles or {}
    ordered = sorted(scores.items(), key=lambda item: (-item[1], item[0]))[:k]
    return [
        RankingEntry(rank, actor, int(score), roles.get(actor))
        for rank, (actor, score) in enumerate(ordered, start=1)
    ]


def degree_table(
    network: MultiplexNetwork,
    roles: Optional[Mapping[ActorId, RoleRecord]] = None,
    layers: Optional[Sequence[str]] = None,
) -> DegreeTable:
    """Scores for every actor, ordered by multidegree rank."""
    layer_names = tuple(layers) if layers else tuple(l.name for l in network.layers)
    for name in layer_names:
        network.layer(name)
    roles = roles or {}
    multi = approach3_multilayer_degrees(network)
    agg = approach1_aggregate_degrees(network).as_dict()
    per_layer = {n: v.as_dict() for n, v in approach2_per_layer_degrees(network).items()}
    table = DegreeTable(layer_names)
    for entry in rank_top_k(multi, max(network.n_actors, 1)):
        a = entry.actor
        active = {lid.name for lid in network.presence_profile(a).active_layers}
        cells = {n: (per_layer[n][a] if n in active else None) for n in layer_names}
        table.rows.append(DegreeRow(a, entry.score, agg[a], cells, roles.get(a)))
    return table


def comparison_table(
    network: MultiplexNetwork,
    roles: Optional[Mapping[ActorId, RoleRecord]] = None,
    k: int = DEFAULT_K,
    layers: Optional[Sequence[str]] = None,
) -> DegreeTable:
    """Top ``k`` actors by multidegree with aggregate and per-layer columns."""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")
    if network.n_actors == 0:
        names = tuple(layers) if layers else tuple(l.name for l in network.layers)
        return DegreeTable(names)
    table = degree_table(network, roles, layers)
    del table.rows[k:]
    return table


def histogram_data(table: DegreeTable) -> List[HistogramSeries]:
    """One stacked-bar record per table row, in table order."""
    if not table.rows:
        raise EmptyInput("histogram needs at least one table row")
    out = []
    for r in table.rows:
        values: Dict[str, Optional[int]] = {"Multilayer": r.multilayer, "Aggregate": r.aggregate}
        values.update(r.layers)
        out.append(HistogramSeries(r.actor, values))
    return out


def approach_scores(network: MultiplexNetwork, approach: str, mode: str = "binary") -> DegreeVector:
    """Scores for ``aggregate``, ``multilayer`` or ``layer:<name>``.

    ``mode="weighted"`` swaps neighbour counts for weight sums: strength on a
    layer, weighted overlay for the aggregate, and the weighted projection
    (coupling included) for the multilayer view.
    """
    tensor._check_mode(mode)
    if approach.startswith("layer:"):
        adj = tensor.layer_adjacency(network, approach[len("layer:"):])
        return tensor.degree_vector(adj, mode)
    if approach == "aggregate":
        if mode == "binary":
            return approach1_aggregate_degrees(network)
        return tensor.degree_vector(tensor.overlay_network(network, "weighted"), "weighted", network.actors)
    if approach == "multilayer":
        if mode == "binary":
            return approach3_multilayer_degrees(network)
        proj = tensor.project_single_layer(tensor.assemble_supra(network))
        return tensor.degree_vector(proj, "weighted", network.actors)
    raise InvalidArgument(f"unknown approach {approach!r}")
