"""In-memory multiplex network: actors, named layers, weighted intralayer edges.

Every registered actor is replicated on every layer and coupled to its own
counterparts with unit weight (categorical coupling). Whether an actor is
actually *active* on a layer is a reporting question answered by
:meth:`MultiplexNetwork.presence_profile`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Tuple

from .errors import DuplicateLayer, InvalidWeight, NotFound, SelfLoopForbidden

log = logging.getLogger(__name__)

ActorId = int


@dataclass(frozen=True)
class LayerId:
    index: int
    name: str


@dataclass(frozen=True)
class EdgeRecord:
    layer: LayerId
    u: ActorId
    v: ActorId
    weight: int


@dataclass(frozen=True)
class PresenceProfile:
    actor: ActorId
    active_layers: FrozenSet[LayerId]


class MultiplexNetwork:
    """Multiplex network with one aspect and categorical interlayer coupling.

    Built by calling :meth:`add_layer` and :meth:`add_edge`; once built it is
    only read. Actor ids are arbitrary non-negative integers and the fixed
    actor ordering used by matrix code is ascending id.
    """

    coupling_weight = 1

    def __init__(self):
        self._layers: List[LayerId] = []
        self._by_name: Dict[str, LayerId] = {}
        # per layer: actor -> {neighbour: weight}
        self._adj: List[Dict[ActorId, Dict[ActorId, int]]] = []
        self._actors: set = set()
        self.warnings: List[str] = []

    # -- construction -----------------------------------------------------

    def add_layer(self, name: str) -> LayerId:
        if not isinstance(name, str) or not name:
            raise ValueError("layer name must be a non-empty string")
        if name in self._by_name:
            raise DuplicateLayer(f"layer {name!r} already registered")
        layer = LayerId(len(self._layers), name)
        self._layers.append(layer)
        self._by_name[name] = layer
        self._adj.append({})
        return layer

    def add_actor(self, actor: ActorId) -> None:
        if isinstance(actor, bool) or not isinstance(actor, int) or actor < 0:
            raise ValueError(f"actor id must be a non-negative integer, got {actor!r}")
        self._actors.add(actor)

    def add_edge(self, layer, u: ActorId, v: ActorId, weight: int = 1) -> "MultiplexNetwork":
        lid = self.layer(layer)
        if u == v:
            raise SelfLoopForbidden(f"self-loop on actor {u} in layer {lid.name!r}")
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            raise InvalidWeight(f"edge weight must be an integer >= 1, got {weight!r}")
        self.add_actor(u)
        self.add_actor(v)
        adj = self._adj[lid.index]
        row_u = adj.setdefault(u, {})
        if v in row_u:
            a, b = min(u, v), max(u, v)
            msg = f"duplicate edge ({a}, {b}) in layer {lid.name!r}: weights summed"
            self.warnings.append(msg)
            log.warning(msg)
        w = row_u.get(v, 0) + weight
        row_u[v] = w
        adj.setdefault(v, {})[u] = w
        return self

    # -- lookup -----------------------------------------------------------

    @property
    def layers(self) -> Tuple[LayerId, ...]:
        return tuple(self._layers)

    @property
    def actors(self) -> Tuple[ActorId, ...]:
        """Registered actors in the canonical (ascending id) order."""
        return tuple(sorted(self._actors))

    @property
    def n_actors(self) -> int:
        return len(self._actors)

    @property
    def n_layers(self) -> int:
        return len(self._layers)

    def layer(self, ref) -> LayerId:
        """Resolve a LayerId, layer name or layer index."""
        if isinstance(ref, LayerId):
            if ref.index < len(self._layers) and self._layers[ref.index] == ref:
                return ref
        elif isinstance(ref, str):
            if ref in self._by_name:
                return self._by_name[ref]
        elif isinstance(ref, int) and not isinstance(ref, bool):
            if 0 <= ref < len(self._layers):
                return self._layers[ref]
        raise NotFound(f"unknown layer {ref!r}")

    def _check_actor(self, actor):
        if actor not in self._actors:
            raise NotFound(f"unknown actor {actor!r}")

    def edges(self, layer=None) -> Iterator[EdgeRecord]:
        """Canonical edges (u < v), sorted by layer index then endpoints."""
        layers = self._layers if layer is None else [self.layer(layer)]
        for lid in layers:
            adj = self._adj[lid.index]
            for u in sorted(adj):
                for v in sorted(adj[u]):
                    if u < v:
                        yield EdgeRecord(lid, u, v, adj[u][v])

    def edge_count(self, layer) -> int:
        adj = self._adj[self.layer(layer).index]
        return sum(len(nbrs) for nbrs in adj.values()) // 2

    def weight(self, layer, u: ActorId, v: ActorId) -> int:
        """Weight of the undirected edge (u, v), 0 when absent."""
        return self._adj[self.layer(layer).index].get(u, {}).get(v, 0)

    def neighbors(self, actor: ActorId, layer) -> FrozenSet[ActorId]:
        lid = self.layer(layer)
        self._check_actor(actor)
        return frozenset(self._adj[lid.index].get(actor, ()))

    # -- per-layer queries --------------------------------------------------

    def layer_degree(self, actor: ActorId, layer) -> int:
        """Number of distinct neighbours in ``layer``; weights are ignored."""
        lid = self.layer(layer)
        self._check_actor(actor)
        return len(self._adj[lid.index].get(actor, ()))

    def layer_strength(self, actor: ActorId, layer) -> int:
        lid = self.layer(layer)
        self._check_actor(actor)
        return sum(self._adj[lid.index].get(actor, {}).values())

    def active_actors(self, layer) -> FrozenSet[ActorId]:
        adj = self._adj[self.layer(layer).index]
        return frozenset(a for a, nbrs in adj.items() if nbrs)

    def presence_profile(self, actor: ActorId) -> PresenceProfile:
        self._check_actor(actor)
        active = frozenset(
            lid for lid in self._layers if self._adj[lid.index].get(actor)
        )
        return PresenceProfile(actor, active)

    def shared_actor_count(self, layer_a, layer_b) -> int:
        return len(self.active_actors(layer_a) & self.active_actors(layer_b))

    # -- whole-network counts ------------------------------------------------

    def intralayer_edge_count(self) -> int:
        return sum(self.edge_count(lid) for lid in self._layers)

    def coupling_edge_count(self) -> int:
        """Undirected interlayer edges: one per actor per unordered layer pair."""
        L = len(self._layers)
        return self.n_actors * L * (L - 1) // 2

    def is_multiplex(self) -> bool:
        """True when every layer shares an active actor with some other layer."""
        if len(self._layers) < 2:
            return True
        active = [self.active_actors(lid) for lid in self._layers]
        return all(
            any(active[i] & active[j] for j in range(len(active)) if j != i)
            for i in range(len(active))
        )

    def __repr__(self):
        names = ", ".join(lid.name for lid in self._layers)
        return f"MultiplexNetwork(actors={self.n_actors}, layers=[{names}])"
