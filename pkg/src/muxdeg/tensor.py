"""Sparse block-matrix realisation of the multilayer adjacency tensor.

The rank-4 tensor is stored as an L x L grid of N x N blocks (the
supra-adjacency matrix). Diagonal blocks hold the intralayer adjacency of
each layer, off-diagonal blocks hold the interlayer coupling, which for a
multiplex with categorical coupling is the identity: each actor is linked
to its own replica on every other layer with unit weight.

All matrices are integer CSR matrices indexed by the network's canonical
actor ordering (ascending id). No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from .errors import DimensionMismatch
from .network import ActorId, LayerId, MultiplexNetwork

DTYPE = np.int64
MODES = ("binary", "weighted")


@dataclass(frozen=True)
class LayerAdjacency:
    layer: LayerId
    actors: Tuple[ActorId, ...]
    matrix: sp.csr_matrix


@dataclass(frozen=True)
class CouplingBlock:
    from_layer: LayerId
    to_layer: LayerId
    matrix: sp.csr_matrix


@dataclass(frozen=True)
class SupraAdjacency:
    actors: Tuple[ActorId, ...]
    layers: Tuple[LayerId, ...]
    blocks: Tuple[Tuple[CouplingBlock, ...], ...]
    matrix: sp.csr_matrix

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def block(self, h: int, k: int) -> sp.csr_matrix:
        return self.blocks[h][k].matrix


@dataclass(frozen=True)
class DegreeVector:
    actors: Tuple[ActorId, ...]
    values: np.ndarray

    def __getitem__(self, actor: ActorId) -> int:
        """Projection onto a single actor."""
        return int(self.values[self._index()[actor]])

    def _index(self) -> Dict[ActorId, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {a: i for i, a in enumerate(self.actors)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def as_dict(self) -> Dict[ActorId, int]:
        return {a: int(v) for a, v in zip(self.actors, self.values)}

    def __len__(self):
        return len(self.actors)


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _binarize(m: sp.spmatrix) -> sp.csr_matrix:
    out = sp.csr_matrix(m, dtype=DTYPE, copy=True)
    out.eliminate_zeros()
    out.data[:] = 1
    return out


def layer_adjacency(network: MultiplexNetwork, layer, binary: bool = False) -> LayerAdjacency:
    """Symmetric N x N adjacency of one layer over *all* actors."""
    lid = network.layer(layer)
    actors = network.actors
    index = {a: i for i, a in enumerate(actors)}
    rows, cols, vals = [], [], []
    for e in network.edges(lid):
        i, j = index[e.u], index[e.v]
        w = 1 if binary else e.weight
        rows += (i, j)
        cols += (j, i)
        vals += (w, w)
    n = len(actors)
    m = sp.csr_matrix(
        (np.asarray(vals, dtype=DTYPE), (np.asarray(rows, dtype=np.intp), np.asarray(cols, dtype=np.intp))),
        shape=(n, n), dtype=DTYPE,
    )
    return LayerAdjacency(lid, actors, m)


def degree_vector(adjacency, mode: str = "binary", actors: Sequence[ActorId] = None) -> DegreeVector:
    """Column sums of a square matrix.

    ``binary`` counts non-zero entries per column, ``weighted`` sums them.
    ``adjacency`` may be a LayerAdjacency or any square (sparse or dense)
    matrix; for a bare matrix, ``actors`` labels the columns (defaults to
    0..N-1).
    """
    _check_mode(mode)
    if isinstance(adjacency, LayerAdjacency):
        actors = adjacency.actors
        adjacency = adjacency.matrix
    m = sp.csc_matrix(adjacency, dtype=DTYPE)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"adjacency must be square, got shape {m.shape}")
    m.eliminate_zeros()
    if mode == "binary":
        values = np.diff(m.indptr).astype(DTYPE)
    else:
        values = np.asarray(m.sum(axis=0), dtype=DTYPE).ravel()
    if actors is None:
        actors = range(m.shape[0])
    actors = tuple(actors)
    if len(actors) != m.shape[0]:
        raise DimensionMismatch(f"{len(actors)} actor labels for a {m.shape[0]}-column matrix")
    return DegreeVector(actors, values)


def coupling_block(network: MultiplexNetwork, h, k, binary: bool = False) -> CouplingBlock:
    """Block (h, k) of the supra-adjacency matrix.

    For h == k this is the layer's own adjacency; otherwise the unit
    identity coupling every actor to its counterpart.
    """
    lh, lk = network.layer(h), network.layer(k)
    if lh == lk:
        m = layer_adjacency(network, lh, binary=binary).matrix
    else:
        n = network.n_actors
        m = sp.identity(n, dtype=DTYPE, format="csr") * network.coupling_weight
    return CouplingBlock(lh, lk, m)


def assemble_supra(network: MultiplexNetwork, binary: bool = False) -> SupraAdjacency:
    """(N*L) x (N*L) supra-adjacency; row/column ``l*N + i`` is actor i on layer l."""
    layers = network.layers
    if not layers:
        raise ValueError("network has no layers")
    blocks = tuple(
        tuple(coupling_block(network, h, k, binary=binary) for k in layers)
        for h in layers
    )
    m = sp.bmat([[b.matrix for b in row] for row in blocks], format="csr", dtype=DTYPE)
    return SupraAdjacency(network.actors, layers, blocks, m)


def project_single_layer(supra: SupraAdjacency) -> sp.csr_matrix:
    """Sum of all L*L blocks, coupling blocks included."""
    n = len(supra.actors)
    out = sp.csr_matrix((n, n), dtype=DTYPE)
    for row in supra.blocks:
        for b in row:
            out = out + b.matrix
    return out


def overlay_network(network: MultiplexNetwork, mode: str = "weighted") -> sp.csr_matrix:
    """Entrywise sum of the per-layer adjacencies, ignoring coupling.

    This is the weight-summing overlay, *not* the union flattening used for
    the aggregate ranking (see :func:`muxdeg.analysis.union_flatten`).
    """
    _check_mode(mode)
    n = network.n_actors
    out = sp.csr_matrix((n, n), dtype=DTYPE)
    for lid in network.layers:
        out = out + layer_adjacency(network, lid, binary=(mode == "binary")).matrix
    return out


def multidegree(network: MultiplexNetwork) -> DegreeVector:
    """Multidegree: binary degree summed over every ordered (h, k) block."""
    actors = network.actors
    total = np.zeros(len(actors), dtype=DTYPE)
    for h in network.layers:
        for k in network.layers:
            total += degree_vector(coupling_block(network, h, k).matrix, "binary", actors).values
    return DegreeVector(actors, total)


def coo_dump(matrix) -> str:
    """``row col value`` lines for every stored non-zero, sorted by (row, col)."""
    m = sp.coo_matrix(matrix)
    m.sum_duplicates()
    order = np.lexsort((m.col, m.row))
    lines = [f"{m.row[i]} {m.col[i]} {m.data[i]}" for i in order if m.data[i] != 0]
    return "\n".join(lines) + ("\n" if lines else "")
