"""Edge-list and role CSV parsing, validation reports and result export."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .analysis import DegreeTable, HistogramSeries, RankingEntry, RoleRecord
from .errors import IoFailure, ParseFailure, SchemaMismatch
from .network import ActorId, MultiplexNetwork

log = logging.getLogger(__name__)

SOURCE_ALIASES = ("source", "src", "from", "u", "node1", "actor1")
TARGET_ALIASES = ("target", "dst", "to", "v", "node2", "actor2")
WEIGHT_ALIASES = ("weight", "w", "count", "weights")


@dataclass(frozen=True)
class LayerSourceSpec:
    """Where one layer's edges live and how its columns are named.

    ``weight=None`` means the file carries no weights (all edges weigh 1);
    with the default ``"weight"`` a missing column is tolerated the same way.
    """

    path: Path
    layer_name: str
    source: str = "source"
    target: str = "target"
    weight: Optional[str] = "weight"

    def __post_init__(self):
        object.__setattr__(self, "path", Path(self.path))
        cols = [c for c in (self.source, self.target, self.weight) if c is not None]
        if len(set(cols)) != len(cols):
            raise ValueError(f"column names must be distinct, got {cols}")


@dataclass(frozen=True)
class LayerStats:
    name: str
    nodes: int
    edges: int


@dataclass
class ValidationReport:
    layers: List[LayerStats]
    shared: Dict[Tuple[str, str], int]
    actors: int
    intralayer_edges: int
    coupling_edges: int
    warnings: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "actors": self.actors,
            "layers": [{"name": s.name, "nodes": s.nodes, "edges": s.edges} for s in self.layers],
            "shared": [{"layers": list(k), "actors": v} for k, v in self.shared.items()],
            "intralayer_edges": self.intralayer_edges,
            "coupling_edges": self.coupling_edges,
            "warnings": list(self.warnings),
        }

    def format(self) -> str:
        width = max([len(s.name) for s in self.layers] + [5])
        lines = [f"{'layer':<{width}}  {'nodes':>5}  {'edges':>5}"]
        for s in self.layers:
            lines.append(f"{s.name:<{width}}  {s.nodes:>5}  {s.edges:>5}")
        for (a, b), n in self.shared.items():
            lines.append(f"shared actors {a} / {b}: {n}")
        lines.append(f"total actors: {self.actors}")
        lines.append(f"intralayer edges: {self.intralayer_edges}")
        lines.append(f"coupling edges: {self.coupling_edges}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def validation_report(
    network: MultiplexNetwork,
    roles: Optional[Mapping[ActorId, RoleRecord]] = None,
    warnings: Sequence[str] = (),
) -> ValidationReport:
    """Recount everything from the network; nothing is cached."""
    layers = [
        LayerStats(lid.name, len(network.active_actors(lid)), network.edge_count(lid))
        for lid in network.layers
    ]
    shared = {
        (a.name, b.name): network.shared_actor_count(a, b)
        for a, b in combinations(network.layers, 2)
    }
    notes = list(warnings)
    notes += [w for w in network.warnings if w not in notes]
    if not network.is_multiplex():
        notes.append("some layer shares no active actor with any other layer")
    if roles:
        known = set(network.actors)
        unknown = sorted(a for a in roles if a not in known)
        if unknown:
            notes.append(f"roles given for actors outside the network: {unknown}")
    return ValidationReport(
        layers, shared, network.n_actors,
        network.intralayer_edge_count(), network.coupling_edge_count(), notes,
    )


# -- reading -------------------------------------------------------------------


def _read_rows(path: Path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IoFailure(path, getattr(exc, "strerror", None) or str(exc)) from exc
    return list(csv.reader(io.StringIO(text, newline="")))


def _resolve(header, path, wanted, aliases, default):
    if wanted in header:
        return header.index(wanted)
    if wanted == default:
        for alias in aliases:
            if alias in header:
                return header.index(alias)
    return None


def _parse_int(value, path, lineno, what):
    try:
        return int(value.strip())
    except ValueError:
        raise ParseFailure(path, lineno, f"{what} {value!r} is not an integer") from None


def read_edge_list(spec: LayerSourceSpec) -> List[Tuple[int, int, int, int]]:
    """Parse one edge CSV into ``(line, u, v, weight)`` tuples."""
    rows = _read_rows(spec.path)
    if not rows:
        log.warning("%s is empty; layer %r has no edges", spec.path, spec.layer_name)
        return []
    header = [h.strip() for h in rows[0]]
    i_src = _resolve(header, spec.path, spec.source, SOURCE_ALIASES, "source")
    if i_src is None:
        raise SchemaMismatch(spec.path, spec.source)
    i_tgt = _resolve(header, spec.path, spec.target, TARGET_ALIASES, "target")
    if i_tgt is None:
        raise SchemaMismatch(spec.path, spec.target)
    i_w = None
    if spec.weight is not None:
        i_w = _resolve(header, spec.path, spec.weight, WEIGHT_ALIASES, "weight")
        if i_w is None and spec.weight != "weight":
            raise SchemaMismatch(spec.path, spec.weight)

    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise ParseFailure(spec.path, lineno, f"expected {len(header)} fields, got {len(row)}")
        u = _parse_int(row[i_src], spec.path, lineno, "actor id")
        v = _parse_int(row[i_tgt], spec.path, lineno, "actor id")
        if u < 0 or v < 0:
            raise ParseFailure(spec.path, lineno, "actor ids must be non-negative")
        if u == v:
            raise ParseFailure(spec.path, lineno, f"self-loop on actor {u}")
        w = 1 if i_w is None else _parse_int(row[i_w], spec.path, lineno, "weight")
        if w < 1:
            raise ParseFailure(spec.path, lineno, f"weight must be >= 1, got {w}")
        out.append((lineno, u, v, w))
    return out


def load_network(
    specs: Sequence[LayerSourceSpec],
) -> Tuple[MultiplexNetwork, ValidationReport]:
    """Build a network with one layer per spec, in spec order."""
    if not specs:
        raise ValueError("at least one layer spec is required")
    parsed = [read_edge_list(s) for s in specs]
    net = MultiplexNetwork()
    for spec, rows in zip(specs, parsed):
        lid = net.add_layer(spec.layer_name)
        for _, u, v, w in rows:
            net.add_edge(lid, u, v, w)
    return net, validation_report(net)


def load_roles(path) -> Dict[ActorId, RoleRecord]:
    rows = _read_rows(path)
    if not rows:
        return {}
    header = [h.strip() for h in rows[0]]
    for col in ("actor", "role"):
        if col not in header:
            raise SchemaMismatch(path, col)
    i_a, i_r = header.index("actor"), header.index("role")
    i_f = header.index("family") if "family" in header else None
    roles: Dict[ActorId, RoleRecord] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise ParseFailure(path, lineno, f"expected {len(header)} fields, got {len(row)}")
        actor = _parse_int(row[i_a], path, lineno, "actor id")
        family = row[i_f].strip() if i_f is not None else ""
        if actor in roles:
            log.warning("%s, line %d: actor %d listed twice, keeping the later row", path, lineno, actor)
        roles[actor] = RoleRecord(actor, row[i_r].strip(), family or None)
    return roles


def write_edge_list(network: MultiplexNetwork, layer, path) -> None:
    """Write one layer back out in the canonical ``source,target,weight`` form."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["source", "target", "weight"])
    for e in network.edges(layer):
        w.writerow([e.u, e.v, e.weight])
    _write_text(path, buf.getvalue())


# -- export -------------------------------------------------------------------


def column_name(layer_name: str) -> str:
    """CSV header form of a layer name: ``Phone Calls`` -> ``phone_calls``."""
    return "_".join(layer_name.lower().split())


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc


def _cell(v):
    return "" if v is None else v


def _role_label(role: Optional[RoleRecord]):
    return role.label() if role is not None else None


def _table_csv(table: DegreeTable) -> List[list]:
    rows = [["actor", "role", "multilayer", "aggregate"] + [column_name(n) for n in table.layer_names]]
    for r in table.rows:
        rows.append(
            [r.actor, _cell(_role_label(r.role)), r.multilayer, r.aggregate]
            + [_cell(r.layers[n]) for n in table.layer_names]
        )
    return rows


def _table_json(table: DegreeTable) -> List[dict]:
    out = []
    for r in table.rows:
        scores = {"multilayer": r.multilayer, "aggregate": r.aggregate}
        scores.update((n, r.layers[n]) for n in table.layer_names)
        out.append({"actor": r.actor, "role": _role_label(r.role), "scores": scores})
    return out


def _histogram_rows(series: List[HistogramSeries]):
    keys = list(series[0].values) if series else ["Multilayer", "Aggregate"]
    csv_rows = [["actor"] + [column_name(k) for k in keys]]
    json_rows = []
    for s in series:
        csv_rows.append([s.actor] + [_cell(s.values.get(k)) for k in keys])
        json_rows.append({"actor": s.actor, "role": None, "scores": {k: s.values.get(k) for k in keys}})
    return csv_rows, json_rows


def _ranking_rows(ranking: List[RankingEntry], score_name: str):
    csv_rows = [["rank", "actor", "role", score_name]]
    json_rows = []
    for e in ranking:
        csv_rows.append([e.rank, e.actor, _cell(_role_label(e.role)), e.score])
        json_rows.append({"rank": e.rank, "actor": e.actor, "role": _role_label(e.role),
                          "scores": {score_name: e.score}})
    return csv_rows, json_rows


def render_results(
    data,
    fmt: str = "csv",
    report: Optional[ValidationReport] = None,
    score_name: str = "score",
    stamp: Optional[str] = None,
) -> str:
    """Serialise a DegreeTable, ranking or histogram series list to text.

    Output is deterministic: fixed key order, integers only, LF endings.
    ``stamp`` (off by default) adds a ``generated_at`` field.
    """
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(data, DegreeTable):
        csv_rows, json_rows = _table_csv(data), _table_json(data)
    elif data and isinstance(data[0], HistogramSeries):
        csv_rows, json_rows = _histogram_rows(list(data))
    else:
        csv_rows, json_rows = _ranking_rows(list(data), score_name)

    if fmt == "json":
        doc = {"network": report.to_dict() if report is not None else {}, "results": json_rows}
        if stamp:
            doc["generated_at"] = stamp
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    buf = io.StringIO()
    if stamp:
        buf.write(f"# generated_at {stamp}\n")
    csv.writer(buf, lineterminator="\n").writerows(csv_rows)
    return buf.getvalue()


def export_results(data, path, fmt: str = "csv", **kwargs) -> None:
    _write_text(path, render_results(data, fmt, **kwargs))
