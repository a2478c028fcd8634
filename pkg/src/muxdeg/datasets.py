"""Bundled Montagna-shaped fixture.

The files under ``data/montagna`` are a synthetic stand-in for the public
Montagna edge lists, generated by ``scripts/build_montagna_fixture.py``. They
match the published layer statistics and the published top-20 degree table,
but the minor actors' wiring and all edge weights are made up.
"""

from importlib import resources
from pathlib import Path
from typing import List

from .ingest import LayerSourceSpec

MEETINGS = "Meetings"
PHONE_CALLS = "Phone Calls"
# column order of the published comparison table
TABLE_LAYER_ORDER = (PHONE_CALLS, MEETINGS)


def montagna_dir() -> Path:
    return Path(str(resources.files("muxdeg") / "data" / "montagna"))


def montagna_specs() -> List[LayerSourceSpec]:
    d = montagna_dir()
    return [
        LayerSourceSpec(d / "meetings.csv", MEETINGS),
        LayerSourceSpec(d / "phone_calls.csv", PHONE_CALLS),
    ]


def montagna_roles_path() -> Path:
    return montagna_dir() / "roles.csv"


def load_montagna():
    """``(network, report, roles)`` for the bundled fixture."""
    from .ingest import load_network, load_roles

    net, report = load_network(montagna_specs())
    return net, report, load_roles(montagna_roles_path())
