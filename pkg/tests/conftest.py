from collections import defaultdict

import numpy as np
import pytest

from muxdeg import MultiplexNetwork
from muxdeg.datasets import load_montagna

# Published top-20 table: actor -> (multilayer, aggregate, phone calls, meetings);
# None marks an actor absent from the layer.
PUBLISHED_TOP20 = {
    18: (51, 41, 25, 24),
    47: (42, 29, 21, 19),
    27: (29, 21, 11, 16),
    68: (27, 19, 10, 15),
    29: (24, 16, 9, 13),
    61: (23, 19, 17, 4),
    45: (20, 14, 6, 12),
    12: (19, 16, 1, 16),
    11: (18, 15, 4, 12),
    22: (18, 15, 2, 14),
    51: (17, 11, 4, 11),
    25: (16, 13, 1, 13),
    43: (16, 11, 5, 9),
    48: (15, 12, 1, 12),
    19: (14, 11, 3, 9),
    36: (14, 11, 4, 8),
    75: (14, 12, 8, 4),
    89: (14, 12, None, 12),
    54: (13, 7, 5, 6),
    5: (12, 10, None, 10),
}

PUBLISHED_ROLES = {
    18: "Caporegime Mistretta Family",
    47: "Deputy Caporegime Batanesi Family",
    27: "Caporegime Batanesi Family",
    68: "Caporegime Batanesi Family",
    29: "Enterpreneur",
    61: "Caporegime Mistretta Family",
    45: "Associate Batanesi Family",
    12: "Associate Mistretta Family",
    11: "Mafia activity coordinator in Messina",
    22: "Pharmacist",
    51: "Associate Batanesi Family",
    25: "Caporegime Mistretta Family",
    43: "Messaggero",
    48: "Associate Batanesi Family",
    19: "External partnership",
    36: "Aiding and abetting of a fugitive",
    75: "Associate Mistretta Family",
    89: "Associate Batanesi Family",
    54: "Enterpreneur",
    5: "Sighted with nodes 11 and 12",
}


@pytest.fixture(scope="session")
def montagna():
    return load_montagna()


@pytest.fixture(scope="session")
def mnet(montagna):
    return montagna[0]


def random_instance(seed, max_actors=10, max_layers=3):
    """Random multiplex: ``(network, actors, [ {(u, v): w}, ... ])``.

    Actor ids are sparse, some actors may be isolated everywhere, weights 1..5.
    """
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_actors + 1))
    L = int(rng.integers(1, max_layers + 1))
    actors = sorted(int(a) for a in rng.choice(1000, size=n, replace=False))
    density = rng.uniform(0.0, 0.9)
    layers = []
    for _ in range(L):
        edges = {}
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < density:
                    edges[(actors[i], actors[j])] = int(rng.integers(1, 6))
        layers.append(edges)

    net = MultiplexNetwork()
    for a in actors:
        net.add_actor(a)
    for idx, edges in enumerate(layers):
        lid = net.add_layer(f"L{idx}")
        for (u, v), w in edges.items():
            if rng.random() < 0.5:
                u, v = v, u
            net.add_edge(lid, u, v, w)
    return net, actors, layers


RANDOM_SEEDS = range(200)


# -- acceptance criteria summary ---------------------------------------------

_acceptance = defaultdict(lambda: {"title": "", "outcomes": []})


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "_acceptance", None)
    if marker is None:
        return
    number, title = marker
    entry = _acceptance[number]
    entry["title"] = title
    entry["outcomes"].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        report._acceptance = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        entry = _acceptance[number]
        ok = entry["outcomes"] and all(o == "passed" for o in entry["outcomes"])
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"AC{number} {verdict}  {entry['title']} ({len(entry['outcomes'])} checks)")
