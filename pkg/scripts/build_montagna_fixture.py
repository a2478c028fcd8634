"""Build the bundled Montagna-shaped fixture under src/muxdeg/data/.

The original edge lists are distributed on Zenodo and are not shipped here.
This script synthesises a stand-in with the same published statistics:

* Meetings: 101 active actors, 256 edges
* Phone Calls: 100 active actors, 124 edges
* 47 actors active on both layers, 154 actors overall
* the 20 top-ranked actors keep their published per-layer degree, union
  (aggregate) degree and multidegree, and nobody else outranks them.

Everything outside those constraints (who the minor actors talk to, all
edge weights) is random but seeded, so re-running reproduces the files
byte for byte.

Usage::

    python scripts/build_montagna_fixture.py [outdir]
"""

import csv
import random
import sys
from pathlib import Path

SEED = 20070314

N_ACTORS = 154
MEETINGS_EDGES = 256
PHONE_EDGES = 124
N_SHARED = 47
N_MEETINGS_ACTIVE = 101
N_PHONE_ACTIVE = 100

# actor: (phone calls degree, meetings degree, aggregate degree, role, family)
TOP20 = {
    18: (25, 24, 41, "Caporegime", "Mistretta"),
    47: (21, 19, 29, "Deputy Caporegime", "Batanesi"),
    27: (11, 16, 21, "Caporegime", "Batanesi"),
    68: (10, 15, 19, "Caporegime", "Batanesi"),
    29: (9, 13, 16, "Enterpreneur", None),
    61: (17, 4, 19, "Caporegime", "Mistretta"),
    45: (6, 12, 14, "Associate", "Batanesi"),
    12: (1, 16, 16, "Associate", "Mistretta"),
    11: (4, 12, 15, "Mafia activity coordinator in Messina", None),
    22: (2, 14, 15, "Pharmacist", None),
    51: (4, 11, 11, "Associate", "Batanesi"),
    25: (1, 13, 13, "Caporegime", "Mistretta"),
    43: (5, 9, 11, "Messaggero", None),
    48: (1, 12, 12, "Associate", "Batanesi"),
    19: (3, 9, 11, "External partnership", None),
    36: (4, 8, 11, "Aiding and abetting of a fugitive", None),
    75: (8, 4, 12, "Associate", "Mistretta"),
    89: (0, 12, 12, "Associate", "Batanesi"),
    54: (5, 6, 7, "Enterpreneur", None),
    5: (0, 10, 10, "Sighted with nodes 11 and 12", None),
}

# minor actors must stay below the 20th multidegree (12) -> degree sum <= 9
MINOR_DEGREE_CAP = 9


def spread(rng, actors, total, caps):
    """Give each actor degree 1, then hand out the rest one unit at a time."""
    deg = {a: 1 for a in actors}
    left = total - len(actors)
    while left:
        a = rng.choice(actors)
        if deg[a] < caps(a, deg[a]):
            deg[a] += 1
            left -= 1
    return deg


def havel_hakimi(deg):
    edges = set()
    residual = dict(deg)
    while True:
        residual = {a: d for a, d in residual.items() if d > 0}
        if not residual:
            return edges
        a = max(residual, key=lambda x: (residual[x], -x))
        d = residual.pop(a)
        partners = sorted(residual, key=lambda x: (-residual[x], x))[:d]
        if len(partners) < d:
            raise ValueError("degree sequence is not graphical")
        for b in partners:
            residual[b] -= 1
            edges.add((min(a, b), max(a, b)))


def neighbours(edges):
    nbr = {}
    for u, v in edges:
        nbr.setdefault(u, set()).add(v)
        nbr.setdefault(v, set()).add(u)
    return nbr


def anneal(rng, layers, targets, steps=2_000_000):
    """Degree-preserving edge swaps until every target overlap is hit."""
    nbrs = [neighbours(e) for e in layers]
    lists = [sorted(e) for e in layers]

    def overlap(x):
        return len(nbrs[0].get(x, set()) & nbrs[1].get(x, set()))

    def cost(xs):
        return sum(abs(overlap(x) - targets[x]) for x in xs if x in targets)

    total = cost(targets)
    for _ in range(steps):
        if total == 0:
            return [set(lst) for lst in lists]
        li = rng.randrange(2)
        nbr, lst = nbrs[li], lists[li]
        i, j = rng.randrange(len(lst)), rng.randrange(len(lst))
        (a, b), (c, d) = lst[i], lst[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or d in nbr[a] or b in nbr[c]:
            continue
        touched = {a, b, c, d}
        before = cost(touched)
        for x, y in ((a, b), (c, d)):
            nbr[x].discard(y)
            nbr[y].discard(x)
        for x, y in ((a, d), (c, b)):
            nbr[x].add(y)
            nbr[y].add(x)
        delta = cost(touched) - before
        if delta <= 0 or rng.random() < 0.02:
            total += delta
            lst[i] = (min(a, d), max(a, d))
            lst[j] = (min(c, b), max(c, b))
        else:
            for x, y in ((a, d), (c, b)):
                nbr[x].discard(y)
                nbr[y].discard(x)
            for x, y in ((a, b), (c, d)):
                nbr[x].add(y)
                nbr[y].add(x)
    raise RuntimeError(f"annealing did not converge (residual cost {total})")


def build(rng):
    others = [a for a in range(1, N_ACTORS + 1) if a not in TOP20]
    rng.shuffle(others)
    top_shared = [a for a, r in TOP20.items() if r[0] and r[1]]
    n_other_shared = N_SHARED - len(top_shared)
    n_meet_only = N_MEETINGS_ACTIVE - len(TOP20) - n_other_shared
    shared = sorted(others[:n_other_shared])
    meet_only = sorted(others[n_other_shared:n_other_shared + n_meet_only])
    phone_only = sorted(others[n_other_shared + n_meet_only:])

    phone_total = 2 * PHONE_EDGES - sum(r[0] for r in TOP20.values())
    meet_total = 2 * MEETINGS_EDGES - sum(r[1] for r in TOP20.values())
    phone = spread(rng, shared + phone_only, phone_total, lambda a, d: 4)
    meet = spread(
        rng, shared + meet_only, meet_total,
        lambda a, d: MINOR_DEGREE_CAP - phone.get(a, 0),
    )
    for a, r in TOP20.items():
        if r[0]:
            phone[a] = r[0]
        meet[a] = r[1]

    targets = {a: r[0] + r[1] - r[2] for a, r in TOP20.items()}
    return anneal(rng, [havel_hakimi(meet), havel_hakimi(phone)], targets)


def weights(rng, edges):
    # a handful of repeat encounters on top of single contacts
    return {e: 1 + int(rng.expovariate(1.2)) for e in sorted(edges)}


def write_edges(path, weighted):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["source", "target", "weight"])
        for (u, v), wt in sorted(weighted.items()):
            w.writerow([u, v, wt])


def main(outdir):
    rng = random.Random(SEED)
    meetings, phone = build(rng)
    outdir.mkdir(parents=True, exist_ok=True)
    write_edges(outdir / "meetings.csv", weights(rng, meetings))
    write_edges(outdir / "phone_calls.csv", weights(rng, phone))
    with open(outdir / "roles.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["actor", "role", "family"])
        for a in sorted(TOP20):
            w.writerow([a, TOP20[a][3], TOP20[a][4] or ""])


if __name__ == "__main__":
    default = Path(__file__).resolve().parents[1] / "src" / "muxdeg" / "data" / "montagna"
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else default)
