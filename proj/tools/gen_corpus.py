#!/usr/bin/env python3
# Copyright 2026 The mcflow Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the graph6 corpora under tests/data.

Sampling is seeded, so the output is reproducible for a fixed networkx
version. The checked-in files are the source of truth for the tests; this
script only documents where they came from.
"""
import argparse
import pathlib
import random

import networkx as nx

# Known counts of connected cubic graphs by order.
CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19}


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def canonical(graph):
    return nx.convert_node_labels_to_integers(graph, ordering="sorted")


def sample_cubic(order, want, rng, attempts):
    found = []
    for _ in range(attempts):
        graph = nx.random_regular_graph(3, order, seed=rng.randrange(1 << 30))
        if not nx.is_connected(graph):
            continue
        if any(nx.is_isomorphic(graph, other) for other in found):
            continue
        found.append(canonical(graph))
        if len(found) == want:
            break
    return found


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="tests/data")
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    rng = random.Random(20261014)

    bridgeless, bridged = [], []
    plan = dict(CONNECTED_CUBIC)
    plan.update({12: 30, 14: 16})
    for order, want in sorted(plan.items()):
        graphs = sample_cubic(order, want, rng, attempts=40000)
        if order in CONNECTED_CUBIC:
            assert len(graphs) == want, (order, len(graphs))
        for graph in graphs:
            (bridged if nx.has_bridges(graph) else bridgeless).append(graph)

    # Small non-cubic graphs with bridges for the bridge predicates.
    bridged.append(nx.path_graph(3))
    lollipop = nx.complete_graph(3)
    lollipop.add_edge(2, 3)
    bridged.append(lollipop)
    bridged.append(nx.barbell_graph(4, 0))

    (out / "cubic_bridgeless.g6").write_text(
        "".join(g6(g) + "\n" for g in bridgeless))
    (out / "bridged.g6").write_text("".join(g6(g) + "\n" for g in bridged))
    print(f"{len(bridgeless)} bridgeless cubic, {len(bridged)} bridged")


if __name__ == "__main__":
    main()
