"""Regenerate atlas7.g6: every graph on at most 7 vertices, one per
isomorphism class, taken from the networkx graph atlas.

    python3 tests/data/make_atlas.py > tests/data/atlas7.g6
"""

import sys

import networkx as nx

for g in nx.graph_atlas_g():
    sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode("ascii"))
