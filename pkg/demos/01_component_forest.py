"""
Tracking components without storing edges
==========================================

The process never needs an adjacency list: a union-find forest with cached
sizes answers every question the strategies and the bound ask.
"""
from achlioptas import new_forest

f = new_forest(8)
print(f)

# merging two isolated vertices removes two isolated vertices at once
print(f.add_edge(0, 1))
print(f.add_edge(2, 3))
print(f.add_edge(1, 2))
print(f)

# an edge inside an existing component changes nothing but is still counted
print(f.add_edge(0, 3))
print("edges per component:", f.component_edge_counts())
print("sizes per component:", f.component_sizes())
