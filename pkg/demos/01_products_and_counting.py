"""Products, counting formulas, and file formats.

Builds small lexicographic products, checks the edge-count and degree
formulas against the constructed graphs, and round-trips both serialization
formats.
"""
from lexidis import complete, cycle, lex_power, lex_product, path, product_degree
from lexidis.formats import read_edge_list, read_graph6, write_edge_list, write_graph6

# Substituting a triangle for each vertex of an edge gives the complete
# graph on six vertices.
prod = lex_product(complete(2), complete(3))
print("K2[K3] =", prod, "complete:", prod == complete(6))

# Edge count: |V(G)|*|E(H)| + |E(G)|*|V(H)|^2.
g, h = path(3), path(2)
p = lex_product(g, h)
print("|E(P3[P2])| =", p.m, "= 3*1 + 2*4")

# Per-vertex degrees follow deg_H(h) + |V(H)|*deg_G(g).
for gv in range(g.n):
    for hv in range(h.n):
        assert p.degree(gv * h.n + hv) == product_degree(g, h, gv, hv)
print("all product degrees match the formula")

# Right-nested powers: G^k = G[G^(k-1)].
sq = lex_power(path(3), 2)
print("P3^2:", sq, "(9 vertices, 24 edges)")

# Round-trip through both formats.
text = write_edge_list(sq)
assert read_edge_list(text) == sq
g6 = write_graph6(sq)
assert read_graph6(g6) == sq
print("edge-list and graph6 round-trips are exact; graph6:", g6)
