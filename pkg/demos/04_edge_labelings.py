"""Every edge-labeling construction, each certified by the search engine.

A labeling is distinguishing when no automorphism that moves an edge
preserves every label; the engine either certifies that or returns the
surviving automorphism as a counterexample.
"""
from lexidis import (
    bundle_label_budget,
    bundle_sequence,
    complete,
    cycle,
    distinguishing_index,
    find_preserving_edges,
    inherited_edge_labeling,
    is_distinguishing_edges,
    k2_product_edge_labeling,
    lex_power,
    lex_product,
    p2_product_edge_labeling,
    path,
    path_product_edge_labeling,
    power_edge_labeling,
    star,
    star_product_edge_labeling,
    two_label_edge_labeling,
)


def certify(name, prod, lab):
    ok = is_distinguishing_edges(prod, lab)
    labels = len(set(lab.values()))
    print(f"{name}: {labels} labels, certified: {ok}")
    assert ok


# Copies keep their own labeling, cross edges inherit the base edge's label.
lg = {(0, 1): 1, (1, 2): 2}
certify("P3[P3] inherited", lex_product(path(3), path(3)),
        inherited_edge_labeling(path(3), path(3), lg, lg))

# Doubling a factor: two copies joined completely, pinned by cross counts.
for h in (path(3), complete(3), cycle(5)):
    certify(f"K2[H] with {h.n}-vertex H", lex_product(complete(2), h),
            k2_product_edge_labeling(h))

# Star products: a label matrix with pairwise distinct (and swap-breaking)
# columns tells the pendant copies apart.
certify("star(3)[P2]", lex_product(star(3), path(2)),
        star_product_edge_labeling(3, path(2), {(0, 1): 1}))
certify("star(16)[P2] saturated", lex_product(star(16), path(2)),
        star_product_edge_labeling(16, path(2), {(0, 1): 1}))

# Path products always take two labels.
certify("P4[K2]", lex_product(path(4), complete(2)),
        path_product_edge_labeling(4, complete(2)))

# Single-edge second factor: four-edge bundles carry per-class patterns.
print("bundle patterns for up to 4 base classes:", bundle_sequence(4))
print("labels needed for 9 base classes:", bundle_label_budget(9))
d, lg4 = distinguishing_index(path(4))
certify("P4[P2] bundles", lex_product(path(4), path(2)),
        p2_product_edge_labeling(path(4), lg4))

# Small base: copy i carries i label-1 edges, so copies cannot move.
certify("P3[C4] two labels", lex_product(path(3), cycle(4)),
        two_label_edge_labeling(path(3), cycle(4)))

# Powers: two labels suffice at every exponent.
for k in (2, 3):
    certify(f"P3^{k}", lex_power(path(3), k), power_edge_labeling(path(3), k))

# A failing labeling hands back the automorphism that survives it.
flat = {e: 1 for e in cycle(6).edge_list()}
witness = find_preserving_edges(cycle(6), flat)
print("all-ones on C6 is preserved by", witness.cycle_string())
