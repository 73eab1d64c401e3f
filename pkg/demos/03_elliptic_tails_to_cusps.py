"""
Replacing elliptic tails with cusps
===================================

A stable curve with an elliptic tail is sent to a pseudostable curve with
a cusp where the tail was attached.  Different tails over the same pointed
curve D give the same image.
"""

from pathlib import Path

from mgbar import CurveGraph, arithmetic_genus, is_pseudostable, is_stable, t_equivalent, t_transform
from mgbar.curve_graphs import enumerate_stable_graphs

here = Path(__file__).parent / "graphs"
smooth_tail = CurveGraph.from_json((here / "elliptic_tail.json").read_text())
nodal_tail = CurveGraph.from_json((here / "nodal_rational_tail.json").read_text())

print("stable:", is_stable(smooth_tail).ok, " pseudostable:", is_pseudostable(smooth_tail))
image = t_transform(smooth_tail)
print("image:", image.to_json(), " genus", arithmetic_genus(image))
print("same image for the nodal rational tail:", t_equivalent(smooth_tail, nodal_tail))

# every stable graph of genus 4 (at most 6 components)
graphs = enumerate_stable_graphs(4, 6)
with_tails = sum(1 for G in graphs if t_transform(G) != G)
print(f"{len(graphs)} stable graphs of genus 4, {with_tails} with elliptic tails")
assert all(is_pseudostable(t_transform(G)) for G in graphs)
