#!/usr/bin/env python3
"""Build the successor graph component by component and walk its edge-paths."""

from braidact import (
    ARTIN_CORE,
    build_gamma,
    can_extend,
    component_vertices,
    constant_rep,
    outgoing_cores,
    rep_from_path,
)

print("== components of the classification graph ==")
for kind in ("T", "T'", "A", "B", "C", "D"):
    r = 1 if kind == "A" else None
    graph = build_gamma(component_vertices(kind, r))
    tag = f"{kind} (r=1)" if kind == "A" else kind
    print(f"component {tag}: {len(graph.vertices)} vertices, {len(graph.edges)} edges")
    for e in graph.edges:
        print(f"    ({e.src}) -> ({e.dst})   [{e.label}]")

print()
print("== the r = 0 degeneration ==")
vertices = component_vertices("A", 0)
graph = build_gamma(vertices)
print(f"at r = 0 the component collapses to {len(vertices)} vertices, "
      f"{len(graph.edges)} edges")

print()
print("== edge-paths are representations ==")
graph = build_gamma(component_vertices("A", 1))
v1, v2 = graph.vertices[0], graph.vertices[1]
rep = rep_from_path(graph, [v1, v1, v2])
print("path (v1, v1, v2) gives a representation on", rep.n, "strands")
print("extendable:", can_extend(rep))
print("successors of the constant core:",
      [f"({c}) via {fid}" for c, fid in outgoing_cores(ARTIN_CORE)])

print()
print("== DOT export ==")
print(build_gamma(component_vertices("B")).to_dot(), end="")

print()
print("a constant path at the conjugation core recovers the classical action:")
print(constant_rep(ARTIN_CORE, 4))
