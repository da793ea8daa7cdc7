"""Write the lattice of monotone triangles for n = 4 as a DOT graph.

Render with: python demos/lattice_dot.py > mn4.dot && dot -Tpdf mn4.dot -o mn4.pdf
"""
import sys

from plactic_forge import lattice as L

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
sys.stdout.write(L.to_dot(L.Lattice(n)))
