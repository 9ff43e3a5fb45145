"""pglat: exact lattices from finite projective planes.

Builds the singular Hermitian form on points+lines of PG(2, q), its
nondegenerate quotient of signature (1, n) in line coordinates, certifies
p-modularity, splits off a hyperbolic cell along a symmetry-fixed null
vector, and certifies the q = 3 positive-definite quotient as the Leech
lattice by exact short-vector enumeration.
"""

__version__ = "0.1.0"
