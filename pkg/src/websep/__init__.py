"""Orthogonal separable webs on H^3 and dS_3 via concircular tensors.

Library layout:

- ``elliptic``: Jacobi elliptic functions and K(a) (AGM / descending Landen)
- ``pseudo_euclidean``: scalar products, metric-Jordan forms, equivalence
- ``concircular``: tensors on hyperquadrics, reducibility, ICT coordinates
- ``warped``: warped-product decompositions and the eigenspace algorithm
- ``geometry``: closed-form geodesics and finite-difference residuals
- ``catalog``: the 34+34+9 web registry with charts, regions, and metrics
- ``verify``: per-chart certification and whole-catalog verification
- ``cli``: the ``websep`` command-line front end
"""

__version__ = "0.1.0"
