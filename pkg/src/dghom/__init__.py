"""dghom: exact-arithmetic Hochschild / cyclic homology workbench for small DG categories.

Everything is computed over an exact field (the rationals by default, prime
fields as a fast pre-check).  No floating point is used anywhere in the
mathematical core.
"""

__version__ = "0.1.0"
