"""Hat Heegaard Floer ranks of splices of knot complements via bordered Floer homology."""

__version__ = "0.1.0"
