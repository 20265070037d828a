"""Free groups, Magnus expansions and Johnson homomorphisms of surface mapping classes."""

__version__ = "0.1.0"
