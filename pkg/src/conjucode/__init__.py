"""Additive conjucyclic codes over GF(4), their binary trace codes and the
entanglement-assisted quantum codes built from them."""

__version__ = "0.1.0"
