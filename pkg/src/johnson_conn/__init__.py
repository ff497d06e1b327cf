"""Connectivity and super-connectivity of uniform-subset graphs G(n, k, t)."""
