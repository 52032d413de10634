"""Exact rank-2 scattering diagrams: wall crossing, theta functions and tropical shadows."""
