"""Computational services: field arithmetic, prototypes, homology, Galois action, stable fibers."""
