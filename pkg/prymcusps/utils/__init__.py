"""Shared helpers: logging, formatting, caching and GF(2) linear algebra."""
