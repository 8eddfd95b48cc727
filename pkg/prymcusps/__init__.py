"""prymcusps - exact cusp prototypes of genus-3 Prym eigenform loci."""

__version__ = "1.0.0"
