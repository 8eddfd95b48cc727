"""Workflows that drive the services over ranges of discriminants."""
