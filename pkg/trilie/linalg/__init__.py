"""Exact linear algebra over the rationals."""
