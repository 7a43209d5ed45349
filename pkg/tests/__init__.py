"""Cramer tests."""
