"""Backends do cache de resultados."""
