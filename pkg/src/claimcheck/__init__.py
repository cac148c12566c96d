"""Misinformation detection toolkit.

Network-based and content-based tweet classification pipelines, similarity
voting over word-embedding sentence vectors, an evaluation harness, and a
claim-checking HTTP service.
"""

__version__ = "0.1.0"
