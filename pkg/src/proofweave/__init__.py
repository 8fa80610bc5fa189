"""Generalized Yeo theorems on locally colored graphs, and their use for
checking and sequentializing MLL and MALL proof nets."""

__version__ = "0.1.0"
