"""Spanning trees with few stem leaves in K_{1,t}-free graphs."""

__version__ = "0.1.0"
